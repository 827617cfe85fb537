#include "chowlab/rational.hpp"

#include "chowlab/errors.hpp"

#include <cctype>

namespace chowlab {

std::string to_string(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(const std::string& text) {
    // Strict shape check first; mpq_set_str is laxer than we want (it allows
    // whitespace and bases we don't serialize).
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string num = text, den;
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_int(den)) throw StructuralError("bad rational literal: '" + text + "'");
    }
    if (!is_int(num)) throw StructuralError("bad rational literal: '" + text + "'");

    Rational r;
    if (den.empty()) {
        r = Rational(num);
    } else {
        if (mpz_class(den) == 0) throw StructuralError("zero denominator in '" + text + "'");
        r = Rational(mpz_class(num), mpz_class(den));
    }
    r.canonicalize();
    return r;
}

} // namespace chowlab
