#include "chowlab/bundle.hpp"

#include "chowlab/errors.hpp"

namespace chowlab {

BundleClass::BundleClass(int rank, GradedPoly total) : rank_(rank), total_(std::move(total)) {
    if (rank_ < 0) throw StructuralError("BundleClass: negative rank");
    if (total_.constant_term() != 1) throw StructuralError("BundleClass: total class must start at 1");
}

Rational binomial(const mpz_class& top, long bottom) {
    if (bottom < 0) throw StructuralError("binomial: negative lower index");
    mpz_class num = 1, den = 1;
    for (long u = 0; u < bottom; ++u) {
        num *= top - u;
        den *= u + 1;
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational binomial(long top, long bottom) { return binomial(mpz_class(top), bottom); }

GradedPoly inverse_unit(const GradedPoly& p) {
    if (p.constant_term() != 1) throw StructuralError("inverse_unit: constant term must be 1");
    const Alphabet& a = p.alphabet();
    const int T = p.truncation();
    GradedPoly n = p - GradedPoly::constant(a, T, 1); // min degree >= 1
    GradedPoly acc = GradedPoly::constant(a, T, 1);
    GradedPoly pw = GradedPoly::constant(a, T, 1);
    for (int m = 1; m <= T; ++m) {
        pw = pw * n;
        if (pw.is_zero()) break;
        acc = (m % 2 == 0) ? acc + pw : acc - pw;
    }
    return acc;
}

GradedPoly segre(const BundleClass& E) { return inverse_unit(E.total()); }

BundleClass dual(const BundleClass& E) {
    const GradedPoly& total = E.total();
    GradedPoly out = GradedPoly::zero(total.alphabet(), total.truncation());
    for (long i = 0; i <= total.truncation(); ++i) {
        GradedPoly piece = total.piece(i);
        out = (i % 2 == 0) ? out + piece : out - piece;
    }
    return BundleClass(E.rank(), out);
}

BundleClass twist(const BundleClass& E, const GradedPoly& t) {
    const Alphabet& a = E.total().alphabet();
    const int T = E.total().truncation();
    if (t.alphabet() != a || t.truncation() != T)
        throw StructuralError("twist: line class lives over a different ring");
    if (!t.is_zero() && !t.is_homogeneous(1))
        throw StructuralError("twist: line class must be homogeneous of degree 1");

    std::vector<GradedPoly> tpow{GradedPoly::constant(a, T, 1)};
    for (int e = 1; e <= T; ++e) tpow.push_back(tpow.back() * t);

    GradedPoly out = GradedPoly::zero(a, T);
    for (long j = 0; j <= T; ++j) {
        for (long i = 0; i <= j; ++i) {
            GradedPoly ci = E.c(i);
            if (ci.is_zero()) continue;
            Rational b = binomial(static_cast<long>(E.rank()) - i, j - i);
            if (b == 0) continue;
            out = out + ci * tpow[static_cast<std::size_t>(j - i)] * b;
        }
    }
    return BundleClass(E.rank(), out);
}

GradedPoly whitney_quotient(const GradedPoly& total_B, const GradedPoly& total_A) {
    if (total_B.alphabet() != total_A.alphabet() || total_B.truncation() != total_A.truncation())
        throw StructuralError("whitney_quotient: mismatched rings");
    return total_B * inverse_unit(total_A);
}

GradedPoly chern_character(const BundleClass& E) {
    const Alphabet& a = E.total().alphabet();
    const int T = E.total().truncation();
    // Newton: p_m = sum_{i=1..m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    std::vector<GradedPoly> e, p;
    e.push_back(GradedPoly::constant(a, T, 1)); // e_0, unused
    p.push_back(GradedPoly::zero(a, T));        // p_0 placeholder
    for (int m = 1; m <= T; ++m) e.push_back(E.c(m));
    for (int m = 1; m <= T; ++m) {
        GradedPoly pm = e[static_cast<std::size_t>(m)] * Rational((m % 2 == 1) ? m : -m);
        for (int i = 1; i < m; ++i) {
            GradedPoly term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(m - i)];
            pm = (i % 2 == 1) ? pm + term : pm - term;
        }
        p.push_back(pm);
    }
    GradedPoly ch = GradedPoly::constant(a, T, E.rank());
    Rational fact(1);
    for (int m = 1; m <= T; ++m) {
        fact *= m;
        ch = ch + p[static_cast<std::size_t>(m)] * Rational(1 / fact);
    }
    return ch;
}

BundleClass class_from_character(const GradedPoly& ch, int rank) {
    if (ch.constant_term() != rank)
        throw StructuralError("class_from_character: constant term disagrees with the rank");
    const Alphabet& a = ch.alphabet();
    const int T = ch.truncation();
    std::vector<GradedPoly> p, e;
    p.push_back(GradedPoly::zero(a, T));
    e.push_back(GradedPoly::constant(a, T, 1));
    Rational fact(1);
    for (int m = 1; m <= T; ++m) {
        fact *= m;
        p.push_back(ch.piece(m) * fact);
    }
    GradedPoly total = GradedPoly::constant(a, T, 1);
    for (int m = 1; m <= T; ++m) {
        // e_m = (-1)^{m-1} (p_m - sum_{i=1..m-1} (-1)^{i-1} e_i p_{m-i}) / m
        GradedPoly acc = p[static_cast<std::size_t>(m)];
        for (int i = 1; i < m; ++i) {
            GradedPoly term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(m - i)];
            acc = (i % 2 == 1) ? acc - term : acc + term;
        }
        Rational scale = rational((m % 2 == 1) ? 1 : -1, m);
        e.push_back(acc * scale);
        total = total + e.back();
    }
    return BundleClass(rank, total);
}

BundleClass tensor(const BundleClass& E, const BundleClass& F) {
    if (E.total().alphabet() != F.total().alphabet() || E.total().truncation() != F.total().truncation())
        throw StructuralError("tensor: mismatched rings");
    GradedPoly ch = chern_character(E) * chern_character(F);
    return class_from_character(ch, E.rank() * F.rank());
}

} // namespace chowlab
