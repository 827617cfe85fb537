#include "chowlab/alphabet.hpp"

#include "chowlab/errors.hpp"

namespace chowlab {

namespace {
std::shared_ptr<const Alphabet::Data> make_data(std::vector<std::pair<std::string, int>> vars) {
    auto data = std::make_shared<Alphabet::Data>();
    data->vars = std::move(vars);
    for (std::size_t i = 0; i < data->vars.size(); ++i) {
        const auto& [name, weight] = data->vars[i];
        if (name.empty()) throw StructuralError("alphabet variable with empty name");
        if (weight < 1) throw StructuralError("alphabet variable '" + name + "' has weight < 1");
        if (!data->index.emplace(name, static_cast<int>(i)).second)
            throw StructuralError("duplicate alphabet variable '" + name + "'");
    }
    return data;
}
} // namespace

Alphabet::Alphabet() : data_(make_data({})) {}

Alphabet::Alphabet(std::vector<std::pair<std::string, int>> vars) : data_(make_data(std::move(vars))) {}

int Alphabet::index_of(const std::string& name) const {
    auto it = data_->index.find(name);
    return it == data_->index.end() ? -1 : it->second;
}

Alphabet Alphabet::concat(const Alphabet& other) const {
    auto vars = data_->vars;
    vars.insert(vars.end(), other.data_->vars.begin(), other.data_->vars.end());
    return Alphabet(std::move(vars));
}

bool Alphabet::operator==(const Alphabet& o) const {
    return data_ == o.data_ || data_->vars == o.data_->vars;
}

} // namespace chowlab
