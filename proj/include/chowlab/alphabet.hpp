#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chowlab {

// Ordered list of (name, positive weight) variables. Value type; the payload
// is shared immutably so copying polynomials stays cheap. Variable *index*
// (position in the list) is the identity used everywhere else — names only
// matter at the serialization boundary.
class Alphabet {
public:
    Alphabet(); // empty
    explicit Alphabet(std::vector<std::pair<std::string, int>> vars);

    int size() const { return static_cast<int>(data_->vars.size()); }
    const std::string& name(int i) const { return data_->vars[i].first; }
    int weight(int i) const { return data_->vars[i].second; }
    // -1 when absent
    int index_of(const std::string& name) const;

    // this ++ other, names must stay distinct
    Alphabet concat(const Alphabet& other) const;

    const std::vector<std::pair<std::string, int>>& vars() const { return data_->vars; }

    bool operator==(const Alphabet& o) const;
    bool operator!=(const Alphabet& o) const { return !(*this == o); }

    struct Data {
        std::vector<std::pair<std::string, int>> vars;
        std::unordered_map<std::string, int> index;
    };

private:
    std::shared_ptr<const Data> data_;
};

} // namespace chowlab
