#include "chowlab/set_partition.hpp"

#include "chowlab/errors.hpp"

#include <algorithm>

namespace chowlab {

SetPartition::SetPartition(int k, std::vector<std::vector<int>> blocks) : k_(k), blocks_(std::move(blocks)) {
    if (k_ < 1) throw StructuralError("SetPartition: k must be >= 1");
    std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
    int covered = 0;
    for (auto& b : blocks_) {
        if (b.empty()) throw StructuralError("SetPartition: empty block");
        std::sort(b.begin(), b.end());
        for (int e : b) {
            if (e < 1 || e > k_) throw StructuralError("SetPartition: element out of range");
            if (seen[static_cast<std::size_t>(e)]) throw StructuralError("SetPartition: repeated element");
            seen[static_cast<std::size_t>(e)] = 1;
            ++covered;
        }
    }
    if (covered != k_) throw StructuralError("SetPartition: blocks do not cover {1..k}");
    std::sort(blocks_.begin(), blocks_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::singletons(int k) {
    std::vector<std::vector<int>> blocks;
    for (int e = 1; e <= k; ++e) blocks.push_back({e});
    return SetPartition(k, std::move(blocks));
}

SetPartition SetPartition::one_block(int k) {
    std::vector<int> all;
    for (int e = 1; e <= k; ++e) all.push_back(e);
    return SetPartition(k, {all});
}

int SetPartition::block_of(int e) const {
    for (std::size_t s = 0; s < blocks_.size(); ++s)
        if (std::binary_search(blocks_[s].begin(), blocks_[s].end(), e)) return static_cast<int>(s);
    throw StructuralError("SetPartition: element out of range");
}

std::string SetPartition::str() const {
    std::string out = "[";
    for (std::size_t s = 0; s < blocks_.size(); ++s) {
        if (s) out += ",";
        out += "[";
        for (std::size_t i = 0; i < blocks_[s].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(blocks_[s][i]);
        }
        out += "]";
    }
    return out + "]";
}

std::vector<SetPartition> enumerate_partitions(int k) {
    if (k < 1) throw StructuralError("enumerate_partitions: k must be >= 1");
    // restricted-growth strings: label[0] = 0, label[i] <= 1 + max(label[<i])
    std::vector<SetPartition> out;
    std::vector<int> label(static_cast<std::size_t>(k), 0);
    auto emit = [&]() {
        int nblocks = 1 + *std::max_element(label.begin(), label.end());
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
        for (int i = 0; i < k; ++i) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(i)])].push_back(i + 1);
        out.emplace_back(k, std::move(blocks));
    };
    auto rec = [&](auto&& self, int i, int maxlab) -> void {
        if (i == k) {
            emit();
            return;
        }
        for (int lab = 0; lab <= maxlab + 1; ++lab) {
            label[static_cast<std::size_t>(i)] = lab;
            self(self, i + 1, std::max(maxlab, lab));
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(), [](const SetPartition& a, const SetPartition& b) {
        if (a.l() != b.l()) return a.l() > b.l();
        return a.blocks() < b.blocks();
    });
    return out;
}

bool refines(const SetPartition& J, const SetPartition& I) {
    if (J.k() != I.k()) throw StructuralError("refines: ground sets differ");
    for (const auto& b : J.blocks()) {
        int t = I.block_of(b.front());
        for (int e : b)
            if (I.block_of(e) != t) return false;
    }
    return true;
}

BlockMap block_map(const SetPartition& J, const SetPartition& I) {
    if (!refines(J, I)) throw StructuralError("block_map: J does not refine I");
    BlockMap m;
    m.count.assign(static_cast<std::size_t>(I.l()), 0);
    for (const auto& b : J.blocks()) {
        int t = I.block_of(b.front());
        m.to_block.push_back(t);
        ++m.count[static_cast<std::size_t>(t)];
    }
    return m;
}

} // namespace chowlab
