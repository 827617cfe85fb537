#pragma once

#include <string>
#include <vector>

namespace chowlab {

// Partition of {1..k} into disjoint non-empty blocks. Canonical form:
// elements inside a block ascending, blocks ordered by minimal element.
// This fixed ordering is what every diagonal map below is indexed by.
class SetPartition {
public:
    SetPartition(int k, std::vector<std::vector<int>> blocks); // validates + canonicalizes

    static SetPartition singletons(int k);
    static SetPartition one_block(int k);

    int k() const { return k_; }
    int l() const { return static_cast<int>(blocks_.size()); } // number of blocks
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    // block index (0-based) containing element e (1-based)
    int block_of(int e) const;

    std::string str() const; // "[[1,2],[3]]"

    bool operator==(const SetPartition& o) const { return k_ == o.k_ && blocks_ == o.blocks_; }
    bool operator!=(const SetPartition& o) const { return !(*this == o); }
    // (k, blocks) lexicographic; a total order usable as a map key
    bool operator<(const SetPartition& o) const {
        if (k_ != o.k_) return k_ < o.k_;
        return blocks_ < o.blocks_;
    }

private:
    int k_;
    std::vector<std::vector<int>> blocks_;
};

// All set partitions of {1..k}: number of blocks descending (so the
// all-singletons partition comes first, the one-block partition last),
// then lexicographic on the canonical block lists.
std::vector<SetPartition> enumerate_partitions(int k);

// J refines I: every block of J lies inside one block of I. Throws
// StructuralError when the ground sets differ.
bool refines(const SetPartition& J, const SetPartition& I);

struct BlockMap {
    std::vector<int> to_block; // J-block s -> I-block t (0-based)
    std::vector<int> count;    // per I-block t: number of J-blocks inside it
};

// The induced map on blocks for a refinement J of I. Throws StructuralError
// when J does not refine I.
BlockMap block_map(const SetPartition& J, const SetPartition& I);

} // namespace chowlab
