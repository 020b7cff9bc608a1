#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gonal {

// Multiset of partitions of a fixed degree d: the ramification profile of a
// candidate degree-d branched cover. Partitions are normalized to descending
// parts and the multiset is kept sorted for deterministic output.
class PartitionSet {
public:
    PartitionSet() = default;
    PartitionSet(long long degree, std::vector<std::vector<int>> partitions);

    long long degree() const { return degree_; }
    const std::vector<std::vector<int>>& partitions() const { return partitions_; }
    std::size_t count() const { return partitions_.size(); }

    // total ramification: sum over partitions of (d - number of parts)
    long long total_ramification() const;

    bool operator==(const PartitionSet&) const = default;

private:
    long long degree_ = 1;
    std::vector<std::vector<int>> partitions_;
};

struct RhGenus {
    bool integral = false;
    long long genus = 0;  // meaningful only when integral
    bool negative = false;
};
RhGenus rh_genus(const PartitionSet& p);

using Permutation = std::vector<int>;  // images of 0..d-1

struct HurwitzWitness {
    std::vector<Permutation> sigmas;
    std::string cycle_notation() const;  // one line per permutation, joined by "; "
};

struct HurwitzResult {
    bool realizable = false;
    std::optional<HurwitzWitness> witness;
};

struct DegreeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive backtracking over conjugacy classes; the first permutation is
// pinned to the canonical representative of its class.
HurwitzResult is_hurwitz_type(const PartitionSet& p, bool want_witness = true,
                              int degree_cap = 8);

PartitionSet add_trivial(const PartitionSet& p);

// Append simple partitions (2,1,...,1) until the profile closes up to the
// requested genus; nullopt when the target is unreachable.
std::optional<PartitionSet> complete_with_simple(const PartitionSet& p, long long target_genus);

std::vector<int> cycle_type(const Permutation& p);
std::string cycle_notation(const Permutation& p);

}  // namespace gonal
