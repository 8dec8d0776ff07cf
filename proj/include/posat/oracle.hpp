#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

struct SearchLimits {
    // 0 means "use the operation's default cap" (min_saturated 5,
    // min_percolating 8 with |P| <= 3, all_saturated_of_size 4).
    int max_ground = 0;
    // Largest family size tried by iterative deepening; <= 0 means 2^n.
    long long max_candidate_size = 0;
    // Zero means no time budget.
    std::chrono::milliseconds time_budget{0};
    // Prune candidate prefixes that are not lexicographically minimal under
    // ground-set permutations. Sound: saturation and percolation are
    // permutation-invariant and candidates are enumerated as sorted mask
    // sequences.
    bool symmetry_reduction = false;
};

struct OracleResult {
    int size = 0;                      // exact minimum, or best lower bound
    std::optional<SetFamily> witness;  // present iff exact
    bool exact = false;                // false: "lower bound only"
    std::string note;
};

// Exact induced saturation number by iterative deepening over family size:
// k-subsets of P([n]) in ascending mask order, pruned by prefix freeness and
// by coverability of already-excluded sets. Throws feasibility_error when n
// exceeds the cap; a spent budget yields a flagged lower bound.
OracleResult min_saturated(const Poset& p, int n, const SearchLimits& limits = {});

// Exact percolation number. The empty set is forced into every candidate
// when p lacks a unique minimal element and the full set when it lacks a
// unique maximal one (neither can ever be part of an induced copy), and
// deepening starts at max(|forced|, |p|-1).
OracleResult min_percolating(const Poset& p, int n, const SearchLimits& limits = {});

// Every p-saturated family of exactly k members, in ascending order of
// sorted mask sequences.
std::vector<SetFamily> all_saturated_of_size(const Poset& p, int n, int k,
                                             const SearchLimits& limits = {});

}  // namespace posat
