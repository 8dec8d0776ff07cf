#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace posat {

// Finite strict partial order on elements labeled 0..size()-1.
//
// The relation is stored as its full transitive closure (not Hasse covers),
// so comparability tests are O(1); cover pairs are recomputed on demand.
// Poset values are immutable after construction and safe to share.
class Poset {
public:
    Poset() = default;

    int size() const { return p_; }
    bool empty() const { return p_ == 0; }

    // true iff i is strictly below j.
    bool less(int i, int j) const { return (below_[j] >> i) & 1u; }
    bool comparable(int i, int j) const { return less(i, j) || less(j, i); }

    // Bitmask of elements strictly below j.
    std::uint64_t down_set(int j) const { return below_[j]; }
    // Bitmask of elements strictly above i.
    std::uint64_t up_set(int i) const;

    std::vector<std::pair<int, int>> strict_pairs() const;
    // (i,j) with j covering i: i < j and no z with i < z < j.
    std::vector<std::pair<int, int>> cover_pairs() const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    // Minimal-first topological order, lowest label first among ties.
    std::vector<int> linear_extension() const;

    bool operator==(const Poset&) const = default;

    friend Poset make_poset(int p, const std::vector<std::pair<int, int>>& strict_pairs);

private:
    int p_ = 0;
    std::vector<std::uint64_t> below_;  // below_[j] bit i set iff i <' j
};

// Transitive closure of the given strict pairs. Throws std::invalid_argument
// naming an offending cycle if the closure would force i < i.
Poset make_poset(int p, const std::vector<std::pair<int, int>>& strict_pairs);

// Complete multilayer poset K_{n_1,...,n_k}; sizes[0] is the bottom layer.
// Every element of a lower layer is strictly below every element of a higher
// layer; layers are antichains. Throws on an empty list or a size < 1.
Poset complete_multilayer(const std::vector<int>& sizes);

Poset chain(int k);      // C_k
Poset antichain(int k);  // A_k
Poset dot();             // the one-element poset

// P2 * P1: disjoint union with every element of bottom strictly below every
// element of top. Bottom elements keep labels 0..|bottom|-1, top elements are
// shifted up. An empty argument returns the other operand.
Poset linear_sum(const Poset& top, const Poset& bottom);

// P with one new element above everything.
Poset dotted(const Poset& p);

// All relations reversed, incomparabilities preserved.
Poset dual(const Poset& p);

bool is_isomorphic(const Poset& a, const Poset& b);

struct ExtremeFlags {
    bool unique_minimal = false;
    bool unique_maximal = false;
};

// Whether exactly one minimal / exactly one maximal element exists.
// Throws on the empty poset. Note that in a finite poset the unique minimal
// (maximal) element is below (above) every other element.
ExtremeFlags unique_extremes(const Poset& p);

// Unique cover twin property: every cover pair (p1 covered by p2) has a third
// element comparable with exactly one of the two. Vacuously true without
// cover pairs.
bool has_uctp(const Poset& p);

// Legs: distinct l1, l2, h with l1, l2 incomparable and below h, and every
// remaining element above h.
bool has_legs(const Poset& p);

// A special poset is an isolated element plus a core with both a unique
// minimal and a unique maximal element.
struct SpecialDecomposition {
    int isolated = 0;       // element of the original poset
    Poset core;             // restriction to the remaining elements
    int core_min = 0;       // indices into core
    int core_max = 0;
};

// The decomposition if p is special (smallest valid isolated index wins),
// nullopt otherwise.
std::optional<SpecialDecomposition> decompose_special(const Poset& p);

// Embeds p into a special poset: adds a global bottom if p lacks a unique
// minimal, a global top if it lacks a unique maximal, then one isolated
// element. The result has at most |p|+3 elements and decomposes as special.
Poset specialize(const Poset& p);

}  // namespace posat
