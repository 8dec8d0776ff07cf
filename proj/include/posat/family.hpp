#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "posat/poset.hpp"

namespace posat {

// A subset of [n] as an n-bit mask: ground element i (1-based) is bit i-1.
using Mask = std::uint64_t;

// One machine word per mask; larger grounds are rejected explicitly.
constexpr int kMaxGround = 64;

// Raised when an operation would exceed a configured exhaustive-check limit.
struct feasibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Mask full_mask(int n);
Mask mask_from_elements(const std::vector<int>& elements_1based);
std::vector<int> mask_elements(Mask m);  // ascending, 1-based

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool proper_subset(Mask a, Mask b) { return a != b && subset(a, b); }
inline bool mask_comparable(Mask a, Mask b) { return subset(a, b) || subset(b, a); }

// Duplicate-free collection of subsets of [n], stored ascending by mask value.
class SetFamily {
public:
    SetFamily() = default;
    // Sorts and deduplicates; throws if ground is out of range or a member
    // uses bits beyond it.
    SetFamily(int ground, std::vector<Mask> members);

    int ground() const { return n_; }
    std::size_t size() const { return members_.size(); }
    bool contains(Mask m) const;
    const std::vector<Mask>& members() const { return members_; }

    SetFamily with(Mask m) const;
    SetFamily without(Mask m) const;

    bool operator==(const SetFamily&) const = default;

private:
    int n_ = 0;
    std::vector<Mask> members_;
};

// All k-subsets of [n] / all subsets of size at most k. Throws if k is out
// of 0..n.
SetFamily layer(int n, int k);
SetFamily layer_upto(int n, int k);
SetFamily power_set(int n);  // requires n <= 24

// nullopt if every pair of ground elements is separated by some member;
// otherwise the smallest unseparated 1-based pair (i, j), i < j.
std::optional<std::pair<int, int>> separates(const SetFamily& f);

// Injective map from poset elements to sets witnessing an induced copy:
// image[e] is the set assigned to poset element e.
struct Embedding {
    std::vector<Mask> image;
};

// Re-checks an embedding from scratch: injective, image inside f, strict
// containment iff the poset relation holds (incomparability preserved both
// ways), and must_include in the image when given.
bool embedding_valid(const SetFamily& f, const Poset& p, const Embedding& e,
                     std::optional<Mask> must_include = std::nullopt);

// First embedding in canonical order (backtracking along a linear extension
// of p, candidates ascending by mask value), or nullopt. When must_include
// is given it is pinned at every poset position in turn.
std::optional<Embedding> find_induced_copy(const SetFamily& f, const Poset& p,
                                           std::optional<Mask> must_include = std::nullopt);

}  // namespace posat
