#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"
#include "posat/saturation.hpp"

namespace posat {

// Width parameters for realizing an antichain of size m inside a hypercube:
// w = smallest ground with binom(w, floor(w/2)) >= m,
// h = floor((w-1)/2),
// x = smallest value with binom(x+h, h) >= m.
// For m = 2 the definition leaves x undefined (h would be 0); the patched
// values (2,1,1) are returned with patched=true and every construction that
// uses them re-verifies freeness by machine.
struct AntichainParams {
    int w = 0;
    int h = 0;
    int x = 0;
    bool patched = false;
};

AntichainParams antichain_params(int m);  // requires m >= 2

struct ConstructionReport {
    std::string kind;  // "special" | "glued" | "klayer"
    // special-family recursion
    std::optional<int> k;
    std::optional<int> h;
    // glued construction
    std::optional<int> h1;
    std::optional<int> h2;
    // k-layer seed
    std::vector<AntichainParams> layer_params;
    std::optional<int> d;
    std::optional<long long> lambda;
    bool patched = false;
    // Size bound for the construction (or any saturated completion of it),
    // evaluated at the requested n.
    std::optional<long long> size_bound;
    std::string verification;  // "saturated" | "free" | "unverified (...)"
};

// The two-hypercube layer seed for K_{n_1,...,n_k}: a union of k-1 layers of
// a low copy of Q_d together with the complements of the mirrored layers.
// Requires every size >= 2 and n >= 2d+1. The seed is re-verified
// K_{n_1,...,n_k}-free; failure is a hard error. The report carries the
// per-layer (w,h,x), d, the chain-cover count lambda and the bound
// lambda*(n-1)+2 valid for any saturated completion.
std::pair<SetFamily, ConstructionReport> klayer_seed(const std::vector<int>& sizes, int n);

// Removes interior unit layers, recording their positions (indices into the
// original list). Adjacent unit layers and unit layers at either end are
// rejected.
std::pair<std::vector<int>, std::vector<int>> reduce_unit_layers(const std::vector<int>& sizes);

// The recursive saturated family for a special poset: P([k+1]) on the first
// k+1 ground points union the lift of the family on the rest, bottoming out
// in a full power set once fewer than h points remain. k is the smallest m
// such that P([m]) contains the core; h = k+2. Certified by is_saturated at
// desk scale.
std::pair<SetFamily, ConstructionReport> special_family(const Poset& p, int n,
                                                        const CheckOptions& opt = {});

// The glued construction for P2*P1 (both special): the seed of low/high
// layer-unions on [h1+h2-1] extended, above each h1-subset A, by the block
// family F_A, and symmetrically below via complements. Certified
// P2*P1-saturated at desk scale; failure is a hard error.
std::pair<SetFamily, ConstructionReport> glued_special_family(const Poset& p1, const Poset& p2,
                                                              int n,
                                                              const CheckOptions& opt = {});

// The block family F_A used by glued_special_family for a given h1-subset A
// of [h1+h2-1], compacted onto its own ground (the complement of A in
// [h1+h2-1] followed by {h1+h2..n}, relabeled from 1). It is P2-saturated
// on that ground.
SetFamily glued_block(const Poset& p2, Mask a, int h1, int h2, int n);

}  // namespace posat
