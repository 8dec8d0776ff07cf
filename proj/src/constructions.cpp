#include "posat/constructions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace posat {

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

constexpr int kScanCap = 12;  // cap for "smallest hypercube containing a copy" scans

// Smallest m such that P([m]) contains an induced copy of p.
int smallest_cube_with_copy(const Poset& p, const char* what) {
    for (int m = 0; m <= kScanCap; ++m)
        if (find_induced_copy(power_set(m), p)) return m;
    throw feasibility_error(std::string(what) + ": no copy found in hypercubes up to Q_" +
                            std::to_string(kScanCap));
}

void append_submasks(Mask sub_of, Mask or_with, std::vector<Mask>& out) {
    Mask x = sub_of;
    for (;;) {
        out.push_back(x | or_with);
        if (x == 0) break;
        x = (x - 1) & sub_of;
    }
}

// Masks of the recursive family for a special poset, using ground
// bits [lo, n). k and h are the precomputed recursion parameters.
void special_masks(int k, int h, int lo, int n, std::vector<Mask>& out) {
    if (n - lo < h) {
        Mask all = (n == lo) ? 0 : (full_mask(n) & ~full_mask(lo));
        append_submasks(all, 0, out);
        return;
    }
    Mask prefix = (full_mask(lo + k + 1) & ~full_mask(lo));  // first k+1 remaining points
    append_submasks(prefix, 0, out);
    std::vector<Mask> rest;
    special_masks(k, h, lo + k + 1, n, rest);
    for (Mask m : rest) out.push_back(m | prefix);
}

struct SpecialParams {
    int k = 0;
    int h = 0;
};

SpecialParams special_params(const Poset& p) {
    auto dec = decompose_special(p);
    if (!dec) throw std::invalid_argument("poset is not special");
    SpecialParams sp;
    sp.k = smallest_cube_with_copy(dec->core, "special_family core scan");
    sp.h = sp.k + 2;
    return sp;
}

}  // namespace

AntichainParams antichain_params(int m) {
    if (m < 2) throw std::invalid_argument("antichain_params requires m >= 2");
    if (m == 2) return {2, 1, 1, true};
    AntichainParams ap;
    int w = 1;
    while (binom(w, w / 2) < m) ++w;
    ap.w = w;
    ap.h = (w - 1) / 2;
    int x = 0;
    while (binom(x + ap.h, ap.h) < m) ++x;
    ap.x = x;
    return ap;
}

std::pair<SetFamily, ConstructionReport> klayer_seed(const std::vector<int>& sizes, int n) {
    if (sizes.size() < 2) throw std::invalid_argument("klayer_seed needs at least two layers");
    for (int s : sizes)
        if (s < 2) throw std::invalid_argument("klayer_seed requires all layer sizes >= 2");

    int k = static_cast<int>(sizes.size());
    ConstructionReport rep;
    rep.kind = "klayer";
    std::vector<int> hx_prefix(static_cast<std::size_t>(k) + 1, 0);  // sums of h_j + x_j
    for (int i = 0; i < k; ++i) {
        auto ap = antichain_params(sizes[static_cast<std::size_t>(i)]);
        rep.layer_params.push_back(ap);
        rep.patched = rep.patched || ap.patched;
        hx_prefix[static_cast<std::size_t>(i) + 1] =
            hx_prefix[static_cast<std::size_t>(i)] + ap.h + ap.x;
    }
    int d = hx_prefix[static_cast<std::size_t>(k)] - 1;
    rep.d = d;
    if (n < 2 * d + 1)
        throw std::invalid_argument("klayer_seed requires n >= 2d+1 = " + std::to_string(2 * d + 1));

    std::vector<Mask> members;
    // Low hypercube: layers at prefix(i-1) + h_i for the bottom k-1 layer indices.
    for (int i = 1; i <= k - 1; ++i) {
        int lev = hx_prefix[static_cast<std::size_t>(i) - 1] + rep.layer_params[static_cast<std::size_t>(i) - 1].h;
        auto lv = layer(d, lev);
        for (Mask m : lv.members()) members.push_back(m);
    }
    // High hypercube: complements of the mirrored layers for the top k-1 indices.
    Mask full = full_mask(n);
    for (int i = 2; i <= k; ++i) {
        int lev = (hx_prefix[static_cast<std::size_t>(k)] - hx_prefix[static_cast<std::size_t>(i)]) +
                  rep.layer_params[static_cast<std::size_t>(i) - 1].h;
        auto lv = layer(d, lev);
        for (Mask m : lv.members()) members.push_back(full & ~m);
    }
    SetFamily seed(n, std::move(members));

    long long lambda = 0;
    for (int i = 1; i <= k; ++i) {
        int s = hx_prefix[static_cast<std::size_t>(i) - 1];
        const auto& ap = rep.layer_params[static_cast<std::size_t>(i) - 1];
        lambda += static_cast<long long>(sizes[static_cast<std::size_t>(i) - 1] - 1) *
                  binom(d, s) * binom(d - s, ap.h + ap.x - 1);
    }
    rep.lambda = lambda;
    rep.size_bound = lambda * (n - 1) + 2;

    auto fr = is_free(seed, complete_multilayer(sizes));
    if (!fr.free)
        throw std::runtime_error("klayer_seed: seed failed the freeness re-check");
    rep.verification = "free";
    return {std::move(seed), std::move(rep)};
}

std::pair<std::vector<int>, std::vector<int>> reduce_unit_layers(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty layer list");
    if (sizes.front() == 1 || sizes.back() == 1)
        throw std::invalid_argument("unit layers at the ends are not supported");
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i] == 1 && sizes[i + 1] == 1)
            throw std::invalid_argument("adjacent unit layers are not supported");
    std::vector<int> reduced;
    std::vector<int> positions;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 1)
            positions.push_back(static_cast<int>(i));
        else
            reduced.push_back(sizes[i]);
    }
    return {std::move(reduced), std::move(positions)};
}

std::pair<SetFamily, ConstructionReport> special_family(const Poset& p, int n,
                                                        const CheckOptions& opt) {
    if (n < 0) throw std::invalid_argument("negative ground size");
    auto sp = special_params(p);
    std::vector<Mask> members;
    special_masks(sp.k, sp.h, 0, n, members);
    SetFamily fam(n, std::move(members));

    ConstructionReport rep;
    rep.kind = "special";
    rep.k = sp.k;
    rep.h = sp.h;
    rep.size_bound = static_cast<long long>(fam.size());
    if (n <= opt.max_ground) {
        auto v = is_saturated(fam, p, opt);
        if (!v.saturated)
            throw std::runtime_error("special_family: output failed the saturation re-check");
        rep.verification = "saturated";
    } else {
        rep.verification = "unverified (n beyond exhaustive cap)";
    }
    return {std::move(fam), std::move(rep)};
}

namespace {

// Global masks of the block family F_A: the tail family for p2 together with
// all subsets of the complement of A lifted by the full tail.
std::vector<Mask> glued_block_masks(const Poset& p2, Mask a, int h1, int h2, int n) {
    int w = h1 + h2 - 1;
    Mask window = full_mask(w);
    Mask tail = full_mask(n) & ~full_mask(w);
    Mask abar = window & ~a;
    auto sp = special_params(p2);
    std::vector<Mask> out;
    special_masks(sp.k, sp.h, w, n, out);
    append_submasks(abar, tail, out);
    return out;
}

}  // namespace

SetFamily glued_block(const Poset& p2, Mask a, int h1, int h2, int n) {
    auto global = glued_block_masks(p2, a, h1, h2, n);
    int w = h1 + h2 - 1;
    Mask window = full_mask(w);
    std::vector<int> ground_bits;  // 0-based global bit positions, in order
    for (int b = 0; b < w; ++b)
        if (!((a >> b) & 1u) && ((window >> b) & 1u)) ground_bits.push_back(b);
    for (int b = w; b < n; ++b) ground_bits.push_back(b);
    std::vector<Mask> compact;
    compact.reserve(global.size());
    for (Mask m : global) {
        Mask c = 0;
        for (std::size_t i = 0; i < ground_bits.size(); ++i)
            if ((m >> ground_bits[i]) & 1u) c |= Mask{1} << i;
        compact.push_back(c);
    }
    return SetFamily(static_cast<int>(ground_bits.size()), std::move(compact));
}

std::pair<SetFamily, ConstructionReport> glued_special_family(const Poset& p1, const Poset& p2,
                                                              int n, const CheckOptions& opt) {
    if (!decompose_special(p1)) throw std::invalid_argument("p1 is not special");
    if (!decompose_special(p2)) throw std::invalid_argument("p2 is not special");
    int h1 = smallest_cube_with_copy(dotted(p1), "glued h1 scan");
    int h2 = smallest_cube_with_copy(dotted(dual(p2)), "glued h2 scan");
    if (n < 2 * (h1 + h2))
        throw std::invalid_argument("glued_special_family requires n >= " +
                                    std::to_string(2 * (h1 + h2)));

    int w = h1 + h2 - 1;
    Mask full = full_mask(n);
    Mask tail = full & ~full_mask(w);
    std::vector<Mask> members;
    // Seed: sets of size <= h1 in the window, and complements of sets of
    // size <= h2 in the window.
    auto low = layer_upto(w, h1);
    for (Mask m : low.members()) members.push_back(m);
    auto high = layer_upto(w, h2);
    for (Mask m : high.members()) members.push_back(full & ~m);
    // Extend above each h1-subset A of the window with A ∪ F, F in F_A.
    auto tops = layer(w, h1);
    for (Mask a : tops.members())
        for (Mask f : glued_block_masks(p2, a, h1, h2, n)) members.push_back(a | f);
    // Extend below symmetrically, via complements and the dual of p1.
    auto bots = layer(w, h2);
    for (Mask a : bots.members())
        for (Mask f : glued_block_masks(dual(p1), a, h2, h1, n))
            members.push_back(full & ~(a | f));
    SetFamily fam(n, std::move(members));

    ConstructionReport rep;
    rep.kind = "glued";
    rep.h1 = h1;
    rep.h2 = h2;
    rep.size_bound = static_cast<long long>(fam.size());
    Poset target = linear_sum(p2, p1);
    if (n <= opt.max_ground) {
        auto v = is_saturated(fam, target, opt);
        if (!v.saturated)
            throw std::runtime_error("glued_special_family: output failed the saturation re-check");
        rep.verification = "saturated";
    } else {
        rep.verification = "unverified (n beyond exhaustive cap)";
    }
    return {std::move(fam), std::move(rep)};
}

}  // namespace posat
