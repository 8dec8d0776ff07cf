#include "posat/saturation.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

namespace posat {

FreeResult is_free(const SetFamily& f, const Poset& p) {
    auto copy = find_induced_copy(f, p);
    if (copy) return {false, std::move(copy)};
    return {true, std::nullopt};
}

namespace {

void require_desk_scale(const SetFamily& f, const CheckOptions& opt, const char* what) {
    if (f.ground() > opt.max_ground)
        throw feasibility_error(std::string(what) + " infeasible for n=" +
                                std::to_string(f.ground()) + " (limit " +
                                std::to_string(opt.max_ground) + ")");
}

}  // namespace

SaturationVerdict is_saturated(const SetFamily& f, const Poset& p, const CheckOptions& opt) {
    SaturationVerdict v;
    auto fr = is_free(f, p);
    v.free = fr.free;
    if (!fr.free) {
        v.copy_witness = std::move(fr.witness);
        v.saturated = false;
        return v;
    }
    Mask full = full_mask(f.ground());
    if (opt.sample_count > 0) {
        v.exhaustive = false;
        std::mt19937_64 rng(opt.sample_seed);
        std::uniform_int_distribution<Mask> dist(0, full);
        for (int t = 0; t < opt.sample_count; ++t) {
            Mask s = dist(rng);
            if (f.contains(s)) continue;
            if (!find_induced_copy(f.with(s), p, s)) {
                v.saturated = false;
                v.missing_witness = s;
                return v;
            }
        }
        v.saturated = true;  // not refuted
        return v;
    }
    require_desk_scale(f, opt, "exhaustive saturation check");
    for (Mask s = 0;; ++s) {
        if (!f.contains(s) && !find_induced_copy(f.with(s), p, s)) {
            v.saturated = false;
            v.missing_witness = s;
            return v;
        }
        if (s == full) break;
    }
    v.saturated = true;
    return v;
}

SetFamily greedy_complete(const SetFamily& seed, const Poset& p, ScanOrder order,
                          std::uint64_t rng_seed) {
    auto fr = is_free(seed, p);
    if (!fr.free)
        throw not_free_error("greedy_complete: seed already contains a copy", *fr.witness);

    Mask full = full_mask(seed.ground());
    std::vector<Mask> scan;
    scan.reserve(static_cast<std::size_t>(full) + 1);
    for (Mask s = 0;; ++s) {
        scan.push_back(s);
        if (s == full) break;
    }
    switch (order) {
        case ScanOrder::AscendingMask:
            break;
        case ScanOrder::DescendingMask:
            std::reverse(scan.begin(), scan.end());
            break;
        case ScanOrder::BySizeThenMask:
            std::stable_sort(scan.begin(), scan.end(), [](Mask a, Mask b) {
                return std::popcount(a) < std::popcount(b);
            });
            break;
        case ScanOrder::SeededRandom: {
            std::mt19937_64 rng(rng_seed);
            std::shuffle(scan.begin(), scan.end(), rng);
            break;
        }
    }

    SetFamily cur = seed;
    for (Mask s : scan) {
        if (cur.contains(s)) continue;
        if (!find_induced_copy(cur.with(s), p, s)) cur = cur.with(s);
    }
    return cur;
}

namespace {

SetFamily sets_beside_copy(const SetFamily& f, const Poset& p, const CheckOptions& opt,
                           bool above) {
    CheckOptions strict = opt;
    strict.sample_count = 0;
    require_desk_scale(f, strict, above ? "sets_above_copy scan" : "sets_below_copy scan");
    Mask full = full_mask(f.ground());
    std::vector<Mask> out;
    for (Mask s = 0;; ++s) {
        std::vector<Mask> side;
        for (Mask m : f.members())
            if (above ? proper_subset(m, s) : proper_subset(s, m)) side.push_back(m);
        if (static_cast<int>(side.size()) >= p.size() &&
            find_induced_copy(SetFamily(f.ground(), std::move(side)), p))
            out.push_back(s);
        if (s == full) break;
    }
    return SetFamily(f.ground(), std::move(out));
}

}  // namespace

SetFamily sets_above_copy(const SetFamily& f, const Poset& p, const CheckOptions& opt) {
    return sets_beside_copy(f, p, opt, true);
}

SetFamily sets_below_copy(const SetFamily& f, const Poset& p, const CheckOptions& opt) {
    return sets_beside_copy(f, p, opt, false);
}

}  // namespace posat
