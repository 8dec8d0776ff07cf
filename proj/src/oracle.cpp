#include "posat/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "posat/percolation.hpp"
#include "posat/saturation.hpp"

namespace posat {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    bool active = false;
    Clock::time_point end{};

    explicit Deadline(std::chrono::milliseconds budget) {
        if (budget.count() > 0) {
            active = true;
            end = Clock::now() + budget;
        }
    }
    bool spent() const { return active && Clock::now() >= end; }
};

std::vector<std::vector<int>> ground_permutations(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Mask apply_perm(Mask m, const std::vector<int>& perm) {
    Mask r = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if ((m >> i) & 1u) r |= Mask{1} << perm[i];
    return r;
}

// true iff no ground permutation maps the sorted prefix to a lexicographically
// smaller sorted sequence. Candidates are enumerated as ascending mask
// sequences, so pruning non-minimal prefixes keeps exactly one family per
// permutation orbit reachable.
bool lexmin_prefix(const std::vector<Mask>& prefix, const std::vector<std::vector<int>>& perms) {
    std::vector<Mask> mapped(prefix.size());
    for (const auto& perm : perms) {
        for (std::size_t i = 0; i < prefix.size(); ++i) mapped[i] = apply_perm(prefix[i], perm);
        std::sort(mapped.begin(), mapped.end());
        if (std::lexicographical_compare(mapped.begin(), mapped.end(), prefix.begin(),
                                         prefix.end()))
            return false;
    }
    return true;
}

// Once the scan has passed next_start, every smaller unchosen set is excluded
// for good; if one of them cannot form a copy even with every still-available
// set present, no extension of this prefix is saturated.
bool excluded_still_coverable(const std::vector<Mask>& prefix, Mask next_start, Mask full,
                              int n, const Poset& p) {
    std::vector<Mask> upper = prefix;
    for (Mask m = next_start; m <= full; ++m) {
        upper.push_back(m);
        if (m == full) break;
    }
    SetFamily base(n, upper);
    std::size_t pi = 0;
    for (Mask s = 0; s < next_start; ++s) {
        if (pi < prefix.size() && prefix[pi] == s) {
            ++pi;
            continue;
        }
        if (!find_induced_copy(base.with(s), p, s)) return false;
    }
    return true;
}

struct SatSearch {
    const Poset& p;
    int n;
    Mask full;
    const std::vector<std::vector<int>>* perms;  // null: no symmetry reduction
    Deadline deadline;
    bool budget_hit = false;
    bool collect_all = false;
    std::vector<Mask> prefix;
    std::vector<SetFamily> found;

    bool run(Mask start, int remaining) {
        if (deadline.spent()) {
            budget_hit = true;
            return true;
        }
        if (remaining == 0) {
            SetFamily fam(n, prefix);
            CheckOptions opt;
            opt.max_ground = std::max(opt.max_ground, n);
            auto v = is_saturated(fam, p, opt);
            if (v.saturated) {
                found.push_back(std::move(fam));
                return !collect_all;
            }
            return false;
        }
        for (Mask c = start; c <= full; ++c) {
            prefix.push_back(c);
            bool viable = !find_induced_copy(SetFamily(n, prefix), p, c);
            if (viable && perms) viable = lexmin_prefix(prefix, *perms);
            if (viable && c != full)
                viable = excluded_still_coverable(prefix, c + 1, full, n, p);
            if (viable && run(c + 1, remaining - 1)) return true;
            prefix.pop_back();
        }
        return false;
    }
};

}  // namespace

OracleResult min_saturated(const Poset& p, int n, const SearchLimits& limits) {
    if (p.size() < 1) throw std::invalid_argument("min_saturated: poset must be nonempty");
    int cap = limits.max_ground > 0 ? limits.max_ground : 5;
    if (n > cap)
        throw feasibility_error("min_saturated infeasible for n=" + std::to_string(n) +
                                " (limit " + std::to_string(cap) + ")");
    const long long total = 1LL << n;
    const long long kmax =
        limits.max_candidate_size > 0 ? std::min(limits.max_candidate_size, total) : total;
    auto perms = limits.symmetry_reduction ? ground_permutations(n)
                                           : std::vector<std::vector<int>>{};
    Deadline deadline(limits.time_budget);

    for (long long k = 0; k <= kmax; ++k) {
        SatSearch search{p, n, full_mask(n), limits.symmetry_reduction ? &perms : nullptr,
                         deadline};
        search.run(0, static_cast<int>(k));
        if (search.budget_hit)
            return {static_cast<int>(k), std::nullopt, false,
                    "lower bound only: time budget exhausted"};
        if (!search.found.empty())
            return {static_cast<int>(k), std::move(search.found.front()), true, ""};
    }
    return {static_cast<int>(kmax) + 1, std::nullopt, false,
            "lower bound only: candidate size cap reached"};
}

std::vector<SetFamily> all_saturated_of_size(const Poset& p, int n, int k,
                                             const SearchLimits& limits) {
    if (p.size() < 1) throw std::invalid_argument("all_saturated_of_size: poset must be nonempty");
    if (k < 0) throw std::invalid_argument("negative family size");
    int cap = limits.max_ground > 0 ? limits.max_ground : 4;
    if (n > cap)
        throw feasibility_error("all_saturated_of_size infeasible for n=" + std::to_string(n) +
                                " (limit " + std::to_string(cap) + ")");
    SatSearch search{p, n, full_mask(n), nullptr, Deadline(limits.time_budget)};
    search.collect_all = true;
    search.run(0, k);
    if (search.budget_hit)
        throw feasibility_error("all_saturated_of_size: time budget exhausted");
    return std::move(search.found);
}

namespace {

struct PercSearch {
    const Poset& p;
    int n;
    Mask full;
    long long total;
    std::vector<Mask> forced;
    const std::vector<std::vector<int>>* perms;
    Deadline deadline;
    bool budget_hit = false;
    std::vector<Mask> chosen;
    std::optional<SetFamily> found;

    bool is_forced(Mask m) const {
        return std::find(forced.begin(), forced.end(), m) != forced.end();
    }

    bool run(Mask start, int remaining) {
        if (deadline.spent()) {
            budget_hit = true;
            return true;
        }
        if (remaining == 0) {
            std::vector<Mask> all = forced;
            all.insert(all.end(), chosen.begin(), chosen.end());
            SetFamily fam(n, all);
            CheckOptions opt;
            opt.max_ground = std::max(opt.max_ground, n);
            if (static_cast<long long>(percolation_closure(fam, p, opt).size()) == total) {
                found = std::move(fam);
                return true;
            }
            return false;
        }
        for (Mask c = start; c <= full; ++c) {
            if (!is_forced(c)) {
                chosen.push_back(c);
                bool viable = !perms || lexmin_prefix(chosen, *perms);
                if (viable && run(c + 1, remaining - 1)) return true;
                chosen.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

OracleResult min_percolating(const Poset& p, int n, const SearchLimits& limits) {
    if (p.size() < 1) throw std::invalid_argument("min_percolating: poset must be nonempty");
    int cap = limits.max_ground > 0 ? limits.max_ground : 8;
    if (n > cap)
        throw feasibility_error("min_percolating infeasible for n=" + std::to_string(n) +
                                " (limit " + std::to_string(cap) + ")");
    if (limits.max_ground == 0 && p.size() > 3)
        throw feasibility_error("min_percolating defaults require |P| <= 3");

    const long long total = 1LL << n;
    auto ext = unique_extremes(p);
    std::vector<Mask> forced;
    // Neither extreme set ever sits inside an induced copy, so a percolating
    // family must contain whichever one the closure cannot reach.
    if (!ext.unique_minimal) forced.push_back(0);
    if (!ext.unique_maximal) forced.push_back(full_mask(n));
    auto perms = limits.symmetry_reduction ? ground_permutations(n)
                                           : std::vector<std::vector<int>>{};
    Deadline deadline(limits.time_budget);

    long long kmin = std::max<long long>(static_cast<long long>(forced.size()),
                                         std::min<long long>(p.size() - 1, total));
    const long long kmax =
        limits.max_candidate_size > 0 ? std::min(limits.max_candidate_size, total) : total;
    for (long long k = kmin; k <= kmax; ++k) {
        PercSearch search{p,       n,        full_mask(n),
                          total,   forced,   limits.symmetry_reduction ? &perms : nullptr,
                          deadline};
        search.run(0, static_cast<int>(k - static_cast<long long>(forced.size())));
        if (search.budget_hit)
            return {static_cast<int>(k), std::nullopt, false,
                    "lower bound only: time budget exhausted"};
        if (search.found)
            return {static_cast<int>(k), std::move(search.found), true, ""};
    }
    return {static_cast<int>(kmax) + 1, std::nullopt, false,
            "lower bound only: candidate size cap reached"};
}

}  // namespace posat
