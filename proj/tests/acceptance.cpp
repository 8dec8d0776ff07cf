// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <bit>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "posat/constructions.hpp"
#include "posat/oracle.hpp"
#include "posat/percolation.hpp"
#include "posat/saturation.hpp"

using namespace posat;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool ok) {
    std::cout << "criterion " << idx << " (" << name << "): " << (ok ? "PASS" : "FAIL")
              << std::endl;
    if (!ok) ++failures;
}

std::optional<Embedding> naive_copy(const SetFamily& f, const Poset& p) {
    int k = p.size();
    if (k == 0) return Embedding{};
    const auto& ms = f.members();
    int m = static_cast<int>(ms.size());
    if (m < k) return std::nullopt;
    std::vector<int> sel(static_cast<std::size_t>(k), 0);
    std::function<std::optional<Embedding>(int)> rec = [&](int depth) -> std::optional<Embedding> {
        if (depth == k) {
            Embedding e;
            for (int i = 0; i < k; ++i) e.image.push_back(ms[static_cast<std::size_t>(sel[i])]);
            if (embedding_valid(f, p, e)) return e;
            return std::nullopt;
        }
        for (int c = 0; c < m; ++c) {
            if (std::find(sel.begin(), sel.begin() + depth, c) != sel.begin() + depth) continue;
            sel[static_cast<std::size_t>(depth)] = c;
            if (auto r = rec(depth + 1)) return r;
        }
        return std::nullopt;
    };
    return rec(0);
}

SetFamily serial_closure(const SetFamily& f, const Poset& p, std::mt19937_64& rng) {
    Mask full = full_mask(f.ground());
    std::vector<Mask> order;
    for (Mask m = 0;; ++m) {
        order.push_back(m);
        if (m == full) break;
    }
    std::shuffle(order.begin(), order.end(), rng);
    SetFamily cur = f;
    bool added = true;
    while (added) {
        added = false;
        for (Mask m : order) {
            if (cur.contains(m)) continue;
            if (find_induced_copy(cur.with(m), p, m)) {
                cur = cur.with(m);
                added = true;
                break;
            }
        }
    }
    return cur;
}

void criterion1() {
    struct Case {
        Poset p;
        int n;
        std::size_t expect;
    };
    std::vector<Case> cases = {
        {chain(2), 5, 1},
        {antichain(2), 5, 3},
        {make_poset(3, {{0, 1}, {0, 2}}), 8, 3},
        {complete_multilayer({2, 1}), 8, 3},
        {chain(3), 8, 2},
    };
    bool ok = true;
    for (const auto& c : cases) {
        auto s = percolating_family(c.p, c.n);
        ok = ok && s.initial.size() == c.expect;
        ok = ok && verify_schedule(s).ok;
        auto r = min_percolating(c.p, c.n);
        ok = ok && r.exact && static_cast<std::size_t>(r.size) == c.expect;
    }
    report(1, "percolation numbers", ok);
}

void criterion2() {
    bool ok = true;
    for (int n = 2; n <= 3; ++n) {
        auto r = min_saturated(antichain(2), n);
        ok = ok && r.exact && r.size == n + 1;
    }
    for (int n = 2; n <= 4; ++n) {
        auto r = min_saturated(chain(2), n);
        ok = ok && r.exact && r.size == 1;
    }
    report(2, "exact saturation numbers", ok);
}

void criterion3() {
    bool ok = true;
    auto a2 = antichain(2);
    std::vector<std::size_t> sizes(9, 0);
    for (int n = 2; n <= 8; ++n) {
        auto [fam, rep] = special_family(a2, n);
        sizes[static_cast<std::size_t>(n)] = fam.size();
        ok = ok && rep.k == 0;
        if (n >= 3) ok = ok && is_saturated(fam, a2).saturated;
    }
    // size(n) <= 2^k + size(n-k-1) with k = 0 throughout
    for (int n = 3; n <= 8; ++n)
        ok = ok && sizes[static_cast<std::size_t>(n)] <= 1 + sizes[static_cast<std::size_t>(n - 1)];
    report(3, "recursive special-poset construction", ok);
}

void criterion4() {
    auto a2 = antichain(2);
    auto [fam, rep] = glued_special_family(a2, a2, 8);
    bool ok = rep.verification == "saturated";
    ok = ok && is_saturated(fam, linear_sum(a2, a2)).saturated;
    auto tops = layer(3, 2);
    for (Mask a : tops.members()) {
        auto block = glued_block(a2, a, *rep.h1, *rep.h2, 8);
        ok = ok && block.ground() == 6 && is_saturated(block, a2).saturated;
    }
    report(4, "glued construction with certified blocks", ok);
}

void criterion5() {
    auto k22 = complete_multilayer({2, 2});
    bool ok = true;
    for (int n : {8, 10}) {
        auto [seed, rep] = klayer_seed({2, 2}, n);
        ok = ok && is_free(seed, k22).free && rep.lambda == 6;
        for (auto order :
             {ScanOrder::AscendingMask, ScanOrder::DescendingMask, ScanOrder::BySizeThenMask}) {
            auto g = greedy_complete(seed, k22, order);
            ok = ok && is_saturated(g, k22).saturated;
            ok = ok && static_cast<long long>(g.size()) <= 6LL * (n - 1) + 2;
        }
    }
    report(5, "two-layer seed and its size bound", ok);
}

std::vector<SetFamily> q3_butterfly_saturated_upto6() {
    auto target = linear_sum(antichain(2), antichain(2));
    std::vector<SetFamily> out;
    for (int k = 0; k <= 6; ++k)
        for (auto& f : all_saturated_of_size(target, 3, k)) out.push_back(std::move(f));
    return out;
}

void criterion6() {
    auto a2 = antichain(2);
    auto wide = linear_sum(a2, linear_sum(dot(), a2));
    bool ok = true;
    for (const auto& f : q3_butterfly_saturated_upto6()) ok = ok && is_saturated(f, wide).saturated;
    report(6, "saturation transfer to the widened sum", ok);
}

void criterion7() {
    auto a2 = antichain(2);
    auto upper = dotted(a2);                 // dot above the bottom factor
    auto lower = linear_sum(a2, dot());      // dot below the top factor
    bool ok = true;
    for (const auto& f : q3_butterfly_saturated_upto6()) {
        auto below = sets_below_copy(f, a2);
        auto above = sets_above_copy(f, a2);
        for (Mask m : below.members()) ok = ok && !above.contains(m);
        for (Mask m = 0; m <= full_mask(3); ++m)
            ok = ok && (f.contains(m) || below.contains(m) || above.contains(m));
        std::vector<Mask> keep_up, keep_down;
        for (Mask m : f.members()) {
            if (!above.contains(m)) keep_up.push_back(m);
            if (!below.contains(m)) keep_down.push_back(m);
        }
        ok = ok && is_saturated(SetFamily(3, keep_up), upper).saturated;
        ok = ok && is_saturated(SetFamily(3, keep_down), lower).saturated;
    }
    report(7, "side-set partition properties", ok);
}

void criterion8() {
    auto [reduced, positions] = reduce_unit_layers({2, 1, 2});
    auto [seed, rep] = klayer_seed(reduced, 8);
    auto k22 = complete_multilayer({2, 2});
    auto g = greedy_complete(seed, k22);
    bool ok = positions == std::vector<int>{1};
    ok = ok && is_saturated(g, k22).saturated;
    ok = ok && is_saturated(g, complete_multilayer({2, 1, 2})).saturated;
    report(8, "unit-layer transfer", ok);
}

void criterion9() {
    std::mt19937_64 rng(987654321);
    bool ok = true;
    for (int t = 0; t < 500 && ok; ++t) {
        std::uniform_int_distribution<int> gsize(2, 4);
        int n = gsize(rng);
        std::uniform_int_distribution<Mask> setd(0, full_mask(n));
        std::uniform_int_distribution<int> fsize(0, 12);
        std::vector<Mask> ms;
        for (int i = fsize(rng); i > 0; --i) ms.push_back(setd(rng));
        SetFamily f(n, std::move(ms));

        std::uniform_int_distribution<int> psize(1, 4);
        int k = psize(rng);
        std::vector<std::pair<int, int>> rel;
        std::bernoulli_distribution edge(0.4);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (edge(rng)) rel.emplace_back(i, j);
        Poset p = make_poset(k, rel);

        auto fast = find_induced_copy(f, p);
        auto slow = naive_copy(f, p);
        ok = ok && bool(fast) == bool(slow);
        if (fast) ok = ok && embedding_valid(f, p, *fast);

        auto fix = percolation_closure(f, p);
        for (int o = 0; o < 20 && ok; ++o) ok = ok && serial_closure(f, p, rng) == fix;
    }
    report(9, "engine agrees with the naive oracle", ok);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    return failures == 0 ? 0 : 1;
}
