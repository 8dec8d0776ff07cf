#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>

#include "posat/family.hpp"

using namespace posat;

namespace {

// Reference search: try every |P|-subset of the family in every order.
std::optional<Embedding> naive_copy(const SetFamily& f, const Poset& p,
                                    std::optional<Mask> must = std::nullopt) {
    int k = p.size();
    if (k == 0) return must ? std::nullopt : std::optional<Embedding>{Embedding{}};
    const auto& ms = f.members();
    int n = static_cast<int>(ms.size());
    if (n < k) return std::nullopt;
    // ordered k-tuples of distinct members
    std::vector<int> sel(static_cast<std::size_t>(k), 0);
    std::function<std::optional<Embedding>(int)> rec = [&](int depth) -> std::optional<Embedding> {
        if (depth == k) {
            Embedding e;
            for (int i = 0; i < k; ++i) e.image.push_back(ms[static_cast<std::size_t>(sel[i])]);
            if (embedding_valid(f, p, e, must)) return e;
            return std::nullopt;
        }
        for (int c = 0; c < n; ++c) {
            if (std::find(sel.begin(), sel.begin() + depth, c) != sel.begin() + depth) continue;
            sel[static_cast<std::size_t>(depth)] = c;
            if (auto r = rec(depth + 1)) return r;
        }
        return std::nullopt;
    };
    return rec(0);
}

Poset random_poset(std::mt19937_64& rng, int max_size) {
    std::uniform_int_distribution<int> sz(1, max_size);
    int k = sz(rng);
    std::vector<std::pair<int, int>> pairs;
    std::bernoulli_distribution edge(0.4);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (edge(rng)) pairs.emplace_back(i, j);
    return make_poset(k, pairs);
}

}  // namespace

TEST_CASE("mask helpers") {
    CHECK(full_mask(0) == 0);
    CHECK(full_mask(3) == 0b111);
    CHECK(full_mask(64) == ~Mask{0});
    CHECK_THROWS_AS(full_mask(65), std::invalid_argument);
    CHECK_THROWS_AS(full_mask(-1), std::invalid_argument);
    CHECK(mask_from_elements({1, 3}) == 0b101);
    CHECK(mask_from_elements({}) == 0);
    CHECK_THROWS_AS(mask_from_elements({0}), std::invalid_argument);
    CHECK(mask_elements(0b101) == std::vector<int>{1, 3});
    CHECK(subset(0b001, 0b011));
    CHECK(subset(0b011, 0b011));
    CHECK_FALSE(proper_subset(0b011, 0b011));
    CHECK(proper_subset(0b001, 0b011));
    CHECK(mask_comparable(0b001, 0b011));
    CHECK_FALSE(mask_comparable(0b001, 0b010));
}

TEST_CASE("set family normalizes") {
    SetFamily f(3, {0b011, 0b001, 0b011});
    CHECK(f.size() == 2);
    CHECK(f.members() == std::vector<Mask>{0b001, 0b011});
    CHECK(f.contains(0b011));
    CHECK_FALSE(f.contains(0));
    CHECK(f.with(0).size() == 3);
    CHECK(f.with(0b001) == f);
    CHECK(f.without(0b001).size() == 1);
    CHECK_THROWS_AS(SetFamily(2, {0b100}), std::invalid_argument);
}

TEST_CASE("layers and power set") {
    CHECK(layer(4, 2).size() == 6);
    CHECK(layer(4, 0).members() == std::vector<Mask>{0});
    CHECK(layer(4, 4).members() == std::vector<Mask>{0b1111});
    CHECK(layer_upto(4, 1).size() == 5);
    CHECK(power_set(3).size() == 8);
    CHECK(power_set(0).size() == 1);
    CHECK_THROWS_AS(layer(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(power_set(25), feasibility_error);
    // ascending mask order
    auto l = layer(4, 2).members();
    CHECK(std::is_sorted(l.begin(), l.end()));
}

TEST_CASE("separates") {
    CHECK_FALSE(separates(SetFamily(2, {0b01})));
    CHECK(separates(SetFamily(3, {0b011, 0b100})) == std::make_pair(1, 2));
    CHECK(separates(SetFamily(3, {})) == std::make_pair(1, 2));
    CHECK_FALSE(separates(SetFamily(3, {0b001, 0b010})));  // 1|2 split separates 3 too
    CHECK_THROWS_AS(separates(SetFamily(0, {})), std::invalid_argument);
}

TEST_CASE("embedding validation") {
    auto c2 = chain(2);
    SetFamily f(3, {0, 0b001, 0b010});
    CHECK(embedding_valid(f, c2, Embedding{{0, 0b001}}));
    CHECK_FALSE(embedding_valid(f, c2, Embedding{{0b001, 0}}));       // wrong direction
    CHECK_FALSE(embedding_valid(f, c2, Embedding{{0b001, 0b010}}));   // incomparable
    CHECK_FALSE(embedding_valid(f, c2, Embedding{{0, 0}}));           // not injective
    CHECK_FALSE(embedding_valid(f, c2, Embedding{{0, 0b111}}));       // not in family
    CHECK_FALSE(embedding_valid(f, c2, Embedding{{0}}));              // arity
    CHECK_FALSE(embedding_valid(f, c2, Embedding{{0, 0b001}}, 0b010));
    CHECK(embedding_valid(f, c2, Embedding{{0, 0b001}}, 0b001));
}

TEST_CASE("find_induced_copy basics") {
    auto c2 = chain(2);
    auto a2 = antichain(2);
    SetFamily chain_fam(3, {0, 0b001, 0b011});
    CHECK(find_induced_copy(chain_fam, c2));
    CHECK_FALSE(find_induced_copy(chain_fam, a2));
    CHECK(find_induced_copy(chain_fam, chain(3)));
    CHECK_FALSE(find_induced_copy(chain_fam, chain(4)));

    auto copy = find_induced_copy(chain_fam, c2);
    REQUIRE(copy);
    CHECK(embedding_valid(chain_fam, c2, *copy));
    // first copy in canonical order
    CHECK(copy->image == std::vector<Mask>{0, 0b001});

    // empty poset embeds trivially, but not through a pinned set
    CHECK(find_induced_copy(chain_fam, Poset{}));
    CHECK_FALSE(find_induced_copy(chain_fam, Poset{}, Mask{0}));
}

TEST_CASE("find_induced_copy honors must_include at any position") {
    auto c3 = chain(3);
    SetFamily f(3, {0, 0b001, 0b011, 0b111});
    for (Mask pin : f.members()) {
        auto copy = find_induced_copy(f, c3, pin);
        REQUIRE(copy);
        CHECK(embedding_valid(f, c3, *copy, pin));
    }
    CHECK_FALSE(find_induced_copy(f, chain(5), Mask{0}));
}

TEST_CASE("induced means incomparability is preserved") {
    // {∅, {1}, {2}, {1,2}} has no induced 3-chain through the middle
    SetFamily f(2, {0, 0b01, 0b10});
    CHECK_FALSE(find_induced_copy(f, chain(3)));
    CHECK(find_induced_copy(f, make_poset(3, {{0, 1}, {0, 2}})));
    // V needs the two tops incomparable
    SetFamily g(2, {0, 0b01, 0b11});
    CHECK_FALSE(find_induced_copy(g, make_poset(3, {{0, 1}, {0, 2}})));
}

TEST_CASE("search agrees with the naive oracle on random instances") {
    std::mt19937_64 rng(20240817);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> gsize(1, 4);
        int n = gsize(rng);
        std::uniform_int_distribution<Mask> setd(0, full_mask(n));
        std::uniform_int_distribution<int> fsize(0, 8);
        std::vector<Mask> ms;
        for (int i = fsize(rng); i > 0; --i) ms.push_back(setd(rng));
        SetFamily f(n, std::move(ms));
        Poset p = random_poset(rng, 3);

        auto fast = find_induced_copy(f, p);
        auto slow = naive_copy(f, p);
        CHECK(bool(fast) == bool(slow));
        if (fast) CHECK(embedding_valid(f, p, *fast));

        Mask pin = setd(rng);
        auto fastp = find_induced_copy(f.with(pin), p, pin);
        auto slowp = naive_copy(f.with(pin), p, pin);
        CHECK(bool(fastp) == bool(slowp));
        if (fastp) CHECK(embedding_valid(f.with(pin), p, *fastp, pin));
    }
}
