#include "posat/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace posat {

std::uint64_t Poset::up_set(int i) const {
    std::uint64_t m = 0;
    for (int j = 0; j < p_; ++j)
        if (less(i, j)) m |= (std::uint64_t{1} << j);
    return m;
}

std::vector<std::pair<int, int>> Poset::strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j)
            if (less(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j) {
            if (!less(i, j)) continue;
            bool cover = true;
            for (int z = 0; z < p_ && cover; ++z)
                if (less(i, z) && less(z, j)) cover = false;
            if (cover) out.emplace_back(i, j);
        }
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int j = 0; j < p_; ++j)
        if (below_[j] == 0) out.push_back(j);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < p_; ++i)
        if (up_set(i) == 0) out.push_back(i);
    return out;
}

std::vector<int> Poset::linear_extension() const {
    std::vector<int> order;
    order.reserve(p_);
    std::uint64_t placed = 0;
    for (int step = 0; step < p_; ++step) {
        for (int j = 0; j < p_; ++j) {
            if ((placed >> j) & 1u) continue;
            if ((below_[j] & ~placed) == 0) {
                order.push_back(j);
                placed |= (std::uint64_t{1} << j);
                break;
            }
        }
    }
    return order;
}

Poset make_poset(int p, const std::vector<std::pair<int, int>>& strict_pairs) {
    if (p < 0 || p > 64) throw std::invalid_argument("poset size must be in 0..64");
    Poset q;
    q.p_ = p;
    q.below_.assign(static_cast<size_t>(p), 0);
    for (auto [i, j] : strict_pairs) {
        if (i < 0 || i >= p || j < 0 || j >= p)
            throw std::invalid_argument("relation pair out of range");
        q.below_[j] |= (std::uint64_t{1} << i);
    }
    // Floyd-Warshall style closure on the tiny relation.
    for (int k = 0; k < p; ++k)
        for (int j = 0; j < p; ++j)
            if ((q.below_[j] >> k) & 1u) q.below_[j] |= q.below_[k];
    for (int j = 0; j < p; ++j)
        if ((q.below_[j] >> j) & 1u)
            throw std::invalid_argument("cycle through element " + std::to_string(j));
    return q;
}

Poset complete_multilayer(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("layer list must be non-empty");
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("layer sizes must be positive");
        total += s;
    }
    std::vector<std::pair<int, int>> rel;
    int lo = 0;
    for (size_t layer = 0; layer + 1 < sizes.size(); ++layer) {
        int mid = lo + sizes[layer];
        for (int i = lo; i < mid; ++i)
            for (int j = mid; j < total; ++j) rel.emplace_back(i, j);
        lo = mid;
    }
    return make_poset(total, rel);
}

Poset chain(int k) { return complete_multilayer(std::vector<int>(static_cast<size_t>(k), 1)); }
Poset antichain(int k) { return complete_multilayer({k}); }
Poset dot() { return antichain(1); }

Poset linear_sum(const Poset& top, const Poset& bottom) {
    if (top.empty()) return bottom;
    if (bottom.empty()) return top;
    int nb = bottom.size(), nt = top.size();
    std::vector<std::pair<int, int>> rel = bottom.strict_pairs();
    for (auto [i, j] : top.strict_pairs()) rel.emplace_back(i + nb, j + nb);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nt; ++j) rel.emplace_back(i, nb + j);
    return make_poset(nb + nt, rel);
}

Poset dotted(const Poset& p) { return linear_sum(dot(), p); }

Poset dual(const Poset& p) {
    std::vector<std::pair<int, int>> rel;
    for (auto [i, j] : p.strict_pairs()) rel.emplace_back(j, i);
    return make_poset(p.size(), rel);
}

namespace {

bool iso_search(const Poset& a, const Poset& b, std::vector<int>& map_ab,
                std::uint64_t used, int depth) {
    int p = a.size();
    if (depth == p) return true;
    for (int cand = 0; cand < p; ++cand) {
        if ((used >> cand) & 1u) continue;
        bool ok = true;
        for (int t = 0; t < depth && ok; ++t) {
            int u = map_ab[t];
            if (a.less(t, depth) != b.less(u, cand)) ok = false;
            if (a.less(depth, t) != b.less(cand, u)) ok = false;
        }
        if (!ok) continue;
        map_ab[depth] = cand;
        if (iso_search(a, b, map_ab, used | (std::uint64_t{1} << cand), depth + 1))
            return true;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Poset& a, const Poset& b) {
    if (a.size() != b.size()) return false;
    // Degree-multiset prefilter.
    auto degs = [](const Poset& p) {
        std::vector<std::pair<int, int>> d;
        for (int i = 0; i < p.size(); ++i)
            d.emplace_back(std::popcount(p.down_set(i)), std::popcount(p.up_set(i)));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;
    std::vector<int> map_ab(static_cast<size_t>(a.size()), -1);
    return iso_search(a, b, map_ab, 0, 0);
}

ExtremeFlags unique_extremes(const Poset& p) {
    if (p.empty()) throw std::invalid_argument("unique_extremes: empty poset");
    return {p.minimal_elements().size() == 1, p.maximal_elements().size() == 1};
}

bool has_uctp(const Poset& p) {
    for (auto [a, b] : p.cover_pairs()) {
        bool twin = false;
        for (int t = 0; t < p.size() && !twin; ++t) {
            if (t == a || t == b) continue;
            if (p.comparable(t, a) != p.comparable(t, b)) twin = true;
        }
        if (!twin) return false;
    }
    return true;
}

bool has_legs(const Poset& p) {
    int n = p.size();
    for (int l1 = 0; l1 < n; ++l1)
        for (int l2 = l1 + 1; l2 < n; ++l2) {
            if (p.comparable(l1, l2)) continue;
            for (int h = 0; h < n; ++h) {
                if (h == l1 || h == l2) continue;
                if (!p.less(l1, h) || !p.less(l2, h)) continue;
                bool rest_above = true;
                for (int o = 0; o < n && rest_above; ++o) {
                    if (o == l1 || o == l2 || o == h) continue;
                    if (!p.less(h, o)) rest_above = false;
                }
                if (rest_above) return true;
            }
        }
    return false;
}

namespace {

Poset restrict_without(const Poset& p, int removed, std::vector<int>* old_label = nullptr) {
    std::vector<int> keep;
    for (int i = 0; i < p.size(); ++i)
        if (i != removed) keep.push_back(i);
    std::vector<std::pair<int, int>> rel;
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            if (p.less(keep[i], keep[j])) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (old_label) *old_label = keep;
    return make_poset(static_cast<int>(keep.size()), rel);
}

}  // namespace

std::optional<SpecialDecomposition> decompose_special(const Poset& p) {
    if (p.size() < 2) return std::nullopt;
    for (int iso = 0; iso < p.size(); ++iso) {
        bool isolated = true;
        for (int o = 0; o < p.size() && isolated; ++o)
            if (o != iso && p.comparable(iso, o)) isolated = false;
        if (!isolated) continue;
        Poset core = restrict_without(p, iso);
        auto ext = unique_extremes(core);
        if (!ext.unique_minimal || !ext.unique_maximal) continue;
        SpecialDecomposition d;
        d.isolated = iso;
        d.core_min = core.minimal_elements().front();
        d.core_max = core.maximal_elements().front();
        d.core = std::move(core);
        return d;
    }
    return std::nullopt;
}

Poset specialize(const Poset& p) {
    if (p.empty()) throw std::invalid_argument("specialize: empty poset");
    auto ext = unique_extremes(p);
    int count = p.size();
    std::vector<std::pair<int, int>> rel = p.strict_pairs();
    int core_size = p.size();
    if (!ext.unique_minimal) {
        int bottom = count++;
        for (int j = 0; j < core_size; ++j) rel.emplace_back(bottom, j);
        core_size = count;
    }
    if (!ext.unique_maximal) {
        int top = count++;
        for (int j = 0; j < core_size; ++j)
            if (j != top) rel.emplace_back(j, top);
        core_size = count;
    }
    ++count;  // the isolated element, unrelated to everything
    return make_poset(count, rel);
}

}  // namespace posat
