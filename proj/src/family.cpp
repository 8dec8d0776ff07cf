#include "posat/family.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace posat {

Mask full_mask(int n) {
    if (n < 0 || n > kMaxGround)
        throw std::invalid_argument("ground size must be in 0.." + std::to_string(kMaxGround));
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

Mask mask_from_elements(const std::vector<int>& elements_1based) {
    Mask m = 0;
    for (int e : elements_1based) {
        if (e < 1 || e > kMaxGround) throw std::invalid_argument("ground element out of range");
        m |= Mask{1} << (e - 1);
    }
    return m;
}

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

SetFamily::SetFamily(int ground, std::vector<Mask> members) : n_(ground), members_(std::move(members)) {
    Mask full = full_mask(ground);
    for (Mask m : members_)
        if ((m & ~full) != 0) throw std::invalid_argument("family member outside ground set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

SetFamily SetFamily::with(Mask m) const {
    auto ms = members_;
    ms.push_back(m);
    return SetFamily(n_, std::move(ms));
}

SetFamily SetFamily::without(Mask m) const {
    auto ms = members_;
    ms.erase(std::remove(ms.begin(), ms.end(), m), ms.end());
    return SetFamily(n_, std::move(ms));
}

SetFamily layer(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("layer index out of range");
    std::vector<Mask> out;
    // Gosper's hack walks the k-subsets in ascending mask order.
    if (k == 0) {
        out.push_back(0);
    } else {
        Mask m = (Mask{1} << k) - 1;
        Mask limit = full_mask(n);
        while (m <= limit) {
            out.push_back(m);
            Mask c = m & -m;
            Mask r = m + c;
            if (r > limit) break;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return SetFamily(n, std::move(out));
}

SetFamily layer_upto(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("layer index out of range");
    std::vector<Mask> out;
    for (int j = 0; j <= k; ++j) {
        auto lj = layer(n, j);
        out.insert(out.end(), lj.members().begin(), lj.members().end());
    }
    return SetFamily(n, std::move(out));
}

SetFamily power_set(int n) {
    if (n > 24) throw feasibility_error("power set too large for n=" + std::to_string(n));
    return layer_upto(n, n);
}

std::optional<std::pair<int, int>> separates(const SetFamily& f) {
    if (f.ground() < 1) throw std::invalid_argument("separates: empty ground set");
    for (int i = 1; i <= f.ground(); ++i)
        for (int j = i + 1; j <= f.ground(); ++j) {
            Mask bi = Mask{1} << (i - 1), bj = Mask{1} << (j - 1);
            bool sep = false;
            for (Mask m : f.members())
                if (static_cast<bool>(m & bi) != static_cast<bool>(m & bj)) {
                    sep = true;
                    break;
                }
            if (!sep) return std::make_pair(i, j);
        }
    return std::nullopt;
}

bool embedding_valid(const SetFamily& f, const Poset& p, const Embedding& e,
                     std::optional<Mask> must_include) {
    if (static_cast<int>(e.image.size()) != p.size()) return false;
    for (std::size_t i = 0; i < e.image.size(); ++i) {
        if (!f.contains(e.image[i])) return false;
        for (std::size_t j = 0; j < e.image.size(); ++j) {
            if (i == j) continue;
            if (e.image[i] == e.image[j]) return false;
            bool rel = p.less(static_cast<int>(i), static_cast<int>(j));
            if (rel != proper_subset(e.image[i], e.image[j])) return false;
        }
    }
    if (must_include &&
        std::find(e.image.begin(), e.image.end(), *must_include) == e.image.end())
        return false;
    return true;
}

namespace {

bool relations_ok(const Poset& p, const std::vector<int>& order, int depth,
                  const std::vector<Mask>& image, int cur, Mask cand) {
    for (int t = 0; t < depth; ++t) {
        int e = order[t];
        Mask m = image[e];
        if (m == cand) return false;
        bool below = subset(m, cand);
        bool above = subset(cand, m);
        if (p.less(e, cur)) {
            if (!below) return false;
        } else if (p.less(cur, e)) {
            if (!above) return false;
        } else if (below || above) {
            return false;
        }
    }
    return true;
}

bool copy_search(const Poset& p, const std::vector<Mask>& members,
                 const std::vector<int>& order, int depth, std::vector<Mask>& image,
                 int pinned_elem, Mask pinned_mask) {
    if (depth == p.size()) return true;
    int cur = order[depth];
    if (cur == pinned_elem) {
        if (!relations_ok(p, order, depth, image, cur, pinned_mask)) return false;
        image[cur] = pinned_mask;
        return copy_search(p, members, order, depth + 1, image, pinned_elem, pinned_mask);
    }
    for (Mask m : members) {
        if (pinned_elem >= 0 && m == pinned_mask) continue;
        if (!relations_ok(p, order, depth, image, cur, m)) continue;
        image[cur] = m;
        if (copy_search(p, members, order, depth + 1, image, pinned_elem, pinned_mask))
            return true;
    }
    return false;
}

}  // namespace

std::optional<Embedding> find_induced_copy(const SetFamily& f, const Poset& p,
                                           std::optional<Mask> must_include) {
    if (p.empty()) {
        if (must_include) return std::nullopt;
        return Embedding{};
    }
    auto order = p.linear_extension();
    std::vector<Mask> image(static_cast<std::size_t>(p.size()), 0);
    if (!must_include) {
        if (copy_search(p, f.members(), order, 0, image, -1, 0)) return Embedding{image};
        return std::nullopt;
    }
    for (int pin = 0; pin < p.size(); ++pin) {
        if (copy_search(p, f.members(), order, 0, image, pin, *must_include))
            return Embedding{image};
    }
    return std::nullopt;
}

}  // namespace posat
