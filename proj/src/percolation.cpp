#include "posat/percolation.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace posat {

std::vector<Mask> canonical_copy(const Poset& p, const std::vector<int>& points) {
    if (static_cast<int>(points.size()) != p.size())
        throw std::invalid_argument("canonical_copy: need exactly one point per poset element");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 1 || points[i] > kMaxGround)
            throw std::invalid_argument("canonical_copy: point out of range");
        if (i > 0 && points[i] <= points[i - 1])
            throw std::invalid_argument("canonical_copy: points must be strictly increasing");
    }
    std::vector<Mask> x(points.size(), 0);
    for (int j = 0; j < p.size(); ++j) {
        for (int i = 0; i < p.size(); ++i)
            if (i == j || p.less(i, j)) x[j] |= Mask{1} << (points[i] - 1);
    }
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (i == j) continue;
            if (x[i] == x[j] || proper_subset(x[i], x[j]) != p.less(i, j))
                throw std::logic_error("canonical_copy: result is not an induced copy");
        }
    return x;
}

namespace {

// Ascending enumeration of the submasks of m, starting after cur.
// Returns nullopt once cur == m.
std::optional<Mask> next_submask(Mask cur, Mask m) {
    if (cur == m) return std::nullopt;
    return (cur - m) & m;
}

struct Builder {
    int n;
    std::vector<char> present;
    std::vector<PercStep> steps;

    explicit Builder(int ground) : n(ground), present(std::size_t{1} << ground, 0) {}

    void seed(Mask m) { present[m] = 1; }

    void add(Mask m, const std::vector<Mask>& image) {
        if (present[m]) return;
        present[m] = 1;
        steps.push_back({m, Embedding{image}});
    }
};

}  // namespace

PercolationSchedule percolating_family(const Poset& p, int n, const CheckOptions& opt) {
    const int ps = p.size();
    if (ps < 1) throw std::invalid_argument("percolating_family: poset must be nonempty");
    if (n < 3 * ps - 1)
        throw std::invalid_argument("percolating_family requires n >= 3p-1 = " +
                                    std::to_string(3 * ps - 1));
    if (n > opt.max_ground)
        throw feasibility_error("percolating_family schedule infeasible for n=" +
                                std::to_string(n) + " (limit " + std::to_string(opt.max_ground) +
                                ")");

    const Mask full = full_mask(n);
    const Mask head = full_mask(ps);         // points 1..p
    const Mask tail = full & ~head;          // points p+1..n
    const auto ext = unique_extremes(p);
    const int m0 = p.minimal_elements().front();
    const int jmax = p.maximal_elements().front();
    auto rev = p.linear_extension();
    std::reverse(rev.begin(), rev.end());

    std::vector<int> pts(static_cast<std::size_t>(ps));
    std::iota(pts.begin(), pts.end(), 1);
    const auto a = canonical_copy(p, pts);

    PercolationSchedule s;
    s.n = n;
    s.poset = p;
    std::vector<Mask> init;
    for (int j = 1; j < ps; ++j) init.push_back(a[static_cast<std::size_t>(j)]);
    if (!ext.unique_minimal) init.push_back(0);
    if (!ext.unique_maximal) init.push_back(full);
    s.initial = SetFamily(n, std::move(init));

    Builder b(n);
    for (Mask m : s.initial.members()) b.seed(m);

    // (0) the first canonical set, witnessed by the whole canonical copy.
    b.add(a[0], a);

    // With a unique minimal element the empty set is not part of the initial
    // family, but later witnesses need it: swap it in for that element's
    // canonical singleton.
    if (ext.unique_minimal) {
        auto img = a;
        img[static_cast<std::size_t>(m0)] = 0;
        b.add(0, img);
    }

    // (1) A ∪ A_j for every nonempty A outside [p], sweeping the copy from
    // the top so each intermediate hybrid stays an induced copy.
    for (auto sub = next_submask(0, tail); sub; sub = next_submask(*sub, tail)) {
        auto cur = a;
        for (int j : rev) {
            cur[static_cast<std::size_t>(j)] |= *sub;
            b.add(cur[static_cast<std::size_t>(j)], cur);
        }
    }

    // (2) each bare A outside [p], substituted for a minimal element's
    // singleton; elements above it carry A ∪ A_i, the rest stay canonical.
    for (auto sub = next_submask(0, tail); sub; sub = next_submask(*sub, tail)) {
        std::vector<Mask> img(static_cast<std::size_t>(ps));
        for (int i = 0; i < ps; ++i)
            img[static_cast<std::size_t>(i)] =
                i == m0 ? *sub : (p.less(m0, i) ? (*sub | a[static_cast<std::size_t>(i)])
                                                : a[static_cast<std::size_t>(i)]);
        b.add(*sub, img);
    }

    // (3) mirror of (1)-(2) on the canonical copy over {p+1..2p}; its bare
    // sets are already present, and the substitution phase now reaches every
    // subset of [n] ∖ {p+1..2p}, in particular all of P([p]).
    std::vector<int> qpts(static_cast<std::size_t>(ps));
    std::iota(qpts.begin(), qpts.end(), ps + 1);
    const auto bq = canonical_copy(p, qpts);
    Mask qmask = 0;
    for (int x : qpts) qmask |= Mask{1} << (x - 1);
    const Mask avail = full & ~qmask;
    for (auto sub = next_submask(0, avail); sub; sub = next_submask(*sub, avail)) {
        auto cur = bq;
        for (int j : rev) {
            cur[static_cast<std::size_t>(j)] |= *sub;
            b.add(cur[static_cast<std::size_t>(j)], cur);
        }
    }
    for (auto sub = next_submask(0, avail); sub; sub = next_submask(*sub, avail)) {
        std::vector<Mask> img(static_cast<std::size_t>(ps));
        for (int i = 0; i < ps; ++i)
            img[static_cast<std::size_t>(i)] =
                i == m0 ? *sub : (p.less(m0, i) ? (*sub | bq[static_cast<std::size_t>(i)])
                                                : bq[static_cast<std::size_t>(i)]);
        b.add(*sub, img);
    }

    // (4a) B = A ∪ X with 1 <= |A| <= p-1 and X nonempty inside [p]: build a
    // canonical copy on fresh points disjoint from A, substitute A for the
    // minimal element's singleton, then sweep X in from the top until the
    // minimal element carries B.
    for (auto sub = next_submask(0, tail); sub; sub = next_submask(*sub, tail)) {
        if (std::popcount(*sub) > ps - 1) continue;
        Mask freepts = tail & ~*sub;
        std::vector<int> fp;
        for (Mask f = freepts; static_cast<int>(fp.size()) < ps; f &= f - 1)
            fp.push_back(std::countr_zero(f) + 1);
        auto base = canonical_copy(p, fp);
        Mask am = Mask{1} << (fp[static_cast<std::size_t>(m0)] - 1);
        for (int j = 0; j < ps; ++j)
            if (j == m0 || p.less(m0, j))
                base[static_cast<std::size_t>(j)] =
                    (base[static_cast<std::size_t>(j)] & ~am) | *sub;
        for (auto x = next_submask(0, head); x; x = next_submask(*x, head)) {
            if (b.present[*sub | *x]) continue;
            auto cur = base;
            for (int j : rev) {
                cur[static_cast<std::size_t>(j)] |= *x;
                b.add(cur[static_cast<std::size_t>(j)], cur);
                if (j == m0) break;
            }
        }
    }

    // (4b) B = A ∪ X with |A| >= p and A a proper subset of {p+1..n}: pick
    // S = {l} ∪ (p-1 smallest points of A) with l the smallest outside point,
    // assign a maximal element to l and form the complemented canonical sets
    // E_j = S ∖ D_j; swapping B in at that maximal element gives the witness,
    // and every E_j is a bare outside set added in phase (2).
    auto complement_witness = [&](Mask bset, const std::vector<int>& spts) {
        std::vector<int> assign(static_cast<std::size_t>(ps));  // element -> point
        assign[static_cast<std::size_t>(jmax)] = spts.front();
        std::size_t next = 1;
        for (int i = 0; i < ps; ++i)
            if (i != jmax) assign[static_cast<std::size_t>(i)] = spts[next++];
        Mask smask = 0;
        for (int x : spts) smask |= Mask{1} << (x - 1);
        std::vector<Mask> img(static_cast<std::size_t>(ps));
        for (int j = 0; j < ps; ++j) {
            if (j == jmax) {
                img[static_cast<std::size_t>(j)] = bset;
                continue;
            }
            Mask d = 0;
            for (int i = 0; i < ps; ++i)
                if (i == j || p.less(j, i)) d |= Mask{1} << (assign[static_cast<std::size_t>(i)] - 1);
            img[static_cast<std::size_t>(j)] = smask & ~d;
        }
        b.add(bset, img);
    };
    for (auto sub = next_submask(0, tail); sub; sub = next_submask(*sub, tail)) {
        if (std::popcount(*sub) < ps || *sub == tail) continue;
        std::vector<int> spts;
        spts.push_back(std::countr_zero(tail & ~*sub) + 1);  // l, with spts[0] the pinned point
        for (Mask f = *sub; static_cast<int>(spts.size()) < ps; f &= f - 1)
            spts.push_back(std::countr_zero(f) + 1);
        for (auto x = next_submask(0, head); x; x = next_submask(*x, head)) {
            if (!b.present[*sub | *x]) complement_witness(*sub | *x, spts);
        }
    }

    // (4c) B = {p+1..n} ∪ X with X a proper nonempty subset of [p]: the same
    // complement trick on T = {k} ∪ {p+1..2p-1} with k the smallest point of
    // [p] missing from X.
    for (auto x = next_submask(0, head); x; x = next_submask(*x, head)) {
        if (*x == head || b.present[tail | *x]) continue;
        std::vector<int> tpts;
        tpts.push_back(std::countr_zero(head & ~*x) + 1);
        for (int i = ps + 1; static_cast<int>(tpts.size()) < ps; ++i) tpts.push_back(i);
        complement_witness(tail | *x, tpts);
    }

    // (5) the extremes: with a unique maximal element [n] arrives in phase
    // (1) (its canonical set is all of [p]); otherwise it is initial. The
    // empty set was handled up front. Anything still missing is a bug.
    if (!b.present[0] || !b.present[full])
        throw std::logic_error("percolating_family: extremes not covered");

    s.steps = std::move(b.steps);
    auto chk = verify_schedule(s);
    if (!chk.ok)
        throw std::logic_error("percolating_family: schedule failed verification: " + chk.reason);
    return s;
}

ScheduleCheck verify_schedule(const PercolationSchedule& s) {
    if (s.n < 0 || s.n > 24) return {false, std::nullopt, "ground size out of range"};
    Mask full = full_mask(s.n);
    std::vector<char> present(std::size_t{1} << s.n, 0);
    for (Mask m : s.initial.members()) present[m] = 1;
    const int ps = s.poset.size();
    for (std::size_t idx = 0; idx < s.steps.size(); ++idx) {
        const auto& st = s.steps[idx];
        auto fail = [&](const std::string& why) {
            return ScheduleCheck{false, idx, "step " + std::to_string(idx) + ": " + why};
        };
        if (st.added > full) return fail("added set outside ground");
        if (present[st.added]) return fail("added set already present");
        const auto& img = st.witness.image;
        if (static_cast<int>(img.size()) != ps) return fail("witness has wrong arity");
        bool has_added = false;
        for (std::size_t i = 0; i < img.size(); ++i) {
            if (img[i] > full) return fail("witness set outside ground");
            if (img[i] == st.added)
                has_added = true;
            else if (!present[img[i]])
                return fail("witness set not in prefix");
            for (std::size_t j = 0; j < img.size(); ++j) {
                if (i == j) continue;
                if (img[i] == img[j]) return fail("witness not injective");
                if (proper_subset(img[i], img[j]) !=
                    s.poset.less(static_cast<int>(i), static_cast<int>(j)))
                    return fail("witness relations do not match the poset");
            }
        }
        if (!has_added) return fail("added set missing from witness");
        present[st.added] = 1;
    }
    for (Mask m = 0;; ++m) {
        if (!present[m])
            return {false, std::nullopt, "coverage incomplete: set " + std::to_string(m) +
                                             " never added"};
        if (m == full) break;
    }
    return {true, std::nullopt, ""};
}

SetFamily percolation_closure(const SetFamily& f, const Poset& p, const CheckOptions& opt) {
    if (f.ground() > opt.max_ground)
        throw feasibility_error("percolation_closure infeasible for n=" +
                                std::to_string(f.ground()) + " (limit " +
                                std::to_string(opt.max_ground) + ")");
    Mask full = full_mask(f.ground());
    SetFamily cur = f;
    for (;;) {
        std::vector<Mask> fresh;
        for (Mask m = 0;; ++m) {
            if (!cur.contains(m) && find_induced_copy(cur.with(m), p, m)) fresh.push_back(m);
            if (m == full) break;
        }
        if (fresh.empty()) return cur;
        auto ms = cur.members();
        ms.insert(ms.end(), fresh.begin(), fresh.end());
        cur = SetFamily(f.ground(), std::move(ms));
    }
}

}  // namespace posat
