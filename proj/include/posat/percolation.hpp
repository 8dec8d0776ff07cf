#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "posat/family.hpp"
#include "posat/poset.hpp"
#include "posat/saturation.hpp"

namespace posat {

// The canonical copy of p on ground points x_1 < ... < x_p (1-based):
// X_j = {x_i : i = j or p_i <' p_j}. The containment is reflexive, so every
// X_j contains its own point. Validated as an induced copy before returning.
std::vector<Mask> canonical_copy(const Poset& p, const std::vector<int>& points);

struct PercStep {
    Mask added = 0;
    Embedding witness;  // a copy inside prefix ∪ {added} whose image contains added
};

struct PercolationSchedule {
    int n = 0;
    Poset poset;
    SetFamily initial;
    std::vector<PercStep> steps;  // initial ∪ added sets = P([n]), no repeats
};

// Builds the percolating family and a full witnessed schedule exhausting
// P([n]). Requires 1 <= |p| and n >= 3|p|-1; the schedule enumerates all of
// P([n]) so n is also capped by opt.max_ground. The initial family is the
// canonical copy on [p] minus its first set, plus the empty set when p lacks
// a unique minimal element and the full set when it lacks a unique maximal
// one. The finished schedule is re-verified; failure is a hard error.
PercolationSchedule percolating_family(const Poset& p, int n, const CheckOptions& opt = {});

struct ScheduleCheck {
    bool ok = false;
    std::optional<std::size_t> failing_step;  // empty on coverage failure
    std::string reason;
};

// Replays the schedule from scratch: each added set must be new, its witness
// must be a valid copy inside the prefix plus the added set and contain the
// added set, and the final family must be all of P([n]).
ScheduleCheck verify_schedule(const PercolationSchedule& s);

// Least fixpoint of "add every S outside F whose addition creates an induced
// copy of p through S". F percolates iff the closure is P([n]). Additions
// are applied in whole passes, which by monotonicity of copy-existence gives
// the same fixpoint as any one-at-a-time order.
SetFamily percolation_closure(const SetFamily& f, const Poset& p, const CheckOptions& opt = {});

}  // namespace posat
