#pragma once

#include <cstdint>
#include <optional>

#include "posat/family.hpp"
#include "posat/poset.hpp"

namespace posat {

// Shared limits for operations that scan all of P([n]).
struct CheckOptions {
    int max_ground = 16;        // exhaustive scans refuse larger grounds
    int sample_count = 0;       // > 0: saturation checks a random sample instead
    std::uint64_t sample_seed = 0;
};

struct FreeResult {
    bool free = false;
    std::optional<Embedding> witness;  // a violating copy when not free
};

// true iff f has no induced copy of p; certificate on false.
FreeResult is_free(const SetFamily& f, const Poset& p);

struct SaturationVerdict {
    bool free = false;
    std::optional<Embedding> copy_witness;    // populated iff not free
    bool saturated = false;
    std::optional<Mask> missing_witness;      // S outside f that creates no copy
    bool exhaustive = true;                   // false in sampling mode
};

// Freeness, then for every S outside f a copy search in f ∪ {S} that must
// contain S. Throws feasibility_error beyond opt.max_ground unless sampling.
// In sampling mode saturated=true only means "not refuted".
SaturationVerdict is_saturated(const SetFamily& f, const Poset& p,
                               const CheckOptions& opt = {});

enum class ScanOrder {
    AscendingMask,
    DescendingMask,
    BySizeThenMask,
    SeededRandom,
};

// Thrown when a seed family already contains a copy of the forbidden poset.
struct not_free_error : std::invalid_argument {
    not_free_error(std::string msg, Embedding w)
        : std::invalid_argument(std::move(msg)), witness(std::move(w)) {}
    Embedding witness;
};

// Scans all sets outside the seed in the given order and keeps those whose
// addition leaves the family p-free; the result is maximal p-free, hence
// p-saturated. Throws not_free_error if the seed is not free.
SetFamily greedy_complete(const SetFamily& seed, const Poset& p,
                          ScanOrder order = ScanOrder::AscendingMask,
                          std::uint64_t rng_seed = 0);

// All S ⊆ [n] (members or not) such that some induced copy of p inside f
// lies strictly below S (every copy element a proper subset of S).
SetFamily sets_above_copy(const SetFamily& f, const Poset& p,
                          const CheckOptions& opt = {});
// Dual: some induced copy of p inside f lies strictly above S.
SetFamily sets_below_copy(const SetFamily& f, const Poset& p,
                          const CheckOptions& opt = {});

}  // namespace posat
