#pragma once

// Parametric families of semigroups with closed-form predictions, and
// validators that recompute every prediction from first principles.
//
//   staircase(m, k, s) = {0, m, 2m, ..., km, km+s+1, ->}
//   interval_m(m)      = <m, m+1, ..., 2m-5>            (m >= 9)
//   interval_k(k, l)   = <2k+1, ..., 3k+1> with witness  (k >= 4, l | k)
//       T = S u {1..l-1} u {x in (3k+1, 4k+1] : x != 1 mod l}

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsg/core.hpp"

namespace nsg {

enum class FamilyKind { staircase, interval_m, interval_k };

struct FamilyInstance {
    FamilyKind kind = FamilyKind::staircase;
    std::vector<int> params;  // (m, k, s) | (m) | (k, l)
    NumericalSemigroup semigroup;
    std::optional<NumericalSet> witness;  // interval_k only
    std::map<std::string, std::int64_t> predicted;
    std::map<std::string, std::vector<std::int64_t>> predicted_sets;

    std::string name() const;
};

/// Throws std::invalid_argument outside m >= 2, k >= 1, 1 <= s <= m - 1.
FamilyInstance staircase(int m, int k, int s);
/// Throws std::invalid_argument for m < 9.
FamilyInstance interval_m(int m);
/// Throws std::invalid_argument for k < 4 or l not dividing k.
FamilyInstance interval_k(int k, int l);

/// |lambda(T)| for the interval_k witness: exact division of the closed form by 2 l^2.
std::int64_t interval_k_witness_size(std::int64_t k, std::int64_t l);

struct PredictionCheck {
    std::string name;
    std::string predicted;
    std::string computed;
    bool ok = false;
};

/// Recomputes every prediction with the core, partition and anti-atom code.
std::vector<PredictionCheck> validate(const FamilyInstance& inst);
bool all_ok(const std::vector<PredictionCheck>& checks);

/// For k = 12 l1^2 and l = 3 l1: |lambda(T)| / (2 sqrt(3) |lambda(S)|^{3/4}),
/// with both sizes counted from the constructed sets.
double interval_k_growth_ratio(int l1);

}  // namespace nsg
