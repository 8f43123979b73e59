#pragma once

// The anti-atom problem: every numerical set T with atom monoid S, the sizes
// of the partitions lambda(T), and whether lambda(S) is the smallest of them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsg/core.hpp"
#include "nsg/voidposet.hpp"

namespace nsg {

struct AssociatedSetReport {
    OrderIdeal ideal;
    NumericalSet numerical_set;  // S u I
    std::int64_t partition_size = 0;
    bool self_dual = false;
    std::size_t dual_index = 0;  // report whose ideal is I*
};

struct AntiAtomSolution {
    NumericalSemigroup semigroup;
    std::vector<AssociatedSetReport> reports;  // sorted by ideal member list; reports[0] is I = {}
    std::size_t pa = 0;
    std::int64_t lambda_size = 0;  // |lambda(S)|
    std::int64_t min_size = 0;
    bool lambda_minimal = true;
    /// Smallest-size report; ties broken by lexicographically smallest ideal.
    std::size_t witness_index = 0;

    std::vector<std::int64_t> sizes() const;  // ascending, with multiplicity
    const AssociatedSetReport& witness() const { return reports[witness_index]; }
};

/// Throws std::domain_error for S = N.
AntiAtomSolution solve(const NumericalSemigroup& s, CheckMode mode = CheckMode::fast);

/// The two pair counts in |lambda(S u I)| = |lambda(S)| + |A| - |B|.
struct SetCounting {
    std::int64_t a = 0;  // (i, h): i in I, h gap of S u I, i < h
    std::int64_t b = 0;  // (s, i): s in S, i in I, s < i
};

/// Throws std::invalid_argument if S u I is not associated to S.
SetCounting set_counting_decomposition(const NumericalSemigroup& s, const OrderIdeal& ideal);

/// True for N.
bool is_lambda_minimal(const NumericalSemigroup& s);

enum class Type3Case {
    /// P + Q - F in S and Q - P not in M(S): Pa = 2.
    two_sets,
    /// P + Q - F not in S: Pa = 4 and every associated ideal is self-dual.
    four_self_dual,
    /// P + Q - F in S and Q - P in M(S): associated ideals among {}, M(S), I1, I2.
    four_candidates,
};

struct Type3Profile {
    int p = 0;
    int q = 0;
    int f = 0;
    Type3Case which = Type3Case::two_sets;
    std::optional<OrderIdeal> i1;  // up-set of Q - P (case four_candidates)
    std::optional<OrderIdeal> i2;  // up-set of F - Q (case four_candidates)
    std::size_t pa = 0;            // from solve
    /// The case's predictions agree with solve.
    bool consistent = false;
    std::string detail;
};

/// Throws std::invalid_argument unless type(S) = 3.
Type3Profile type3_profile(const NumericalSemigroup& s);

/// For S of depth 2 whose lambda(S) has Durfee size n, with largest gaps
/// F > F - a_1 > ... > F - a_{n-1}: whether a_i = a_j + a_k forces j = k = i - 1.
/// Throws std::invalid_argument unless depth(S) = 2.
bool durfee_gap_condition(const NumericalSemigroup& s);

}  // namespace nsg
