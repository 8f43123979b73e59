#pragma once

// The void M(S) = {x gap : F - x gap} ordered by x <= y iff y - x in S, its
// up-closed subsets ("order ideals"), ideal triangles, and the test deciding
// which order ideals I give numerical sets S u I with atom monoid S.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nsg/core.hpp"

namespace nsg {

/// Sorted member list of an up-closed subset of the void.
struct OrderIdeal {
    std::vector<int> members;

    bool contains(int x) const;
    friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
    friend auto operator<=>(const OrderIdeal&, const OrderIdeal&) = default;
};

/// (p, x, y) in M(S)^3 with p + x + y = F. Unordered in (x, y); stored with x <= y.
struct IdealTriangle {
    int p = 0;
    int x = 0;
    int y = 0;
    friend bool operator==(const IdealTriangle&, const IdealTriangle&) = default;
};

class VoidPoset {
public:
    /// Largest void for which order ideals can be enumerated (one bit per element).
    static constexpr std::size_t kMaxEnumerable = 64;

    /// Throws std::domain_error for S = N.
    explicit VoidPoset(NumericalSemigroup s);

    const NumericalSemigroup& semigroup() const { return s_; }
    const std::vector<int>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    int frobenius() const { return s_.frobenius(); }
    bool contains(int x) const { return index_of(x).has_value(); }
    std::optional<std::size_t> index_of(int x) const;

    /// x <= y in the void order. Both must be void elements.
    bool leq(int x, int y) const { return y >= x && s_.contains(y - x); }

    std::vector<int> maximal_elements() const;
    std::vector<int> minimal_elements() const;
    /// All strict pairs x < y in the order, sorted.
    std::vector<std::pair<int, int>> relations() const;
    /// Cover relations only.
    std::vector<std::pair<int, int>> hasse_edges() const;

    /// True iff every member is a void element and the set is up-closed.
    bool is_up_closed(const std::vector<int>& members) const;
    /// {y : x <= y}.
    OrderIdeal principal_up_set(int x) const;

private:
    NumericalSemigroup s_;
    std::vector<int> elements_;
    std::vector<int> index_;  // value -> position in elements_, or -1
};

VoidPoset void_poset(const NumericalSemigroup& s);

/// Visits every order ideal exactly once, starting with the empty ideal.
/// Throws std::length_error when |M(S)| > VoidPoset::kMaxEnumerable.
void for_each_order_ideal(const VoidPoset& poset, const std::function<void(const OrderIdeal&)>& visit);
std::vector<OrderIdeal> order_ideals(const VoidPoset& poset);

/// I* = {x in M(S) : F - x not in I}.
OrderIdeal dual_ideal(const VoidPoset& poset, const OrderIdeal& ideal);
/// x in I implies F - x in I.
bool is_self_dual(const VoidPoset& poset, const OrderIdeal& ideal);

/// Ideal triangles through p, sorted by x. Throws std::invalid_argument if p is not in M(S).
std::vector<IdealTriangle> triangles(const VoidPoset& poset, int p);

/// p in I and, for one orientation of the unordered pair, x in I and F - y not in I.
bool satisfies(const VoidPoset& poset, const OrderIdeal& ideal, const IdealTriangle& t);

enum class CheckMode {
    fast,
    /// Also evaluate A(S u I) = S and throw std::logic_error on disagreement.
    cross_checked,
};

/// Whether S u I is a numerical set with atom monoid S: I must be up-closed and
/// every P in I n PF(S) must have 2P not in S, F - P in I, or a satisfied
/// Frobenius triangle (P, x, y).
bool is_associated(const VoidPoset& poset, const OrderIdeal& ideal, CheckMode mode = CheckMode::fast);

/// Independent route: A(S u I) == S.
bool is_associated_by_atom_monoid(const VoidPoset& poset, const std::vector<int>& subset);

/// Witness that x in I has its dual F - x in I.
struct DualWitness {
    int dual = 0;
    friend bool operator==(const DualWitness&, const DualWitness&) = default;
};
using ElementWitness = std::variant<DualWitness, IdealTriangle>;

/// For x in an associated ideal I: either F - x in I or an ideal triangle
/// (x, y, z) satisfied by I. Throws std::logic_error("property violated") when
/// neither exists, and std::invalid_argument when x is not in I.
ElementWitness element_condition_check(const VoidPoset& poset, const OrderIdeal& ideal, int x);

/// S u I as a numerical set.
NumericalSet union_with(const NumericalSemigroup& s, const OrderIdeal& ideal);

}  // namespace nsg
