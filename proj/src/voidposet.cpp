#include "nsg/voidposet.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nsg {

bool OrderIdeal::contains(int x) const { return std::binary_search(members.begin(), members.end(), x); }

VoidPoset::VoidPoset(NumericalSemigroup s) : s_(std::move(s)) {
    if (s_.is_naturals()) throw std::domain_error("void poset undefined for N");
    elements_ = void_of(s_);
    index_.assign(static_cast<std::size_t>(s_.frobenius()) + 1, -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[static_cast<std::size_t>(elements_[i])] = static_cast<int>(i);
}

VoidPoset void_poset(const NumericalSemigroup& s) { return VoidPoset(s); }

std::optional<std::size_t> VoidPoset::index_of(int x) const {
    if (x < 0 || x >= static_cast<int>(index_.size()) || index_[static_cast<std::size_t>(x)] < 0) return std::nullopt;
    return static_cast<std::size_t>(index_[static_cast<std::size_t>(x)]);
}

std::vector<int> VoidPoset::maximal_elements() const {
    std::vector<int> out;
    for (int x : elements_)
        if (std::none_of(elements_.begin(), elements_.end(), [&](int y) { return y != x && leq(x, y); })) out.push_back(x);
    return out;
}

std::vector<int> VoidPoset::minimal_elements() const {
    std::vector<int> out;
    for (int x : elements_)
        if (std::none_of(elements_.begin(), elements_.end(), [&](int y) { return y != x && leq(y, x); })) out.push_back(x);
    return out;
}

std::vector<std::pair<int, int>> VoidPoset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int x : elements_)
        for (int y : elements_)
            if (x != y && leq(x, y)) out.emplace_back(x, y);
    return out;
}

std::vector<std::pair<int, int>> VoidPoset::hasse_edges() const {
    std::vector<std::pair<int, int>> out;
    for (auto [x, y] : relations()) {
        const bool covered = std::any_of(elements_.begin(), elements_.end(),
                                         [&](int z) { return z != x && z != y && leq(x, z) && leq(z, y); });
        if (!covered) out.emplace_back(x, y);
    }
    return out;
}

bool VoidPoset::is_up_closed(const std::vector<int>& members) const {
    for (int x : members) {
        if (!contains(x)) return false;
        for (int y : elements_)
            if (leq(x, y) && !std::binary_search(members.begin(), members.end(), y)) return false;
    }
    return true;
}

OrderIdeal VoidPoset::principal_up_set(int x) const {
    if (!contains(x)) throw std::invalid_argument(std::to_string(x) + " is not in the void");
    OrderIdeal out;
    for (int y : elements_)
        if (leq(x, y)) out.members.push_back(y);
    return out;
}

void for_each_order_ideal(const VoidPoset& poset, const std::function<void(const OrderIdeal&)>& visit) {
    const auto& elems = poset.elements();
    const std::size_t n = elems.size();
    if (n > VoidPoset::kMaxEnumerable)
        throw std::length_error("void has " + std::to_string(n) + " elements; order ideal enumeration supports at most " +
                                std::to_string(VoidPoset::kMaxEnumerable));
    // Strict successors of each element; they are numerically larger, so
    // deciding elements in decreasing order sees every successor first.
    std::vector<std::uint64_t> above(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (poset.leq(elems[i], elems[j])) above[i] |= std::uint64_t{1} << j;

    OrderIdeal current;
    std::uint64_t chosen = 0;
    // Exclusion branch first, so the empty ideal is visited first.
    const std::function<void(std::size_t)> descend = [&](std::size_t remaining) {
        if (remaining == 0) {
            current.members.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (chosen >> i & 1U) current.members.push_back(elems[i]);
            visit(current);
            return;
        }
        const std::size_t i = remaining - 1;
        descend(i);
        if ((above[i] & ~chosen) == 0) {
            chosen |= std::uint64_t{1} << i;
            descend(i);
            chosen &= ~(std::uint64_t{1} << i);
        }
    };
    descend(n);
}

std::vector<OrderIdeal> order_ideals(const VoidPoset& poset) {
    std::vector<OrderIdeal> out;
    for_each_order_ideal(poset, [&](const OrderIdeal& ideal) { out.push_back(ideal); });
    return out;
}

OrderIdeal dual_ideal(const VoidPoset& poset, const OrderIdeal& ideal) {
    OrderIdeal out;
    const int f = poset.frobenius();
    for (int x : poset.elements())
        if (!ideal.contains(f - x)) out.members.push_back(x);
    return out;
}

bool is_self_dual(const VoidPoset& poset, const OrderIdeal& ideal) {
    const int f = poset.frobenius();
    return std::all_of(ideal.members.begin(), ideal.members.end(), [&](int x) { return ideal.contains(f - x); });
}

std::vector<IdealTriangle> triangles(const VoidPoset& poset, int p) {
    if (!poset.contains(p)) throw std::invalid_argument(std::to_string(p) + " is not in the void");
    std::vector<IdealTriangle> out;
    const int rest = poset.frobenius() - p;
    for (int x : poset.elements()) {
        if (2 * x > rest) break;
        if (poset.contains(rest - x)) out.push_back({p, x, rest - x});
    }
    return out;
}

bool satisfies(const VoidPoset& poset, const OrderIdeal& ideal, const IdealTriangle& t) {
    if (!ideal.contains(t.p)) return false;
    const int f = poset.frobenius();
    return (ideal.contains(t.x) && !ideal.contains(f - t.y)) || (ideal.contains(t.y) && !ideal.contains(f - t.x));
}

NumericalSet union_with(const NumericalSemigroup& s, const OrderIdeal& ideal) {
    std::vector<int> gaps;
    for (int g : s.gaps())
        if (!ideal.contains(g)) gaps.push_back(g);
    return NumericalSet::from_gaps(gaps);
}

bool is_associated_by_atom_monoid(const VoidPoset& poset, const std::vector<int>& subset) {
    OrderIdeal as_set{subset};
    std::sort(as_set.members.begin(), as_set.members.end());
    return atom_monoid(union_with(poset.semigroup(), as_set)) == poset.semigroup();
}

bool is_associated(const VoidPoset& poset, const OrderIdeal& ideal, CheckMode mode) {
    const auto& s = poset.semigroup();
    const int f = s.frobenius();
    bool ok = poset.is_up_closed(ideal.members);
    for (int p : s.pf()) {
        if (!ok) break;
        if (p == f || !ideal.contains(p)) continue;
        if (!s.contains(2 * p) || ideal.contains(f - p)) continue;
        const auto tris = triangles(poset, p);
        ok = std::any_of(tris.begin(), tris.end(), [&](const IdealTriangle& t) { return satisfies(poset, ideal, t); });
    }
    if (mode == CheckMode::cross_checked && ok != is_associated_by_atom_monoid(poset, ideal.members))
        throw std::logic_error("classification disagrees with the atom-monoid test for " + to_text(s));
    return ok;
}

ElementWitness element_condition_check(const VoidPoset& poset, const OrderIdeal& ideal, int x) {
    if (!ideal.contains(x)) throw std::invalid_argument(std::to_string(x) + " is not in the ideal");
    const int f = poset.frobenius();
    if (ideal.contains(f - x)) return DualWitness{f - x};
    for (const auto& t : triangles(poset, x))
        if (satisfies(poset, ideal, t)) return t;
    throw std::logic_error("property violated: no witness for " + std::to_string(x));
}

}  // namespace nsg
