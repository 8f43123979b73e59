#include "nsg/antiatom.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nsg/partitions.hpp"

namespace nsg {

std::vector<std::int64_t> AntiAtomSolution::sizes() const {
    std::vector<std::int64_t> out;
    out.reserve(reports.size());
    for (const auto& r : reports) out.push_back(r.partition_size);
    std::sort(out.begin(), out.end());
    return out;
}

AntiAtomSolution solve(const NumericalSemigroup& s, CheckMode mode) {
    if (s.is_naturals()) throw std::domain_error("anti-atom problem undefined for N");
    const VoidPoset poset(s);
    AntiAtomSolution sol;
    sol.semigroup = s;
    sol.lambda_size = size_via_gap_count(s);

    for_each_order_ideal(poset, [&](const OrderIdeal& ideal) {
        if (!is_associated(poset, ideal, mode)) return;
        AssociatedSetReport r;
        r.ideal = ideal;
        r.numerical_set = union_with(s, ideal);
        r.partition_size = size_via_gap_count(r.numerical_set);
        r.self_dual = is_self_dual(poset, ideal);
        sol.reports.push_back(std::move(r));
    });
    std::sort(sol.reports.begin(), sol.reports.end(),
              [](const auto& a, const auto& b) { return a.ideal.members < b.ideal.members; });

    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t i = 0; i < sol.reports.size(); ++i) position[sol.reports[i].ideal.members] = i;
    for (auto& r : sol.reports) {
        auto it = position.find(dual_ideal(poset, r.ideal).members);
        if (it == position.end()) throw std::logic_error("dual of an associated ideal is not associated");
        r.dual_index = it->second;
    }

    sol.pa = sol.reports.size();
    sol.witness_index = 0;
    for (std::size_t i = 1; i < sol.reports.size(); ++i)
        if (sol.reports[i].partition_size < sol.reports[sol.witness_index].partition_size) sol.witness_index = i;
    sol.min_size = sol.reports[sol.witness_index].partition_size;
    sol.lambda_minimal = sol.min_size == sol.lambda_size;
    return sol;
}

SetCounting set_counting_decomposition(const NumericalSemigroup& s, const OrderIdeal& ideal) {
    if (s.is_naturals()) {
        if (!ideal.members.empty()) throw std::invalid_argument("N has an empty void");
        return {};
    }
    const VoidPoset poset(s);
    if (!is_associated(poset, ideal)) throw std::invalid_argument("S u I is not associated to S");
    const NumericalSet t = union_with(s, ideal);
    SetCounting out;
    for (int i : ideal.members) {
        for (int h : t.gaps())
            if (i < h) ++out.a;
        for (int e = 0; e < i; ++e)
            if (s.contains(e)) ++out.b;
    }
    return out;
}

bool is_lambda_minimal(const NumericalSemigroup& s) {
    if (s.is_naturals()) return true;
    return solve(s).lambda_minimal;
}

Type3Profile type3_profile(const NumericalSemigroup& s) {
    if (s.is_naturals() || s.type() != 3)
        throw std::invalid_argument("type3_profile needs a semigroup of type 3: " + to_text(s));
    Type3Profile prof;
    prof.p = s.pf()[0];
    prof.q = s.pf()[1];
    prof.f = s.pf()[2];
    const VoidPoset poset(s);
    const auto sol = solve(s);
    prof.pa = sol.pa;

    if (!s.contains(static_cast<long long>(prof.p) + prof.q - prof.f)) {
        prof.which = Type3Case::four_self_dual;
        const bool all_self_dual = std::all_of(sol.reports.begin(), sol.reports.end(),
                                               [](const AssociatedSetReport& r) { return r.self_dual; });
        prof.consistent = sol.pa == 4 && all_self_dual;
        prof.detail = "P+Q-F not in S; associated ideals self-dual: " + std::string(all_self_dual ? "yes" : "no");
    } else if (!poset.contains(prof.q - prof.p)) {
        prof.which = Type3Case::two_sets;
        prof.consistent = sol.pa == 2;
        prof.detail = "P+Q-F in S, Q-P not in M(S)";
    } else {
        prof.which = Type3Case::four_candidates;
        prof.i1 = poset.principal_up_set(prof.q - prof.p);
        prof.i2 = poset.principal_up_set(prof.f - prof.q);
        const OrderIdeal empty{};
        const OrderIdeal full{poset.elements()};
        const bool listed = std::all_of(sol.reports.begin(), sol.reports.end(), [&](const AssociatedSetReport& r) {
            return r.ideal == empty || r.ideal == full || r.ideal == *prof.i1 || r.ideal == *prof.i2;
        });
        const bool dual_pair = dual_ideal(poset, *prof.i1) == *prof.i2;
        prof.consistent = listed && dual_pair;
        prof.detail = std::string("P+Q-F in S, Q-P in M(S); I1 ") + (*prof.i1 == *prof.i2 ? "=" : "!=") + " I2";
    }
    return prof;
}

bool durfee_gap_condition(const NumericalSemigroup& s) {
    if (s.depth() != 2) throw std::invalid_argument("durfee_gap_condition needs depth 2: " + to_text(s));
    const int n = durfee(enumeration(s));
    const auto& gaps = s.gaps();
    const int f = s.frobenius();
    // alpha[i] for i = 1..n-1; alpha[0] unused.
    std::vector<int> alpha(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) alpha[static_cast<std::size_t>(i)] = f - gaps[gaps.size() - 1 - static_cast<std::size_t>(i)];
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            for (int k = j; k < n; ++k)
                if (alpha[static_cast<std::size_t>(i)] ==
                        alpha[static_cast<std::size_t>(j)] + alpha[static_cast<std::size_t>(k)] &&
                    !(j == i - 1 && k == i - 1))
                    return false;
    return true;
}

}  // namespace nsg
