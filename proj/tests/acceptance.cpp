// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance           run all criteria
//   acceptance 3 7       run only criteria 3 and 7
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsg/antiatom.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/families.hpp"
#include "nsg/partitions.hpp"
#include "oracles.hpp"

using namespace nsg;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) first_failure = what;
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t count_buckets(EnumerationMode mode, int lo, int hi) {
    std::size_t n = 0;
    for (int b = lo; b <= hi; ++b)
        n += (mode == EnumerationMode::by_genus ? semigroups_by_genus(b) : semigroups_by_frobenius(b)).size();
    return n;
}

std::vector<NumericalSemigroup> up_to_frobenius(int fmax) {
    std::vector<NumericalSemigroup> out;
    for (int f = 1; f <= fmax; ++f)
        for (auto& s : semigroups_by_frobenius(f)) out.push_back(std::move(s));
    return out;
}

void criterion_1(Outcome& o) {
    const auto t0 = Clock::now();
    const auto by_f = count_buckets(EnumerationMode::by_frobenius, 1, 16);
    const auto by_g = count_buckets(EnumerationMode::by_genus, 1, 11);
    const auto g12 = count_buckets(EnumerationMode::by_genus, 12, 12);
    const double secs = seconds_since(t0);
    o.require(by_f == 784, "F <= 16 count");
    o.require(by_g == 820, "1 <= g <= 11 count");
    o.require(g12 == 592, "g = 12 count");
    o.require(secs < 10.0, "runtime");
    o.detail << "F<=16: " << by_f << " (want 784), 1<=g<=11: " << by_g << " (want 820), g=12: " << g12
             << " (want 592); tolerance 0; " << secs << " s (limit 10 s)";
}

void criterion_2(Outcome& o) {
    const auto t0 = Clock::now();
    EnumerationQuery q;
    q.threads = 1;
    q.mode = EnumerationMode::by_frobenius;
    q.bound = 16;
    const auto f = scan_minimality(q);
    q.mode = EnumerationMode::by_genus;
    q.bound = 11;
    const auto g = scan_minimality(q);
    q.bound = 12;
    q.only = 12;
    const auto g12 = scan_minimality(q);
    const double secs = seconds_since(t0);
    const auto flagship = NumericalSemigroup::from_generators({9, 10, 11, 12, 13});
    o.require(f.non_minimal.empty(), "non-minimal with F <= 16");
    o.require(g.non_minimal.empty(), "non-minimal with g <= 11");
    o.require(g12.non_minimal.size() == 1 && g12.non_minimal[0] == flagship, "genus 12 list");
    o.require(secs < 120.0, "runtime");
    o.detail << "non-minimal: F<=16 " << f.non_minimal.size() << ", 1<=g<=11 " << g.non_minimal.size() << ", g=12 "
             << g12.non_minimal.size();
    if (!g12.non_minimal.empty()) o.detail << " [" << to_text(g12.non_minimal[0]) << "]";
    o.detail << " (want 0, 0, 1 = <9,...,13>); tolerance 0; " << secs << " s single-threaded (limit 120 s)";
}

void criterion_3(Outcome& o) {
    const auto s = NumericalSemigroup::from_generators({9, 10, 11, 12, 13});
    const auto sol = solve(s, CheckMode::cross_checked);
    const Partition want{9, 8, 2, 2, 2, 2, 2, 2, 2};
    const auto got = enumeration(sol.witness().numerical_set);
    o.require(sol.pa == 6, "Pa");
    o.require(sol.lambda_size == 32, "|lambda(S)|");
    o.require(sol.min_size == 31, "min size");
    o.require(sol.sizes() == std::vector<std::int64_t>{31, 31, 32, 32, 38, 38}, "size multiset");
    o.require(got == want || conjugate(got) == want, "minimal partition");
    o.detail << "Pa=" << sol.pa << " |lambda(S)|=" << sol.lambda_size << " min=" << sol.min_size << " sizes={";
    for (auto v : sol.sizes()) o.detail << v << ' ';
    o.detail << "} witness parts (";
    for (int p : got.parts()) o.detail << p << ' ';
    o.detail << "); tolerance 0";
}

void criterion_4(Outcome& o) {
    int checked = 0;
    for (int m = 9; m <= 20; ++m) {
        std::vector<int> gens;
        for (int g = m; g <= 2 * m - 5; ++g) gens.push_back(g);
        const auto sol = solve(NumericalSemigroup::from_generators(gens));
        const std::vector<std::int64_t> want{4 * m - 5, 4 * m - 5, 5 * m - 13, 5 * m - 13, 5 * m - 7, 5 * m - 7};
        o.require(sol.pa == 6, "Pa at m=" + std::to_string(m));
        o.require(sol.sizes() == want, "size values at m=" + std::to_string(m));
        ++checked;
    }
    o.detail << checked << " values of m in 9..20, Pa=6 and sizes {4m-5, 5m-13, 5m-7} twice each; tolerance 0";
}

void criterion_5(Outcome& o) {
    int checked = 0;
    for (std::int64_t k = 4; k <= 12; ++k)
        for (std::int64_t l = 1; l <= k; ++l) {
            if (k % l != 0) continue;
            const auto inst = interval_k(static_cast<int>(k), static_cast<int>(l));
            const auto& s = inst.semigroup;
            const auto& t = *inst.witness;
            const std::string tag = "(k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";
            const std::int64_t num =
                3 * k * k * l - k * k + 4 * k * l * l * l + 3 * k * l * l + k * l - 2 * l * l * l * l + 2 * l * l * l;
            o.require(num % (2 * l * l) == 0, "exact division " + tag);
            o.require(oracle::atom_monoid_gaps(t.gaps()) == s.gaps(), "A(T) = S " + tag);
            const auto size_t_ = size_via_gap_count(t);
            const auto size_s = size_via_gap_count(s);
            o.require(size_t_ == num / (2 * l * l), "|lambda(T)| closed form " + tag);
            o.require(size_s == k * k + 4 * k, "|lambda(S)| = k^2+4k " + tag);
            if (l != 1 && l != k) o.require(size_t_ < size_s, "strict improvement " + tag);
            ++checked;
        }
    o.detail << checked << " pairs (k, l) with 4<=k<=12, l | k; tolerance 0";
}

void criterion_6(Outcome& o) {
    int checked = 0;
    for (int m = 2; m <= 8; ++m)
        for (int k = 1; k * m + 1 <= 50; ++k)
            for (int s = 1; s <= m - 1 && k * m + s <= 50; ++s) {
                const auto inst = staircase(m, k, s);
                const auto& S = inst.semigroup;
                std::vector<int> pf;
                for (int x = (k - 1) * m + s + 1; x <= (k - 1) * m + m - 1; ++x) pf.push_back(x);
                for (int x = k * m + 1; x <= k * m + s; ++x) pf.push_back(x);
                const std::string tag = inst.name();
                o.require(is_lambda_minimal(S), "lambda-minimal " + tag);
                o.require(S.type() == m - 1, "type " + tag);
                o.require(S.frobenius() == k * m + s, "F " + tag);
                o.require(S.pf() == pf, "PF " + tag);
                ++checked;
            }
    o.detail << checked << " triples with 2<=m<=8, km+s<=50; tolerance 0";
}

void criterion_7(Outcome& o) {
    int type_le3 = 0, durfee_le3 = 0, small_le3 = 0, type3 = 0;
    for (const auto& s : up_to_frobenius(16)) {
        const bool minimal = is_lambda_minimal(s);
        const std::string tag = to_text(s);
        if (s.type() <= 3) {
            o.require(minimal, "type <= 3 " + tag);
            ++type_le3;
        }
        if (s.depth() == 2 && durfee(enumeration(s)) <= 3) {
            o.require(minimal, "depth 2, Durfee <= 3 " + tag);
            ++durfee_le3;
        }
        if (s.depth() == 2 && small_elements(s).size() <= 3) {
            o.require(minimal, "depth 2, <= 3 small elements " + tag);
            ++small_le3;
        }
        if (s.type() == 3) {
            o.require(type3_profile(s).consistent, "type-3 case analysis " + tag);
            ++type3;
        }
    }
    o.detail << "F<=16: type<=3 " << type_le3 << ", depth2&Durfee<=3 " << durfee_le3 << ", depth2&small<=3 "
             << small_le3 << " all lambda-minimal; " << type3 << " type-3 profiles consistent";
}

void criterion_8(Outcome& o) {
    const auto t0 = Clock::now();
    std::size_t semigroups = 0, subsets = 0, sets = 0;
    for (const auto& s : up_to_frobenius(14)) {
        const auto sol = solve(s);
        std::set<std::vector<int>> by_theorem;
        for (const auto& r : sol.reports) by_theorem.insert(r.ideal.members);
        std::set<std::vector<int>> by_oracle;
        const auto& m = s.void_elements();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.size()); ++mask) {
            std::vector<int> members, gaps;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (mask >> i & 1U) members.push_back(m[i]);
            for (int g : s.gaps())
                if (!std::binary_search(members.begin(), members.end(), g)) gaps.push_back(g);
            if (oracle::atom_monoid_gaps(gaps) == s.gaps()) by_oracle.insert(members);
            ++subsets;
        }
        o.require(by_theorem == by_oracle, "associated ideals of " + to_text(s));
        ++semigroups;
    }

    auto visit = [&](const NumericalSet& t) {
        ++sets;
        const auto lambda = enumeration(t);
        const auto a_gaps = oracle::atom_monoid_gaps(t.gaps());
        o.require(hook_set(lambda) == a_gaps, "hook set of " + to_text(t));
        if (t.is_naturals()) return;
        o.require(enumeration(dual(t)) == conjugate(lambda), "dual/conjugate of " + to_text(t));
        // |lambda(T)| = |lambda(S)| + |A| - |B| with S = A(T), I = T \ S
        std::vector<int> ideal;
        for (int x : a_gaps)
            if (t.contains(x)) ideal.push_back(x);
        std::int64_t a = 0, b = 0, size_s = 0;
        for (int i : ideal)
            for (int h = i + 1; h <= t.frobenius(); ++h) a += t.contains(h) ? 0 : 1;
        for (int i : ideal)
            for (int u = 0; u < i; ++u) b += oracle::in(a_gaps, u) ? 1 : 0;
        for (int x : a_gaps)
            for (int u = 0; u < x; ++u) size_s += oracle::in(a_gaps, u) ? 1 : 0;
        o.require(lambda.size() == size_s + a - b, "set counting of " + to_text(t));
        const auto dec = set_counting_decomposition(NumericalSemigroup::from_gaps(a_gaps), OrderIdeal{ideal});
        o.require(dec.a == a && dec.b == b, "set counting pairs of " + to_text(t));
    };
    visit(NumericalSet{});
    for (int f = 1; f <= 12; ++f)
        oracle::for_each_gap_set_with_frobenius(f, [&](const std::vector<int>& g) { visit(NumericalSet::from_gaps(g)); });
    const double secs = seconds_since(t0);
    o.require(secs < 120.0, "runtime");
    o.detail << semigroups << " semigroups (F<=14), " << subsets << " void subsets, " << sets
             << " numerical sets (F<=12); exact equality; " << secs << " s (limit 120 s)";
}

void criterion_9(Outcome& o) {
    std::size_t self_dual = 0;
    for (const auto& s : up_to_frobenius(16)) {
        const auto sol = solve(s);
        for (const auto& r : sol.reports) {
            if (!r.self_dual) continue;
            ++self_dual;
            o.require(sol.lambda_size <= r.partition_size, "self-dual ideal of " + to_text(s));
        }
    }
    o.detail << self_dual << " self-dual associated ideals over F<=16, all with |lambda(S)| <= |lambda(S u I)|";
}

void criterion_10(Outcome& o) {
    double previous_gap = 1e9;
    for (int l1 = 1; l1 <= 4; ++l1) {
        const double r = interval_k_growth_ratio(l1);
        const double gap = std::abs(1.0 - r);
        o.detail << "l1=" << l1 << " ratio " << r << "; ";
        o.require(r >= 0.9 && r <= 1.1, "ratio in [0.9, 1.1] at l1=" + std::to_string(l1));
        o.require(gap < previous_gap, "monotone approach at l1=" + std::to_string(l1));
        previous_gap = gap;
    }
    o.detail << "band [0.9, 1.1], |1 - ratio| strictly decreasing";
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> all{
        {"counts regression", criterion_1},
        {"lambda-minimality reproduction", criterion_2},
        {"flagship example <9,...,13>", criterion_3},
        {"interval_m family, m = 9..20", criterion_4},
        {"interval_k family, k = 4..12", criterion_5},
        {"staircase family", criterion_6},
        {"structural theorems, F <= 16", criterion_7},
        {"oracle equivalence", criterion_8},
        {"self-dual bound", criterion_9},
        {"asymptotic trend of interval_k witnesses", criterion_10},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int n = std::atoi(argv[i]);
        if (n < 1 || n > static_cast<int>(criteria().size())) {
            std::cerr << "unknown criterion: " << argv[i] << '\n';
            return 2;
        }
        selected.push_back(n);
    }
    if (selected.empty())
        for (int n = 1; n <= static_cast<int>(criteria().size()); ++n) selected.push_back(n);

    bool all_pass = true;
    for (int n : selected) {
        const auto& [name, body] = criteria()[static_cast<std::size_t>(n - 1)];
        Outcome o;
        try {
            body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        all_pass = all_pass && o.pass;
        std::cout << "criterion " << n << " [" << name << "]: " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str();
        if (!o.pass) std::cout << " | first failure: " << o.first_failure;
        std::cout << std::endl;
    }
    return all_pass ? 0 : 1;
}
