#include "doctest.h"
#include "nsg/partitions.hpp"
#include "nsg/antiatom.hpp"
#include "oracles.hpp"

using namespace nsg;

namespace {

// All partitions of n, parts at most `cap`.
void partitions_of(int n, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(n, cap); p >= 1; --p) {
        prefix.push_back(p);
        partitions_of(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_of(n, n, prefix, out);
    return out;
}

template <class Visit>
void for_each_numerical_set(int fmax, Visit visit) {
    visit(NumericalSet{});
    for (int f = 1; f <= fmax; ++f)
        oracle::for_each_gap_set_with_frobenius(f, [&](const std::vector<int>& g) { visit(NumericalSet::from_gaps(g)); });
}

const NumericalSemigroup& flagship() {
    static const auto s = NumericalSemigroup::from_generators({9, 10, 11, 12, 13});
    return s;
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK(Partition{3, 2, 2}.size() == 7);
    CHECK(Partition{}.empty());
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("enumeration") {
    CHECK(enumeration(parse_text("{0,5,7,9,->}")) == Partition{3, 2, 1, 1, 1, 1});
    CHECK(enumeration(NumericalSet{}).empty());
    const auto lambda = enumeration(flagship());
    CHECK(lambda == Partition{6, 6, 6, 6, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(lambda.size() == 32);
}

TEST_CASE("numerical_set_of") {
    CHECK(to_text(numerical_set_of(Partition{3, 2, 1, 1, 1, 1})) == "{0,5,7,9,->}");
    CHECK(numerical_set_of(Partition{}).is_naturals());
    CHECK(to_text(numerical_set_of(Partition{9, 8, 2, 2, 2, 2, 2, 2, 2})) == "{0,1,9,10,11,12,13,14,16,18,->}");
}

TEST_CASE("size_via_gap_count") {
    CHECK(size_via_gap_count(parse_text("{0,5,7,9,->}")) == 9);
    CHECK(size_via_gap_count(flagship()) == 32);
    CHECK(size_via_gap_count(NumericalSet{}) == 0);
}

TEST_CASE("hook_length") {
    const auto t = parse_text("{0,5,7,9,->}");
    CHECK(hook_length(t, 0, 8) == 8);
    CHECK(hook_length(t, 5, 6) == 1);
    CHECK(hook_length(t, 7, 8) == 1);
    CHECK_THROWS_WITH_AS(hook_length(t, 1, 8), doctest::Contains("not a box"), std::invalid_argument);
    CHECK_THROWS_AS(hook_length(t, 0, 9), std::invalid_argument);
    CHECK_THROWS_AS(hook_length(t, 7, 6), std::invalid_argument);
}

TEST_CASE("hook_set") {
    CHECK(hook_set(Partition{3, 2, 1, 1, 1, 1}) == std::vector<int>{1, 2, 3, 4, 6, 8});
    CHECK(hook_set(Partition{9, 8, 2, 2, 2, 2, 2, 2, 2}) == flagship().gaps());
    CHECK(hook_set(Partition{1}) == std::vector<int>{1});
    CHECK(hook_set(Partition{}).empty());
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{3, 2, 1, 1, 1, 1}) == Partition{6, 2, 1});
    CHECK(conjugate(Partition{}).empty());
    CHECK(conjugate(Partition{2, 1}) == Partition{2, 1});
}

TEST_CASE("durfee") {
    CHECK(durfee(Partition{3, 2, 1, 1, 1, 1}) == 2);
    CHECK(durfee(enumeration(flagship())) == 4);
    CHECK(durfee(Partition{}) == 0);
}

TEST_CASE("render") {
    CHECK(render(Partition{}) == "");
    CHECK(render(Partition{3, 1}) == "###\n#\n");
    const auto figure = render(parse_text("{0,5,7,9,->}"), RenderOptions{true, false});
    CHECK(figure.substr(0, figure.find('\n')) == "8 3 1");
    CHECK(std::count(figure.begin(), figure.end(), '\n') == 6);
    CHECK(profile_walk(parse_text("{0,2,->}")) == "0:R 1:U");
    CHECK(render(Partition{6, 2, 1}) == "######\n##\n#\n");
}

TEST_CASE("bijection over all partitions of n <= 12") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const auto t = numerical_set_of(lambda);
            CHECK(enumeration(t) == lambda);
            CHECK(size_via_gap_count(t) == n);
            const auto c = conjugate(lambda);
            CHECK(conjugate(c) == lambda);
            CHECK(c.size() == lambda.size());
            CHECK(hook_multiset(c) == hook_multiset(lambda));
        }
}

TEST_CASE("bijection, hook identity and duality over numerical sets with F <= 12") {
    for_each_numerical_set(12, [](const NumericalSet& t) {
        const auto lambda = enumeration(t);
        CHECK(numerical_set_of(lambda) == t);
        CHECK(size_via_gap_count(t) == lambda.size());
        CHECK(hook_set(lambda) == atom_monoid(t).gaps());
        CHECK(hook_set(lambda) == oracle::box_hooks(t.gaps()));
        if (!t.is_naturals()) CHECK(enumeration(dual(t)) == conjugate(lambda));
        // parts by definition
        std::vector<int> parts;
        for (auto it = t.gaps().rbegin(); it != t.gaps().rend(); ++it) {
            int below = 0;
            for (int u = 0; u < *it; ++u) below += t.contains(u) ? 1 : 0;
            if (below > 0) parts.push_back(below);
        }
        CHECK(lambda.parts() == parts);
    });
}

TEST_CASE("sections of a staircase semigroup") {
    for (int m = 2; m <= 6; ++m)
        for (int k = 1; k <= 4; ++k)
            for (int s = 1; s <= m - 1; ++s) {
                std::vector<int> gaps;
                for (int x = 1; x <= k * m + s; ++x)
                    if (x % m != 0 || x > k * m) gaps.push_back(x);
                const auto S = NumericalSemigroup::from_gaps(gaps);
                const auto grid = sections(S, S);
                CHECK(grid.depth == k + 1);
                CHECK(grid.total_boxes() == size_via_gap_count(S));
                for (const auto& [key, cell] : grid.cells) {
                    const auto [a, b] = key;
                    CHECK(a + b <= k);
                    CHECK(cell.box_count == (a + b < k ? m - 1 : s));
                    CHECK(static_cast<std::int64_t>(cell.hook_lengths.size()) <= cell.box_count);
                }
            }
}

TEST_CASE("sections of <2,3>") {
    const auto s = NumericalSemigroup::from_generators({2, 3});
    const auto grid = sections(s, s);
    CHECK(grid.cells.size() == 1);
    CHECK(grid.at(0, 0).box_count == 1);
    CHECK(grid.at(0, 0).hook_lengths == std::vector<int>{1});
    CHECK_THROWS_AS(sections(s, NumericalSemigroup{}), std::domain_error);
}

TEST_CASE("depth-2 section lemma over semigroups with F <= 16") {
    std::size_t checked = 0;
    for (int f = 1; f <= 16; ++f)
        for (const auto& gaps : oracle::semigroups_with_frobenius(f)) {
            const auto s = NumericalSemigroup::from_gaps(gaps);
            if (s.depth() != 2) continue;
            const int m = s.multiplicity();
            const auto base = sections(s, s);
            CHECK(base.cells.size() == 3);
            const auto& h2 = base.at(0, 0).hook_lengths;
            CHECK(static_cast<std::int64_t>(h2.size()) == base.at(0, 0).box_count);
            std::vector<int> window;
            for (int h : hook_set(enumeration(s)))
                if (h >= f - m + 1) window.push_back(h);
            CHECK(window == h2);
            for (const auto& rep : solve(s).reports) {
                const auto grid = sections(rep.numerical_set, s);
                CHECK(grid.total_boxes() == rep.partition_size);
                const auto& cell = grid.at(0, 0).hook_lengths;
                for (int h : hook_multiset(enumeration(rep.numerical_set)))
                    if (h >= f - m + 1 && h <= f) CHECK(std::binary_search(cell.begin(), cell.end(), h));
                CHECK(base.at(0, 0).box_count <= grid.at(0, 0).box_count);
                ++checked;
            }
        }
    CHECK(checked > 100);
}
