#include "nsg/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nsg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::int64_t Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }

Partition enumeration(const NumericalSet& t) {
    const auto& gaps = t.gaps();
    std::vector<int> parts(gaps.size());
    // The i-th smallest gap x has exactly i gaps and x - i elements below it.
    for (std::size_t i = 0; i < gaps.size(); ++i) parts[gaps.size() - 1 - i] = gaps[i] - static_cast<int>(i);
    return Partition(std::move(parts));
}

NumericalSet numerical_set_of(const Partition& lambda) {
    const int len = lambda.length();
    std::vector<int> gaps(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) gaps[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;
    return NumericalSet::from_gaps(gaps);
}

std::int64_t size_via_gap_count(const NumericalSet& t) {
    std::int64_t total = 0;
    std::int64_t below = 0;
    for (int n = 0; n <= t.frobenius(); ++n) {
        if (t.contains(n))
            ++below;
        else
            total += below;
    }
    return total;
}

int hook_length(const NumericalSet& t, int u, int x) {
    if (!t.contains(u) || x < 0 || t.contains(x) || u >= x) throw std::invalid_argument("not a box");
    return x - u;
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

std::vector<int> hook_multiset(const Partition& lambda) {
    const auto cols = conjugate(lambda);
    std::vector<int> out;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            const int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
            const int leg = cols[static_cast<std::size_t>(j)] - i - 1;
            out.push_back(arm + leg + 1);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> hook_set(const Partition& lambda) {
    auto out = hook_multiset(lambda);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int durfee(const Partition& lambda) {
    int n = 0;
    while (n < lambda.length() && lambda[static_cast<std::size_t>(n)] >= n + 1) ++n;
    return n;
}

std::int64_t SectionGrid::total_boxes() const {
    std::int64_t total = 0;
    for (const auto& [key, cell] : cells) total += cell.box_count;
    return total;
}

SectionGrid sections(const NumericalSet& t, const NumericalSemigroup& s) {
    if (s.is_naturals()) throw std::domain_error("sections undefined for N");
    SectionGrid grid;
    grid.multiplicity = s.multiplicity();
    grid.frobenius = s.frobenius();
    grid.depth = s.depth();
    const int m = grid.multiplicity;
    const int f = grid.frobenius;
    if (t.frobenius() > f) throw std::invalid_argument("numerical set has a gap above F(S)");

    std::map<std::pair<int, int>, std::set<int>> hooks;
    for (int a = 0; a < grid.depth; ++a)
        for (int b = 0; a + b < grid.depth; ++b) {
            grid.cells[{a, b}];
            hooks[{a, b}];
        }
    const auto elems = t.elements_up_to(f);
    for (int x : t.gaps())
        for (int u : elems) {
            if (u >= x) break;
            const std::pair<int, int> key{(f - x) / m, u / m};
            auto it = grid.cells.find(key);
            if (it == grid.cells.end()) throw std::invalid_argument("box outside the section grid; is A(T) = S?");
            ++it->second.box_count;
            hooks[key].insert(x - u);
        }
    for (auto& [key, cell] : grid.cells) cell.hook_lengths.assign(hooks[key].begin(), hooks[key].end());
    return grid;
}

std::string render(const Partition& lambda, const RenderOptions& opts) {
    std::ostringstream os;
    if (!opts.hooks) {
        for (int p : lambda.parts()) os << std::string(static_cast<std::size_t>(p), '#') << '\n';
        return os.str();
    }
    const auto cols = conjugate(lambda);
    const auto all = hook_multiset(lambda);
    const int width = all.empty() ? 1 : static_cast<int>(std::to_string(all.back()).size());
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
            const int h = lambda[static_cast<std::size_t>(i)] - j + cols[static_cast<std::size_t>(j)] - i - 1;
            const std::string cell = std::to_string(h);
            if (j > 0) os << ' ';
            os << std::string(static_cast<std::size_t>(width) - cell.size(), ' ') << cell;
        }
        os << '\n';
    }
    return os.str();
}

std::string profile_walk(const NumericalSet& t) {
    std::ostringstream os;
    for (int n = 0; n <= t.frobenius(); ++n) {
        if (n > 0) os << ' ';
        os << n << ':' << (t.contains(n) ? 'R' : 'U');
    }
    return os.str();
}

std::string render(const NumericalSet& t, const RenderOptions& opts) {
    std::string out = render(enumeration(t), opts);
    if (opts.walk && !t.is_naturals()) out += "walk: " + profile_walk(t) + "\n";
    return out;
}

}  // namespace nsg
