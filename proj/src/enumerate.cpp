#include "nsg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nsg/antiatom.hpp"

namespace nsg {
namespace {

using GapMask = std::uint64_t;

struct Node {
    GapMask gaps = 0;  // bit n set iff n is a gap
    int frobenius = -1;
    int genus = 0;
};

bool in_node(const Node& s, int n) {
    if (n > s.frobenius) return true;
    return (s.gaps >> n & 1U) == 0;
}

// Minimal generators above F are the effective generators; removing one keeps
// the complement closed under addition.
void for_each_child(const Node& s, int max_frobenius, const std::function<void(const Node&)>& visit) {
    int m = 1;
    while (!in_node(s, m)) ++m;
    // For N (F = -1) the only generator is 1, which lies outside [F+1, F+m].
    const int lo = std::max(1, s.frobenius + 1);
    const int hi = std::max(lo, s.frobenius + m);
    for (int g = lo; g <= hi && g <= max_frobenius; ++g) {
        bool decomposable = false;
        for (int a = m; a <= g - a && !decomposable; ++a) decomposable = in_node(s, a) && in_node(s, g - a);
        if (decomposable) continue;
        visit(Node{s.gaps | GapMask{1} << g, g, s.genus + 1});
    }
}

NumericalSemigroup to_semigroup(const Node& s) {
    std::vector<int> gaps;
    for (GapMask bits = s.gaps; bits != 0; bits &= bits - 1) gaps.push_back(std::countr_zero(bits));
    return NumericalSemigroup::from_gaps(gaps);
}

// Depth-first over the tree below `root`, pruning on F; collects nodes accepted by `keep`.
void walk(const Node& root, int max_frobenius, int max_genus, const std::function<bool(const Node&)>& keep,
          std::vector<Node>& out) {
    if (keep(root)) out.push_back(root);
    if (root.genus >= max_genus) return;
    for_each_child(root, max_frobenius, [&](const Node& child) { walk(child, max_frobenius, max_genus, keep, out); });
}

std::vector<NumericalSemigroup> collect(int max_frobenius, int max_genus, const std::function<bool(const Node&)>& keep,
                                        unsigned threads) {
    // Split the top of the tree into a frontier of independent subtrees.
    const unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
    std::vector<Node> found;
    std::vector<Node> frontier{Node{}};
    while (frontier.size() < 8 * static_cast<std::size_t>(workers)) {
        std::vector<Node> next;
        bool grew = false;
        for (const auto& node : frontier) {
            if (keep(node)) found.push_back(node);
            if (node.genus >= max_genus) continue;
            for_each_child(node, max_frobenius, [&](const Node& c) {
                next.push_back(c);
                grew = true;
            });
        }
        frontier = std::move(next);
        if (!grew) break;
    }

    std::vector<std::vector<Node>> per_task(frontier.size());
    parallel_for(frontier.size(), workers,
                 [&](std::size_t i) { walk(frontier[i], max_frobenius, max_genus, keep, per_task[i]); });
    for (auto& part : per_task) found.insert(found.end(), part.begin(), part.end());

    std::vector<NumericalSemigroup> out(found.size());
    parallel_for(found.size(), workers, [&](std::size_t i) { out[i] = to_semigroup(found[i]); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    const unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(workers, n); ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mutex);
                        if (!error) error = std::current_exception();
                        next = n;
                    }
                }
            });
    }
    if (error) std::rethrow_exception(error);
}

std::vector<NumericalSemigroup> semigroups_by_genus(int g, unsigned threads) {
    if (g < 0) return {};
    if (g > 31) throw std::out_of_range("genus above 31 exceeds the 64-bit gap masks");
    return collect(kMaxTreeFrobenius, g, [g](const Node& s) { return s.genus == g; }, threads);
}

std::vector<NumericalSemigroup> semigroups_by_frobenius(int f, unsigned threads) {
    if (f < -1 || f == 0) return {};
    if (f > kMaxTreeFrobenius) throw std::out_of_range("Frobenius number above 63 exceeds the 64-bit gap masks");
    // Children have larger F than their parent, and genus never exceeds F.
    return collect(f, std::max(f, 0), [f](const Node& s) { return s.frobenius == f; }, threads);
}

namespace {

SemigroupFilter::Clause parse_clause(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size())
        throw std::invalid_argument("filter must look like key=value: " + text);
    SemigroupFilter::Clause c;
    c.key = text.substr(0, eq);
    static const std::vector<std::string> known{"depth", "type", "small", "multiplicity", "genus", "frobenius"};
    if (std::find(known.begin(), known.end(), c.key) == known.end())
        throw std::invalid_argument("unknown filter key: " + c.key);
    std::size_t used = 0;
    try {
        c.value = std::stoi(text.substr(eq + 1), &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("filter value must be an integer: " + text);
    }
    if (used != text.size() - eq - 1) throw std::invalid_argument("filter value must be an integer: " + text);
    return c;
}

bool holds(const SemigroupFilter::Clause& c, const NumericalSemigroup& s) {
    if (c.key == "depth") return s.depth() == c.value;
    if (c.key == "type") return s.type() == c.value;
    if (c.key == "small") return static_cast<int>(small_elements(s).size()) == c.value;
    if (c.key == "multiplicity") return s.multiplicity() == c.value;
    if (c.key == "genus") return s.genus() == c.value;
    if (c.key == "frobenius") return s.frobenius() == c.value;
    throw std::invalid_argument("unknown filter key: " + c.key);
}

}  // namespace

SemigroupFilter SemigroupFilter::parse(const std::string& text) {
    SemigroupFilter f;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        f.clauses.push_back(parse_clause(text.substr(start, comma == std::string::npos ? comma : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return f;
}

bool SemigroupFilter::operator()(const NumericalSemigroup& s) const {
    return std::all_of(clauses.begin(), clauses.end(), [&](const Clause& c) { return holds(c, s); });
}

std::string SemigroupFilter::to_string() const {
    std::string out;
    for (const auto& c : clauses) out += (out.empty() ? "" : ",") + c.key + "=" + std::to_string(c.value);
    return out;
}

void EnumerationQuery::validate() const {
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    if (only && (*only < 1 || *only > bound)) throw std::invalid_argument("--only must lie in [1, bound]");
}

std::vector<int> EnumerationQuery::buckets() const {
    validate();
    if (only) return {*only};
    std::vector<int> out;
    for (int b = 1; b <= bound; ++b) out.push_back(b);
    return out;
}

std::vector<NumericalSemigroup> enumerate(const EnumerationQuery& query) {
    std::vector<NumericalSemigroup> out;
    for (int b : query.buckets()) {
        auto level = query.mode == EnumerationMode::by_genus ? semigroups_by_genus(b, query.threads)
                                                             : semigroups_by_frobenius(b, query.threads);
        for (auto& s : level)
            if (!query.filter || (*query.filter)(s)) out.push_back(std::move(s));
    }
    return out;
}

ScanResult scan_minimality(const EnumerationQuery& query) {
    ScanResult result;
    for (int b : query.buckets()) {
        auto level = query.mode == EnumerationMode::by_genus ? semigroups_by_genus(b, query.threads)
                                                             : semigroups_by_frobenius(b, query.threads);
        if (query.filter) std::erase_if(level, [&](const NumericalSemigroup& s) { return !(*query.filter)(s); });
        std::vector<char> minimal(level.size(), 1);
        parallel_for(level.size(), query.threads, [&](std::size_t i) { minimal[i] = is_lambda_minimal(level[i]); });
        auto& bucket = result.buckets[b];
        bucket.count = level.size();
        for (std::size_t i = 0; i < level.size(); ++i)
            if (!minimal[i]) {
                ++bucket.non_minimal;
                result.non_minimal.push_back(level[i]);
            }
        result.total += level.size();
    }
    std::sort(result.non_minimal.begin(), result.non_minimal.end());
    return result;
}

}  // namespace nsg
