#pragma once

// Exhaustive generation of numerical semigroups by genus or Frobenius number,
// and lambda-minimality scans over them.
//
// Generation walks the semigroup tree: the children of S are S \ {g} for each
// minimal generator g > F(S). Subtrees are handed out to worker threads and
// the merged result is sorted by gap list, so output never depends on the
// thread count.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsg/core.hpp"

namespace nsg {

/// Largest Frobenius number the tree walk supports (gap sets are 64-bit masks).
inline constexpr int kMaxTreeFrobenius = 63;

/// Every semigroup of genus exactly g, sorted by gap list. threads = 0 picks
/// the hardware concurrency. Throws std::out_of_range if g > 31.
std::vector<NumericalSemigroup> semigroups_by_genus(int g, unsigned threads = 0);

/// Every semigroup with Frobenius number exactly f, sorted by gap list. f = -1
/// yields N. Throws std::out_of_range if f > kMaxTreeFrobenius.
std::vector<NumericalSemigroup> semigroups_by_frobenius(int f, unsigned threads = 0);

enum class EnumerationMode { by_genus, by_frobenius };

/// A named integer predicate, e.g. "depth=2", "type=3", "small=4", "multiplicity=5",
/// or a comma-separated conjunction such as "depth=2,small=4".
struct SemigroupFilter {
    struct Clause {
        std::string key;
        int value = 0;
    };
    std::vector<Clause> clauses;

    /// Throws std::invalid_argument for unknown keys or malformed text.
    static SemigroupFilter parse(const std::string& text);
    bool operator()(const NumericalSemigroup& s) const;
    std::string to_string() const;
};

/// Buckets 1..bound of the chosen invariant (N is never included), or the
/// single bucket `only` when set.
struct EnumerationQuery {
    EnumerationMode mode = EnumerationMode::by_genus;
    int bound = 1;
    std::optional<int> only;
    std::optional<SemigroupFilter> filter;
    unsigned threads = 0;

    /// Throws std::invalid_argument when bound < 1 or only is outside [1, bound].
    void validate() const;
    std::vector<int> buckets() const;
};

/// Every semigroup matched by the query, bucket by bucket, each bucket sorted by gap list.
std::vector<NumericalSemigroup> enumerate(const EnumerationQuery& query);

struct BucketSummary {
    std::size_t count = 0;
    std::size_t non_minimal = 0;
};

struct ScanResult {
    std::map<int, BucketSummary> buckets;
    std::size_t total = 0;
    /// Sorted by gap list.
    std::vector<NumericalSemigroup> non_minimal;
};

/// Runs the anti-atom solver over every semigroup matched by the query.
ScanResult scan_minimality(const EnumerationQuery& query);

/// Runs body(i) for i in [0, n) on up to `threads` workers pulling indices
/// from a shared counter. The first exception thrown is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace nsg
