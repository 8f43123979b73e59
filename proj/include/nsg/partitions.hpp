#pragma once

// Integer partitions, Young diagrams and hook lengths, and the profile-walk
// bijection between partitions and numerical sets.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsg/core.hpp"

namespace nsg {

/// Weakly decreasing positive parts, stored row-major (parts are row lengths).
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::int64_t size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// lambda(T): one row per gap x (largest gap on top) of length #{u in T : u < x}.
Partition enumeration(const NumericalSet& t);

/// Inverse of enumeration.
NumericalSet numerical_set_of(const Partition& lambda);

/// |lambda(T)| counted as #{(u, x) : u in T, x gap, u < x}, without building the partition.
std::int64_t size_via_gap_count(const NumericalSet& t);

/// x - u for the box (u, x). Throws std::invalid_argument("not a box") unless
/// u in T, x a gap of T and u < x.
int hook_length(const NumericalSet& t, int u, int x);

/// Distinct hook lengths (arm + leg + 1 over every box), ascending.
std::vector<int> hook_set(const Partition& lambda);

/// All hook lengths with multiplicity, ascending.
std::vector<int> hook_multiset(const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// Side of the largest square inside the Young diagram.
int durfee(const Partition& lambda);

struct SectionCell {
    std::int64_t box_count = 0;
    std::vector<int> hook_lengths;  // distinct, ascending
};

/// The Young diagram of lambda(T), for T with atom monoid S, cut into the cells
/// (a, b) with a + b <= q(S) - 1 by box (u, x) -> (floor((F - x) / m), floor(u / m)).
struct SectionGrid {
    int multiplicity = 0;
    int frobenius = 0;
    int depth = 0;
    std::map<std::pair<int, int>, SectionCell> cells;  // key (a, b)

    const SectionCell& at(int a, int b) const { return cells.at({a, b}); }
    std::int64_t total_boxes() const;
};

/// Throws std::domain_error for S = N and std::invalid_argument if T has a gap
/// beyond F(S) or is not contained in the canonical ideal range.
SectionGrid sections(const NumericalSet& t, const NumericalSemigroup& s);

struct RenderOptions {
    bool hooks = false;  // overlay hook lengths
    bool walk = false;   // append the profile walk (only when rendering a numerical set)
};

/// ASCII Young diagram, one cell per box. The empty partition renders as "".
std::string render(const Partition& lambda, const RenderOptions& opts = {});
std::string render(const NumericalSet& t, const RenderOptions& opts = {});

/// Profile walk over 0..F: "R" for elements, "U" for gaps, e.g. "0:R 1:U ...".
std::string profile_walk(const NumericalSet& t);

}  // namespace nsg
