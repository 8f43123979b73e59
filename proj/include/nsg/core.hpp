#pragma once

// Numerical sets and numerical semigroups.
//
// A numerical set is a subset of N that contains 0 and has finite complement.
// It is stored by its sorted gap list plus a membership table over [0, F+1];
// every integer above the Frobenius number is an element.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nsg {

class NumericalSet {
public:
    /// The set N itself (no gaps, Frobenius number -1).
    NumericalSet() : member_(1, true) {}

    /// Throws std::invalid_argument if any gap is < 1. Duplicates are ignored.
    static NumericalSet from_gaps(std::span<const int> gaps);
    static NumericalSet from_gaps(std::initializer_list<int> gaps) {
        return from_gaps(std::span<const int>(gaps.begin(), gaps.size()));
    }

    bool contains(long long n) const {
        if (n < 0) return false;
        if (n > frobenius()) return true;
        return member_[static_cast<std::size_t>(n)];
    }

    const std::vector<int>& gaps() const { return gaps_; }
    int frobenius() const { return gaps_.empty() ? -1 : gaps_.back(); }
    int genus() const { return static_cast<int>(gaps_.size()); }
    int multiplicity() const;
    /// Unique q with (q-1)m <= F < qm; 0 for N.
    int depth() const;
    bool is_naturals() const { return gaps_.empty(); }

    /// Elements t with t <= bound, ascending.
    std::vector<int> elements_up_to(int bound) const;

    friend bool operator==(const NumericalSet& a, const NumericalSet& b) { return a.gaps_ == b.gaps_; }
    /// Lexicographic by gap list.
    friend std::strong_ordering operator<=>(const NumericalSet& a, const NumericalSet& b) {
        return a.gaps_ <=> b.gaps_;
    }

private:
    std::vector<int> gaps_;
    std::vector<bool> member_;  // indices 0..F+1
};

/// A numerical set closed under addition. Invariants that depend only on the
/// gap set (pseudo-Frobenius numbers, void, minimal generators) are computed
/// once at construction, so values are immutable and safe to share.
class NumericalSemigroup : public NumericalSet {
public:
    NumericalSemigroup() : NumericalSemigroup(NumericalSet{}) {}  // N

    /// Throws std::invalid_argument if the gap set does not describe a semigroup.
    static NumericalSemigroup from_gaps(std::span<const int> gaps);
    static NumericalSemigroup from_gaps(std::initializer_list<int> gaps) {
        return from_gaps(std::span<const int>(gaps.begin(), gaps.size()));
    }
    /// Throws std::invalid_argument on empty input, non-positive values, or gcd != 1.
    static NumericalSemigroup from_generators(std::span<const int> gens);
    static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
        return from_generators(std::span<const int>(gens.begin(), gens.size()));
    }
    static NumericalSemigroup from_set(const NumericalSet& t);

    /// Empty for N.
    const std::vector<int>& pf() const { return pf_; }
    int type() const { return static_cast<int>(pf_.size()); }
    /// Gaps x with F - x also a gap.
    const std::vector<int>& void_elements() const { return void_; }
    const std::vector<int>& minimal_generators() const { return mingens_; }

private:
    explicit NumericalSemigroup(NumericalSet base);

    std::vector<int> pf_;
    std::vector<int> void_;
    std::vector<int> mingens_;
};

NumericalSet from_gaps(std::span<const int> gaps);
NumericalSemigroup from_generators(std::span<const int> gens);

inline int frobenius(const NumericalSet& t) { return t.frobenius(); }
inline int genus(const NumericalSet& t) { return t.genus(); }
inline int multiplicity(const NumericalSet& t) { return t.multiplicity(); }
inline int depth(const NumericalSet& t) { return t.depth(); }

bool is_semigroup(const NumericalSet& t);

/// {x in N : x + T subset of T}.
NumericalSemigroup atom_monoid(const NumericalSet& t);

/// Throws std::domain_error("PF undefined") for N.
std::vector<int> pseudo_frobenius(const NumericalSet& s);

/// Gaps h for which S u {h} is again a semigroup.
std::vector<int> special_gaps(const NumericalSemigroup& s);

/// T* = {x : F(T) - x not in T}. Throws std::domain_error for N.
NumericalSet dual(const NumericalSet& t);

/// Positive elements below the Frobenius number.
std::vector<int> small_elements(const NumericalSet& s);

/// Gaps x of S with F - x also a gap of S (computed from the definition).
std::vector<int> void_of(const NumericalSet& s);

/// "{0,5,7,9,->}".
std::string to_text(const NumericalSet& t);
/// Inverse of to_text. Throws std::invalid_argument on malformed input.
NumericalSet parse_text(const std::string& text);

}  // namespace nsg
