#include "nsg/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nsg {

NumericalSet NumericalSet::from_gaps(std::span<const int> gaps) {
    NumericalSet t;
    t.gaps_.assign(gaps.begin(), gaps.end());
    std::sort(t.gaps_.begin(), t.gaps_.end());
    t.gaps_.erase(std::unique(t.gaps_.begin(), t.gaps_.end()), t.gaps_.end());
    if (!t.gaps_.empty() && t.gaps_.front() < 1)
        throw std::invalid_argument("gaps must be positive integers (0 is always an element)");
    t.member_.assign(static_cast<std::size_t>(t.frobenius() + 2), true);
    for (int g : t.gaps_) t.member_[static_cast<std::size_t>(g)] = false;
    return t;
}

int NumericalSet::multiplicity() const {
    for (int n = 1;; ++n)
        if (contains(n)) return n;
}

int NumericalSet::depth() const {
    const int f = frobenius();
    if (f < 0) return 0;
    return f / multiplicity() + 1;
}

std::vector<int> NumericalSet::elements_up_to(int bound) const {
    std::vector<int> out;
    for (int n = 0; n <= bound; ++n)
        if (contains(n)) out.push_back(n);
    return out;
}

NumericalSet from_gaps(std::span<const int> gaps) { return NumericalSet::from_gaps(gaps); }

bool is_semigroup(const NumericalSet& t) {
    const int f = t.frobenius();
    const auto elems = t.elements_up_to(f);
    for (std::size_t i = 1; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size() && elems[i] + elems[j] <= f; ++j)
            if (!t.contains(elems[i] + elems[j])) return false;
    return true;
}

std::vector<int> void_of(const NumericalSet& s) {
    std::vector<int> out;
    const int f = s.frobenius();
    for (int x : s.gaps())
        if (!s.contains(f - x)) out.push_back(x);
    return out;
}

std::vector<int> pseudo_frobenius(const NumericalSet& s) {
    if (s.is_naturals()) throw std::domain_error("PF undefined for N");
    const int f = s.frobenius();
    const auto elems = s.elements_up_to(f);
    std::vector<int> out;
    for (int p : s.gaps()) {
        bool ok = true;
        for (std::size_t i = 1; i < elems.size() && ok; ++i) ok = s.contains(p + elems[i]);
        if (ok) out.push_back(p);
    }
    return out;
}

NumericalSemigroup::NumericalSemigroup(NumericalSet base) : NumericalSet(std::move(base)) {
    if (is_naturals()) {
        mingens_ = {1};
        return;
    }
    pf_ = pseudo_frobenius(*this);
    void_ = void_of(*this);
    const int m = multiplicity();
    const int limit = frobenius() + m;
    for (int g = m; g <= limit; ++g) {
        if (!contains(g)) continue;
        bool decomposable = false;
        for (int a = m; a <= g - m && !decomposable; ++a) decomposable = contains(a) && contains(g - a);
        if (!decomposable) mingens_.push_back(g);
    }
}

NumericalSemigroup NumericalSemigroup::from_set(const NumericalSet& t) {
    if (!is_semigroup(t)) throw std::invalid_argument("not closed under addition: " + to_text(t));
    return NumericalSemigroup(t);
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
    return from_set(NumericalSet::from_gaps(gaps));
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
    if (gens.empty()) throw std::invalid_argument("empty generator set");
    int g = 0;
    int lo = gens.front();
    int hi = gens.front();
    for (int x : gens) {
        if (x < 1) throw std::invalid_argument("generators must be positive");
        g = std::gcd(g, x);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (g != 1) throw std::invalid_argument("not cofinite: gcd of generators is " + std::to_string(g));

    // F(<gens>) < min * max, so sieving to 2 * min * max leaves a long run of elements at the top.
    const int bound = 2 * lo * hi;
    std::vector<bool> in(static_cast<std::size_t>(bound) + 1, false);
    in[0] = true;
    for (int n = 1; n <= bound; ++n)
        for (int x : gens)
            if (x <= n && in[static_cast<std::size_t>(n - x)]) {
                in[static_cast<std::size_t>(n)] = true;
                break;
            }
    std::vector<int> gaps;
    for (int n = 1; n <= bound; ++n)
        if (!in[static_cast<std::size_t>(n)]) gaps.push_back(n);
    return NumericalSemigroup(NumericalSet::from_gaps(gaps));
}

NumericalSemigroup from_generators(std::span<const int> gens) { return NumericalSemigroup::from_generators(gens); }

NumericalSemigroup atom_monoid(const NumericalSet& t) {
    const int f = t.frobenius();
    const auto elems = t.elements_up_to(f);
    std::vector<int> gaps;
    // Every x > F qualifies, so only x <= F needs testing.
    for (int x = 1; x <= f; ++x) {
        bool ok = t.contains(x);
        for (std::size_t i = 1; i < elems.size() && ok; ++i) ok = t.contains(x + elems[i]);
        if (!ok) gaps.push_back(x);
    }
    return NumericalSemigroup::from_set(NumericalSet::from_gaps(gaps));
}

std::vector<int> special_gaps(const NumericalSemigroup& s) {
    std::vector<int> out;
    for (int h : s.gaps()) {
        std::vector<int> rest;
        for (int g : s.gaps())
            if (g != h) rest.push_back(g);
        if (is_semigroup(NumericalSet::from_gaps(rest))) out.push_back(h);
    }
    return out;
}

NumericalSet dual(const NumericalSet& t) {
    if (t.is_naturals()) throw std::domain_error("dual undefined for N");
    const int f = t.frobenius();
    std::vector<int> gaps;
    for (int x = 1; x <= f; ++x)
        if (t.contains(f - x)) gaps.push_back(x);
    return NumericalSet::from_gaps(gaps);
}

std::vector<int> small_elements(const NumericalSet& s) {
    std::vector<int> out;
    for (int n = 1; n < s.frobenius(); ++n)
        if (s.contains(n)) out.push_back(n);
    return out;
}

std::string to_text(const NumericalSet& t) {
    std::ostringstream os;
    os << '{';
    for (int e : t.elements_up_to(t.frobenius() + 1)) os << e << ',';
    os << "->}";
    return os.str();
}

NumericalSet parse_text(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    const std::string tail = ",->}";
    if (s.size() < 1 + tail.size() || s.front() != '{' || s.compare(s.size() - tail.size(), tail.size(), tail) != 0)
        throw std::invalid_argument("expected text of the form {0,a,b,...,->}: " + text);
    std::vector<int> elems;
    std::istringstream in(s.substr(1, s.size() - 1 - tail.size()));
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != tok.size() || v < 0) throw std::invalid_argument("bad element '" + tok + "' in " + text);
        if (!elems.empty() && v <= elems.back()) throw std::invalid_argument("elements must increase: " + text);
        elems.push_back(v);
    }
    if (elems.empty() || elems.front() != 0) throw std::invalid_argument("a numerical set contains 0: " + text);
    std::vector<int> gaps;
    std::size_t k = 0;
    for (int n = 0; n <= elems.back(); ++n) {
        if (k < elems.size() && elems[k] == n)
            ++k;
        else
            gaps.push_back(n);
    }
    return NumericalSet::from_gaps(gaps);
}

}  // namespace nsg
