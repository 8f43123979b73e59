#include "nsg/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nsg/antiatom.hpp"
#include "nsg/partitions.hpp"

namespace nsg {
namespace {

std::string join(const std::vector<std::int64_t>& values) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << '}';
    return os.str();
}

std::vector<std::int64_t> widen(const std::vector<int>& v) { return {v.begin(), v.end()}; }

NumericalSemigroup interval(int lo, int hi) {
    std::vector<int> gens(static_cast<std::size_t>(hi - lo + 1));
    std::iota(gens.begin(), gens.end(), lo);
    return NumericalSemigroup::from_generators(gens);
}

NumericalSet interval_k_witness(const NumericalSemigroup& s, int k, int l) {
    std::vector<int> gaps;
    for (int g : s.gaps()) {
        const bool small = g <= l - 1;
        const bool large = g > 3 * k + 1 && g <= 4 * k + 1 && g % l != 1 % l;
        if (!small && !large) gaps.push_back(g);
    }
    return NumericalSet::from_gaps(gaps);
}

void check(std::vector<PredictionCheck>& out, const std::string& name, std::int64_t predicted, std::int64_t computed) {
    out.push_back({name, std::to_string(predicted), std::to_string(computed), predicted == computed});
}

void check(std::vector<PredictionCheck>& out, const std::string& name, const std::vector<std::int64_t>& predicted,
           const std::vector<std::int64_t>& computed) {
    out.push_back({name, join(predicted), join(computed), predicted == computed});
}

}  // namespace

std::string FamilyInstance::name() const {
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::staircase: os << "staircase"; break;
        case FamilyKind::interval_m: os << "interval-m"; break;
        case FamilyKind::interval_k: os << "interval-k"; break;
    }
    os << '(';
    for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
    os << ')';
    return os.str();
}

FamilyInstance staircase(int m, int k, int s) {
    if (m < 2 || k < 1 || s < 1 || s > m - 1)
        throw std::invalid_argument("staircase needs m >= 2, k >= 1, 1 <= s <= m-1");
    const int f = k * m + s;
    std::vector<int> gaps;
    for (int n = 1; n <= f; ++n)
        if (n % m != 0 || n > k * m) gaps.push_back(n);

    FamilyInstance inst;
    inst.kind = FamilyKind::staircase;
    inst.params = {m, k, s};
    inst.semigroup = NumericalSemigroup::from_gaps(gaps);
    inst.predicted["frobenius"] = f;
    inst.predicted["type"] = m - 1;
    inst.predicted["depth"] = k + 1;
    inst.predicted["lambda_minimal"] = 1;
    // m-1 boxes in each section with a+b < k, s boxes in each with a+b = k.
    inst.predicted["lambda_size"] = static_cast<std::int64_t>(m - 1) * k * (k + 1) / 2 + static_cast<std::int64_t>(s) * (k + 1);
    std::vector<std::int64_t> pf;
    for (int x = (k - 1) * m + s + 1; x <= (k - 1) * m + m - 1; ++x) pf.push_back(x);
    for (int x = k * m + 1; x <= k * m + s; ++x) pf.push_back(x);
    inst.predicted_sets["pf"] = pf;
    return inst;
}

FamilyInstance interval_m(int m) {
    if (m < 9) throw std::invalid_argument("interval_m needs m >= 9");
    FamilyInstance inst;
    inst.kind = FamilyKind::interval_m;
    inst.params = {m};
    inst.semigroup = interval(m, 2 * m - 5);
    const std::int64_t mm = m;
    inst.predicted["frobenius"] = 2 * mm - 1;
    inst.predicted["type"] = 4;
    inst.predicted["depth"] = 2;
    inst.predicted["lambda_size"] = 5 * mm - 13;
    inst.predicted["pa"] = 6;
    inst.predicted["min_size"] = 4 * mm - 5;
    inst.predicted["lambda_minimal"] = 0;
    std::vector<std::int64_t> gaps;
    for (std::int64_t x = 1; x <= mm - 1; ++x) gaps.push_back(x);
    for (std::int64_t x = 2 * mm - 4; x <= 2 * mm - 1; ++x) gaps.push_back(x);
    inst.predicted_sets["gaps"] = gaps;
    inst.predicted_sets["pf"] = {2 * mm - 4, 2 * mm - 3, 2 * mm - 2, 2 * mm - 1};
    inst.predicted_sets["void"] = {1, 2, 3, 2 * mm - 4, 2 * mm - 3, 2 * mm - 2};
    inst.predicted_sets["sizes"] = {4 * mm - 5, 4 * mm - 5, 5 * mm - 13, 5 * mm - 13, 5 * mm - 7, 5 * mm - 7};
    return inst;
}

std::int64_t interval_k_witness_size(std::int64_t k, std::int64_t l) {
    const std::int64_t num =
        3 * k * k * l - k * k + 4 * k * l * l * l + 3 * k * l * l + k * l - 2 * l * l * l * l + 2 * l * l * l;
    const std::int64_t den = 2 * l * l;
    if (num % den != 0) throw std::logic_error("closed form is not divisible by 2l^2");
    return num / den;
}

FamilyInstance interval_k(int k, int l) {
    if (k < 4) throw std::invalid_argument("interval_k needs k >= 4");
    if (l < 1 || k % l != 0) throw std::invalid_argument("interval_k needs l to divide k");
    FamilyInstance inst;
    inst.kind = FamilyKind::interval_k;
    inst.params = {k, l};
    inst.semigroup = interval(2 * k + 1, 3 * k + 1);
    inst.witness = interval_k_witness(inst.semigroup, k, l);
    const std::int64_t kk = k;
    const std::int64_t ll = l;
    const std::int64_t u = kk / ll;
    inst.predicted["lambda_size"] = kk * kk + 4 * kk;
    inst.predicted["witness_size"] = interval_k_witness_size(kk, ll);
    // |lambda(S)| - |lambda(T)| = (l-1)(u-1)(lu - l - u/2), doubled to stay integral.
    inst.predicted["size_drop_x2"] = (ll - 1) * (u - 1) * (2 * ll * u - 2 * ll - u);
    inst.predicted["witness_associated"] = 1;
    inst.predicted["witness_smaller"] = (l != 1 && l != k) ? 1 : 0;
    return inst;
}

std::vector<PredictionCheck> validate(const FamilyInstance& inst) {
    std::vector<PredictionCheck> out;
    const auto& s = inst.semigroup;
    for (const auto& [name, value] : inst.predicted) {
        if (name == "frobenius") check(out, name, value, s.frobenius());
        else if (name == "type") check(out, name, value, s.type());
        else if (name == "depth") check(out, name, value, s.depth());
        else if (name == "lambda_size") check(out, name, value, size_via_gap_count(s));
        else if (name == "lambda_minimal") check(out, name, value, is_lambda_minimal(s) ? 1 : 0);
        else if (name == "pa") check(out, name, value, static_cast<std::int64_t>(solve(s).pa));
        else if (name == "min_size") check(out, name, value, solve(s).min_size);
        else if (name == "witness_size") check(out, name, value, size_via_gap_count(*inst.witness));
        else if (name == "size_drop_x2")
            check(out, name, value, 2 * (size_via_gap_count(s) - size_via_gap_count(*inst.witness)));
        else if (name == "witness_associated") check(out, name, value, atom_monoid(*inst.witness) == s ? 1 : 0);
        else if (name == "witness_smaller")
            check(out, name, value, size_via_gap_count(*inst.witness) < size_via_gap_count(s) ? 1 : 0);
        else
            throw std::logic_error("no validator for prediction " + name);
    }
    for (const auto& [name, values] : inst.predicted_sets) {
        if (name == "pf") check(out, name, values, widen(s.pf()));
        else if (name == "gaps") check(out, name, values, widen(s.gaps()));
        else if (name == "void") check(out, name, values, widen(s.void_elements()));
        else if (name == "sizes") check(out, name, values, solve(s).sizes());
        else
            throw std::logic_error("no validator for prediction " + name);
    }
    if (inst.kind == FamilyKind::staircase) {
        // Each section of lambda(S) holds m-1 boxes below the anti-diagonal a+b = k and s on it.
        const int m = inst.params[0];
        const int k = inst.params[1];
        const int sv = inst.params[2];
        const auto grid = sections(s, s);
        bool ok = true;
        for (const auto& [key, cell] : grid.cells)
            ok = ok && cell.box_count == (key.first + key.second < k ? m - 1 : sv);
        out.push_back({"section_sizes", "m-1 below a+b=k, s on it", ok ? "match" : "mismatch", ok});
    }
    return out;
}

bool all_ok(const std::vector<PredictionCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const PredictionCheck& c) { return c.ok; });
}

double interval_k_growth_ratio(int l1) {
    const int k = 12 * l1 * l1;
    const auto inst = interval_k(k, 3 * l1);
    const double lambda_s = static_cast<double>(size_via_gap_count(inst.semigroup));
    const double lambda_t = static_cast<double>(size_via_gap_count(*inst.witness));
    return lambda_t / (2.0 * std::sqrt(3.0) * std::pow(lambda_s, 0.75));
}

}  // namespace nsg
