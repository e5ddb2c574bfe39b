#pragma once

// The twelve complete Kloosterman-sum families attached to the four gcd
// classes of k, each in two forms: assembled from P-multipliers, and as a
// single closed exponential.

#include "pod2/modular.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace pod2::kloosterman {

using modular::GcdClass;
using modular::UnitPhase;

enum class Family : int {
    f611 = 611, f621 = 621, f631 = 631,
    f211 = 211, f221 = 221, f231 = 231,
    f311 = 311, f321 = 321, f331 = 331,
    f111 = 111, f121 = 121, f131 = 131,
};

inline constexpr Family all_families[] = {
    Family::f611, Family::f621, Family::f631, Family::f211, Family::f221, Family::f231,
    Family::f311, Family::f321, Family::f331, Family::f111, Family::f121, Family::f131,
};

/// Parses "611" etc.; throws std::invalid_argument otherwise.
Family parse_family(const std::string& text);
GcdClass family_class(Family f);
/// True for the x21 families, which carry the extra index v.
bool family_has_v(Family f);

struct KloostermanSpec {
    Family family = Family::f131;
    std::int64_t k = 1;
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::optional<std::int64_t> v;
};

/// Throws std::invalid_argument when the family does not match gcd(k, 6),
/// when v is missing/present wrongly, or when v is out of range.
void validate(const KloostermanSpec& spec);

/// Upper bound (exclusive) of v: k/2 for even k, k for odd k.
std::int64_t v_range(std::int64_t k);

template <class Real = double>
struct SumValue {
    Complex<Real> value;
    std::int64_t term_count = 0;
    Real max_term_modulus = 0;
};

enum class Form { definition, closed };

/// Summand phases in increasing h. `inverse_shift` moves every h' by that many
/// class moduli.
std::vector<UnitPhase> summand_phases(const KloostermanSpec& spec, Form form, std::int64_t inverse_shift = 0);

/// Closed-form exponent of one summand as an integer numerator over 36k,
/// reduced into [0, 36k).
std::int64_t closed_numerator(Family f, std::int64_t k, std::int64_t n, std::int64_t m, std::int64_t v,
                              std::int64_t h, std::int64_t h_prime);

/// Sum of e^{2 pi i r} over the given phases, in order.
template <class Real>
SumValue<Real> accumulate(const std::vector<UnitPhase>& phases);

template <class Real = double>
SumValue<Real> kloosterman_definition(const KloostermanSpec& spec, std::int64_t inverse_shift = 0) {
    validate(spec);
    return accumulate<Real>(summand_phases(spec, Form::definition, inverse_shift));
}

template <class Real = double>
SumValue<Real> kloosterman_closed(const KloostermanSpec& spec, std::int64_t inverse_shift = 0) {
    validate(spec);
    return accumulate<Real>(summand_phases(spec, Form::closed, inverse_shift));
}

/// Unit prefactor the closed form carries in front of the sum; the sum with
/// this factor removed is real.
UnitPhase closed_prefactor(Family f, std::int64_t k);

/// A_k(n) = sum_h omega_{h,k} e^{-2 pi i n h / k}.
std::vector<UnitPhase> classical_A_phases(std::int64_t k, std::int64_t n);

template <class Real = double>
SumValue<Real> classical_A(std::int64_t k, std::int64_t n) {
    return accumulate<Real>(classical_A_phases(k, n));
}

/// K[111](n, m) == -K[131](n, m) within 1e-10.
bool identity_3_1_check(std::int64_t k, std::int64_t n, std::int64_t m);

/// |K| / (n^{1/3} k^{2/3}).
double bound_ratio(const KloostermanSpec& spec);

/// Repeated closed-form evaluation for one k: the coprime residues, their
/// canonical inverses and a table of e^{2 pi i j / (36k)} are built once.
template <class Real>
class ClosedSumTable {
public:
    explicit ClosedSumTable(std::int64_t k);

    std::int64_t k() const { return k_; }
    Complex<Real> operator()(Family f, std::int64_t n, std::int64_t m = 0, std::int64_t v = 0) const;

private:
    std::int64_t k_;
    std::vector<std::int64_t> h_;
    std::vector<std::int64_t> h_prime_;
    std::vector<Complex<Real>> roots_;
};

}  // namespace pod2::kloosterman

// ---------------------------------------------------------------------------

namespace pod2::kloosterman {

template <class Real>
SumValue<Real> accumulate(const std::vector<UnitPhase>& phases) {
    SumValue<Real> out;
    out.value = Complex<Real>{Real(0)};
    for (const auto& p : phases) out.value += p.template value<Real>();
    out.term_count = static_cast<std::int64_t>(phases.size());
    out.max_term_modulus = phases.empty() ? Real(0) : Real(1);
    return out;
}

template <class Real>
ClosedSumTable<Real>::ClosedSumTable(std::int64_t k) : k_(k) {
    const GcdClass cls = modular::gcd_class_of(k);
    for (std::int64_t h = 0; h < k; ++h) {
        if (modular::gcd(h, k) != 1) continue;
        h_.push_back(h);
        h_prime_.push_back(modular::canonical_inverse(h, k, cls).h_prime);
    }
    const std::int64_t den = 36 * k;
    roots_.reserve(static_cast<std::size_t>(den));
    for (std::int64_t j = 0; j < den; ++j) roots_.push_back(UnitPhase(j, den).template value<Real>());
}

template <class Real>
Complex<Real> ClosedSumTable<Real>::operator()(Family f, std::int64_t n, std::int64_t m, std::int64_t v) const {
    Complex<Real> acc{Real(0)};
    for (std::size_t i = 0; i < h_.size(); ++i) {
        acc += roots_[static_cast<std::size_t>(closed_numerator(f, k_, n, m, v, h_[i], h_prime_[i]))];
    }
    return acc;
}

}  // namespace pod2::kloosterman
