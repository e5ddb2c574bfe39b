#pragma once

#include "pod2/complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pod2::modular {

using Rational = boost::multiprecision::cpp_rational;

/// e^{2 pi i r} for an exact rational r, kept reduced with 0 <= r < 1.
class UnitPhase {
public:
    UnitPhase() = default;
    explicit UnitPhase(const Rational& turns);
    UnitPhase(std::int64_t num, std::int64_t den);

    static UnitPhase one() { return {}; }
    static UnitPhase minus_one() { return UnitPhase(1, 2); }
    static UnitPhase i() { return UnitPhase(1, 4); }

    const Rational& turns() const { return turns_; }

    UnitPhase inverse() const { return UnitPhase(-turns_); }
    UnitPhase pow(std::int64_t e) const { return UnitPhase(turns_ * e); }

    friend UnitPhase operator*(const UnitPhase& a, const UnitPhase& b) { return UnitPhase(a.turns_ + b.turns_); }
    friend UnitPhase operator/(const UnitPhase& a, const UnitPhase& b) { return UnitPhase(a.turns_ - b.turns_); }
    UnitPhase& operator*=(const UnitPhase& o) { return *this = *this * o; }
    friend bool operator==(const UnitPhase& a, const UnitPhase& b) { return a.turns_ == b.turns_; }

    /// cos(2 pi r) + i sin(2 pi r); exact for r in {0, 1/4, 1/2, 3/4}.
    template <class Real>
    Complex<Real> value() const;

    std::string str() const;

private:
    Rational turns_{0};
};

int kronecker_symbol(std::int64_t a, std::int64_t n);

/// s(h, k) = sum_{mu=1}^{k-1} ((mu/k)) ((h mu/k)).
Rational dedekind_sum(std::int64_t h, std::int64_t k);

/// gcd(k, 6).
enum class GcdClass : int { one = 1, two = 2, three = 3, six = 6 };

GcdClass gcd_class_of(std::int64_t k);

/// h' and k' for (h, k) with the congruence and divisibility side conditions
/// of k's gcd class:
///   class 6: h h' = -1 (mod 36k)
///   class 2: h h' = -1 (mod 4k),  3 | h'
///   class 3: h h' = -1 (mod k),   2 | h'
///   class 1: h h' = -1 (mod k),   6 | h'
/// and always h h' + k k' = -1.
struct InverseData {
    std::int64_t h = 0;
    std::int64_t k = 1;
    GcdClass gcd_class = GcdClass::one;
    std::int64_t h_prime = 0;
    std::int64_t k_prime = -1;
};

/// Modulus of the residue class of admissible h' (36k, 12k, 2k or 6k).
std::int64_t inverse_class_modulus(std::int64_t k, GcdClass cls);

/// Divisor that h' must carry in the given class (1, 3, 2 or 6).
std::int64_t inverse_divisor(GcdClass cls);

/// Smallest non-negative admissible h'. `shift` moves it by whole class
/// moduli, which is used to check that nothing depends on the representative.
InverseData canonical_inverse(std::int64_t h, std::int64_t k, GcdClass cls, std::int64_t shift = 0);

/// Plain inverse for the P(q) transformation: smallest h' >= 0 with
/// h h' = -1 (mod k).
std::int64_t plain_inverse(std::int64_t h, std::int64_t k);

/// Multiplier omega_{h,k} of P(q) as an exact root of unity. `h_prime` is
/// any integer with h h' = -1 (mod k). The k-odd branch is used whenever k
/// is odd, the h-odd branch otherwise.
UnitPhase omega_multiplier(std::int64_t h, std::int64_t k, std::int64_t h_prime);
UnitPhase omega_multiplier(const InverseData& inv);

struct Fraction {
    std::int64_t h = 0;
    std::int64_t k = 1;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// All reduced h/k in [0, 1] with k <= N, increasing.
std::vector<Fraction> farey_sequence(std::int64_t N);

struct FareyNeighbors {
    Fraction center;
    Fraction left;   // h1/k1
    Fraction right;  // h2/k2
    Rational theta_minus;  // 1 / (k (k + k1))
    Rational theta_plus;   // 1 / (k (k + k2))
};

/// Neighbours of h/k in F_N. The sequence is continued periodically, so
/// 0/1 has left neighbour -1/N and 1/1 has right neighbour (N+1)/N.
FareyNeighbors farey_neighbors(std::int64_t h, std::int64_t k, std::int64_t N);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace pod2::modular

// ---------------------------------------------------------------------------

namespace pod2::modular {

template <class Real>
Complex<Real> UnitPhase::value() const {
    const auto& num = boost::multiprecision::numerator(turns_);
    const auto& den = boost::multiprecision::denominator(turns_);
    if (den == 1) return {Real(1), Real(0)};
    if (den == 2) return {Real(-1), Real(0)};
    if (den == 4) return num == 1 ? Complex<Real>{Real(0), Real(1)} : Complex<Real>{Real(0), Real(-1)};
    Real angle;
    if constexpr (is_builtin_real_v<Real>) {
        angle = Real(2) * pi<Real>() * (num.template convert_to<Real>() / den.template convert_to<Real>());
    } else {
        angle = Real(2) * pi<Real>() * Real(num.str()) / Real(den.str());
    }
    return polar(Real(1), angle);
}

}  // namespace pod2::modular
