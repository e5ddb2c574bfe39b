#pragma once

// Exact truncated q-series: Pochhammer products, eta-quotients, the third
// order mock theta functions rho, omega and f, the generating function of
// pod2(n) by two routes, and a direct combinatorial count.

#include "pod2/complex.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pod2::qseries {

using BigInt = boost::multiprecision::cpp_int;

/// Power series in q with integer coefficients, valid for exponents 0..order.
class IntSeries {
public:
    /// Zero series of the given order.
    explicit IntSeries(std::size_t order);
    explicit IntSeries(std::vector<BigInt> coeffs);
    IntSeries(std::initializer_list<long long> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    /// Copy restricted to exponents 0..order (order must not grow).
    IntSeries truncated(std::size_t order) const;

    friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
    friend IntSeries operator*(const BigInt& s, const IntSeries& a);
    friend bool operator==(const IntSeries& a, const IntSeries& b) = default;

private:
    std::vector<BigInt> coeffs_;
};

IntSeries series_mul(const IntSeries& a, const IntSeries& b);

/// Multiplicative inverse; the constant term must be +1 or -1.
IntSeries series_inv(const IntSeries& a);

/// Exact division by an integer, rejecting any coefficient it does not divide.
IntSeries divide_exact(const IntSeries& a, const BigInt& divisor);

/// (q^r; q^r)_inf truncated at order N.
IntSeries pochhammer_series(unsigned step, std::size_t order);

/// P(q^r) = 1 / (q^r; q^r)_inf truncated at order N.
IntSeries partition_series(unsigned step, std::size_t order);

IntSeries rho_series(std::size_t order);
IntSeries omega_mock_series(std::size_t order);
IntSeries f_mock_series(std::size_t order);

/// zeta1 = P(q^6) P(q) / P(q^3).
IntSeries zeta1_series(std::size_t order);
/// zeta2 = P(q^3) P(q^2) P(q) / P(q^6)^3.
IntSeries zeta2_series(std::size_t order);

/// 3 (q^6;q^6)^2 / ((q^3;q^6)^2 (q^2;q^2)), the theta side of 2 rho + omega.
IntSeries rho_omega_theta_side(std::size_t order);

/// POD2 = zeta1 * rho.
IntSeries pod2_series_identity(std::size_t order);

/// POD2 = -1/2 zeta1 omega + 3/2 zeta2, halves cancelled exactly.
IntSeries pod2_series_decomposition(std::size_t order);

/// Number of partitions of n with even largest part whose odd parts each
/// appear at most twice. pod2(0) = 1.
BigInt pod2_count_oracle(std::size_t n);

/// pod2_count_oracle(n) for every n <= order, in one pass.
std::vector<BigInt> pod2_count_table(std::size_t order);

/// Ordinary partition numbers p(0..order) by the classical part-by-part
/// recurrence (no generating-function algebra involved).
std::vector<BigInt> partition_count_table(std::size_t order);

/// Direct evaluation of P(t^r) = prod_{j>=1} (1 - t^{r j})^{-1}, with t^r on
/// the principal branch. The product stops once the geometric tail bound
/// of the remaining factors drops below tol.
Complex<double> eval_product_num(double step, const Complex<double>& t, double tol = 1e-17);

/// P(e^{2 pi i r tau}) with the exponent scaled directly, i.e. the power of
/// e^{2 pi i tau} taken along the exponent rather than the principal branch.
/// This is the reading used by the modular transformation laws.
template <class Real>
Complex<Real> eval_product_exp(const Real& step, const Complex<Real>& tau, const Real& tol);

/// Sum_{i <= order} c_i t^i for an exact series at a numeric point.
template <class Real>
Complex<Real> eval_series(const IntSeries& s, const Complex<Real>& t);

}  // namespace pod2::qseries

// ---------------------------------------------------------------------------

namespace pod2::qseries {

template <class Real>
Complex<Real> eval_product_exp(const Real& step, const Complex<Real>& tau, const Real& tol) {
    const Complex<Real> two_pi_i{Real(0), Real(2) * pi<Real>()};
    const Complex<Real> base = exp(two_pi_i * tau * step);  // e^{2 pi i r tau}
    const Real modulus = abs(base);
    if (!(modulus < 1)) throw std::domain_error("eval_product_exp: |q^r| must be < 1");
    Complex<Real> power = base;
    Complex<Real> product{Real(1)};
    Real power_modulus = modulus;
    // |log prod_{j>J}| <= sum |t|^j / (1 - |t|)  for |t| small enough
    while (power_modulus / (Real(1) - modulus) > tol) {
        product *= Complex<Real>{Real(1)} - power;
        power *= base;
        power_modulus *= modulus;
    }
    return Complex<Real>{Real(1)} / product;
}

template <class Real>
Complex<Real> eval_series(const IntSeries& s, const Complex<Real>& t) {
    // Horner from the top.
    Complex<Real> acc{};
    for (std::size_t i = s.order() + 1; i-- > 0;) {
        acc = acc * t + Complex<Real>{Real(s[i].str())};
    }
    return acc;
}

template <>
inline Complex<double> eval_series(const IntSeries& s, const Complex<double>& t) {
    Complex<double> acc{};
    for (std::size_t i = s.order() + 1; i-- > 0;) {
        acc = acc * t + Complex<double>{s[i].convert_to<double>()};
    }
    return acc;
}

}  // namespace pod2::qseries
