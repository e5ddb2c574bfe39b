#pragma once

// The exact formula for pod2(n): four convergent series over k built from the
// Kloosterman families 621, 221, 231, 121 and the I/J tanh-kernel integrals,
// plus the classical Rademacher series for p(n) as a calibration of the same
// machinery.

#include "pod2/analytic.hpp"
#include "pod2/kloosterman.hpp"
#include "pod2/qseries.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pod2::rademacher {

using analytic::QuadratureConfig;
using qseries::BigInt;

struct TruncationPolicy {
    std::int64_t k_max = 100;
    int tail_window = 5;
    double tail_threshold = 1e-2;
};

/// Family labels in output order.
inline constexpr std::array<const char*, 4> family_names = {"621", "221", "231", "121"};

template <class Real>
struct FamilySeries {
    std::string name;
    std::vector<std::int64_t> k;             // contributing k, increasing
    std::vector<Complex<Real>> contribution;  // term of the series at that k
    Complex<Real> total;
};

template <class Real>
struct ExactResult {
    std::int64_t n = 0;
    Real estimate = 0;
    Real imag_residual = 0;
    BigInt rounded = 0;
    std::array<FamilySeries<Real>, 4> per_family;
    std::int64_t k_max = 0;
    double quad_tol = 0;
    bool converged = false;

    // diagnostics
    bool rounding_ok = false;    // |estimate - rounded| < 0.5 - rounding_margin
    bool imaginary_ok = false;   // imag_residual < imaginary_tolerance
    bool tail_ok = false;        // last tail_window k-blocks below tail_threshold
    bool quadrature_ok = false;  // every integral met its tolerance
    std::int64_t quadrature_failures = 0;
    Real max_quadrature_error = 0;
    std::int64_t largest_k_above_half = 0;  // largest k whose block exceeds 0.5 in modulus
    std::vector<Real> block_modulus;        // |sum of all families at k|, index k-1
};

inline constexpr double rounding_margin = 0.1;

/// Tolerance on |Im| of the assembled total.
inline double imaginary_tolerance(double quad_tol) { return std::max(1e-6, 1e3 * quad_tol); }

/// Evaluates the four series for k = 1..policy.k_max.
template <class Real>
ExactResult<Real> pod2_exact(std::int64_t n, const TruncationPolicy& policy, const QuadratureConfig& cfg);

template <class Real>
struct PartitionResult {
    std::int64_t n = 0;
    Real estimate = 0;
    BigInt rounded = 0;
    bool converged = false;  // |estimate - rounded| < 0.5 - rounding_margin
};

/// p(n) = 2 pi (24n-1)^{-3/4} sum_k A_k(n)/k I_{3/2}(pi sqrt(24n-1) / (6k)).
template <class Real = double>
PartitionResult<Real> p_exact(std::int64_t n, std::int64_t k_max);

/// Default k_max used for the partition calibration: max(10, ceil(4 sqrt n)).
std::int64_t p_exact_default_kmax(std::int64_t n);

/// Nearest integer.
template <class Real>
BigInt round_to_integer(const Real& x);

}  // namespace pod2::rademacher
