#include "pod2/rademacher.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <stdexcept>

namespace pod2::rademacher {

using kloosterman::ClosedSumTable;
using kloosterman::Family;
using modular::GcdClass;

template <class Real>
BigInt round_to_integer(const Real& x) {
    using std::floor;
    const Real r = floor(x + Real(0.5));
    if constexpr (is_builtin_real_v<Real>) {
        return BigInt(static_cast<long double>(r));
    } else {
        std::string digits = r.str(0, std::ios_base::fixed);
        digits = digits.substr(0, digits.find('.'));
        if (digits == "-0") digits = "0";
        return BigInt(digits);
    }
}

namespace {

template <class Real>
Real to_real(const BigInt& x) {
    if constexpr (is_builtin_real_v<Real>) {
        return x.convert_to<Real>();
    } else {
        return Real(x.str());
    }
}

template <class Real>
struct Accumulator {
    ExactResult<Real>& out;

    Complex<Real> absorb(const analytic::QuadResult<Real>& q) {
        if (!q.converged) ++out.quadrature_failures;
        if (q.error > out.max_quadrature_error) out.max_quadrature_error = q.error;
        return q.value;
    }
};

}  // namespace

template <class Real>
ExactResult<Real> pod2_exact(std::int64_t n, const TruncationPolicy& policy, const QuadratureConfig& cfg) {
    using std::abs;
    using std::sqrt;
    if (n < 0) throw std::invalid_argument("pod2_exact needs n >= 0");
    if (policy.k_max < 1) throw std::invalid_argument("k_max must be positive");
    if (policy.tail_window < 1) throw std::invalid_argument("tail_window must be positive");
    if (!(policy.tail_threshold > 0)) throw std::invalid_argument("tail_threshold must be positive");

    ExactResult<Real> out;
    out.n = n;
    out.k_max = policy.k_max;
    out.quad_tol = cfg.abs_tol;
    for (std::size_t f = 0; f < 4; ++f) {
        out.per_family[f].name = family_names[f];
        out.per_family[f].total = Complex<Real>{Real(0)};
    }
    Accumulator<Real> acc{out};

    const Real p = pi<Real>();
    const Real nh = Real(n) + Real(0.5);
    const Real s3 = sqrt(Real(3) * nh);
    const Real sqrt_2n1 = sqrt(Real(2 * n + 1));
    const Real b6 = sqrt(Real(6));
    const Real b32 = 3 * sqrt(Real(2));
    const Real pre_i = p / (3 * s3);
    const Real pre_ii = p / (9 * s3);
    const Real pre_iii = p / (3 * sqrt_2n1);
    const Complex<Real> pre_iv{Real(0), Real(5) * p / (72 * s3)};

    auto record = [&](std::size_t f, std::int64_t k, const Complex<Real>& term) {
        out.per_family[f].k.push_back(k);
        out.per_family[f].contribution.push_back(term);
        out.per_family[f].total += term;
    };

    Complex<Real> total{Real(0)};
    for (std::int64_t k = 1; k <= policy.k_max; ++k) {
        const GcdClass cls = modular::gcd_class_of(k);
        Complex<Real> block{Real(0)};
        const Real kk = Real(k);
        if (cls == GcdClass::six || cls == GcdClass::two) {
            const ClosedSumTable<Real> table(k);
            const bool six = cls == GcdClass::six;
            const Family fam = six ? Family::f621 : Family::f221;
            const Real& b = six ? b6 : b32;
            Complex<Real> inner{Real(0)};
            for (std::int64_t v = 0; v < k / 2; ++v) {
                const Complex<Real> K = table(fam, n, 0, v);
                const Complex<Real> I = acc.absorb(analytic::integral_I_final<Real>(b, k, v, n, cfg));
                const Complex<Real> t = K * I;
                if (v % 2 == 0) {
                    inner += t;
                } else {
                    inner -= t;
                }
            }
            const Complex<Real> term = inner * ((six ? pre_i : pre_ii) / (kk * kk));
            record(six ? 0 : 1, k, term);
            block += term;
            if (!six) {
                const Complex<Real> K = table(Family::f231, n);
                const Real bessel = analytic::bessel_I1<Real>(Real(2 * p * sqrt_2n1 / (3 * kk)));
                const Complex<Real> term3 = K * (pre_iii * bessel / kk);
                record(2, k, term3);
                block += term3;
            }
        } else if (cls == GcdClass::one) {
            const ClosedSumTable<Real> table(k);
            Complex<Real> inner{Real(0)};
            for (std::int64_t v = 0; v < k; ++v) {
                const Complex<Real> K = table(Family::f121, n, 0, v);
                inner += K * acc.absorb(analytic::integral_J_final<Real>(k, v, n, cfg));
            }
            const Complex<Real> term = pre_iv * inner / (kk * kk);
            record(3, k, term);
            block += term;
        }
        total += block;
        const Real modulus = abs(block);
        out.block_modulus.push_back(modulus);
        if (modulus > Real(0.5)) out.largest_k_above_half = k;
    }

    out.estimate = total.re;
    out.imag_residual = abs(total.im);
    out.rounded = round_to_integer(out.estimate);
    const Real rounded_real = to_real<Real>(out.rounded);
    out.rounding_ok = abs(out.estimate - rounded_real) < Real(0.5 - rounding_margin);
    out.imaginary_ok = out.imag_residual < Real(imaginary_tolerance(cfg.abs_tol));
    out.quadrature_ok = out.quadrature_failures == 0;
    out.tail_ok = policy.k_max >= policy.tail_window;
    for (std::int64_t k = std::max<std::int64_t>(1, policy.k_max - policy.tail_window + 1); k <= policy.k_max; ++k) {
        if (!(out.block_modulus[static_cast<std::size_t>(k - 1)] < Real(policy.tail_threshold))) out.tail_ok = false;
    }
    out.converged = out.rounding_ok && out.imaginary_ok && out.tail_ok && out.quadrature_ok;
    return out;
}

std::int64_t p_exact_default_kmax(std::int64_t n) {
    return std::max<std::int64_t>(10, static_cast<std::int64_t>(std::ceil(4 * std::sqrt(static_cast<double>(n)))));
}

template <class Real>
PartitionResult<Real> p_exact(std::int64_t n, std::int64_t k_max) {
    using std::abs;
    using std::pow;
    using std::sqrt;
    if (n < 1) throw std::invalid_argument("p_exact needs n >= 1");
    if (k_max < 1) throw std::invalid_argument("p_exact needs k_max >= 1");
    const Real p = pi<Real>();
    const Real m = Real(24 * n - 1);
    const Real root = sqrt(m);
    Real sum = 0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const Real a = kloosterman::classical_A<Real>(k, n).value.re;
        sum += a / Real(k) * analytic::bessel_I32<Real>(Real(p * root / (6 * Real(k))));
    }
    PartitionResult<Real> out;
    out.n = n;
    out.estimate = 2 * p / Real(pow(m, Real(0.75))) * sum;
    out.rounded = round_to_integer(out.estimate);
    out.converged = abs(out.estimate - to_real<Real>(out.rounded)) < Real(0.5 - rounding_margin);
    return out;
}

template BigInt round_to_integer<double>(const double&);
template BigInt round_to_integer<Extended>(const Extended&);
template ExactResult<double> pod2_exact<double>(std::int64_t, const TruncationPolicy&, const QuadratureConfig&);
template ExactResult<Extended> pod2_exact<Extended>(std::int64_t, const TruncationPolicy&, const QuadratureConfig&);
template PartitionResult<double> p_exact<double>(std::int64_t, std::int64_t);
template PartitionResult<Extended> p_exact<Extended>(std::int64_t, std::int64_t);

}  // namespace pod2::rademacher
