#include "pod2/analytic.hpp"

#include <cmath>
#include <string>

namespace pod2::analytic {

namespace {

template <class Real>
void require_nonnegative(const Real& x, const char* what) {
    if (x < 0) throw std::domain_error(std::string(what) + ": argument must be non-negative");
}

template <class Real>
Real expm1_(const Real& x) {
    using std::expm1;
    if constexpr (is_builtin_real_v<Real>) {
        return std::expm1(x);
    } else {
        return boost::multiprecision::expm1(x);
    }
}

}  // namespace

template <class Real>
Real bessel_I0(const Real& x) {
    require_nonnegative(x, "bessel_I0");
    const Real eps = machine_epsilon<Real>();
    const Real y = x * x / 4;
    Real term = 1, sum = 1;
    for (int m = 1; m < 100000; ++m) {
        term *= y / (Real(m) * Real(m));
        sum += term;
        if (term <= eps * sum && Real(m) * Real(m) > y) break;
    }
    return sum;
}

template <class Real>
Real bessel_I1(const Real& x) {
    require_nonnegative(x, "bessel_I1");
    if (x == 0) return Real(0);
    const Real eps = machine_epsilon<Real>();
    const Real y = x * x / 4;
    Real term = x / 2, sum = term;
    for (int m = 0; m < 100000; ++m) {
        term *= y / (Real(m + 1) * Real(m + 2));
        sum += term;
        if (term <= eps * sum && Real(m + 1) * Real(m + 2) > y) break;
    }
    return sum;
}

template <class Real>
Real bessel_I_series(const Real& nu, const Real& x) {
    using std::pow;
    using std::tgamma;
    require_nonnegative(x, "bessel_I_series");
    if (nu < 0) throw std::domain_error("bessel_I_series: order must be non-negative");
    if (x == 0) return nu == 0 ? Real(1) : Real(0);
    const Real eps = machine_epsilon<Real>();
    const Real y = x * x / 4;
    Real term = Real(pow(x / 2, nu)) / Real(tgamma(nu + 1));
    Real sum = term;
    for (int m = 1; m < 100000; ++m) {
        term *= y / (Real(m) * (Real(m) + nu));
        sum += term;
        if (term <= eps * sum && Real(m) * (Real(m) + nu) > y) break;
    }
    return sum;
}

template <class Real>
Real bessel_I32(const Real& x) {
    using std::cosh;
    using std::sinh;
    using std::sqrt;
    if (!(x > 0)) throw std::domain_error("bessel_I32: argument must be positive");
    if (x < Real(0.5)) return bessel_I_series(Real(1.5), x);
    return sqrt(Real(2) / (pi<Real>() * x)) * (Real(cosh(x)) - Real(sinh(x)) / x);
}

// With e = exp(-2|a|) for w = a + ib:
//   tanh w = (s (1 - e^2) + 2 i e sin 2b) / ((1 - e)^2 + 4 e cos^2 b)
//   coth w = (s (1 - e^2) - 2 i e sin 2b) / ((1 - e)^2 + 4 e sin^2 b)
// where s = sign(a). Nothing overflows and the denominators carry no
// cancellation.
template <class Real>
Complex<Real> complex_tanh(const Complex<Real>& w) {
    using std::abs;
    using std::cos;
    using std::exp;
    using std::sin;
    const Real e = exp(Real(-2 * abs(w.re)));
    const Real one_minus_e = -expm1_(Real(-2 * abs(w.re)));
    const Real c = cos(w.im);
    const Real den = one_minus_e * one_minus_e + 4 * e * c * c;
    if (den < Real(1e-14)) throw std::domain_error("complex_tanh: argument is at a pole");
    const Real s = w.re < 0 ? Real(-1) : Real(1);
    return {s * one_minus_e * (1 + e) / den, 2 * e * Real(sin(2 * w.im)) / den};
}

template <class Real>
Complex<Real> complex_coth(const Complex<Real>& w) {
    using std::abs;
    using std::exp;
    using std::sin;
    const Real e = exp(Real(-2 * abs(w.re)));
    const Real one_minus_e = -expm1_(Real(-2 * abs(w.re)));
    const Real s_im = sin(w.im);
    const Real den = one_minus_e * one_minus_e + 4 * e * s_im * s_im;
    if (den < Real(1e-14)) throw std::domain_error("complex_coth: argument is at a pole");
    const Real s = w.re < 0 ? Real(-1) : Real(1);
    return {s * one_minus_e * (1 + e) / den, -2 * e * Real(sin(2 * w.im)) / den};
}

template <class Real>
QuadResult<Real> integral_I_final(const Real& b, std::int64_t k, std::int64_t v, std::int64_t n,
                                  const QuadratureConfig& cfg) {
    using std::sqrt;
    if (!(b > 0)) throw std::invalid_argument("integral_I_final: b must be positive");
    if (k < 1 || n < 0) throw std::invalid_argument("integral_I_final: need k >= 1 and n >= 0");
    const Real p = pi<Real>();
    const Real kk = Real(k);
    const Real bessel_scale = 4 * p * Real(sqrt(Real(n) + Real(0.5))) / (b * kk);
    const Real theta = p * Real(6 * v + 2) / (3 * kk);
    const Real slope = 2 * p / (Real(sqrt(Real(3))) * b * kk);
    auto f = [&](const Real& x) {
        const Real s = sqrt(Real(1) - x * x);
        const Real weight = s * bessel_I1(Real(bessel_scale * s));
        return complex_coth(Complex<Real>{Real(-slope * x), theta}) * weight;
    };
    return quad_finite<Real>(f, cfg);
}

template <class Real>
QuadResult<Real> integral_J_final(std::int64_t k, std::int64_t v, std::int64_t n, const QuadratureConfig& cfg) {
    using std::sqrt;
    if (k < 1 || n < 0) throw std::invalid_argument("integral_J_final: need k >= 1 and n >= 0");
    const Real p = pi<Real>();
    const Real kk = Real(k);
    const Real bessel_scale = p * Real(sqrt(Real(5) * (Real(n) + Real(0.5)))) / (3 * kk);
    const Real theta = p * (Real(v) - Real(1) / 6) / kk;
    const Real slope = Real(sqrt(Real(5))) * p / (6 * Real(sqrt(Real(3))) * kk);
    auto f = [&](const Real& x) {
        const Real s = sqrt(Real(1) - x * x);
        const Real weight = s * bessel_I1(Real(bessel_scale * s));
        return complex_coth(Complex<Real>{Real(-slope * x), theta}) * weight;
    };
    return quad_finite<Real>(f, cfg);
}

template <class Real>
Real mordell_cutoff(std::int64_t k, const Complex<Real>& z, double tol) {
    using std::log;
    using std::sqrt;
    if (!(z.re > 0)) throw std::domain_error("Mordell integral needs Re(z) > 0");
    return sqrt(Real(k) * Real(log(Real(10) / Real(tol))) / (6 * pi<Real>() * z.re));
}

namespace {

template <class Real>
QuadResult<Real> mordell(std::int64_t k, const Real& theta, const Complex<Real>& z, const QuadratureConfig& cfg) {
    if (k < 1) throw std::invalid_argument("Mordell integral needs k >= 1");
    const Real X = mordell_cutoff(k, z, cfg.abs_tol);
    const Real p = pi<Real>();
    const Complex<Real> gauss = z * (-6 * p / Real(k));
    const Complex<Real> lin = z * (-2 * p / Real(k));
    auto f = [&](const Real& x) {
        const Complex<Real> w = lin * x + Complex<Real>{Real(0), theta};
        return exp(gauss * (x * x)) * complex_coth(w);
    };
    return quad<Real>(f, Real(-X), X, cfg);
}

}  // namespace

template <class Real>
QuadResult<Real> mordell_I(std::int64_t k, std::int64_t v, const Complex<Real>& z, const QuadratureConfig& cfg) {
    return mordell(k, Real(pi<Real>() * Real(6 * v + 2) / (3 * Real(k))), z, cfg);
}

template <class Real>
QuadResult<Real> mordell_J(std::int64_t k, std::int64_t v, const Complex<Real>& z, const QuadratureConfig& cfg) {
    return mordell(k, Real(pi<Real>() * (Real(v) - Real(1) / 6) / Real(k)), z, cfg);
}

#define POD2_INSTANTIATE(R)                                                                                        \
    template R bessel_I0<R>(const R&);                                                                             \
    template R bessel_I1<R>(const R&);                                                                             \
    template R bessel_I_series<R>(const R&, const R&);                                                             \
    template R bessel_I32<R>(const R&);                                                                            \
    template Complex<R> complex_tanh<R>(const Complex<R>&);                                                        \
    template Complex<R> complex_coth<R>(const Complex<R>&);                                                        \
    template QuadResult<R> integral_I_final<R>(const R&, std::int64_t, std::int64_t, std::int64_t,                 \
                                               const QuadratureConfig&);                                           \
    template QuadResult<R> integral_J_final<R>(std::int64_t, std::int64_t, std::int64_t, const QuadratureConfig&); \
    template R mordell_cutoff<R>(std::int64_t, const Complex<R>&, double);                                         \
    template QuadResult<R> mordell_I<R>(std::int64_t, std::int64_t, const Complex<R>&, const QuadratureConfig&);   \
    template QuadResult<R> mordell_J<R>(std::int64_t, std::int64_t, const Complex<R>&, const QuadratureConfig&);

POD2_INSTANTIATE(double)
POD2_INSTANTIATE(Extended)

#undef POD2_INSTANTIATE

}  // namespace pod2::analytic
