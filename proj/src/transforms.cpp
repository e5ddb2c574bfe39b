#include "pod2/transforms.hpp"

#include "pod2/qseries.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pod2::transforms {

using modular::canonical_inverse;
using modular::GcdClass;
using modular::InverseData;
using modular::omega_multiplier;
using modular::Rational;
using modular::UnitPhase;

namespace {

constexpr double product_tol = 1e-18;

void require_coprime(std::int64_t h, std::int64_t k) {
    if (k < 1 || modular::gcd(h, k) != 1) {
        throw std::invalid_argument("transformation check needs k >= 1 and gcd(h, k) = 1");
    }
}

void require_disc(const Cplx& z) {
    if (!(z.re > 0)) throw std::domain_error("transformation check needs Re(z) > 0, so that |q|, |q1| < 1");
}

Cplx tau_of(std::int64_t h, std::int64_t k, const Cplx& z) {
    return Cplx{static_cast<double>(h), 0.0} / static_cast<double>(k) + Cplx{-z.im, z.re} / static_cast<double>(k);
}

Cplx tau1_of(std::int64_t hp, std::int64_t k, const Cplx& z) {
    const Cplx iz_inv = Cplx{0.0, 1.0} / z;
    return (Cplx{static_cast<double>(hp)} + iz_inv) / static_cast<double>(k);
}

// P(e^{2 pi i r tau})
Cplx P(double r, const Cplx& tau) { return qseries::eval_product_exp<double>(r, tau, product_tol); }

// omega_{a h, kk} with inverse h' / a.
Cplx W(std::int64_t a, std::int64_t kk, const InverseData& inv) {
    return omega_multiplier(a * inv.h, kk, inv.h_prime / a).value<double>();
}

Cplx cexp(const Cplx& w) { return exp(w); }

Cplx phase(const Rational& turns) { return UnitPhase(turns).value<double>(); }

}  // namespace

Cplx omega_mock_value(const Cplx& t) {
    if (!(abs(t) < 1)) throw std::domain_error("omega_mock_value: |t| must be < 1");
    Cplx sum{0.0};
    Cplx denom{1.0};
    for (int n = 0; n < 10000; ++n) {
        const Cplx a = Cplx{1.0} - pow(t, static_cast<double>(2 * n + 1));
        denom *= a * a;
        const Cplx term = pow(t, static_cast<double>(2 * n * (n + 1))) / denom;
        sum += term;
        if (abs(term) < 1e-20 * (1 + abs(sum)) && n > 2) break;
    }
    return sum;
}

Cplx f_mock_value(const Cplx& t) {
    if (!(abs(t) < 1)) throw std::domain_error("f_mock_value: |t| must be < 1");
    Cplx sum{1.0};
    Cplx denom{1.0};
    for (int n = 1; n < 10000; ++n) {
        const Cplx a = Cplx{1.0} + pow(t, static_cast<double>(n));
        denom *= a * a;
        const Cplx term = pow(t, static_cast<double>(n * n)) / denom;
        sum += term;
        if (abs(term) < 1e-20 * (1 + abs(sum)) && n > 2) break;
    }
    return sum;
}

double transform_check_P(std::int64_t h, std::int64_t k, const Cplx& z) {
    require_coprime(h, k);
    require_disc(z);
    const std::int64_t hp = modular::plain_inverse(h, k);
    const Cplx q = cexp(Cplx{0.0, 2 * M_PI} * tau_of(h, k, z));
    const Cplx lhs = qseries::eval_product_num(1.0, q);
    const Cplx rhs = omega_multiplier(h, k, hp).value<double>() * sqrt(z) *
                     cexp((Cplx{1.0} / z - z) * (M_PI / (12.0 * k))) * P(1.0, tau1_of(hp, k, z));
    return abs(lhs - rhs);
}

double transform_check_zeta(GcdClass cls, Zeta variant, std::int64_t h, std::int64_t k, const Cplx& z) {
    require_coprime(h, k);
    require_disc(z);
    const InverseData inv = canonical_inverse(h, k, cls);
    const Cplx tau = tau_of(h, k, z);
    const Cplx t1 = tau1_of(inv.h_prime, k, z);
    const Cplx zi = Cplx{1.0} / z;
    const double kd = static_cast<double>(k);
    const Cplx sz = sqrt(z);
    const double r2 = std::sqrt(2.0);

    if (variant == Zeta::one) {
        const Cplx lhs = P(6, tau) * P(1, tau) / P(3, tau);
        Cplx rhs;
        switch (cls) {
            case GcdClass::six:
                rhs = W(1, k / 6, inv) * W(1, k, inv) / W(1, k / 3, inv) * sz * cexp((zi - z) * (M_PI / (3 * kd))) *
                      (P(6, t1) * P(1, t1) / P(3, t1));
                break;
            case GcdClass::two:
                rhs = W(3, k / 2, inv) * W(1, k, inv) / W(3, k, inv) * sz *
                      cexp(zi * (M_PI / (9 * kd)) - z * (M_PI / (3 * kd))) * P(1, t1) * P(2.0 / 3, t1) / P(1.0 / 3, t1);
                break;
            case GcdClass::three:
                rhs = r2 * W(2, k / 3, inv) * W(1, k, inv) / W(1, k / 3, inv) * sz *
                      cexp(zi * (-M_PI / (24 * kd)) - z * (M_PI / (3 * kd))) * P(1, t1) * P(1.5, t1) / P(3, t1);
                break;
            case GcdClass::one:
                rhs = r2 * W(6, k, inv) * W(1, k, inv) / W(3, k, inv) * sz *
                      cexp(zi * (5 * M_PI / (72 * kd)) - z * (M_PI / (3 * kd))) * P(1, t1) * P(1.0 / 6, t1) /
                      P(1.0 / 3, t1);
                break;
        }
        return abs(lhs - rhs);
    }

    const Cplx p6 = P(6, tau);
    const Cplx lhs = P(3, tau) * P(2, tau) * P(1, tau) / (p6 * p6 * p6);
    Cplx rhs;
    auto cube = [](const Cplx& x) { return x * x * x; };
    switch (cls) {
        case GcdClass::six:
            rhs = W(1, k / 3, inv) * W(1, k / 2, inv) * W(1, k, inv) / cube(W(1, k / 6, inv)) *
                  cexp((zi - z) * (-M_PI / kd)) * P(3, t1) * P(2, t1) * P(1, t1) / cube(P(6, t1));
            break;
        case GcdClass::two:
            rhs = (1.0 / 3) * W(3, k, inv) * W(1, k / 2, inv) * W(1, k, inv) / cube(W(3, k / 2, inv)) *
                  cexp(zi * (M_PI / (9 * kd)) + z * (M_PI / kd)) * P(1.0 / 3, t1) * P(2, t1) * P(1, t1) /
                  cube(P(2.0 / 3, t1));
            break;
        case GcdClass::three:
            rhs = 0.5 * W(1, k / 3, inv) * W(2, k, inv) * W(1, k, inv) / cube(W(2, k / 3, inv)) *
                  cexp(z * (M_PI / kd)) * P(3, t1) * P(0.5, t1) * P(1, t1) / cube(P(1.5, t1));
            break;
        case GcdClass::one:
            rhs = (1.0 / 6) * W(3, k, inv) * W(2, k, inv) * W(1, k, inv) / cube(W(6, k, inv)) *
                  cexp(zi * (M_PI / (9 * kd)) + z * (M_PI / kd)) * P(1.0 / 3, t1) * P(0.5, t1) * P(1, t1) /
                  cube(P(1.0 / 6, t1));
            break;
    }
    return abs(lhs - rhs);
}

double transform_check_omega_even(std::int64_t h, std::int64_t k, const Cplx& z, const analytic::QuadratureConfig& cfg) {
    require_coprime(h, k);
    require_disc(z);
    if (k % 2 != 0) throw std::invalid_argument("transform_check_omega_even needs even k");
    const InverseData inv = canonical_inverse(h, k, modular::gcd_class_of(k));
    const std::int64_t hp = inv.h_prime, kp = inv.k_prime;
    const double kd = static_cast<double>(k);
    const Cplx lhs = omega_mock_value(cexp(Cplx{0.0, 2 * M_PI} * tau_of(h, k, z)));
    const Cplx w_half = omega_multiplier(h, k / 2, hp).value<double>();
    const Rational sign = Rational((hp + 1) / 2, 2);  // (-1)^{(h'+1)/2}
    const Rational common = sign - Rational(3 * hp * kp, 4) - Rational(3 * h, 4 * k);

    const Cplx q1 = cexp(Cplx{0.0, 2 * M_PI} * tau1_of(hp, k, z));
    const Cplx a_term = phase(Rational(1, 4) + common + Rational(3 * hp, 4 * k)) * w_half / sqrt(z) *
                        cexp(Cplx{1.0} / z * (-4 * M_PI / (3 * kd)) + z * (4 * M_PI / (3 * kd))) *
                        omega_mock_value(q1);

    Cplx sum{0.0};
    for (std::int64_t v = 0; v < k / 2; ++v) {
        const Rational mu(2 * v + 1, 2);
        const Rational turns = Rational(v, 2) - 3 * hp * mu * mu / k + hp * mu / k;
        const auto integral = analytic::mordell_I<double>(k, v, z, cfg);
        sum += phase(turns) * integral.value;
    }
    const Cplx b_term = phase(Rational(1, 2) + common) * (2.0 / kd) * w_half * sqrt(z) *
                        cexp(z * (4 * M_PI / (3 * kd))) * sum;
    return abs(lhs - a_term - b_term);
}

double transform_check_omega_odd(std::int64_t h, std::int64_t k, const Cplx& z, const analytic::QuadratureConfig& cfg) {
    require_coprime(h, k);
    require_disc(z);
    if (k % 2 == 0) throw std::invalid_argument("transform_check_omega_odd needs odd k");
    const InverseData inv = canonical_inverse(h, k, modular::gcd_class_of(k));
    const std::int64_t hp = inv.h_prime;
    const double kd = static_cast<double>(k);
    const Cplx lhs = omega_mock_value(cexp(Cplx{0.0, 2 * M_PI} * tau_of(h, k, z)));
    const Cplx w2 = W(2, k, inv);
    const Rational common = Rational(k - 1, 4) + Rational(3 * h * k, 4) - Rational(3 * h, 4 * k);

    const Cplx root_q1 = cexp(Cplx{0.0, M_PI} * tau1_of(hp, k, z));  // q1^{1/2} along the exponent
    const Cplx a_term = phase(common) * w2 * (1.0 / (2.0 * std::sqrt(2.0))) / sqrt(z) *
                        cexp(Cplx{1.0} / z * (M_PI / (24 * kd)) + z * (4 * M_PI / (3 * kd))) * f_mock_value(root_q1);

    Cplx sum{0.0};
    for (std::int64_t v = 0; v < k; ++v) {
        const Rational turns = Rational(-3 * hp * v * v, 4 * k) + Rational(hp * v, 4 * k);
        const auto integral = analytic::mordell_J<double>(k, v, z, cfg);
        sum += phase(turns) * integral.value;
    }
    const Cplx b_term = phase(Rational(1, 4) + common) * w2 * (1.0 / kd) * sqrt(z * 2.0) *
                        cexp(z * (4 * M_PI / (3 * kd))) * sum;
    return abs(lhs - a_term - b_term);
}

}  // namespace pod2::transforms
