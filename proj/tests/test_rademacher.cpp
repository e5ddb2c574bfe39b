#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pod2/qseries.hpp"
#include "pod2/rademacher.hpp"
#include "pod2/transforms.hpp"

#include <cmath>
#include <numeric>

using namespace pod2;
using namespace pod2::rademacher;
using kloosterman::Family;
using kloosterman::KloostermanSpec;

namespace {

const TruncationPolicy default_policy{};
const QuadratureConfig default_cfg{};

}  // namespace

TEST_CASE("pod2_exact examples") {
    const auto r6 = pod2_exact<double>(6, default_policy, default_cfg);
    CHECK(r6.rounded == 5);
    CHECK(r6.converged);
    const auto r0 = pod2_exact<double>(0, default_policy, default_cfg);
    CHECK(r0.rounded == 1);
    const auto r4 = pod2_exact<double>(4, default_policy, default_cfg);
    CHECK(r4.rounded == 3);
    CHECK(r4.converged);
    CHECK(r4.k_max == 100);
    CHECK(r4.quad_tol == 1e-10);
    CHECK(r4.rounded == round_to_integer(r4.estimate));
    CHECK(r4.block_modulus.size() == 100);
}

TEST_CASE("per-family bookkeeping") {
    const auto r = pod2_exact<double>(9, TruncationPolicy{30, 5, 1e-2}, default_cfg);
    Complex<double> sum{0.0};
    for (std::size_t f = 0; f < 4; ++f) {
        CHECK(r.per_family[f].name == std::string(family_names[f]));
        Complex<double> acc{0.0};
        for (std::size_t i = 0; i < r.per_family[f].k.size(); ++i) {
            const std::int64_t k = r.per_family[f].k[i];
            if (i > 0) CHECK(k > r.per_family[f].k[i - 1]);
            const int g = std::gcd(k, std::int64_t{6});
            CHECK(g == (f == 0 ? 6 : f == 3 ? 1 : 2));
            acc += r.per_family[f].contribution[i];
        }
        CHECK(abs(acc - r.per_family[f].total) < 1e-12);
        sum += acc;
    }
    CHECK(sum.re == doctest::Approx(r.estimate).epsilon(1e-14));
}

TEST_CASE("family (iii) term at k=2 assembled by hand") {
    for (std::int64_t n : {0, 3, 8}) {
        const auto r = pod2_exact<double>(n, TruncationPolicy{6, 1, 1.0}, default_cfg);
        const auto& fam = r.per_family[2];
        REQUIRE(fam.k.size() >= 1);
        CHECK(fam.k[0] == 2);
        const auto K = kloosterman::kloosterman_closed<double>(KloostermanSpec{Family::f231, 2, n, 0, std::nullopt}).value;
        const double root = std::sqrt(2.0 * n + 1);
        const double bessel = analytic::bessel_I1(2 * M_PI * root / 6);
        const Complex<double> expected = K * (M_PI / (3 * root) * bessel / 2);
        CHECK(abs(fam.contribution[0] - expected) < 1e-14);
    }
}

TEST_CASE("family (i) term at k=6 assembled by hand") {
    const std::int64_t n = 5;
    const auto r = pod2_exact<double>(n, TruncationPolicy{6, 1, 1.0}, default_cfg);
    Complex<double> inner{0.0};
    for (std::int64_t v = 0; v < 3; ++v) {
        const auto K = kloosterman::kloosterman_closed<double>(KloostermanSpec{Family::f621, 6, n, 0, v}).value;
        const auto I = analytic::integral_I_final<double>(std::sqrt(6.0), 6, v, n, default_cfg).value;
        inner += (v % 2 == 0 ? 1.0 : -1.0) * (K * I);
    }
    const Complex<double> expected = inner * (M_PI / (3 * std::sqrt(3 * (n + 0.5))) / 36);
    CHECK(abs(r.per_family[0].contribution[0] - expected) < 1e-13);
}

TEST_CASE("realness of the assembled total") {
    for (std::int64_t n = 0; n <= 40; n += 5) {
        const auto r = pod2_exact<double>(n, default_policy, default_cfg);
        CHECK(to_double(r.imag_residual) <= 1e3 * default_cfg.abs_tol);
        CHECK(r.imaginary_ok);
    }
}

TEST_CASE("starved truncation is not converged") {
    const auto r = pod2_exact<double>(3, TruncationPolicy{3, 5, 1e-2}, default_cfg);
    CHECK_FALSE(r.converged);
    CHECK_FALSE(r.tail_ok);
    const auto table = qseries::pod2_count_table(20);
    const auto s = pod2_exact<double>(20, TruncationPolicy{100, 5, 1e-4}, default_cfg);
    CHECK(s.rounded == table[20]);
    CHECK_FALSE(s.tail_ok);  // 1e-4 is stricter than the trailing blocks at k = 100
    CHECK(s.largest_k_above_half >= 1);
    CHECK_THROWS(pod2_exact<double>(-1, default_policy, default_cfg));
    CHECK_THROWS(pod2_exact<double>(1, TruncationPolicy{0, 5, 1e-2}, default_cfg));
}

TEST_CASE("quadrature failures propagate") {
    QuadratureConfig starved;
    starved.max_panels = 1;
    starved.abs_tol = 1e-14;
    const auto r = pod2_exact<double>(10, TruncationPolicy{12, 5, 1.0}, starved);
    CHECK(r.quadrature_failures > 0);
    CHECK_FALSE(r.quadrature_ok);
    CHECK_FALSE(r.converged);
}

TEST_CASE("extended precision agrees with double") {
    const auto d = pod2_exact<double>(12, TruncationPolicy{40, 5, 1e-2}, default_cfg);
    ScopedPrecision scope(30);
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-15;
    const auto e = pod2_exact<Extended>(12, TruncationPolicy{40, 5, 1e-2}, cfg);
    CHECK(e.rounded == d.rounded);
    CHECK(std::abs(to_double(e.estimate) - d.estimate) < 1e-8);
    CHECK(to_double(e.imag_residual) < 1e-12);
}

TEST_CASE("p_exact calibration") {
    CHECK(p_exact<double>(10, p_exact_default_kmax(10)).rounded == 42);
    CHECK(p_exact<double>(50, p_exact_default_kmax(50)).rounded == 204226);
    CHECK(p_exact<double>(100, p_exact_default_kmax(100)).rounded == 190569292);
    const auto oracle = qseries::partition_series(1, 200);
    for (std::int64_t n = 1; n <= 200; ++n) {
        const auto r = p_exact<double>(n, p_exact_default_kmax(n));
        CAPTURE(n);
        CHECK(r.rounded == oracle[static_cast<std::size_t>(n)]);
        CHECK(r.converged);
    }
    CHECK(p_exact_default_kmax(1) == 10);
    CHECK(p_exact_default_kmax(200) == 57);
    CHECK_THROWS(p_exact<double>(0, 10));
}

TEST_CASE("transformation law of P") {
    using transforms::Cplx;
    CHECK(transforms::transform_check_P(0, 1, Cplx{1.0}) < 1e-8);
    CHECK(transforms::transform_check_P(1, 2, Cplx{1.0}) < 1e-8);
    CHECK(transforms::transform_check_P(1, 3, Cplx{0.8}) < 1e-8);
    CHECK(transforms::transform_check_P(4, 9, Cplx{0.6, -0.3}) < 1e-8);
}

TEST_CASE("transformation laws of zeta1 and zeta2") {
    using modular::GcdClass;
    using transforms::Cplx;
    using transforms::Zeta;
    CHECK(transforms::transform_check_zeta(GcdClass::six, Zeta::one, 1, 6, Cplx{1.0}) < 1e-8);
    CHECK(transforms::transform_check_zeta(GcdClass::one, Zeta::two, 0, 1, Cplx{1.0}) < 1e-8);
    CHECK(transforms::transform_check_zeta(GcdClass::three, Zeta::one, 1, 3, Cplx{1.0}) < 1e-8);
    for (auto [h, k] : {std::pair{1, 6}, {5, 12}, {1, 2}, {1, 4}, {3, 8}, {1, 3}, {2, 9}, {0, 1}, {1, 5}, {3, 7}}) {
        for (Cplx z : {Cplx{1.0}, Cplx{0.8}, Cplx{0.7, 0.3}}) {
            for (Zeta variant : {Zeta::one, Zeta::two}) {
                CAPTURE(h);
                CAPTURE(k);
                CHECK(transforms::transform_check_zeta(modular::gcd_class_of(k), variant, h, k, z) < 1e-8);
            }
        }
    }
    CHECK_THROWS(transforms::transform_check_zeta(GcdClass::two, Zeta::one, 1, 3, Cplx{1.0}));
}

TEST_CASE("transformation laws of omega") {
    using transforms::Cplx;
    CHECK(transforms::transform_check_omega_even(1, 2, Cplx{1.0}) < 1e-6);
    CHECK(transforms::transform_check_omega_even(1, 6, Cplx{1.0}) < 1e-6);
    CHECK(transforms::transform_check_omega_even(1, 4, Cplx{0.9}) < 1e-6);
    CHECK(transforms::transform_check_omega_even(5, 12, Cplx{1.0}) < 1e-6);
    CHECK(transforms::transform_check_omega_odd(0, 1, Cplx{1.0}) < 1e-6);
    CHECK(transforms::transform_check_omega_odd(1, 3, Cplx{1.0}) < 1e-6);
    CHECK(transforms::transform_check_omega_odd(2, 5, Cplx{0.9}) < 1e-6);
    CHECK(transforms::transform_check_omega_odd(3, 7, Cplx{0.8, 0.2}) < 1e-6);
    CHECK_THROWS(transforms::transform_check_omega_even(1, 3, Cplx{1.0}));
    CHECK_THROWS(transforms::transform_check_omega_odd(1, 2, Cplx{1.0}));
}

TEST_CASE("mock theta values match their integer series") {
    using transforms::Cplx;
    const Cplx t{0.3, -0.2};
    const auto w = eval_series(qseries::omega_mock_series(300), t);
    const auto f = eval_series(qseries::f_mock_series(300), t);
    CHECK(abs(transforms::omega_mock_value(t) - w) < 1e-13);
    CHECK(abs(transforms::f_mock_value(t) - f) < 1e-13);
    // conjugate symmetry of the real-coefficient series
    const auto a = transforms::omega_mock_value(Cplx{0.5, 0.3});
    const auto b = transforms::omega_mock_value(Cplx{0.5, -0.3});
    CHECK(abs(a - conj(b)) < 1e-13);
}
