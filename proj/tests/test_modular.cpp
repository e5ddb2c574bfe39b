#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pod2/modular.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <set>

using namespace pod2;
using namespace pod2::modular;

namespace {

using boost::multiprecision::cpp_rational;

// ((x)) for rational x
cpp_rational sawtooth(const cpp_rational& x) {
    const auto num = boost::multiprecision::numerator(x);
    const auto den = boost::multiprecision::denominator(x);
    if (num % den == 0) return 0;
    boost::multiprecision::cpp_int fl = num / den;
    if (num < 0 && num % den != 0) fl -= 1;
    return x - cpp_rational(fl) - cpp_rational(1, 2);
}

cpp_rational dedekind_oracle(std::int64_t h, std::int64_t k) {
    cpp_rational s = 0;
    for (std::int64_t mu = 1; mu < k; ++mu) s += sawtooth(cpp_rational(mu, k)) * sawtooth(cpp_rational(h * mu, k));
    return s;
}

}  // namespace

TEST_CASE("UnitPhase arithmetic") {
    const UnitPhase a(1, 3), b(2, 3);
    CHECK(a * b == UnitPhase::one());
    CHECK(UnitPhase(5, 4) == UnitPhase(1, 4));
    CHECK(UnitPhase(-1, 4) == UnitPhase(3, 4));
    CHECK(UnitPhase(1, 4) == UnitPhase::i());
    CHECK(UnitPhase(1, 2) == UnitPhase::minus_one());
    CHECK(a.inverse() == b);
    CHECK(a.pow(3) == UnitPhase::one());
    const auto i = UnitPhase::i().value<double>();
    CHECK(i.re == 0.0);
    CHECK(i.im == 1.0);
    const auto w = UnitPhase(1, 12).value<double>();
    CHECK(w.re == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(w.im == doctest::Approx(0.5));
}

TEST_CASE("kronecker_symbol") {
    CHECK(kronecker_symbol(0, 1) == 1);
    CHECK(kronecker_symbol(-1, 3) == -1);
    CHECK(kronecker_symbol(2, 7) == 1);
    CHECK(kronecker_symbol(2, 3) == -1);
    CHECK(kronecker_symbol(3, 9) == 0);
    // multiplicativity in the top argument for odd n
    for (int n = 1; n < 40; n += 2) {
        for (int a = -10; a <= 10; ++a) {
            for (int b = -10; b <= 10; ++b) {
                CHECK(kronecker_symbol(a * b, n) == kronecker_symbol(a, n) * kronecker_symbol(b, n));
            }
        }
    }
}

TEST_CASE("dedekind_sum") {
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(1, 3) == cpp_rational(1, 18));
    CHECK(dedekind_sum(5, 1) == 0);
    CHECK_THROWS(dedekind_sum(2, 4));
    for (std::int64_t k = 1; k <= 30; ++k) {
        for (std::int64_t h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            CHECK(dedekind_sum(h, k) == dedekind_oracle(h, k));
        }
    }
    // reciprocity s(h,k) + s(k,h) = (h/k + k/h + 1/(hk))/12 - 1/4
    for (std::int64_t h = 1; h <= 20; ++h) {
        for (std::int64_t k = 1; k <= 20; ++k) {
            if (std::gcd(h, k) != 1) continue;
            const cpp_rational rhs = (cpp_rational(h, k) + cpp_rational(k, h) + cpp_rational(1, h * k)) / 12 -
                                     cpp_rational(1, 4);
            CHECK(dedekind_sum(h, k) + dedekind_sum(k, h) == rhs);
        }
    }
}

TEST_CASE("canonical_inverse examples") {
    const auto a = canonical_inverse(0, 1, GcdClass::one);
    CHECK(a.h_prime == 0);
    CHECK(a.k_prime == -1);
    const auto b = canonical_inverse(1, 2, GcdClass::two);
    CHECK(b.h_prime == 15);
    CHECK(b.k_prime == -8);
    const auto c = canonical_inverse(1, 6, GcdClass::six);
    CHECK(c.h_prime == 215);
    CHECK(c.k_prime == -36);
    CHECK_THROWS(canonical_inverse(1, 6, GcdClass::two));
    CHECK_THROWS(canonical_inverse(2, 4, GcdClass::two));
}

TEST_CASE("canonical_inverse invariants") {
    for (std::int64_t k = 1; k <= 80; ++k) {
        const GcdClass cls = gcd_class_of(k);
        CHECK(static_cast<int>(cls) == std::gcd(k, std::int64_t{6}));
        for (std::int64_t h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            const auto inv = canonical_inverse(h, k, cls);
            CAPTURE(h);
            CAPTURE(k);
            CHECK(h * inv.h_prime + k * inv.k_prime == -1);
            switch (cls) {
                case GcdClass::six:
                    CHECK((h * inv.h_prime + 1) % (36 * k) == 0);
                    CHECK(inv.k_prime % 36 == 0);
                    break;
                case GcdClass::two:
                    CHECK((h * inv.h_prime + 1) % (4 * k) == 0);
                    CHECK(inv.k_prime % 4 == 0);
                    CHECK(inv.h_prime % 3 == 0);
                    break;
                case GcdClass::three:
                    CHECK((h * inv.h_prime + 1) % k == 0);
                    CHECK(inv.h_prime % 2 == 0);
                    break;
                case GcdClass::one:
                    CHECK((h * inv.h_prime + 1) % k == 0);
                    CHECK(inv.h_prime % 6 == 0);
                    break;
            }
            // smallest non-negative
            CHECK(inv.h_prime >= 0);
            CHECK(inv.h_prime < inverse_class_modulus(k, cls));
        }
    }
}

TEST_CASE("omega_multiplier examples and Dedekind oracle") {
    CHECK(omega_multiplier(0, 1, 0) == UnitPhase::one());
    CHECK(omega_multiplier(1, 2, 1) == UnitPhase::one());
    CHECK(omega_multiplier(1, 3, plain_inverse(1, 3)) == UnitPhase(1, 36));
    for (std::int64_t k = 1; k <= 60; ++k) {
        for (std::int64_t h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            const UnitPhase expected(dedekind_oracle(h, k) / 2);
            CHECK(omega_multiplier(h, k, plain_inverse(h, k)) == expected);
            // any inverse representative and any lift of h
            CHECK(omega_multiplier(h, k, plain_inverse(h, k) + 7 * k) == expected);
            CHECK(omega_multiplier(h + 2 * k, k, plain_inverse(h, k)) == expected);
            // 24k-th root of unity
            CHECK((24 * k) % boost::multiprecision::denominator(expected.turns()).convert_to<std::int64_t>() == 0);
        }
    }
}

TEST_CASE("farey_sequence") {
    const auto f3 = farey_sequence(3);
    const std::vector<Fraction> expected{{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}};
    CHECK(f3 == expected);
    // sizes 1 + sum phi(k)
    for (std::int64_t N = 1; N <= 30; ++N) {
        std::size_t total = 1;
        for (std::int64_t k = 1; k <= N; ++k) {
            for (std::int64_t h = 1; h <= k; ++h) total += std::gcd(h, k) == 1;
        }
        CHECK(farey_sequence(N).size() == total);
    }
    for (std::int64_t N = 1; N <= 25; ++N) {
        const auto seq = farey_sequence(N);
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(seq[i + 1].h * seq[i].k - seq[i].h * seq[i + 1].k == 1);
    }
}

TEST_CASE("farey_neighbors") {
    const auto nb = farey_neighbors(1, 2, 3);
    CHECK(nb.left == Fraction{1, 3});
    CHECK(nb.right == Fraction{2, 3});
    CHECK(nb.theta_minus == cpp_rational(1, 10));
    for (std::int64_t N = 1; N <= 50; ++N) {
        for (const auto& fr : farey_sequence(N)) {
            const auto n = farey_neighbors(fr.h, fr.k, N);
            CHECK(fr.h * n.left.k - n.left.h * fr.k == 1);
            CHECK(fr.h * n.right.k - fr.k * n.right.h == -1);
            CHECK(cpp_rational(1, fr.k + n.left.k) <= cpp_rational(1, N + 1));
            CHECK(cpp_rational(1, fr.k + n.right.k) <= cpp_rational(1, N + 1));
            if (fr.k > 1) {
                const std::int64_t hp = plain_inverse(fr.h, fr.k);
                CHECK(floor_mod(n.left.k + hp, fr.k) == 0);
                CHECK(floor_mod(n.right.k - hp, fr.k) == 0);
            }
            CHECK(n.theta_minus == cpp_rational(1, fr.k * (fr.k + n.left.k)));
            CHECK(n.theta_plus == cpp_rational(1, fr.k * (fr.k + n.right.k)));
        }
    }
    CHECK_THROWS(farey_neighbors(1, 4, 3));
}
