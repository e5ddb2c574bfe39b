#include "pod2/kloosterman.hpp"

#include <cmath>
#include <stdexcept>

namespace pod2::kloosterman {

using modular::canonical_inverse;
using modular::floor_mod;
using modular::gcd;
using modular::InverseData;
using modular::omega_multiplier;
using modular::Rational;

Family parse_family(const std::string& text) {
    for (Family f : all_families) {
        if (std::to_string(static_cast<int>(f)) == text) return f;
    }
    throw std::invalid_argument("unknown Kloosterman family '" + text + "'");
}

GcdClass family_class(Family f) { return static_cast<GcdClass>(static_cast<int>(f) / 100); }

bool family_has_v(Family f) { return static_cast<int>(f) % 100 == 21; }

std::int64_t v_range(std::int64_t k) { return k % 2 == 0 ? k / 2 : k; }

void validate(const KloostermanSpec& spec) {
    const std::string name = std::to_string(static_cast<int>(spec.family));
    if (spec.k < 1) throw std::invalid_argument("family " + name + ": k must be positive");
    if (modular::gcd_class_of(spec.k) != family_class(spec.family)) {
        throw std::invalid_argument("family " + name + " needs gcd(k, 6) = " + name.substr(0, 1) + ", but gcd(" +
                                    std::to_string(spec.k) + ", 6) = " + std::to_string(gcd(spec.k, 6)));
    }
    if (family_has_v(spec.family)) {
        if (!spec.v) throw std::invalid_argument("family " + name + " needs v");
        if (*spec.v < 0 || *spec.v >= v_range(spec.k)) {
            throw std::invalid_argument("family " + name + ": v must lie in [0, " + std::to_string(v_range(spec.k)) +
                                        ")");
        }
    } else if (spec.v) {
        throw std::invalid_argument("family " + name + " takes no v");
    }
}

UnitPhase closed_prefactor(Family f, std::int64_t k) {
    switch (f) {
        case Family::f611:
        case Family::f621: return UnitPhase(3, 4);
        case Family::f211:
        case Family::f221: return UnitPhase(1, 4);
        case Family::f231:
        case Family::f111:
        case Family::f121: return UnitPhase(1, 2);
        case Family::f331: return UnitPhase(Rational(1, 2) - Rational(k, 6));
        default: return UnitPhase::one();
    }
}

std::int64_t closed_numerator(Family f, std::int64_t k, std::int64_t n, std::int64_t m, std::int64_t v,
                              std::int64_t h, std::int64_t h_prime) {
    using I = __int128;
    const I K = k, N = n, M = m, V = v, H = h, Hp = h_prime;
    I num = 0;
    switch (f) {
        case Family::f611:
            num = 27 * K - H * (36 * N + 18 - 9 * K - 4 * K * K) + Hp * (36 * M + 18 + 9 * K + 2 * K * K);
            break;
        case Family::f621:
            num = 27 * K - H * (36 * N + 18 - 9 * K - 4 * K * K) +
                  Hp * (36 * M - 18 + 9 * K + 2 * K * K - 108 * V * V - 72 * V);
            break;
        case Family::f631:
            num = 2 * (-H * (18 * N + 9 - 2 * K * K) + Hp * (18 * M + 9 + K * K));
            break;
        case Family::f211:
            num = 9 * K - H * (36 * N + 18 - 9 * K) + Hp * (12 * M + 22 + 9 * K + 2 * K * K);
            break;
        case Family::f221:
            num = 9 * K - H * (36 * N + 18 - 9 * K) + Hp * (12 * M - 14 + 9 * K + 2 * K * K - 108 * V * V - 72 * V);
            break;
        case Family::f231:
            num = 18 * K + 2 * (-H * (18 * N + 9 + 9 * K) + Hp * (6 * M - 1 + K * K));
            break;
        case Family::f311:
            num = -H * (36 * N + 18 - 22 * K * K) + Hp * (18 * M + 2 * K * K);
            break;
        case Family::f321:
            num = -H * (36 * N + 18 - 22 * K * K) + Hp * (18 * M + 2 * K * K - 27 * V * V + 9 * V);
            break;
        case Family::f331:
            num = 18 * K - 6 * K * K + 2 * (-H * (18 * N + 9 + K * K) + Hp * (9 * M + K * K));
            break;
        case Family::f111:
            num = 18 * K - H * (36 * N + 18 - 18 * K * K) + Hp * (6 * M - 2 + 2 * K * K);
            break;
        case Family::f121:
            num = 18 * K - H * (36 * N + 18 - 18 * K * K) + Hp * (6 * M - 2 + 2 * K * K - 27 * V * V + 9 * V);
            break;
        case Family::f131:
            num = -18 * H * (2 * N + 1 - K * K) + 2 * Hp * (3 * M - 1 + K * K);
            break;
    }
    const I den = 36 * K;
    I r = num % den;
    if (r < 0) r += den;
    return static_cast<std::int64_t>(r);
}

namespace {

// omega_{a h, kk} with inverse h' / a.
UnitPhase w(std::int64_t a, std::int64_t kk, const InverseData& inv) {
    return omega_multiplier(a * inv.h, kk, inv.h_prime / a);
}

UnitPhase definition_phase(const KloostermanSpec& s, const InverseData& inv) {
    const std::int64_t k = s.k, n = s.n, m = s.m, h = inv.h, hp = inv.h_prime, kp = inv.k_prime;
    const std::int64_t v = s.v.value_or(0);
    const Rational mu = Rational(2 * v + 1, 2);
    switch (family_class(s.family)) {
        case GcdClass::six: {
            const UnitPhase base(Rational(-n * h + m * hp, k));
            if (s.family == Family::f631) {
                return w(1, k / 3, inv) * w(1, k / 2, inv) * w(1, k, inv) / w(1, k / 6, inv).pow(3) * base;
            }
            const UnitPhase q1 = w(1, k / 6, inv) * w(1, k / 2, inv) * w(1, k, inv) / w(1, k / 3, inv);
            const UnitPhase lead(Rational(1 + hp - 3 * hp * kp, 4));
            if (s.family == Family::f611) return q1 * lead * UnitPhase(Rational(3 * (hp - h), 4 * k)) * base;
            return q1 * lead * UnitPhase(Rational(-3 * h, 4 * k) + hp * (mu - 3 * mu * mu) / k) * base;
        }
        case GcdClass::two: {
            const UnitPhase base(Rational(-n * h, k) + Rational(m * hp, 3 * k));
            if (s.family == Family::f231) {
                return w(3, k, inv) * w(1, k / 2, inv) * w(1, k, inv) / w(3, k / 2, inv).pow(3) * base;
            }
            const UnitPhase q1 = w(3, k / 2, inv) * w(1, k / 2, inv) * w(1, k, inv) / w(3, k, inv);
            const UnitPhase lead(Rational(1 + hp - 3 * hp * kp, 4));
            if (s.family == Family::f211) return q1 * lead * UnitPhase(Rational(3 * (hp - h), 4 * k)) * base;
            return q1 * lead * UnitPhase(Rational(-3 * h, 4 * k) + hp * (mu - 3 * mu * mu) / k) * base;
        }
        case GcdClass::three: {
            const UnitPhase base(Rational(-n * h, k) + Rational(m * hp, 2 * k));
            if (s.family == Family::f331) {
                return w(1, k / 3, inv) * w(2, k, inv) * w(1, k, inv) / w(2, k / 3, inv).pow(3) * base;
            }
            const UnitPhase q1 = w(2, k / 3, inv) * w(2, k, inv) * w(1, k, inv) / w(1, k / 3, inv);
            const UnitPhase sign(Rational(k + 1, 4));
            if (s.family == Family::f311) {
                return sign * q1 * UnitPhase(Rational(3 * h * k, 4) - Rational(3 * h, 4 * k)) * base;
            }
            return sign * q1 * UnitPhase(Rational(3 * k * h, 4) + Rational(hp * (v - 3 * v * v) - 3 * h, 4 * k)) *
                   base;
        }
        case GcdClass::one: {
            const UnitPhase base(Rational(-n * h, k) + Rational(m * hp, 6 * k));
            if (s.family == Family::f131) {
                return w(3, k, inv) * w(2, k, inv) * w(1, k, inv) / w(6, k, inv).pow(3) * base;
            }
            const UnitPhase q1 = w(6, k, inv) * w(2, k, inv) * w(1, k, inv) / w(3, k, inv);
            const UnitPhase sign(Rational(k + 1, 4));
            if (s.family == Family::f111) {
                return sign * q1 * UnitPhase(Rational(3 * h * k, 4) - Rational(3 * h, 4 * k)) * base;
            }
            return sign * q1 * UnitPhase(Rational(3 * k * h, 4) + Rational(hp * (v - 3 * v * v) - 3 * h, 4 * k)) *
                   base;
        }
    }
    throw std::logic_error("unreachable gcd class");
}

}  // namespace

std::vector<UnitPhase> summand_phases(const KloostermanSpec& spec, Form form, std::int64_t inverse_shift) {
    validate(spec);
    const GcdClass cls = family_class(spec.family);
    std::vector<UnitPhase> out;
    for (std::int64_t h = 0; h < spec.k; ++h) {
        if (gcd(h, spec.k) != 1) continue;
        const InverseData inv = canonical_inverse(h, spec.k, cls, inverse_shift);
        if (form == Form::definition) {
            out.push_back(definition_phase(spec, inv));
        } else {
            out.emplace_back(closed_numerator(spec.family, spec.k, spec.n, spec.m, spec.v.value_or(0), h,
                                              inv.h_prime),
                             36 * spec.k);
        }
    }
    return out;
}

std::vector<UnitPhase> classical_A_phases(std::int64_t k, std::int64_t n) {
    if (k < 1) throw std::invalid_argument("classical_A: k must be positive");
    std::vector<UnitPhase> out;
    for (std::int64_t h = 0; h < k; ++h) {
        if (gcd(h, k) != 1) continue;
        const std::int64_t hp = modular::plain_inverse(h, k);
        out.push_back(omega_multiplier(h, k, hp) * UnitPhase(-floor_mod(n * h, k), k));
    }
    return out;
}

bool identity_3_1_check(std::int64_t k, std::int64_t n, std::int64_t m) {
    if (modular::gcd_class_of(k) != GcdClass::one) {
        throw std::invalid_argument("identity check needs gcd(k, 6) = 1, got k = " + std::to_string(k));
    }
    const auto a = kloosterman_closed<double>({Family::f111, k, n, m, std::nullopt}).value;
    const auto b = kloosterman_closed<double>({Family::f131, k, n, m, std::nullopt}).value;
    return abs(a + b) < 1e-10;
}

double bound_ratio(const KloostermanSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("bound_ratio needs n >= 1");
    const double value = abs(kloosterman_closed<double>(spec).value);
    return value / (std::cbrt(static_cast<double>(spec.n)) * std::pow(static_cast<double>(spec.k), 2.0 / 3.0));
}

}  // namespace pod2::kloosterman
