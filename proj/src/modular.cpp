#include "pod2/modular.hpp"

#include <numeric>
#include <stdexcept>

namespace pod2::modular {

namespace {

Rational normalize_turns(const Rational& r) {
    // r - floor(r)
    const auto& num = boost::multiprecision::numerator(r);
    const auto& den = boost::multiprecision::denominator(r);
    boost::multiprecision::cpp_int q, rem;
    boost::multiprecision::divide_qr(num, den, q, rem);
    if (rem < 0) rem += den;
    return Rational(rem, den);
}

// ((x)) for x = a/b.
Rational sawtooth(std::int64_t a, std::int64_t b) {
    if (a % b == 0) return 0;
    const std::int64_t fl = (a >= 0) ? a / b : -((-a + b - 1) / b);
    return Rational(a, b) - fl - Rational(1, 2);
}

}  // namespace

UnitPhase::UnitPhase(const Rational& turns) : turns_(normalize_turns(turns)) {}

UnitPhase::UnitPhase(std::int64_t num, std::int64_t den) : UnitPhase(Rational(num, den)) {}

std::string UnitPhase::str() const { return turns_.str(); }

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    std::int64_t r0 = m, r1 = floor_mod(a, m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return floor_mod(s0, m);
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) return 0;
        const std::int64_t a8 = floor_mod(a, 8);
        if (twos % 2 == 1 && (a8 == 3 || a8 == 5)) result = -result;
    }
    // Jacobi symbol (a / n) for odd n >= 1.
    std::int64_t x = floor_mod(a, n);
    std::int64_t m = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            const std::int64_t m8 = m % 8;
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(x, m);
        if (x % 4 == 3 && m % 4 == 3) result = -result;
        x %= m;
    }
    return m == 1 ? result : 0;
}

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("dedekind_sum: k must be positive");
    if (gcd(h, k) != 1) throw std::invalid_argument("dedekind_sum: h and k must be coprime");
    Rational s = 0;
    for (std::int64_t mu = 1; mu < k; ++mu) s += sawtooth(mu, k) * sawtooth(h * mu, k);
    return s;
}

GcdClass gcd_class_of(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("gcd class needs k >= 1");
    return static_cast<GcdClass>(gcd(k, 6));
}

std::int64_t inverse_divisor(GcdClass cls) {
    switch (cls) {
        case GcdClass::six: return 1;
        case GcdClass::two: return 3;
        case GcdClass::three: return 2;
        case GcdClass::one: return 6;
    }
    throw std::invalid_argument("bad gcd class");
}

namespace {

std::int64_t congruence_modulus(std::int64_t k, GcdClass cls) {
    switch (cls) {
        case GcdClass::six: return 36 * k;
        case GcdClass::two: return 4 * k;
        case GcdClass::three:
        case GcdClass::one: return k;
    }
    throw std::invalid_argument("bad gcd class");
}

}  // namespace

std::int64_t inverse_class_modulus(std::int64_t k, GcdClass cls) {
    return congruence_modulus(k, cls) * inverse_divisor(cls);
}

InverseData canonical_inverse(std::int64_t h, std::int64_t k, GcdClass cls, std::int64_t shift) {
    if (k < 1) throw std::invalid_argument("canonical_inverse: k must be positive");
    if (gcd_class_of(k) != cls) {
        throw std::invalid_argument("canonical_inverse: class " + std::to_string(static_cast<int>(cls)) +
                                    " does not match gcd(" + std::to_string(k) + ", 6)");
    }
    if (gcd(h, k) != 1) throw std::invalid_argument("canonical_inverse: h and k must be coprime");
    const std::int64_t modulus = congruence_modulus(k, cls);
    const std::int64_t d = inverse_divisor(cls);
    // h' = d t with h d t = -1 (mod modulus); gcd(d, modulus) = 1 by construction.
    const std::int64_t t = floor_mod(-mod_inverse(floor_mod(h, modulus) * d % modulus, modulus), modulus);
    InverseData out;
    out.h = h;
    out.k = k;
    out.gcd_class = cls;
    out.h_prime = d * t + shift * inverse_class_modulus(k, cls);
    const std::int64_t numerator = 1 + h * out.h_prime;
    if (numerator % k != 0) throw std::logic_error("canonical_inverse: k' is not integral");
    out.k_prime = -numerator / k;
    return out;
}

std::int64_t plain_inverse(std::int64_t h, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("plain_inverse: k must be positive");
    if (gcd(h, k) != 1) throw std::invalid_argument("plain_inverse: h and k must be coprime");
    return floor_mod(-mod_inverse(h, k), k);
}

UnitPhase omega_multiplier(std::int64_t h, std::int64_t k, std::int64_t h_prime) {
    if (k < 1) throw std::invalid_argument("omega_multiplier: k must be positive");
    if (gcd(h, k) != 1) throw std::invalid_argument("omega_multiplier: h and k must be coprime");
    if (floor_mod(h * h_prime + 1, k) != 0) {
        throw std::invalid_argument("omega_multiplier: h h' != -1 (mod k)");
    }
    // omega depends on h only through h mod k, and reducing keeps the parity
    // of h whenever the h-odd branch is the one taken (k even).
    h = floor_mod(h, k);
    // (k - 1/k)(2h - h' + h^2 h') / 12
    const Rational tail = Rational(k * k - 1, 12 * k) * Rational(2 * h - h_prime + h * h * h_prime);
    Rational exponent;
    int sign = 0;
    if (k % 2 == 1) {
        sign = kronecker_symbol(-h, k);
        exponent = Rational(k - 1, 4) + tail;
    } else if (h % 2 == 1) {
        sign = kronecker_symbol(-k, h);
        exponent = Rational(2 - h * k - h, 4) + tail;
    } else {
        throw std::invalid_argument("omega_multiplier: h and k both even");
    }
    if (sign == 0) throw std::logic_error("omega_multiplier: vanishing Kronecker symbol");
    // e^{-pi i A} = e^{2 pi i (-A/2)}
    Rational turns = -exponent / 2;
    if (sign < 0) turns += Rational(1, 2);
    return UnitPhase(turns);
}

UnitPhase omega_multiplier(const InverseData& inv) { return omega_multiplier(inv.h, inv.k, inv.h_prime); }

std::vector<Fraction> farey_sequence(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("farey_sequence: N must be positive");
    std::vector<Fraction> out{{0, 1}};
    std::int64_t a = 0, b = 1, c = 1, d = N;
    while (c <= N) {
        out.push_back({c, d});
        const std::int64_t q = (N + b) / d;
        const std::int64_t e = q * c - a;
        const std::int64_t f = q * d - b;
        a = c;
        b = d;
        c = e;
        d = f;
    }
    return out;
}

FareyNeighbors farey_neighbors(std::int64_t h, std::int64_t k, std::int64_t N) {
    if (N < 1 || k < 1 || k > N || h < 0 || h > k || gcd(h, k) != 1) {
        throw std::invalid_argument("farey_neighbors: " + std::to_string(h) + "/" + std::to_string(k) +
                                    " is not in F_" + std::to_string(N));
    }
    // Left neighbour: the largest k1 <= N with h k1 = 1 (mod k), i.e.
    // k1 = h^{-1} (mod k); right neighbour k2 = -h^{-1} (mod k).
    FareyNeighbors out;
    out.center = {h, k};
    const std::int64_t inv = mod_inverse(h, k);
    std::int64_t k1 = (k == 1) ? N : inv + ((N - inv) / k) * k;
    std::int64_t k2 = (k == 1) ? N : floor_mod(-inv, k) + ((N - floor_mod(-inv, k)) / k) * k;
    out.left = {(h * k1 - 1) / k, k1};
    out.right = {(h * k2 + 1) / k, k2};
    out.theta_minus = Rational(1, k * (k + k1));
    out.theta_plus = Rational(1, k * (k + k2));
    return out;
}

}  // namespace pod2::modular
