#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace pod2 {

/// Runtime-precision real used by the extended mode. Expression templates are
/// off so that generic code can write `auto x = a * b;` safely.
using Extended = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;

template <class Real>
inline constexpr bool is_builtin_real_v = std::is_floating_point_v<Real>;

/// Number of significant decimal digits carried by Real right now.
template <class Real>
unsigned working_digits() {
    if constexpr (is_builtin_real_v<Real>) {
        return std::numeric_limits<Real>::digits10;
    } else {
        return Real::default_precision();
    }
}

template <class Real>
Real machine_epsilon() {
    if constexpr (is_builtin_real_v<Real>) {
        return std::numeric_limits<Real>::epsilon();
    } else {
        using std::pow;
        return pow(Real(10), -static_cast<int>(Real::default_precision()) + 1);
    }
}

template <class Real>
Real pi() {
    if constexpr (is_builtin_real_v<Real>) {
        return static_cast<Real>(3.141592653589793238462643383279502884L);
    } else {
        thread_local unsigned cached_digits = 0;
        thread_local Real cached;
        if (cached_digits != Real::default_precision()) {
            Real v;
            mpfr_const_pi(v.backend().data(), MPFR_RNDN);
            cached = v;
            cached_digits = Real::default_precision();
        }
        return cached;
    }
}

template <class Real>
double to_double(const Real& x) {
    if constexpr (is_builtin_real_v<Real>) {
        return static_cast<double>(x);
    } else {
        return x.template convert_to<double>();
    }
}

/// Sets the default precision of Extended for the lifetime of the object.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits) : saved_(Extended::default_precision()) {
        Extended::default_precision(digits);
    }
    ~ScopedPrecision() { Extended::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

/// `double` or `extended:<digits>`.
struct PrecisionMode {
    bool extended = false;
    unsigned digits = 0;

    static PrecisionMode parse(std::string_view text);
    std::string to_string() const;
};

inline PrecisionMode PrecisionMode::parse(std::string_view text) {
    if (text == "double") return {};
    constexpr std::string_view prefix = "extended:";
    if (text.substr(0, prefix.size()) == prefix) {
        const std::string digits(text.substr(prefix.size()));
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(digits, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != digits.size() || digits.empty() || value < 16 || value > 1000) {
            throw std::invalid_argument("extended precision needs 16..1000 digits, got '" + digits + "'");
        }
        return {true, static_cast<unsigned>(value)};
    }
    throw std::invalid_argument("unknown precision mode '" + std::string(text) + "'");
}

inline std::string PrecisionMode::to_string() const {
    return extended ? "extended:" + std::to_string(digits) : std::string("double");
}

}  // namespace pod2
