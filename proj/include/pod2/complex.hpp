#pragma once

#include "pod2/numeric.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pod2 {

/// Minimal complex number over an arbitrary real type. std::complex is only
/// specified for the builtin floating types, and the kernels here also run on
/// Extended.
template <class Real>
struct Complex {
    Real re{};
    Real im{};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Complex i() { return {Real(0), Real(1)}; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Complex& o);
    Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(Complex a, const Real& s) { return a *= s; }
    friend Complex operator*(const Real& s, Complex a) { return a *= s; }
    friend Complex operator/(Complex a, const Real& s) { return a /= s; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
        return os << '(' << z.re << ',' << z.im << ')';
    }
};

template <class Real>
Complex<Real>& Complex<Real>::operator/=(const Complex& o) {
    using std::abs;
    // Smith's algorithm
    if (abs(o.re) >= abs(o.im)) {
        const Real r = o.im / o.re;
        const Real d = o.re + o.im * r;
        Real nr = (re + im * r) / d;
        im = (im - re * r) / d;
        re = std::move(nr);
    } else {
        const Real r = o.re / o.im;
        const Real d = o.re * r + o.im;
        Real nr = (re * r + im) / d;
        im = (im * r - re) / d;
        re = std::move(nr);
    }
    return *this;
}

template <class Real>
Complex<Real> conj(const Complex<Real>& z) { return {z.re, -z.im}; }

template <class Real>
Real norm(const Complex<Real>& z) { return z.re * z.re + z.im * z.im; }

template <class Real>
Real abs(const Complex<Real>& z) {
    using std::abs;
    using std::sqrt;
    const Real a = abs(z.re);
    const Real b = abs(z.im);
    if (a == 0) return b;
    if (b == 0) return a;
    if (a >= b) {
        const Real t = b / a;
        return a * sqrt(Real(1) + t * t);
    }
    const Real t = a / b;
    return b * sqrt(Real(1) + t * t);
}

template <class Real>
Real arg(const Complex<Real>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

template <class Real>
Complex<Real> polar(const Real& radius, const Real& angle) {
    using std::cos;
    using std::sin;
    return {radius * cos(angle), radius * sin(angle)};
}

template <class Real>
Complex<Real> exp(const Complex<Real>& z) {
    using std::exp;
    return polar(Real(exp(z.re)), z.im);
}

/// Principal branch.
template <class Real>
Complex<Real> log(const Complex<Real>& z) {
    using std::log;
    return {Real(log(abs(z))), arg(z)};
}

/// Principal branch, cut along the negative real axis.
template <class Real>
Complex<Real> sqrt(const Complex<Real>& z) {
    using std::abs;
    using std::sqrt;
    if (z.re == 0 && z.im == 0) return {};
    const Real m = abs(z);
    Real t = sqrt((m + abs(z.re)) / 2);
    if (z.re >= 0) return {t, z.im / (2 * t)};
    return {abs(z.im) / (2 * t), z.im >= 0 ? t : Real(-t)};
}

/// Principal branch: exp(p * log z).
template <class Real>
Complex<Real> pow(const Complex<Real>& z, const Real& p) {
    if (z.re == 0 && z.im == 0) return {};
    return exp(log(z) * p);
}

template <class Real>
bool is_finite(const Complex<Real>& z) {
    using std::isfinite;
    if constexpr (is_builtin_real_v<Real>) {
        return std::isfinite(z.re) && std::isfinite(z.im);
    } else {
        return boost::multiprecision::isfinite(z.re) && boost::multiprecision::isfinite(z.im);
    }
}

}  // namespace pod2
