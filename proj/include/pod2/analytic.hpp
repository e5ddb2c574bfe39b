#pragma once

// Numerical kernels: modified Bessel functions, a stable complex tanh/coth,
// globally adaptive Gauss-Legendre quadrature, and the tanh-kernel integrals
// that appear in the exact formula and in the transformation laws of omega.

#include "pod2/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pod2::analytic {

template <class Real>
Real bessel_I0(const Real& x);

/// Ascending series sum_m (x/2)^{2m+1} / (m! (m+1)!).
template <class Real>
Real bessel_I1(const Real& x);

/// Ascending series for I_nu, nu >= 0; used as an independent oracle.
template <class Real>
Real bessel_I_series(const Real& nu, const Real& x);

/// sqrt(2/(pi x)) (cosh x - sinh x / x), switching to the series near 0.
template <class Real>
Real bessel_I32(const Real& x);

/// Throws std::domain_error within 1e-14 of a pole.
template <class Real>
Complex<Real> complex_tanh(const Complex<Real>& w);

/// 1 / tanh(w), evaluated directly.
template <class Real>
Complex<Real> complex_coth(const Complex<Real>& w);

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_depth = 40;
    int panel_order = 15;
    bool cos_substitution = false;
    int max_panels = 5000;
};

template <class Real>
struct QuadResult {
    Complex<Real> value;
    Real error = 0;
    bool converged = false;
    int panels = 0;
    std::int64_t evaluations = 0;
};

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// at the current working precision and cached.
template <class Real>
const std::pair<std::vector<Real>, std::vector<Real>>& gauss_legendre(int order);

/// Adaptive quadrature of a complex-valued f on [a, b]. The panel with the
/// largest error estimate (fixed rule vs. its two halves) is bisected until
/// the summed estimate meets cfg.abs_tol, or the working-precision rounding
/// floor of the panel, whichever is larger. Hitting max_depth or max_panels
/// clears `converged`.
template <class Real, class F>
QuadResult<Real> quad(F&& f, const Real& a, const Real& b, const QuadratureConfig& cfg);

/// quad over [-1, 1]; with cfg.cos_substitution, x = cos(t) on [0, pi].
template <class Real, class F>
QuadResult<Real> quad_finite(F&& f, const QuadratureConfig& cfg);

/// int_{-1}^{1} sqrt(1-x^2) I1(4 pi sqrt((n+1/2)(1-x^2)) / (b k))
///     / tanh(pi i (6v+2)/(3k) - 2 pi x / (sqrt(3) b k)) dx
template <class Real>
QuadResult<Real> integral_I_final(const Real& b, std::int64_t k, std::int64_t v, std::int64_t n,
                                  const QuadratureConfig& cfg);

/// int_{-1}^{1} sqrt(1-x^2) I1(pi sqrt(5 (n+1/2)(1-x^2)) / (3k))
///     / tanh(pi i (v - 1/6)/k - sqrt(5) pi x / (6 sqrt(3) k)) dx
template <class Real>
QuadResult<Real> integral_J_final(std::int64_t k, std::int64_t v, std::int64_t n, const QuadratureConfig& cfg);

/// Half-width X of the truncated Mordell integrals: |exp(-6 pi z X^2 / k)|
/// equals tol / 10.
template <class Real>
Real mordell_cutoff(std::int64_t k, const Complex<Real>& z, double tol);

/// int_R exp(-6 pi z x^2 / k) / tanh(pi i (6v+2)/(3k) - 2 pi z x / k) dx
template <class Real>
QuadResult<Real> mordell_I(std::int64_t k, std::int64_t v, const Complex<Real>& z, const QuadratureConfig& cfg);

/// int_R exp(-6 pi z x^2 / k) / tanh(pi i (v - 1/6)/k - 2 pi z x / k) dx
template <class Real>
QuadResult<Real> mordell_J(std::int64_t k, std::int64_t v, const Complex<Real>& z, const QuadratureConfig& cfg);

}  // namespace pod2::analytic

// ---------------------------------------------------------------------------

namespace pod2::analytic {

template <class Real>
const std::pair<std::vector<Real>, std::vector<Real>>& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
    thread_local std::map<std::pair<int, unsigned>, std::pair<std::vector<Real>, std::vector<Real>>> cache;
    const auto key = std::make_pair(order, working_digits<Real>());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    using std::abs;
    using std::cos;
    std::vector<Real> nodes(static_cast<std::size_t>(order)), weights(static_cast<std::size_t>(order));
    const Real eps = machine_epsilon<Real>();
    for (int i = 0; i < (order + 1) / 2; ++i) {
        Real x = cos(pi<Real>() * (Real(i) + Real(0.75)) / (Real(order) + Real(0.5)));
        Real dp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Real p0 = 1, p1 = x;
            for (int j = 2; j <= order; ++j) {
                Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1);
            const Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) <= eps * 4) break;
        }
        // final derivative at the converged node
        Real p0 = 1, p1 = x;
        for (int j = 2; j <= order; ++j) {
            Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1);
        const Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(order - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(order - 1 - i)] = w;
    }
    if (order % 2 == 1) nodes[static_cast<std::size_t>(order / 2)] = 0;
    return cache.emplace(key, std::make_pair(std::move(nodes), std::move(weights))).first->second;
}

namespace detail {

template <class Real>
struct PanelSum {
    Complex<Real> value;
    Real l1 = 0;  // sum of |w f| * half-width, for the rounding floor
};

template <class Real, class F>
PanelSum<Real> gauss_panel(F& f, const Real& a, const Real& b, const std::vector<Real>& x,
                           const std::vector<Real>& w) {
    const Real half = (b - a) / 2;
    const Real mid = (a + b) / 2;
    PanelSum<Real> out;
    out.value = Complex<Real>{Real(0)};
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Complex<Real> fx = f(mid + half * x[i]);
        out.value += fx * w[i];
        out.l1 += abs(fx) * w[i];
    }
    out.value *= half;
    out.l1 *= half;
    return out;
}

template <class Real>
struct Panel {
    Real a, b;
    Complex<Real> value;  // refined (two-half) estimate
    Complex<Real> left, right;
    Real error;
    Real floor;
    int depth;
};

}  // namespace detail

template <class Real, class F>
QuadResult<Real> quad(F&& f, const Real& a, const Real& b, const QuadratureConfig& cfg) {
    using std::abs;
    if (!(cfg.abs_tol > 0)) throw std::invalid_argument("quadrature tolerance must be positive");
    if (cfg.max_depth < 1) throw std::invalid_argument("quadrature max_depth must be positive");
    const auto& rule = gauss_legendre<Real>(cfg.panel_order);
    const Real eps = machine_epsilon<Real>();
    QuadResult<Real> out;
    const auto evals_per_panel = static_cast<std::int64_t>(rule.first.size());

    auto make_panel = [&](const Real& lo, const Real& hi, const Complex<Real>& whole, int depth) {
        const Real mid = (lo + hi) / 2;
        const auto l = detail::gauss_panel<Real>(f, lo, mid, rule.first, rule.second);
        const auto r = detail::gauss_panel<Real>(f, mid, hi, rule.first, rule.second);
        out.evaluations += 2 * evals_per_panel;
        detail::Panel<Real> p{lo, hi, l.value + r.value, l.value, r.value, abs(l.value + r.value - whole),
                              Real(50) * eps * (l.l1 + r.l1), depth};
        return p;
    };

    auto cmp = [](const detail::Panel<Real>& x, const detail::Panel<Real>& y) {
        const Real ex = x.error - x.floor, ey = y.error - y.floor;
        if (ex != ey) return ex < ey;
        return x.a > y.a;
    };
    std::priority_queue<detail::Panel<Real>, std::vector<detail::Panel<Real>>, decltype(cmp)> heap(cmp);

    const auto whole = detail::gauss_panel<Real>(f, a, b, rule.first, rule.second);
    out.evaluations += evals_per_panel;
    heap.push(make_panel(a, b, whole.value, 0));
    Real total_error = heap.top().error;
    Real total_floor = heap.top().floor;
    std::vector<detail::Panel<Real>> done;
    bool exhausted = false;

    const Real tol = Real(cfg.abs_tol);
    while (!heap.empty()) {
        const Real budget = tol > total_floor ? tol : total_floor;
        if (total_error <= budget) break;
        if (static_cast<int>(heap.size() + done.size()) >= cfg.max_panels) {
            exhausted = true;
            break;
        }
        detail::Panel<Real> p = heap.top();
        if (p.error <= p.floor) break;  // everything left sits at the rounding floor
        heap.pop();
        if (p.depth >= cfg.max_depth) {
            exhausted = true;
            done.push_back(p);
            continue;
        }
        const Real mid = (p.a + p.b) / 2;
        auto l = make_panel(p.a, mid, p.left, p.depth + 1);
        auto r = make_panel(mid, p.b, p.right, p.depth + 1);
        total_error += l.error + r.error - p.error;
        total_floor += l.floor + r.floor - p.floor;
        heap.push(std::move(l));
        heap.push(std::move(r));
    }
    // Sum in order of position for a deterministic result.
    while (!heap.empty()) {
        done.push_back(heap.top());
        heap.pop();
    }
    std::sort(done.begin(), done.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    out.value = Complex<Real>{Real(0)};
    out.error = 0;
    Real floor_sum = 0;
    for (const auto& p : done) {
        out.value += p.value;
        out.error += p.error;
        floor_sum += p.floor;
    }
    out.panels = static_cast<int>(done.size());
    const Real budget = tol > floor_sum ? tol : floor_sum;
    out.converged = !exhausted && out.error <= budget;
    if (!is_finite(out.value)) out.converged = false;
    return out;
}

template <class Real, class F>
QuadResult<Real> quad_finite(F&& f, const QuadratureConfig& cfg) {
    if (cfg.cos_substitution) {
        auto g = [&f](const Real& t) {
            using std::cos;
            using std::sin;
            return f(Real(cos(t))) * Real(sin(t));
        };
        return quad<Real>(g, Real(0), pi<Real>(), cfg);
    }
    return quad<Real>(f, Real(-1), Real(1), cfg);
}

}  // namespace pod2::analytic
