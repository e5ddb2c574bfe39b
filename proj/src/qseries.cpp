#include "pod2/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pod2::qseries {

IntSeries::IntSeries(std::size_t order) : coeffs_(order + 1) {}

IntSeries::IntSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("IntSeries needs at least one coefficient");
}

IntSeries::IntSeries(std::initializer_list<long long> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) {
    if (coeffs_.empty()) throw std::invalid_argument("IntSeries needs at least one coefficient");
}

IntSeries IntSeries::truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("truncation cannot extend a series");
    return IntSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
    IntSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
    IntSeries out(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= out.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    IntSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

IntSeries operator*(const BigInt& s, const IntSeries& a) {
    IntSeries out = a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

IntSeries series_mul(const IntSeries& a, const IntSeries& b) { return a * b; }

IntSeries series_inv(const IntSeries& a) {
    const BigInt& c0 = a[0];
    if (c0 != 1 && c0 != -1) throw std::invalid_argument("series_inv: constant term must be +1 or -1");
    std::vector<BigInt> inv(a.order() + 1);
    inv[0] = c0;  // 1/c0 == c0 for c0 = +-1
    for (std::size_t i = 1; i <= a.order(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += a[j] * inv[i - j];
        inv[i] = -acc * c0;
    }
    return IntSeries(std::move(inv));
}

IntSeries divide_exact(const IntSeries& a, const BigInt& divisor) {
    if (divisor == 0) throw std::invalid_argument("divide_exact: zero divisor");
    std::vector<BigInt> out(a.order() + 1);
    for (std::size_t i = 0; i <= a.order(); ++i) {
        BigInt q, r;
        boost::multiprecision::divide_qr(a[i], divisor, q, r);
        if (r != 0) {
            throw std::logic_error("divide_exact: coefficient " + std::to_string(i) + " = " + a[i].str() +
                                   " is not divisible by " + divisor.str());
        }
        out[i] = std::move(q);
    }
    return IntSeries(std::move(out));
}

namespace {

// In-place multiply by (1 - q^a), a >= 1.
void times_one_minus(std::vector<BigInt>& c, std::size_t a) {
    for (std::size_t i = c.size(); i-- > a;) c[i] -= c[i - a];
}

// In-place divide by (1 - q^a).
void over_one_minus(std::vector<BigInt>& c, std::size_t a) {
    for (std::size_t i = a; i < c.size(); ++i) c[i] += c[i - a];
}

// In-place divide by (1 + q^a).
void over_one_plus(std::vector<BigInt>& c, std::size_t a) {
    for (std::size_t i = a; i < c.size(); ++i) c[i] -= c[i - a];
}

// In-place divide by (1 + q^a + q^{2a}).
void over_one_plus_plus(std::vector<BigInt>& c, std::size_t a) {
    for (std::size_t i = a; i < c.size(); ++i) {
        c[i] -= c[i - a];
        if (i >= 2 * a) c[i] -= c[i - 2 * a];
    }
}

// Adds q^offset * (term) into acc, where term has order acc.order() - offset.
void add_shifted(std::vector<BigInt>& acc, const std::vector<BigInt>& term, std::size_t offset) {
    for (std::size_t i = 0; i < term.size() && offset + i < acc.size(); ++i) acc[offset + i] += term[i];
}

std::vector<BigInt> unit_prefix(std::size_t len) {
    std::vector<BigInt> c(len);
    c[0] = 1;
    return c;
}

}  // namespace

IntSeries pochhammer_series(unsigned step, std::size_t order) {
    if (step == 0) throw std::invalid_argument("pochhammer_series: step must be positive");
    auto c = unit_prefix(order + 1);
    for (std::size_t a = step; a <= order; a += step) times_one_minus(c, a);
    return IntSeries(std::move(c));
}

IntSeries partition_series(unsigned step, std::size_t order) {
    if (step == 0) throw std::invalid_argument("partition_series: step must be positive");
    auto c = unit_prefix(order + 1);
    for (std::size_t a = step; a <= order; a += step) over_one_minus(c, a);
    return IntSeries(std::move(c));
}

IntSeries rho_series(std::size_t order) {
    // sum_n q^{2n(n+1)} / prod_{j=0}^{n} (1 + q^{2j+1} + q^{4j+2})
    std::vector<BigInt> acc(order + 1);
    for (std::size_t n = 0;; ++n) {
        const std::size_t offset = 2 * n * (n + 1);
        if (offset > order) break;
        auto term = unit_prefix(order - offset + 1);
        for (std::size_t j = 0; j <= n; ++j) over_one_plus_plus(term, 2 * j + 1);
        add_shifted(acc, term, offset);
    }
    return IntSeries(std::move(acc));
}

IntSeries omega_mock_series(std::size_t order) {
    // sum_n q^{2n(n+1)} / (q; q^2)_{n+1}^2
    std::vector<BigInt> acc(order + 1);
    for (std::size_t n = 0;; ++n) {
        const std::size_t offset = 2 * n * (n + 1);
        if (offset > order) break;
        auto term = unit_prefix(order - offset + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            over_one_minus(term, 2 * j + 1);
            over_one_minus(term, 2 * j + 1);
        }
        add_shifted(acc, term, offset);
    }
    return IntSeries(std::move(acc));
}

IntSeries f_mock_series(std::size_t order) {
    // sum_n q^{n^2} / (-q; q)_n^2
    std::vector<BigInt> acc(order + 1);
    for (std::size_t n = 0;; ++n) {
        const std::size_t offset = n * n;
        if (offset > order) break;
        auto term = unit_prefix(order - offset + 1);
        for (std::size_t j = 1; j <= n; ++j) {
            over_one_plus(term, j);
            over_one_plus(term, j);
        }
        add_shifted(acc, term, offset);
    }
    return IntSeries(std::move(acc));
}

IntSeries zeta1_series(std::size_t order) {
    return pochhammer_series(3, order) * partition_series(6, order) * partition_series(1, order);
}

IntSeries zeta2_series(std::size_t order) {
    const IntSeries e6 = pochhammer_series(6, order);
    return e6 * e6 * e6 * partition_series(3, order) * partition_series(2, order) * partition_series(1, order);
}

IntSeries rho_omega_theta_side(std::size_t order) {
    // (q^3; q^6)_inf = (q^3; q^3)_inf / (q^6; q^6)_inf
    const IntSeries e6 = pochhammer_series(6, order);
    const IntSeries odd3 = pochhammer_series(3, order) * partition_series(6, order);
    const IntSeries odd3_sq_inv = series_inv(odd3 * odd3);
    return BigInt(3) * (e6 * e6 * odd3_sq_inv * partition_series(2, order));
}

IntSeries pod2_series_identity(std::size_t order) { return zeta1_series(order) * rho_series(order); }

IntSeries pod2_series_decomposition(std::size_t order) {
    const IntSeries twice = BigInt(3) * zeta2_series(order) - zeta1_series(order) * omega_mock_series(order);
    return divide_exact(twice, 2);
}

std::vector<BigInt> pod2_count_table(std::size_t order) {
    // ways[m] = partitions of m into parts <= p with odd parts used at most
    // twice, after parts 1..p have been admitted. Every even p is then tried
    // as the largest part: the rest is a partition of n - p into parts <= p.
    std::vector<BigInt> ways(order + 1);
    ways[0] = 1;
    std::vector<BigInt> total(order + 1);
    total[0] = 1;
    for (std::size_t p = 1; p <= order; ++p) {
        if (p % 2 == 1) {
            for (std::size_t m = order; m >= p; --m) {
                ways[m] += ways[m - p];
                if (m >= 2 * p) ways[m] += ways[m - 2 * p];
            }
        } else {
            for (std::size_t m = p; m <= order; ++m) ways[m] += ways[m - p];
            for (std::size_t m = 0; m + p <= order; ++m) total[m + p] += ways[m];
        }
    }
    return total;
}

BigInt pod2_count_oracle(std::size_t n) { return pod2_count_table(n)[n]; }

std::vector<BigInt> partition_count_table(std::size_t order) {
    std::vector<BigInt> ways(order + 1);
    ways[0] = 1;
    for (std::size_t p = 1; p <= order; ++p) {
        for (std::size_t m = p; m <= order; ++m) ways[m] += ways[m - p];
    }
    return ways;
}

Complex<double> eval_product_num(double step, const Complex<double>& t, double tol) {
    if (!(step > 0)) throw std::invalid_argument("eval_product_num: step must be positive");
    if (!(abs(t) < 1.0)) throw std::domain_error("eval_product_num: |t| must be < 1");
    if (t.re == 0.0 && t.im == 0.0) return {1.0};
    const Complex<double> base = pow(t, step);
    const double modulus = abs(base);
    if (!(modulus < 1.0)) throw std::domain_error("eval_product_num: |t^r| must be < 1");
    Complex<double> power = base;
    Complex<double> product{1.0};
    double power_modulus = modulus;
    while (power_modulus / (1.0 - modulus) > tol) {
        product *= Complex<double>{1.0} - power;
        power *= base;
        power_modulus *= modulus;
    }
    return Complex<double>{1.0} / product;
}

}  // namespace pod2::qseries
