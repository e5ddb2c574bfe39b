#pragma once

// Numerical checks of the modular transformation laws of P, zeta1, zeta2 and
// the mock theta function omega. Each check returns |LHS - RHS| with
// q = e^{2 pi i (h + i z)/k} on the left and q1 = e^{2 pi i (h' + i/z)/k} on
// the right.

#include "pod2/analytic.hpp"
#include "pod2/modular.hpp"

#include <cstdint>

namespace pod2::transforms {

using Cplx = Complex<double>;

/// P(q) against omega_{h,k} z^{1/2} e^{pi (1/z - z)/(12k)} P(q1).
double transform_check_P(std::int64_t h, std::int64_t k, const Cplx& z);

enum class Zeta { one = 1, two = 2 };

/// zeta1 or zeta2 at q against the right-hand side for the gcd class of k.
/// `cls` must equal gcd(k, 6).
double transform_check_zeta(modular::GcdClass cls, Zeta variant, std::int64_t h, std::int64_t k, const Cplx& z);

/// omega(q) for even k: the omega(q1) term plus the sum of I-type Mordell
/// integrals over v mod k/2.
double transform_check_omega_even(std::int64_t h, std::int64_t k, const Cplx& z,
                                  const analytic::QuadratureConfig& cfg = {});

/// omega(q) for odd k: the f(q1^{1/2}) term plus the sum of J-type Mordell
/// integrals over v mod k.
double transform_check_omega_odd(std::int64_t h, std::int64_t k, const Cplx& z,
                                 const analytic::QuadratureConfig& cfg = {});

/// Third order mock theta functions summed numerically from their
/// q-hypergeometric definitions; |t| < 1.
Cplx omega_mock_value(const Cplx& t);
Cplx f_mock_value(const Cplx& t);

}  // namespace pod2::transforms
