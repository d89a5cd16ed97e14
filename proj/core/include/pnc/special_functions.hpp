#pragma once

namespace pnc {

/// Standard normal tail probability Q(x).
double gaussian_q(double x);

/// Modified Bessel function I_0. Power series below 20, asymptotic above.
double bessel_i0(double x);
/// e^{-|x|} I_0(x), finite for all x.
double bessel_i0_scaled(double x);

/// First-order Marcum Q function Q_1(a, b) for a, b >= 0, evaluated as a
/// Poisson mixture:
///   Q_1(a, b) = sum_n Pois(n; a^2/2) P[Pois(b^2/2) <= n].
/// Every term is non-negative, so small tails keep their relative accuracy.
double marcum_q1(double a, double b);

}  // namespace pnc
