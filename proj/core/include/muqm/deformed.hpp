#pragma once

#include <complex>

// mu-deformed factorial, exponential and the modulus-squared profile
// phi(x) = |exp_mu(ix)|^2. The deformation parameter mu must stay strictly
// above -1/2 so that every recursion factor n + 2*mu*theta(n) is positive.

namespace muqm {

/// Deformation parameter, constrained to (-1/2, inf).
class MuParam {
public:
    explicit MuParam(double value);
    double value() const { return value_; }

private:
    double value_;
};

/// Truncation control for power-series evaluation.
///
/// A series stops once three consecutive terms have magnitude below
/// rel_tol * (|partial sum| + 1); it fails with ConvergenceError if that
/// never happens within max_terms terms.
struct SeriesSpec {
    double rel_tol = 1e-15;  // must lie in (0, 1)
    int max_terms = 10000;   // must be >= 16
};

/// Indicator of the odd integers: theta(n) = 1 for odd n, 0 for even n.
int theta(int n);

/// Deformed factorial gamma_mu(n) = prod_{k=1..n} (k + 2*mu*theta(k)),
/// gamma_mu(0) = 1. Reduces to n! at mu = 0. Throws std::overflow_error once
/// the product leaves double range; use log_gamma_mu for large n.
double gamma_mu(MuParam mu, int n);

/// log of gamma_mu(n), accumulated directly as sum of logs so it stays
/// representable long after gamma_mu overflows.
double log_gamma_mu(MuParam mu, int n);

/// Entire deformed exponential exp_mu(z) = sum_n z^n / gamma_mu(n).
/// Equals exp(z) at mu = 0. Accuracy is guaranteed for |z| <= 50; larger
/// arguments are evaluated on a best-effort basis.
std::complex<double> exp_mu_series(MuParam mu, std::complex<double> z,
                                   const SeriesSpec& spec = {});

/// phi(x) = |exp_mu(ix)|^2, evaluated through the series. phi is even,
/// phi(0) = 1, and for x != 0 it is identically 1 iff mu = 0, below 1 for
/// mu > 0, above 1 for -1/2 < mu < 0.
double phi(MuParam mu, double x, const SeriesSpec& spec = {});

}  // namespace muqm
