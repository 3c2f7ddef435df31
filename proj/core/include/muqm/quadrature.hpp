#pragma once

#include <string>
#include <vector>

#include "muqm/deformed.hpp"
#include "muqm/interval_set.hpp"

// The deformed measure dm_mu(x) = |x|^(2mu) dx / (2^(mu+1/2) Gamma(mu+1/2))
// and the trace of a product of spectral projections,
//
//   trace(mu, A, B) = int_A dm_mu(x) int_B dm_mu(k) |exp_mu(ikx)|^2,
//
// valid when 0 lies outside the closure of A. At mu = 0 the integrand is 1
// and the trace factorizes into m_0(A) m_0(B); for mu != 0 the comparison of
// the trace against that product is the quantity of interest.

namespace muqm {

/// Adaptive tensor-quadrature controls.
struct QuadratureSpec {
    double rel_tol = 1e-8;    // in (0, 1)
    double abs_tol = 1e-12;   // >= 0
    int max_depth = 30;       // per-panel bisection limit, >= 1
    int nodes_per_panel = 15; // Gauss-Legendre points per axis, >= 2
};

enum class Verdict {
    GREATER,           // trace - product >  10 * err_estimate
    EQUAL_WITHIN_TOL,  // |trace - product| <= 10 * err_estimate and mu == 0
    LESS,              // product - trace >  10 * err_estimate
    INDETERMINATE,     // |trace - product| <= 10 * err_estimate, mu != 0
};

std::string_view to_string(Verdict v);

struct TraceReport {
    MuParam mu;
    IntervalSet set_a;
    IntervalSet set_b;
    double trace = 0.0;
    double err_estimate = 0.0;
    double measure_a = 0.0;
    double measure_b = 0.0;
    double product = 0.0;  // measure_a * measure_b
    Verdict verdict = Verdict::INDETERMINATE;
    bool converged = false;
    std::string error;  // set on sweep entries that failed outright
};

/// m_mu of a finite union of intervals, by the closed-form antiderivative
/// sign(x) |x|^(2mu+1) / ((2mu+1) 2^(mu+1/2) Gamma(mu+1/2)). Empty set -> 0.
/// Scales as measure(c*A) = c^(2mu+1) * measure(A) for c > 0.
double measure_mu(MuParam mu, const IntervalSet& set);

/// Evaluates the trace integral adaptively and compares it against
/// measure_a * measure_b. Throws std::domain_error when 0 lies in the
/// closure of set_a. Non-convergence at max_depth is not an error: the
/// report carries the best estimate with verdict INDETERMINATE and
/// converged = false.
TraceReport trace_integral(MuParam mu, const IntervalSet& set_a,
                           const IntervalSet& set_b,
                           const QuadratureSpec& spec = {});

/// trace_integral over a list of mu values against fixed sets. A failure for
/// one mu is recorded in that report's error field and the sweep continues.
std::vector<TraceReport> sweep_mu(const std::vector<MuParam>& mu_values,
                                  const IntervalSet& set_a,
                                  const IntervalSet& set_b,
                                  const QuadratureSpec& spec = {});

}  // namespace muqm
