#include "muqm/deformed.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>

#include "muqm/detail/double_double.hpp"
#include "muqm/errors.hpp"

namespace muqm {

namespace {

// Largest |z| evaluated in double-double. Beyond it the peak series term is
// so much larger than the sum that even 106 bits start to erode, so the
// kernel switches to a software quad float.
constexpr double kDoubleDoubleLimit = 32.0;

using QuadFloat = boost::multiprecision::cpp_bin_float_quad;

double as_double(const detail::DD& x) { return x.hi; }
double as_double(const QuadFloat& x) { return static_cast<double>(x); }

void validate(const SeriesSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !(spec.rel_tol < 1.0))
        throw std::invalid_argument("SeriesSpec.rel_tol must lie in (0, 1)");
    if (spec.max_terms < 16)
        throw std::invalid_argument("SeriesSpec.max_terms must be at least 16");
}

// One shared kernel; T is the working scalar. Terms follow the recurrence
// t_n = t_{n-1} * z / (n + 2*mu*theta(n)), and the sum stops after three
// consecutive terms with |t_n| < rel_tol * (|sum| + 1).
template <class T>
std::complex<double> exp_series_impl(double mu, std::complex<double> z,
                                     const SeriesSpec& spec) {
    const T zre(z.real());
    const T zim(z.imag());
    T sum_re(1.0), sum_im(0.0);   // n = 0 term
    T term_re(1.0), term_im(0.0);
    int quiet = 0;
    for (int n = 1; n <= spec.max_terms; ++n) {
        T d = T(static_cast<double>(n)) + T((n & 1) ? 2.0 * mu : 0.0);
        T re = term_re * zre - term_im * zim;
        T im = term_re * zim + term_im * zre;
        term_re = re / d;
        term_im = im / d;
        sum_re = sum_re + term_re;
        sum_im = sum_im + term_im;

        double tmag = std::hypot(as_double(term_re), as_double(term_im));
        double smag = std::hypot(as_double(sum_re), as_double(sum_im));
        if (tmag < spec.rel_tol * (smag + 1.0)) {
            if (++quiet == 3)
                return {as_double(sum_re), as_double(sum_im)};
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("exp_mu_series: no convergence within max_terms terms");
}

}  // namespace

MuParam::MuParam(double value) : value_(value) {
    if (!std::isfinite(value) || !(value > -0.5))
        throw std::domain_error("mu must exceed -1/2");
}

int theta(int n) {
    if (n < 0) throw std::domain_error("theta: n must be non-negative");
    return n & 1;
}

double gamma_mu(MuParam mu, int n) {
    if (n < 0) throw std::domain_error("gamma_mu: n must be non-negative");
    const double two_mu = 2.0 * mu.value();
    double g = 1.0;
    for (int k = 1; k <= n; ++k)
        g *= (k & 1) ? static_cast<double>(k) + two_mu : static_cast<double>(k);
    if (!std::isfinite(g))
        throw std::overflow_error("gamma_mu: result exceeds double range, use log_gamma_mu");
    return g;
}

double log_gamma_mu(MuParam mu, int n) {
    if (n < 0) throw std::domain_error("log_gamma_mu: n must be non-negative");
    const double two_mu = 2.0 * mu.value();
    double acc = 0.0;
    for (int k = 1; k <= n; ++k)
        acc += std::log((k & 1) ? static_cast<double>(k) + two_mu : static_cast<double>(k));
    return acc;
}

std::complex<double> exp_mu_series(MuParam mu, std::complex<double> z,
                                   const SeriesSpec& spec) {
    validate(spec);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("exp_mu_series: z must be finite");
    if (std::abs(z) <= kDoubleDoubleLimit)
        return exp_series_impl<detail::DD>(mu.value(), z, spec);
    return exp_series_impl<QuadFloat>(mu.value(), z, spec);
}

double phi(MuParam mu, double x, const SeriesSpec& spec) {
    return std::norm(exp_mu_series(mu, {0.0, x}, spec));
}

}  // namespace muqm
