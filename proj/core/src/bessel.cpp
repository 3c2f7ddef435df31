#include "muqm/bessel.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "muqm/detail/double_double.hpp"
#include "muqm/errors.hpp"

namespace muqm {

namespace {

constexpr double kDoubleDoubleLimit = 32.0;
constexpr int kMaxBesselTerms = 500;

using QuadFloat = boost::multiprecision::cpp_bin_float_quad;

double as_double(const detail::DD& x) { return x.hi; }
double as_double(const QuadFloat& x) { return static_cast<double>(x); }

// S_nu(x) = J_nu(x) / (x/2)^nu = sum_m (-1)^m (x^2/4)^m / (m! Gamma(nu+m+1)),
// entire in x with S_nu(0) = 1/Gamma(nu+1). The 1/Gamma(nu+1) seed is a
// common factor of every term, so evaluating it in double costs only a
// uniform 1-ulp scale, not cancellation.
template <class T>
double regularized_series_impl(double nu, double x) {
    const T q = T(x) * T(x) / T(4.0);
    T term(1.0 / gamma_fn(nu + 1.0));
    T sum = term;
    for (int m = 1; m <= kMaxBesselTerms; ++m) {
        T d = (T(nu) + T(static_cast<double>(m))) * T(static_cast<double>(m));
        term = -(term * q) / d;
        sum = sum + term;
        double tmag = std::fabs(as_double(term));
        if (tmag == 0.0 || tmag < 1e-17 * std::fabs(as_double(sum)))
            return as_double(sum);
    }
    throw ConvergenceError("bessel series: no convergence within 500 terms");
}

double regularized_series(double nu, double x) {
    return std::fabs(x) <= kDoubleDoubleLimit
               ? regularized_series_impl<detail::DD>(nu, x)
               : regularized_series_impl<QuadFloat>(nu, x);
}

}  // namespace

BesselOrder::BesselOrder(double nu) : nu_(nu) {
    if (!std::isfinite(nu) || !(nu > -1.0))
        throw std::domain_error("bessel order must exceed -1");
}

double gamma_fn(double x) {
    if (!(x > 0.0))
        throw std::domain_error("gamma_fn: requires x > 0");
    constexpr double kG = 7.0;
    constexpr double kCoef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double pi = std::numbers::pi;
    if (x < 0.5)  // reflection keeps the Lanczos sum on x >= 0.5
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    double xx = x - 1.0;
    double a = kCoef[0];
    for (int i = 1; i < 9; ++i) a += kCoef[i] / (xx + i);
    double t = xx + kG + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, xx + 0.5) * std::exp(-t) * a;
}

double bessel_j(BesselOrder nu, double x) {
    if (!(x > 0.0))
        throw std::domain_error("bessel_j: requires x > 0");
    return std::pow(0.5 * x, nu.value()) * regularized_series(nu.value(), x);
}

std::complex<double> exp_mu_bessel(MuParam mu, double x) {
    if (x == 0.0)
        throw std::domain_error("exp_mu_bessel: x must be nonzero (exp_mu(0) = 1)");
    if (!std::isfinite(x))
        throw std::domain_error("exp_mu_bessel: x must be finite");
    const double ax = std::fabs(x);
    const double g = gamma_fn(mu.value() + 0.5);
    const double re = g * regularized_series(mu.value() - 0.5, ax);
    const double im = g * 0.5 * ax * regularized_series(mu.value() + 0.5, ax);
    return x > 0.0 ? std::complex<double>{re, im} : std::complex<double>{re, -im};
}

double phi_bessel(MuParam mu, double x) {
    if (!std::isfinite(x))
        throw std::domain_error("phi_bessel: x must be finite");
    const double ax = std::fabs(x);
    const double g = gamma_fn(mu.value() + 0.5);
    const double sa = g * regularized_series(mu.value() - 0.5, ax);
    const double sb = g * 0.5 * ax * regularized_series(mu.value() + 0.5, ax);
    return sa * sa + sb * sb;
}

double phi_derivative(MuParam mu, double x) {
    if (!(x > 0.0))
        throw std::domain_error("phi_derivative: requires x > 0");
    const double gs = gamma_fn(mu.value() + 0.5) * regularized_series(mu.value() + 0.5, x);
    return -mu.value() * x * gs * gs;
}

}  // namespace muqm
