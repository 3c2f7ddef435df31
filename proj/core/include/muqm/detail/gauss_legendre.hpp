#pragma once

#include <vector>

namespace muqm::detail {

/// Gauss-Legendre rule on (-1, 1).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights for an n-point rule, n >= 2, by Newton iteration on the
/// Legendre recurrence. Exact (to roundoff) for polynomials of degree
/// 2n - 1.
GaussRule gauss_legendre(int n);

}  // namespace muqm::detail
