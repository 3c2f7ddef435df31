#pragma once

#include <stdexcept>

namespace muqm {

/// Thrown when an iterative summation exhausts its term budget before the
/// stopping rule is satisfied.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace muqm
