#pragma once

#include <functional>
#include <stdexcept>

namespace pompeiu {

/// Thrown when adaptive refinement hits its depth limit.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Composite 16-point Gauss-Legendre rule with nseg equal segments.
double gauss_legendre(const std::function<double(double)>& f, double a, double b, int nseg = 1);

/// Adaptive Simpson with an absolute tolerance; throws QuadratureError when
/// the recursion exceeds max_depth.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 48);

}  // namespace pompeiu
