#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pompeiu/foliation.hpp"

namespace pompeiu {

/// Weight (1-x)^alpha (1+x)^beta on (-1, 1).
struct JacobiWeight {
    double alpha = 0.0;
    double beta = 0.0;

    /// Total mass 2^{alpha+beta+1} B(alpha+1, beta+1).
    double mu0() const;
    double operator()(double x) const;
};

/// The weight that makes the radial problem of a foliation self-adjoint:
/// alpha = (n-1)/(2g) - c/(2g^2) - 1/2 = (m0-1)/2, beta likewise (m1-1)/2.
JacobiWeight radial_weight(const FoliationSpec& spec);

/// Moments mu_m = int x^m w(x) dx for m = 0..mmax, by the stable three-term
/// recursion obtained from d/dx [x^m (1-x^2) w] having zero integral.
std::vector<double> weight_moments(const JacobiWeight& w, int mmax);

struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
};

/// Gauss rule for the Jacobi weight via Golub-Welsch: eigen-decomposition of
/// the symmetric tridiagonal matrix built from the monic recurrence
/// coefficients, exact for polynomials of degree <= 2 npoints - 1.
QuadratureRule gauss_jacobi(const JacobiWeight& w, int npoints);

}  // namespace pompeiu
