#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "pompeiu/foliation.hpp"
#include "pompeiu/jacobi_weight.hpp"

namespace pompeiu {

/// Thrown by solve_radial_spectrum when residuals stay above tolerance at
/// basis sizes N and 2N; the message carries both residuals.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The radial spectrum in closed form: [g k (g k + n - 1) for k = 0..kmax].
std::vector<double> closed_form_spectrum(const FoliationSpec& spec, int kmax);

/// Radial eigenvalue with its eigenfunction psi(t) = y(cos(g t)).
/// y solves (1-x^2) y'' + (c/g^2 - ((n-1)/g + 1) x) y' + (lambda/g^2) y = 0,
/// bounded at x = +-1, normalized so that int w y^2 = 1 for the weight of
/// radial_weight().  Evaluation goes through basis_coeffs, the expansion in
/// the orthonormal polynomial family of that weight, which stays accurate at
/// high degree where the monomial form cancels badly.
struct RadialEigenpair {
    int k = 0;
    double lambda = 0.0;
    Eigen::VectorXd coeffs;        ///< monomial coefficients a_0..a_k of y
    Eigen::VectorXd basis_coeffs;  ///< expansion in the (unnormalized) Jacobi family
    double alpha = 0.0;            ///< weight exponents the basis belongs to
    double beta = 0.0;

    double y(double x) const;
    double dy(double x) const;
    double d2y(double x) const;
    double psi(double t, int g) const;

    /// Residual of the Sturm-Liouville equation at x for given spec data.
    double equation_residual(const FoliationSpec& spec, double x) const;
};

/// Basis size and worst grid residual of the accepted solve, for reports.
struct SolverInfo {
    int basis_degree = 0;
    double max_residual = 0.0;
    double residual_tolerance = 1e-8;
};

/// Lowest kmax+1 eigenpairs by a Galerkin discretization in the orthonormal
/// Jacobi basis of the radial weight, degree N >= kmax + 32: stiffness and
/// mass matrices are assembled with Gauss-Jacobi rules that are exact for the
/// polynomial integrands, and the generalized symmetric-definite eigenproblem
/// is solved densely.  Boundedness at the endpoints is built into the
/// polynomial ansatz.  Eigenvalues must be simple (pairwise gaps >
/// 1e-6 lambda) and each eigenpair is residual-checked on a 64-point grid; on
/// failure the solve is repeated at 2N before throwing ConvergenceError.
std::vector<RadialEigenpair> solve_radial_spectrum(const FoliationSpec& spec, int kmax,
                                                  SolverInfo* info = nullptr);

/// Degree-k solution of the c = 0 power-series recurrence
/// a_{j+2} = [j (j + (n-1)/g) - lambda/g^2] / ((j+2)(j+1)) a_j, seeded by the
/// parity of k.  Throws std::invalid_argument when c != 0.
std::vector<double> recurrence_polynomial(const FoliationSpec& spec, int k);

/// Degree-k polynomial orthogonal to all lower degrees under the radial
/// weight, built by Gram-Schmidt against exact weight moments; any c.
std::vector<double> gram_polynomial(const FoliationSpec& spec, int k);

/// Values of the (unnormalized) Jacobi family P_0..P_N for weight exponents
/// (a, b) at x, by the three-term recurrence.
void jacobi_values(double a, double b, int N, double x, std::vector<double>& out);

/// L^2(w) norms sqrt(h_k) of the Jacobi family, k = 0..N.
std::vector<double> jacobi_norms(double a, double b, int N);

}  // namespace pompeiu
