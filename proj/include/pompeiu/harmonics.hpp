#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "pompeiu/foliation.hpp"
#include "pompeiu/multipoly.hpp"
#include "pompeiu/rng.hpp"

namespace pompeiu {

/// Riemannian volume of the unit sphere S^n: 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_volume(int n);

/// Exact moment int_{S^n} x^a dS: zero if any exponent is odd, otherwise
/// 2 Gamma(b_1)...Gamma(b_{n+1}) / Gamma(b_1+...+b_{n+1}) with b_i = (a_i+1)/2.
double sphere_moment(int n, std::span<const int> exps);

/// Dimension of the space of degree-l spherical harmonics on S^n.
int harmonic_dimension(int n, int ell);

/// Orthonormal basis of the degree-l Laplace eigenspace, represented by
/// homogeneous harmonic polynomials on R^{n+1}.
struct EigenBasis {
    int n = 0;
    int degree = 0;
    int multiplicity = 0;
    std::vector<MultiPoly> basis;
    double eigenvalue() const { return static_cast<double>(degree) * (degree + n - 1); }
};

/// Kernel of the formal Laplacian on degree-l monomials, orthonormalized
/// against exact monomial sphere moments.  order selects the orthogonalization
/// order (0 is canonical; other values permute the kernel vectors first, used
/// to exercise basis independence).  Supported for 2 <= n <= 4, 0 <= l <= 8.
EigenBasis harmonic_basis(int n, int ell, int order = 0);

/// Coefficient-table export, one polynomial block per basis element (the same
/// text format the Cartan polynomials use).
void write_basis(std::ostream& os, const EigenBasis& basis);
EigenBasis read_basis(std::istream& is);

/// Leaf averages of f by binning uniform sphere samples by their distance to
/// the focal set, num_bins equal-width bins over [0, D].
struct RadialProfile {
    std::vector<double> centers;
    std::vector<double> means;
    std::vector<double> std_errors;
    std::vector<int> counts;
};

RadialProfile radialize(const std::function<double(std::span<const double>)>& f,
                        const FoliationSpec& spec, const MultiPoly& cartan, int num_samples,
                        int num_bins, std::uint64_t seed);

/// Residuals of the addition-formula identities for phi(x) = sqrt(|M|/m) A(x,y):
///   value_at_y      |phi(y) - sqrt(m/|M|)|
///   zonal           spread of phi over points sharing <x,y>
///   basis_change    max |A - A'| over sample points for a reordered basis
///   radialization   binned leaf averages of phi about y vs phi itself
struct AdditionReport {
    double value_at_y = 0.0;
    double zonal = 0.0;
    double basis_change = 0.0;
    double radialization = 0.0;
};

AdditionReport addition_formula_check(int n, int ell, std::span<const double> y,
                                      std::span<const std::vector<double>> sample_points,
                                      std::uint64_t seed = kDefaultSeed);

}  // namespace pompeiu
