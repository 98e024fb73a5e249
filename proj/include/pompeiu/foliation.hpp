#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "pompeiu/multipoly.hpp"
#include "pompeiu/rng.hpp"

namespace pompeiu {

/// Parameters of an isoparametric foliation of the round sphere S^n:
/// g distinct principal curvatures with multiplicities (m0, m1) alternating
/// along a normal geodesic, subject to n - 1 = g (m0 + m1) / 2.
struct FoliationSpec {
    int n = 0;   ///< ambient sphere dimension
    int g = 0;   ///< number of distinct principal curvatures, in {1,2,3,4,6}
    int m0 = 0;  ///< multiplicity at the focal set M+
    int m1 = 0;  ///< multiplicity at the focal set M-
    double c = 0.0;        ///< (m1 - m0) g^2 / 2
    double diameter = 0.0; ///< pi / g, the distance between the two focal sets
};

/// Validates (n, g, m0, m1) and fills in c and the diameter.
/// Throws std::invalid_argument on g outside {1,2,3,4,6}, non-positive
/// multiplicities, or n - 1 != g (m0 + m1) / 2.
FoliationSpec make_foliation(int n, int g, int m0, int m1);

/// Flat key-value serialization {n, g, m0, m1}; c and D are recomputed on load.
void write_spec(std::ostream& os, const FoliationSpec& spec);
FoliationSpec read_spec(std::istream& is);

/// Degree-g homogeneous polynomial on R^{n+1} with
///   lap p = -c |x|^{g-2},  |grad p|^2 = g^2 |x|^{2g-2}.
/// Supported for g in {1, 2, 3}; throws std::invalid_argument for g = 4, 6
/// (no explicit polynomial is wired in).  For g = 2 the quadric uses
/// l = m0 + 1 plus-signs so the focal set has the required codimension.
MultiPoly cartan_polynomial(const FoliationSpec& spec);

struct CartanValidation {
    double max_laplacian_residual = 0.0;
    double max_gradient_residual = 0.0;
    int num_samples = 0;
    double tol = 0.0;
    bool pass = false;
};

/// Checks both defining identities at points sampled uniformly in the unit
/// ball; derivatives are formal, so residuals measure the polynomial itself.
CartanValidation validate_cartan(const MultiPoly& p, const FoliationSpec& spec,
                                 int num_samples, double tol,
                                 std::uint64_t seed = kDefaultSeed);

/// Distance to the focal set M+ = {p = 1}: rho = arccos(p(x)) / g for unit x.
/// Throws std::domain_error when |p(x)| > 1 + 1e-9; values within 1e-12 of
/// +-1 are clamped.
double rho_from_point(const MultiPoly& p, const FoliationSpec& spec,
                      std::span<const double> x);

/// Mean curvature of the leaf at distance t from M+ (equals the Laplacian of
/// rho there): -(n-1) cot(g t) + c / (g sin(g t)).  Throws std::domain_error
/// at the singular endpoints t = 0 and t = D.
double mean_curvature(const FoliationSpec& spec, double t);

/// Density of the volume form in normal coordinates around M+, stored as a
/// probability density on (0, D) so that cumulative(t) is the volume fraction
/// of the tube of radius t.
class DensityProfile {
public:
    explicit DensityProfile(const FoliationSpec& spec);

    const FoliationSpec& spec() const { return spec_; }

    /// theta'(t) / theta(t) = (n-1) cot(g t) - c / (g sin(g t)).
    double log_deriv(double t) const;

    /// Normalized density; theta(t) = (g / mu0) (1-cos gt)^a (1+cos gt)^b sin(gt)
    /// with a = (m0-1)/2, b = (m1-1)/2.
    double theta(double t) const;

    /// Volume fraction of the tube of radius t: integral of theta over [0, t].
    double cumulative(double t) const;

    /// Orders of vanishing of theta at t = 0 and t = D; equal to (m0, m1).
    std::pair<double, double> endpoint_exponents() const;

private:
    FoliationSpec spec_;
    double expo_plus_;   // (m0 - 1) / 2
    double expo_minus_;  // (m1 - 1) / 2
    double norm_;        // g / mu0
};

DensityProfile density(const FoliationSpec& spec);

}  // namespace pompeiu
