#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pompeiu/content.hpp"
#include "pompeiu/foliation.hpp"
#include "pompeiu/harmonics.hpp"
#include "pompeiu/radial.hpp"
#include "pompeiu/sphere_mc.hpp"

namespace pompeiu {

/// Requested eigenvalue lies in the radial spectrum; rotated-tube integrals
/// of its eigenfunctions need not vanish, so the caller's input is rejected.
struct SpectrumClashError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The requested radius is not a zero of the content function.
struct NotAZeroError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Verdict {
    kFailsPompeiuWitnessed,   ///< every rotated integral vanished within threshold
    kInconclusive,            ///< some integral exceeded the threshold band
    kPositiveControlNonzero,  ///< a control integral is nonzero beyond threshold
};

std::string to_string(Verdict v);

struct RotationCell {
    int rotation_index = 0;
    IntegralEstimate estimate;
};

/// Certificate for one (radius, integrand) pair across a rotation batch.
/// A finite Haar sample plus the identity is a *witness* for the failure of
/// the Pompeiu property, never a proof; the verdict name keeps that explicit.
struct PompeiuReport {
    FoliationSpec spec;
    double t = 0.0;
    int degree = -1;          ///< harmonic degree l, -1 in radial mode
    int harmonic_index = -1;  ///< basis element index, -1 in radial mode
    int radial_k = -1;        ///< radial index k, -1 in harmonic mode
    double lambda = 0.0;
    bool is_control = false;
    double threshold = 4.0;  ///< verdicts compare |value| against threshold * stderr
    std::vector<RotationCell> cells;
    Verdict verdict = Verdict::kInconclusive;
};

struct VerifyConfig {
    std::vector<double> radii;
    int rotations = 20;  ///< batch size including the identity at index 0
    long n_samples = 1000000;
    std::uint64_t seed = kDefaultSeed;
    int workers = 1;
    double control_radius = 0.0;  ///< 0 selects D/3
};

/// Rotated-tube integrals of every degree-l basis harmonic, for each radius
/// and rotation.  Requires g >= 2 and l(l+n-1) outside the radial spectrum
/// (SpectrumClashError otherwise).  The returned batch ends with a positive
/// control: the k = 1 radial eigenfunction over the identity tube at
/// control_radius, which must be nonzero for the batch to have power.
std::vector<PompeiuReport> verify_nonradial_failure(const FoliationSpec& spec,
                                                    const MultiPoly& polynomial, int ell,
                                                    const VerifyConfig& config);

/// Rotated-tube integrals of the k-th radial eigenfunction at a freak radius
/// t in S_k (NotAZeroError when |Psi_k(t)| > 1e-9), plus a positive control at
/// the midpoint of the first interval of (0, D) \ S_k.
std::vector<PompeiuReport> verify_freak_radius(const FoliationSpec& spec,
                                               const MultiPoly& polynomial, int k, double t,
                                               const VerifyConfig& config);

using Membership = std::function<bool(std::span<const double>)>;

Membership tube_membership(const TubeRegion& tube);
/// Equatorial band {|x_1| < sin t} (antipodal invariant, non-proper example).
Membership band_membership(double t);
/// Geodesic cap {x_1 > cos t} (not antipodal invariant; positive control).
Membership cap_membership(double t);

struct BarycenterReport {
    std::vector<IntegralEstimate> coordinates;
    bool all_vanish = false;  ///< every |value| <= 4 stderr
    double max_z = 0.0;
};

/// Coordinate integrals over an arbitrary region of S^n.
BarycenterReport barycenter_test(int n, const Membership& region, long n_samples,
                                 std::uint64_t seed);

struct Lambda2Result {
    double lambda2 = 0.0;
    bool bound_ok = false;
    bool equality = false;
};

/// First positive Laplace eigenvalue of the Clifford torus S^1(r) x S^1(s),
/// s = sqrt(1-r^2), embedded in S^3: min(1/r^2, 1/s^2).  The bound checked is
/// lambda2 <= n - 1 = 2, with equality exactly at the minimal torus.
Lambda2Result clifford_lambda2(double r);

struct TangentialGradientReport {
    double mean = 0.0;
    double std_error = 0.0;
    double max_abs_deviation = 0.0;  ///< from n - 1, over shell samples
    long shell_samples = 0;
    double shell_halfwidth = 0.0;
};

/// Estimates sum_i |grad_Sigma x_i|^2 on the leaf at distance t by sampling a
/// thin shell |rho - t| < eps and removing the x and grad-rho components of
/// the ambient gradients; the identity value is n - 1.  Throws when fewer
/// than 1e3 samples land in the shell.
TangentialGradientReport tangential_gradient_identity_check(const MultiPoly& polynomial,
                                                            const FoliationSpec& spec, double t,
                                                            long n_samples, std::uint64_t seed,
                                                            double shell_halfwidth = 0.0);

/// One CSV row per (radius, integrand, rotation) cell with a config
/// fingerprint header; byte-identical for identical configs and any worker
/// count.
std::string reports_to_csv(std::span<const PompeiuReport> reports, const std::string& fingerprint);

}  // namespace pompeiu
