#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pompeiu/foliation.hpp"
#include "pompeiu/multipoly.hpp"
#include "pompeiu/rng.hpp"

namespace pompeiu {

/// count i.i.d. uniform points on S^n (normalized Gaussians), returned as a
/// flat row-major array of (n+1)-vectors; deterministic per seed.
std::vector<double> sample_sphere(int n, int count, std::uint64_t seed);

/// Special orthogonal matrix acting on R^{n+1}.
struct Rotation {
    Eigen::MatrixXd matrix;
    int index = 0;  ///< position in a verification batch; 0 is the identity

    void apply_inverse(std::span<const double> x, std::span<double> out) const;
};

Rotation identity_rotation(int n);

/// Haar-distributed rotation: QR of a Gaussian matrix with the R-diagonal
/// sign fix (Haar on O(n+1)), then a last-column flip onto SO(n+1) when the
/// determinant is negative.
Rotation haar_rotation(int n, std::uint64_t seed);

/// Rotated isoparametric tube h(Omega_t); membership is
/// p(h^{-1} x) > cos(g t).
struct TubeRegion {
    FoliationSpec spec;
    MultiPoly polynomial;
    double t = 0.0;
    Rotation rotation;

    bool contains(std::span<const double> x) const;
};

struct IntegralEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
    std::uint64_t seed = 0;

    double z() const { return std_error > 0.0 ? value / std_error : 0.0; }
};

/// vol(S^n) * mean(f(x) 1[x in tube]) over uniform samples, with the standard
/// error of the same estimator.  Work is split into fixed-size batches keyed
/// by (seed, batch); the reduction is ordered by batch index, so results are
/// identical for any worker count.
IntegralEstimate integrate_over_tube(const std::function<double(std::span<const double>)>& f,
                                     const TubeRegion& tube, long n_samples, std::uint64_t seed,
                                     int workers = 1);

struct VolumeCrossCheck {
    double mc_fraction = 0.0;
    double mc_std_error = 0.0;
    double analytic_fraction = 0.0;
    double z = 0.0;
};

/// Monte Carlo tube volume fraction against the integrated density.
VolumeCrossCheck tube_volume_crosscheck(const FoliationSpec& spec, const MultiPoly& polynomial,
                                        double t, long n_samples, std::uint64_t seed);

/// Deterministic batched map-reduce: calls body(batch, sample_count, rng) for
/// each batch and hands partial results back in batch order.
void run_sample_batches(long n_samples, std::uint64_t seed, std::uint64_t stream_tag, int workers,
                        const std::function<void(int batch, long count, Rng& rng)>& body);

inline constexpr long kSamplesPerBatch = 16384;

}  // namespace pompeiu
