#include "pompeiu/sphere_mc.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "pompeiu/harmonics.hpp"

namespace pompeiu {

std::vector<double> sample_sphere(int n, int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_sphere: count must be >= 1");
    const int dim = n + 1;
    std::vector<double> pts(static_cast<std::size_t>(count) * dim);
    Rng rng(derive_stream(seed, {0x706f696e7473ULL}));
    for (int s = 0; s < count; ++s) {
        double* x = pts.data() + static_cast<std::size_t>(s) * dim;
        double norm2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            x[i] = rng.next_gaussian();
            norm2 += x[i] * x[i];
        }
        double inv = 1.0 / std::sqrt(norm2);
        for (int i = 0; i < dim; ++i) x[i] *= inv;
    }
    return pts;
}

void Rotation::apply_inverse(std::span<const double> x, std::span<double> out) const {
    const int dim = static_cast<int>(matrix.rows());
    for (int i = 0; i < dim; ++i) {
        double s = 0.0;
        for (int j = 0; j < dim; ++j) s += matrix(j, i) * x[j];  // R^T x
        out[i] = s;
    }
}

Rotation identity_rotation(int n) {
    Rotation r;
    r.matrix = Eigen::MatrixXd::Identity(n + 1, n + 1);
    r.index = 0;
    return r;
}

Rotation haar_rotation(int n, std::uint64_t seed) {
    const int dim = n + 1;
    Eigen::MatrixXd A(dim, dim);
    Rng rng(derive_stream(seed, {0x726f746174ULL}));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) A(i, j) = rng.next_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
    Eigen::MatrixXd Q = qr.householderQ();
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
    // Right multiplication by a fixed reflection maps Haar on O- to Haar on SO.
    if (Q.determinant() < 0.0) Q.col(dim - 1) = -Q.col(dim - 1);
    Rotation r;
    r.matrix = std::move(Q);
    return r;
}

bool TubeRegion::contains(std::span<const double> x) const {
    const int dim = spec.n + 1;
    std::vector<double> y(dim);
    rotation.apply_inverse(x, y);
    return polynomial(y) > std::cos(spec.g * t);
}

void run_sample_batches(long n_samples, std::uint64_t seed, std::uint64_t stream_tag, int workers,
                        const std::function<void(int batch, long count, Rng& rng)>& body) {
    if (n_samples < 1) throw std::invalid_argument("run_sample_batches: n_samples must be >= 1");
    const int nbatches = static_cast<int>((n_samples + kSamplesPerBatch - 1) / kSamplesPerBatch);
    auto work = [&](int first) {
        for (int b = first; b < nbatches; b += workers) {
            long count = std::min(kSamplesPerBatch, n_samples - b * kSamplesPerBatch);
            Rng rng(derive_stream(seed, {stream_tag, static_cast<std::uint64_t>(b)}));
            body(b, count, rng);
        }
    };
    if (workers <= 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
}

IntegralEstimate integrate_over_tube(const std::function<double(std::span<const double>)>& f,
                                     const TubeRegion& tube, long n_samples, std::uint64_t seed,
                                     int workers) {
    if (n_samples < 10000)
        throw std::invalid_argument("integrate_over_tube: n_samples must be >= 1e4");
    const int dim = tube.spec.n + 1;
    const double cutoff = std::cos(tube.spec.g * tube.t);
    const int nbatches = static_cast<int>((n_samples + kSamplesPerBatch - 1) / kSamplesPerBatch);
    std::vector<double> sums(nbatches, 0.0), sumsqs(nbatches, 0.0);

    run_sample_batches(n_samples, seed, 0x74756265ULL, workers,
                       [&](int batch, long count, Rng& rng) {
                           std::vector<double> x(dim), y(dim);
                           double s = 0.0, s2 = 0.0;
                           for (long i = 0; i < count; ++i) {
                               double norm2 = 0.0;
                               for (int v = 0; v < dim; ++v) {
                                   x[v] = rng.next_gaussian();
                                   norm2 += x[v] * x[v];
                               }
                               double inv = 1.0 / std::sqrt(norm2);
                               for (int v = 0; v < dim; ++v) x[v] *= inv;
                               tube.rotation.apply_inverse(x, y);
                               if (tube.polynomial(y) > cutoff) {
                                   double value = f(x);
                                   s += value;
                                   s2 += value * value;
                               }
                           }
                           sums[batch] = s;
                           sumsqs[batch] = s2;
                       });

    double sum = 0.0, sumsq = 0.0;
    for (int b = 0; b < nbatches; ++b) {
        sum += sums[b];
        sumsq += sumsqs[b];
    }
    const double volume = sphere_volume(tube.spec.n);
    double mean = sum / n_samples;
    double var = std::max(0.0, (sumsq - n_samples * mean * mean) / (n_samples - 1.0));
    IntegralEstimate est;
    est.value = volume * mean;
    est.std_error = volume * std::sqrt(var / n_samples);
    est.n_samples = n_samples;
    est.seed = seed;
    return est;
}

VolumeCrossCheck tube_volume_crosscheck(const FoliationSpec& spec, const MultiPoly& polynomial,
                                        double t, long n_samples, std::uint64_t seed) {
    TubeRegion tube{spec, polynomial, t, identity_rotation(spec.n)};
    IntegralEstimate est = integrate_over_tube([](std::span<const double>) { return 1.0; }, tube,
                                               n_samples, seed);
    const double volume = sphere_volume(spec.n);
    VolumeCrossCheck check;
    check.mc_fraction = est.value / volume;
    check.mc_std_error = est.std_error / volume;
    check.analytic_fraction = density(spec).cumulative(t);
    check.z = check.mc_std_error > 0.0
                  ? (check.mc_fraction - check.analytic_fraction) / check.mc_std_error
                  : 0.0;
    return check;
}

}  // namespace pompeiu
