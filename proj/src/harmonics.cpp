#include "pompeiu/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include <istream>
#include <ostream>

#include "pompeiu/sphere_mc.hpp"

namespace pompeiu {

namespace {

// Degree-d monomial exponent vectors in dim variables, lexicographic.
void enumerate_monomials(int dim, int degree, std::vector<std::vector<int>>& out) {
    std::vector<int> e(dim, 0);
    e[0] = degree;
    auto emit = [&](auto&& self, int var, int remaining) -> void {
        if (var == dim - 1) {
            e[var] = remaining;
            out.push_back(e);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            e[var] = k;
            self(self, var + 1, remaining - k);
        }
    };
    out.clear();
    emit(emit, 0, degree);
}

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double sphere_volume(int n) {
    return 2.0 * std::pow(std::numbers::pi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

double sphere_moment(int n, std::span<const int> exps) {
    double logsum = 0.0, btot = 0.0;
    for (int a : exps) {
        if (a % 2 != 0) return 0.0;
        double b = 0.5 * (a + 1);
        logsum += std::lgamma(b);
        btot += b;
    }
    return 2.0 * std::exp(logsum - std::lgamma(btot));
}

int harmonic_dimension(int n, int ell) {
    return static_cast<int>(binomial(n + ell, ell) - binomial(n + ell - 2, ell - 2));
}

EigenBasis harmonic_basis(int n, int ell, int order) {
    if (n < 2 || n > 4) throw std::invalid_argument("harmonic_basis: supported range is 2 <= n <= 4");
    if (ell < 0 || ell > 8)
        throw std::invalid_argument("harmonic_basis: supported range is 0 <= l <= 8");
    const int dim = n + 1;

    std::vector<std::vector<int>> monos;
    enumerate_monomials(dim, ell, monos);
    const int ncols = static_cast<int>(monos.size());

    // Kernel of the formal Laplacian, seen as a map from degree-l monomial
    // coefficients to degree-(l-2) coefficients.
    Eigen::MatrixXd kernel;
    if (ell < 2) {
        kernel = Eigen::MatrixXd::Identity(ncols, ncols);
    } else {
        std::vector<std::vector<int>> lower;
        enumerate_monomials(dim, ell - 2, lower);
        std::map<std::vector<int>, int> lower_index;
        for (int i = 0; i < static_cast<int>(lower.size()); ++i) lower_index[lower[i]] = i;
        Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<int>(lower.size()), ncols);
        for (int j = 0; j < ncols; ++j) {
            for (int v = 0; v < dim; ++v) {
                if (monos[j][v] < 2) continue;
                std::vector<int> e = monos[j];
                e[v] -= 2;
                L(lower_index[e], j) += monos[j][v] * (monos[j][v] - 1);
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(L);
        kernel = lu.kernel();
    }
    const int m = static_cast<int>(kernel.cols());
    if (m != harmonic_dimension(n, ell))
        throw std::runtime_error("harmonic_basis: kernel dimension mismatch");

    if (order != 0) {
        // Deterministic permutation of the kernel vectors; changes the
        // orthogonalization order and hence the individual basis elements.
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        Rng rng(derive_stream(static_cast<std::uint64_t>(order), {0x6f72646572ULL}));
        for (int i = m - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<int>(rng.next_below(i + 1))]);
        Eigen::MatrixXd permuted(ncols, m);
        for (int i = 0; i < m; ++i) permuted.col(i) = kernel.col(perm[i]);
        kernel = permuted;
    }

    // Gram matrix under the exact sphere moments, then Cholesky
    // orthonormalization: B = kernel * L^{-T}.
    Eigen::MatrixXd moment = Eigen::MatrixXd::Zero(ncols, ncols);
    std::vector<int> e(dim);
    for (int i = 0; i < ncols; ++i)
        for (int j = i; j < ncols; ++j) {
            for (int v = 0; v < dim; ++v) e[v] = monos[i][v] + monos[j][v];
            moment(i, j) = moment(j, i) = sphere_moment(n, e);
        }
    Eigen::MatrixXd gram = kernel.transpose() * moment * kernel;
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("harmonic_basis: Gram matrix not positive definite");
    Eigen::MatrixXd ortho =
        llt.matrixL().solve(kernel.transpose()).transpose();  // kernel * L^{-T}

    EigenBasis basis;
    basis.n = n;
    basis.degree = ell;
    basis.multiplicity = m;
    basis.basis.reserve(m);
    for (int j = 0; j < m; ++j) {
        MultiPoly p(dim);
        for (int i = 0; i < ncols; ++i)
            if (ortho(i, j) != 0.0) p.add_term(monos[i], ortho(i, j));
        basis.basis.push_back(std::move(p));
    }
    return basis;
}

void write_basis(std::ostream& os, const EigenBasis& basis) {
    os << "n " << basis.n << " degree " << basis.degree << " multiplicity " << basis.multiplicity
       << "\n";
    for (const MultiPoly& u : basis.basis) u.write_text(os);
}

EigenBasis read_basis(std::istream& is) {
    std::string kw;
    EigenBasis basis;
    is >> kw >> basis.n;
    if (kw != "n") throw std::runtime_error("read_basis: bad header");
    is >> kw >> basis.degree >> kw >> basis.multiplicity;
    if (!is) throw std::runtime_error("read_basis: truncated header");
    for (int j = 0; j < basis.multiplicity; ++j) basis.basis.push_back(MultiPoly::read_text(is));
    return basis;
}

RadialProfile radialize(const std::function<double(std::span<const double>)>& f,
                        const FoliationSpec& spec, const MultiPoly& cartan, int num_samples,
                        int num_bins, std::uint64_t seed) {
    if (num_samples < 10000) throw std::invalid_argument("radialize: num_samples must be >= 1e4");
    if (num_bins < 16) throw std::invalid_argument("radialize: num_bins must be >= 16");
    const int dim = spec.n + 1;
    RadialProfile profile;
    profile.centers.resize(num_bins);
    for (int b = 0; b < num_bins; ++b)
        profile.centers[b] = (b + 0.5) * spec.diameter / num_bins;
    std::vector<double> sum(num_bins, 0.0), sumsq(num_bins, 0.0);
    std::vector<int> count(num_bins, 0);

    std::vector<double> pts = sample_sphere(spec.n, num_samples, seed);
    for (int s = 0; s < num_samples; ++s) {
        std::span<const double> x(pts.data() + static_cast<std::size_t>(s) * dim, dim);
        double rho = rho_from_point(cartan, spec, x);
        int b = std::min(static_cast<int>(rho / spec.diameter * num_bins), num_bins - 1);
        double v = f(x);
        sum[b] += v;
        sumsq[b] += v * v;
        count[b] += 1;
    }
    profile.means.resize(num_bins);
    profile.std_errors.resize(num_bins);
    profile.counts = count;
    for (int b = 0; b < num_bins; ++b) {
        if (count[b] < 10)
            throw std::runtime_error(
                "radialize: bin " + std::to_string(b) +
                " received fewer than 10 samples; increase num_samples or reduce num_bins");
        double mean = sum[b] / count[b];
        double var = std::max(0.0, (sumsq[b] - count[b] * mean * mean) / (count[b] - 1));
        profile.means[b] = mean;
        profile.std_errors[b] = std::sqrt(var / count[b]);
    }
    return profile;
}

AdditionReport addition_formula_check(int n, int ell, std::span<const double> y,
                                      std::span<const std::vector<double>> sample_points,
                                      std::uint64_t seed) {
    EigenBasis basis = harmonic_basis(n, ell);
    EigenBasis alt = harmonic_basis(n, ell, /*order=*/7);
    const double volume = sphere_volume(n);
    const double m = basis.multiplicity;

    auto kernel_value = [](const EigenBasis& b, std::span<const double> x,
                           std::span<const double> yy) {
        double a = 0.0;
        for (const MultiPoly& u : b.basis) a += u(x) * u(yy);
        return a;
    };
    auto phi = [&](std::span<const double> x) {
        return std::sqrt(volume / m) * kernel_value(basis, x, y);
    };

    AdditionReport report;
    report.value_at_y = std::abs(phi(y) - std::sqrt(m / volume));

    for (const auto& x : sample_points) {
        double diff = std::abs(kernel_value(basis, x, y) - kernel_value(alt, x, y));
        report.basis_change = std::max(report.basis_change, diff);
    }

    // Zonal dependence: points sharing <x, y> must share phi.
    Rng rng(derive_stream(seed, {0x7a6f6e616cULL}));
    const int dim = n + 1;
    for (int trial = 0; trial < 32; ++trial) {
        double s = rng.uniform(-1.0, 1.0);
        double first = 0.0;
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<double> v(dim);
            double dot = 0.0, norm2 = 0.0;
            for (int i = 0; i < dim; ++i) {
                v[i] = rng.next_gaussian();
                dot += v[i] * y[i];
            }
            for (int i = 0; i < dim; ++i) {
                v[i] -= dot * y[i];
                norm2 += v[i] * v[i];
            }
            double scale = std::sqrt((1.0 - s * s) / norm2);
            std::vector<double> x(dim);
            for (int i = 0; i < dim; ++i) x[i] = s * y[i] + scale * v[i];
            double value = phi(x);
            if (rep == 0)
                first = value;
            else
                report.zonal = std::max(report.zonal, std::abs(value - first));
        }
    }

    // Radialization about y: bin averages of phi should reproduce phi at the
    // bin centers up to binning bias and sampling noise.
    FoliationSpec geod = make_foliation(n, 1, n - 1, n - 1);
    MultiPoly linear(dim);
    {
        // Distance to y is arccos <x, y>: use the linear polynomial <., y>.
        for (int i = 0; i < dim; ++i) {
            MultiPoly::Exponents e(dim, 0);
            e[i] = 1;
            if (y[i] != 0.0) linear.add_term(e, y[i]);
        }
    }
    RadialProfile prof = radialize([&](std::span<const double> x) { return phi(x); }, geod, linear,
                                   40000, 16, derive_stream(seed, {0x726164ULL}));
    // Direction orthogonal to y used to walk along a great circle through y.
    int j = 0;
    for (int i = 1; i < dim; ++i)
        if (std::abs(y[i]) < std::abs(y[j])) j = i;
    std::vector<double> v(dim, 0.0);
    v[j] = 1.0;
    double norm2 = 0.0;
    for (int i = 0; i < dim; ++i) {
        v[i] -= y[j] * y[i];
        norm2 += v[i] * v[i];
    }
    for (double& vi : v) vi /= std::sqrt(norm2);
    auto phi_at_distance = [&](double t) {
        std::vector<double> x(dim);
        for (int i = 0; i < dim; ++i) x[i] = std::cos(t) * y[i] + std::sin(t) * v[i];
        return phi(x);
    };
    double h = geod.diameter / 16.0;
    for (std::size_t b = 0; b < prof.centers.size(); ++b) {
        double lo = phi_at_distance(prof.centers[b] - 0.5 * h);
        double mid = phi_at_distance(prof.centers[b]);
        double hi = phi_at_distance(prof.centers[b] + 0.5 * h);
        double spread = std::max({lo, mid, hi}) - std::min({lo, mid, hi});
        double dev = std::abs(prof.means[b] - mid);
        double band = 4.0 * prof.std_errors[b] + 2.0 * spread + 1e-12;
        report.radialization = std::max(report.radialization, dev - band);
    }
    report.radialization = std::max(report.radialization, 0.0);
    return report;
}

}  // namespace pompeiu
