#include "pompeiu/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>
#include <sstream>
#include <stdexcept>

namespace pompeiu {

namespace {

// Flattened polynomial for the sampling hot loop.
struct FlatPoly {
    struct Term {
        int exps[8];
        double coef;
    };
    std::vector<Term> terms;
    int dim = 0;

    static FlatPoly from(const MultiPoly& p) {
        FlatPoly out;
        out.dim = p.dim();
        if (out.dim > 8) throw std::invalid_argument("FlatPoly: dimension cap is 8");
        for (const auto& [e, c] : p.terms()) {
            Term t{};
            for (int v = 0; v < out.dim; ++v) t.exps[v] = e[v];
            t.coef = c;
            out.terms.push_back(t);
        }
        return out;
    }

    double eval(const double* powers, int stride) const {
        double sum = 0.0;
        for (const Term& t : terms) {
            double prod = t.coef;
            for (int v = 0; v < dim; ++v) prod *= powers[v * stride + t.exps[v]];
            sum += prod;
        }
        return sum;
    }
};

struct CellGrid {
    int nrot = 0, nrad = 0, nfn = 0;
    std::vector<IntegralEstimate> cells;  // ((rot * nrad) + rad) * nfn + fn

    const IntegralEstimate& at(int rot, int rad, int fn) const {
        return cells[(static_cast<std::size_t>(rot) * nrad + rad) * nfn + fn];
    }
};

// Integrands are either a list of polynomials evaluated at the sample point,
// or a radial eigenfunction y(p(x)).
struct IntegrandSet {
    std::vector<FlatPoly> polys;
    const RadialEigenpair* radial = nullptr;
    int count() const { return radial ? 1 : static_cast<int>(polys.size()); }
};

/// Shared Monte Carlo engine: one pass over the samples accumulates every
/// (rotation, radius, integrand) cell.  Points are generated per batch keyed
/// only by (seed, batch), so all cells share the same sample stream and the
/// reduction in batch order is reproducible for any worker count.
CellGrid integrate_cells(const FoliationSpec& spec, const MultiPoly& polynomial,
                         const IntegrandSet& fns, std::span<const double> radii,
                         std::span<const Rotation> rotations, long n_samples, std::uint64_t seed,
                         int workers) {
    const int dim = spec.n + 1;
    const int nrot = static_cast<int>(rotations.size());
    const int nrad = static_cast<int>(radii.size());
    const int nfn = fns.count();
    const int ncell = nrot * nrad * nfn;
    const FlatPoly cartan = FlatPoly::from(polynomial);

    int maxdeg = spec.g;
    for (const FlatPoly& f : fns.polys)
        for (const auto& t : f.terms)
            for (int v = 0; v < f.dim; ++v) maxdeg = std::max(maxdeg, t.exps[v]);
    const int stride = maxdeg + 1;
    if (stride > 16) throw std::invalid_argument("integrate_cells: integrand degree cap is 15");

    std::vector<double> cutoff(nrad);
    for (int r = 0; r < nrad; ++r) cutoff[r] = std::cos(spec.g * radii[r]);

    const int nbatches = static_cast<int>((n_samples + kSamplesPerBatch - 1) / kSamplesPerBatch);
    std::vector<double> sums(static_cast<std::size_t>(nbatches) * ncell, 0.0);
    std::vector<double> sumsqs(static_cast<std::size_t>(nbatches) * ncell, 0.0);

    run_sample_batches(
        n_samples, seed, 0x63656c6cULL, workers, [&](int batch, long count, Rng& rng) {
            std::vector<double> x(dim), y(dim);
            std::vector<double> powers(static_cast<std::size_t>(dim) * stride);
            std::vector<double> values(nfn), squares(nfn);
            double* bs = sums.data() + static_cast<std::size_t>(batch) * ncell;
            double* bq = sumsqs.data() + static_cast<std::size_t>(batch) * ncell;
            for (long i = 0; i < count; ++i) {
                double norm2 = 0.0;
                for (int v = 0; v < dim; ++v) {
                    x[v] = rng.next_gaussian();
                    norm2 += x[v] * x[v];
                }
                double inv = 1.0 / std::sqrt(norm2);
                for (int v = 0; v < dim; ++v) x[v] *= inv;
                for (int v = 0; v < dim; ++v) {
                    powers[static_cast<std::size_t>(v) * stride] = 1.0;
                    for (int k = 1; k < stride; ++k)
                        powers[static_cast<std::size_t>(v) * stride + k] =
                            powers[static_cast<std::size_t>(v) * stride + k - 1] * x[v];
                }
                if (fns.radial) {
                    values[0] = fns.radial->y(cartan.eval(powers.data(), stride));
                } else {
                    for (int f = 0; f < nfn; ++f) values[f] = fns.polys[f].eval(powers.data(), stride);
                }
                for (int f = 0; f < nfn; ++f) squares[f] = values[f] * values[f];
                for (int rot = 0; rot < nrot; ++rot) {
                    const Eigen::MatrixXd& R = rotations[rot].matrix;
                    double fy;
                    if (rotations[rot].index == 0) {
                        fy = cartan.eval(powers.data(), stride);
                    } else {
                        for (int a = 0; a < dim; ++a) {
                            double s = 0.0;
                            for (int b = 0; b < dim; ++b) s += R(b, a) * x[b];
                            y[a] = s;
                        }
                        double ypow[8 * 16];
                        for (int v = 0; v < dim; ++v) {
                            ypow[v * stride] = 1.0;
                            for (int k = 1; k < stride; ++k)
                                ypow[v * stride + k] = ypow[v * stride + k - 1] * y[v];
                        }
                        fy = cartan.eval(ypow, stride);
                    }
                    for (int r = 0; r < nrad; ++r) {
                        if (fy <= cutoff[r]) continue;
                        double* cs = bs + (static_cast<std::size_t>(rot) * nrad + r) * nfn;
                        double* cq = bq + (static_cast<std::size_t>(rot) * nrad + r) * nfn;
                        for (int f = 0; f < nfn; ++f) {
                            cs[f] += values[f];
                            cq[f] += squares[f];
                        }
                    }
                }
            }
        });

    CellGrid grid;
    grid.nrot = nrot;
    grid.nrad = nrad;
    grid.nfn = nfn;
    grid.cells.resize(ncell);
    const double volume = sphere_volume(spec.n);
    for (int c = 0; c < ncell; ++c) {
        double sum = 0.0, sumsq = 0.0;
        for (int b = 0; b < nbatches; ++b) {
            sum += sums[static_cast<std::size_t>(b) * ncell + c];
            sumsq += sumsqs[static_cast<std::size_t>(b) * ncell + c];
        }
        double mean = sum / n_samples;
        double var = std::max(0.0, (sumsq - n_samples * mean * mean) / (n_samples - 1.0));
        IntegralEstimate est;
        est.value = volume * mean;
        est.std_error = volume * std::sqrt(var / n_samples);
        est.n_samples = n_samples;
        est.seed = seed;
        grid.cells[c] = est;
    }
    return grid;
}

std::vector<Rotation> rotation_batch(int n, int count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("rotation batch needs at least the identity");
    std::vector<Rotation> rotations;
    rotations.reserve(count);
    rotations.push_back(identity_rotation(n));
    for (int r = 1; r < count; ++r) {
        Rotation rot = haar_rotation(n, derive_stream(seed, {0x726f74ULL, static_cast<std::uint64_t>(r)}));
        rot.index = r;
        rotations.push_back(std::move(rot));
    }
    return rotations;
}

Verdict judge(const std::vector<RotationCell>& cells, bool control, double threshold) {
    bool any_nonzero = false;
    for (const RotationCell& c : cells)
        if (std::abs(c.estimate.value) > threshold * c.estimate.std_error) any_nonzero = true;
    if (control) return any_nonzero ? Verdict::kPositiveControlNonzero : Verdict::kInconclusive;
    return any_nonzero ? Verdict::kInconclusive : Verdict::kFailsPompeiuWitnessed;
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::kFailsPompeiuWitnessed: return "FAILS_POMPEIU_WITNESSED";
        case Verdict::kInconclusive: return "INCONCLUSIVE";
        case Verdict::kPositiveControlNonzero: return "POSITIVE_CONTROL_NONZERO";
    }
    return "?";
}

std::vector<PompeiuReport> verify_nonradial_failure(const FoliationSpec& spec,
                                                    const MultiPoly& polynomial, int ell,
                                                    const VerifyConfig& config) {
    if (spec.g < 2)
        throw std::invalid_argument("verify_nonradial_failure: requires g >= 2 (g = 1 is radial)");
    if (ell < 1) throw std::invalid_argument("verify_nonradial_failure: degree must be >= 1");
    const long lambda = static_cast<long>(ell) * (ell + spec.n - 1);
    // Radial eigenvalues are g k (g k + n - 1); scan up to the crossing index.
    for (int k = 0; static_cast<long>(spec.g) * k <= ell; ++k) {
        long radial = static_cast<long>(spec.g) * k * (static_cast<long>(spec.g) * k + spec.n - 1);
        if (radial == lambda)
            throw SpectrumClashError(
                "verify_nonradial_failure: l(l+n-1) = " + std::to_string(lambda) +
                " is a radial eigenvalue (k = " + std::to_string(k) + "); pick l not divisible by g");
    }
    for (double t : config.radii)
        if (!(t > 0.0 && t < spec.diameter))
            throw std::invalid_argument("verify_nonradial_failure: radius outside (0, D)");

    EigenBasis basis = harmonic_basis(spec.n, ell);
    IntegrandSet fns;
    fns.polys.reserve(basis.basis.size());
    for (const MultiPoly& u : basis.basis) fns.polys.push_back(FlatPoly::from(u));

    std::vector<Rotation> rotations = rotation_batch(spec.n, config.rotations, config.seed);
    CellGrid grid = integrate_cells(spec, polynomial, fns, config.radii, rotations,
                                    config.n_samples, config.seed, config.workers);

    std::vector<PompeiuReport> reports;
    for (int r = 0; r < grid.nrad; ++r)
        for (int f = 0; f < grid.nfn; ++f) {
            PompeiuReport rep;
            rep.spec = spec;
            rep.t = config.radii[r];
            rep.degree = ell;
            rep.harmonic_index = f;
            rep.lambda = static_cast<double>(lambda);
            for (int rot = 0; rot < grid.nrot; ++rot)
                rep.cells.push_back({rot, grid.at(rot, r, f)});
            rep.verdict = judge(rep.cells, false, rep.threshold);
            reports.push_back(std::move(rep));
        }

    // Positive control from the same seed lineage and sample count: the k = 1
    // radial eigenfunction has a sign-definite content function, so its
    // identity-tube integral is nonzero at any interior radius.
    double t_control = config.control_radius > 0.0 ? config.control_radius : spec.diameter / 3.0;
    RadialEigenpair k1 = solve_radial_spectrum(spec, 1)[1];
    IntegrandSet control;
    control.radial = &k1;
    std::vector<double> control_radii{t_control};
    std::vector<Rotation> identity{identity_rotation(spec.n)};
    CellGrid cgrid = integrate_cells(spec, polynomial, control, control_radii, identity,
                                     config.n_samples, config.seed, config.workers);
    PompeiuReport ctrl;
    ctrl.spec = spec;
    ctrl.t = t_control;
    ctrl.radial_k = 1;
    ctrl.lambda = k1.lambda;
    ctrl.is_control = true;
    ctrl.cells.push_back({0, cgrid.at(0, 0, 0)});
    ctrl.verdict = judge(ctrl.cells, true, ctrl.threshold);
    reports.push_back(std::move(ctrl));
    return reports;
}

std::vector<PompeiuReport> verify_freak_radius(const FoliationSpec& spec,
                                               const MultiPoly& polynomial, int k, double t,
                                               const VerifyConfig& config) {
    if (k < 1) throw std::invalid_argument("verify_freak_radius: k must be >= 1");
    if (!(t > 0.0 && t < spec.diameter))
        throw std::invalid_argument("verify_freak_radius: t outside (0, D)");
    RadialEigenpair eig = solve_radial_spectrum(spec, k)[k];
    ContentFunction psi(spec, eig);
    if (std::abs(psi(t)) > 1e-9)
        throw NotAZeroError("verify_freak_radius: |Psi_k(t)| = " + std::to_string(psi(t)) +
                            " > 1e-9, t is not in S_k");

    // Control radius: midpoint of the first interval of S_k u {0, D}.
    double first = psi.zeros().empty() ? spec.diameter : psi.zeros().front();
    double t_control = 0.5 * first;

    IntegrandSet fns;
    fns.radial = &eig;
    std::vector<Rotation> rotations = rotation_batch(spec.n, config.rotations, config.seed);
    std::vector<double> radii{t};
    CellGrid grid =
        integrate_cells(spec, polynomial, fns, radii, rotations, config.n_samples, config.seed,
                        config.workers);

    std::vector<PompeiuReport> reports;
    PompeiuReport rep;
    rep.spec = spec;
    rep.t = t;
    rep.radial_k = k;
    rep.lambda = eig.lambda;
    for (int rot = 0; rot < grid.nrot; ++rot) rep.cells.push_back({rot, grid.at(rot, 0, 0)});
    rep.verdict = judge(rep.cells, false, rep.threshold);
    reports.push_back(std::move(rep));

    std::vector<double> control_radii{t_control};
    std::vector<Rotation> identity{identity_rotation(spec.n)};
    CellGrid cgrid = integrate_cells(spec, polynomial, fns, control_radii, identity,
                                     config.n_samples, config.seed, config.workers);
    PompeiuReport ctrl;
    ctrl.spec = spec;
    ctrl.t = t_control;
    ctrl.radial_k = k;
    ctrl.lambda = eig.lambda;
    ctrl.is_control = true;
    ctrl.cells.push_back({0, cgrid.at(0, 0, 0)});
    ctrl.verdict = judge(ctrl.cells, true, ctrl.threshold);
    reports.push_back(std::move(ctrl));
    return reports;
}

Membership tube_membership(const TubeRegion& tube) {
    return [tube](std::span<const double> x) { return tube.contains(x); };
}

Membership band_membership(double t) {
    return [s = std::sin(t)](std::span<const double> x) { return std::abs(x[0]) < s; };
}

Membership cap_membership(double t) {
    return [c = std::cos(t)](std::span<const double> x) { return x[0] > c; };
}

BarycenterReport barycenter_test(int n, const Membership& region, long n_samples,
                                 std::uint64_t seed) {
    const int dim = n + 1;
    const int nbatches = static_cast<int>((n_samples + kSamplesPerBatch - 1) / kSamplesPerBatch);
    std::vector<double> sums(static_cast<std::size_t>(nbatches) * dim, 0.0);
    std::vector<double> sumsqs(static_cast<std::size_t>(nbatches) * dim, 0.0);
    run_sample_batches(n_samples, seed, 0x62617279ULL, 1, [&](int batch, long count, Rng& rng) {
        std::vector<double> x(dim);
        double* bs = sums.data() + static_cast<std::size_t>(batch) * dim;
        double* bq = sumsqs.data() + static_cast<std::size_t>(batch) * dim;
        for (long i = 0; i < count; ++i) {
            double norm2 = 0.0;
            for (int v = 0; v < dim; ++v) {
                x[v] = rng.next_gaussian();
                norm2 += x[v] * x[v];
            }
            double inv = 1.0 / std::sqrt(norm2);
            for (int v = 0; v < dim; ++v) x[v] *= inv;
            if (region(x))
                for (int v = 0; v < dim; ++v) {
                    bs[v] += x[v];
                    bq[v] += x[v] * x[v];
                }
        }
    });
    BarycenterReport report;
    const double volume = sphere_volume(n);
    for (int v = 0; v < dim; ++v) {
        double sum = 0.0, sumsq = 0.0;
        for (int b = 0; b < nbatches; ++b) {
            sum += sums[static_cast<std::size_t>(b) * dim + v];
            sumsq += sumsqs[static_cast<std::size_t>(b) * dim + v];
        }
        double mean = sum / n_samples;
        double var = std::max(0.0, (sumsq - n_samples * mean * mean) / (n_samples - 1.0));
        IntegralEstimate est;
        est.value = volume * mean;
        est.std_error = volume * std::sqrt(var / n_samples);
        est.n_samples = n_samples;
        est.seed = seed;
        report.coordinates.push_back(est);
        report.max_z = std::max(report.max_z, std::abs(est.z()));
    }
    report.all_vanish = report.max_z <= 4.0;
    return report;
}

Lambda2Result clifford_lambda2(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("clifford_lambda2: r must lie in (0, 1)");
    // In floats the swap map r -> sqrt(1 - r^2) is only a near-involution, so
    // r and its swap partner can differ after a round trip by an ulp.  Both
    // orbits share the map's terminal cycle; evaluating on the cycle minimum
    // makes clifford_lambda2(r) and clifford_lambda2(sqrt(1-r^2)) identical
    // bit for bit.
    std::vector<double> orbit{r};
    double canonical = std::min(r, std::sqrt(1.0 - r * r));
    for (int i = 0; i < 64; ++i) {
        double next = std::sqrt(1.0 - orbit.back() * orbit.back());
        auto hit = std::find(orbit.begin(), orbit.end(), next);
        if (hit != orbit.end()) {
            canonical = *std::min_element(hit, orbit.end());
            break;
        }
        orbit.push_back(next);
    }
    double u = canonical * canonical;
    Lambda2Result out;
    out.lambda2 = 1.0 / std::max(u, 1.0 - u);
    out.bound_ok = out.lambda2 <= 2.0 + 1e-12;
    out.equality = std::abs(out.lambda2 - 2.0) <= 1e-12;
    return out;
}

TangentialGradientReport tangential_gradient_identity_check(const MultiPoly& polynomial,
                                                            const FoliationSpec& spec, double t,
                                                            long n_samples, std::uint64_t seed,
                                                            double shell_halfwidth) {
    if (!(t > 0.0 && t < spec.diameter))
        throw std::invalid_argument("tangential_gradient_identity_check: t outside (0, D)");
    double eps = shell_halfwidth > 0.0 ? shell_halfwidth : spec.diameter / 200.0;
    const int dim = spec.n + 1;
    std::vector<MultiPoly> grad(dim);
    for (int v = 0; v < dim; ++v) grad[v] = polynomial.partial(v);

    std::vector<double> pts = sample_sphere(spec.n, static_cast<int>(n_samples), seed);
    double sum = 0.0, sumsq = 0.0, maxdev = 0.0;
    long kept = 0;
    std::vector<double> gbar(dim), gs(dim);
    for (long s = 0; s < n_samples; ++s) {
        std::span<const double> x(pts.data() + static_cast<std::size_t>(s) * dim, dim);
        double rho = rho_from_point(polynomial, spec, x);
        if (std::abs(rho - t) >= eps) continue;
        double f = polynomial(x);
        for (int v = 0; v < dim; ++v) gbar[v] = grad[v](x);
        double dot = 0.0;
        for (int v = 0; v < dim; ++v) dot += gbar[v] * x[v];
        // grad rho = -grad_S F / (g sqrt(1-F^2)); the norm is not rescaled, so
        // the estimate inherits any violation of |grad_S F|^2 = g^2 (1 - F^2).
        double denom = spec.g * std::sqrt(std::max(1.0 - f * f, 0.0));
        double nrho2 = 0.0;
        for (int v = 0; v < dim; ++v) {
            gs[v] = (gbar[v] - dot * x[v]) / denom;
            nrho2 += gs[v] * gs[v];
        }
        double value = spec.n - nrho2;  // (n+1) - |x|^2 - |grad rho|^2
        sum += value;
        sumsq += value * value;
        maxdev = std::max(maxdev, std::abs(value - (spec.n - 1)));
        ++kept;
    }
    if (kept < 1000)
        throw std::runtime_error(
            "tangential_gradient_identity_check: only " + std::to_string(kept) +
            " samples in the shell; increase n_samples or widen the shell");
    TangentialGradientReport report;
    report.mean = sum / kept;
    double var = std::max(0.0, (sumsq - kept * report.mean * report.mean) / (kept - 1.0));
    report.std_error = std::sqrt(var / kept);
    report.max_abs_deviation = maxdev;
    report.shell_samples = kept;
    report.shell_halfwidth = eps;
    return report;
}

std::string reports_to_csv(std::span<const PompeiuReport> reports, const std::string& fingerprint) {
    std::string out;
    out += "# " + fingerprint + "\n";
    out += "n,g,m0,m1,t,degree_or_k,harmonic_index,rotation_index,control,value,stderr,z,verdict\n";
    char line[512];
    for (const PompeiuReport& rep : reports) {
        int deg_or_k = rep.radial_k >= 0 ? rep.radial_k : rep.degree;
        for (const RotationCell& cell : rep.cells) {
            std::snprintf(line, sizeof line, "%d,%d,%d,%d,%.17g,%d,%d,%d,%d,%.17g,%.17g,%.6f,%s\n",
                          rep.spec.n, rep.spec.g, rep.spec.m0, rep.spec.m1, rep.t, deg_or_k,
                          rep.harmonic_index, cell.rotation_index, rep.is_control ? 1 : 0,
                          cell.estimate.value, cell.estimate.std_error, cell.estimate.z(),
                          to_string(rep.verdict).c_str());
            out += line;
        }
    }
    return out;
}

}  // namespace pompeiu
