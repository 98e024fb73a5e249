#include "pompeiu/foliation.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "pompeiu/quadrature_util.hpp"

namespace pompeiu {

namespace {

constexpr double kPi = std::numbers::pi;

bool valid_g(int g) { return g == 1 || g == 2 || g == 3 || g == 4 || g == 6; }

}  // namespace

FoliationSpec make_foliation(int n, int g, int m0, int m1) {
    if (!valid_g(g))
        throw std::invalid_argument("make_foliation: g must be one of {1,2,3,4,6}, got " +
                                    std::to_string(g));
    if (n < 2) throw std::invalid_argument("make_foliation: ambient dimension n must be >= 2");
    if (m0 < 1 || m1 < 1)
        throw std::invalid_argument("make_foliation: multiplicities must be positive");
    if (2 * (n - 1) != g * (m0 + m1))
        throw std::invalid_argument(
            "make_foliation: dimension mismatch, need n - 1 = g (m0 + m1) / 2, got n=" +
            std::to_string(n) + " g=" + std::to_string(g) + " m0=" + std::to_string(m0) +
            " m1=" + std::to_string(m1));
    FoliationSpec spec;
    spec.n = n;
    spec.g = g;
    spec.m0 = m0;
    spec.m1 = m1;
    spec.c = 0.5 * (m1 - m0) * g * g;
    spec.diameter = kPi / g;
    return spec;
}

void write_spec(std::ostream& os, const FoliationSpec& spec) {
    os << "n " << spec.n << "\ng " << spec.g << "\nm0 " << spec.m0 << "\nm1 " << spec.m1 << "\n";
}

FoliationSpec read_spec(std::istream& is) {
    int n = 0, g = 0, m0 = 0, m1 = 0;
    std::string key;
    for (int i = 0; i < 4; ++i) {
        int value;
        if (!(is >> key >> value)) throw std::runtime_error("read_spec: truncated record");
        if (key == "n")
            n = value;
        else if (key == "g")
            g = value;
        else if (key == "m0")
            m0 = value;
        else if (key == "m1")
            m1 = value;
        else
            throw std::runtime_error("read_spec: unknown key '" + key + "'");
    }
    return make_foliation(n, g, m0, m1);
}

MultiPoly cartan_polynomial(const FoliationSpec& spec) {
    const int dim = spec.n + 1;
    MultiPoly p(dim);
    auto unit = [&](int i, int deg) {
        MultiPoly::Exponents e(dim, 0);
        e[i] = deg;
        return e;
    };
    switch (spec.g) {
        case 1:
            p.add_term(unit(0, 1), 1.0);
            return p;
        case 2: {
            // l = m0 + 1 plus-signs; the focal set {x_{l+1} = ... = 0} then has
            // codimension n + 1 - l = m1 + 1.
            int l = spec.m0 + 1;
            for (int i = 0; i < dim; ++i) p.add_term(unit(i, 2), i < l ? 1.0 : -1.0);
            return p;
        }
        case 3: {
            if (spec.n != 4)
                throw std::invalid_argument(
                    "cartan_polynomial: the degree-3 polynomial is only wired for S^4");
            const double s3 = std::sqrt(3.0);
            auto e = [&](int a, int b, int c, int d, int f) {
                return MultiPoly::Exponents{a, b, c, d, f};
            };
            p.add_term(e(0, 0, 0, 0, 3), 1.0);
            p.add_term(e(0, 0, 0, 2, 1), -3.0);
            p.add_term(e(2, 0, 0, 0, 1), 1.5);
            p.add_term(e(0, 2, 0, 0, 1), 1.5);
            p.add_term(e(0, 0, 2, 0, 1), -3.0);
            p.add_term(e(2, 0, 0, 1, 0), 1.5 * s3);
            p.add_term(e(0, 2, 0, 1, 0), -1.5 * s3);
            p.add_term(e(1, 1, 1, 0, 0), 3.0 * s3);
            return p;
        }
        default:
            throw std::invalid_argument(
                "cartan_polynomial: no explicit polynomial for g = " + std::to_string(spec.g));
    }
}

CartanValidation validate_cartan(const MultiPoly& p, const FoliationSpec& spec, int num_samples,
                                 double tol, std::uint64_t seed) {
    if (num_samples < 1) throw std::invalid_argument("validate_cartan: num_samples must be >= 1");
    if (tol <= 0.0) throw std::invalid_argument("validate_cartan: tol must be positive");
    const int dim = spec.n + 1;
    const int g = spec.g;
    MultiPoly lap = p.laplacian();
    std::vector<MultiPoly> grad(dim);
    for (int v = 0; v < dim; ++v) grad[v] = p.partial(v);

    Rng rng(derive_stream(seed, {0x6361727461ULL}));
    std::vector<double> x(dim);
    CartanValidation report;
    report.num_samples = num_samples;
    report.tol = tol;
    for (int s = 0; s < num_samples; ++s) {
        double norm2 = 0.0;
        for (int v = 0; v < dim; ++v) {
            x[v] = rng.next_gaussian();
            norm2 += x[v] * x[v];
        }
        // Uniform radius in the unit ball.
        double r = std::pow(rng.next_double(), 1.0 / dim) / std::sqrt(norm2);
        for (int v = 0; v < dim; ++v) x[v] *= r;
        double xx = 0.0;
        for (int v = 0; v < dim; ++v) xx += x[v] * x[v];

        double target_lap = (spec.c == 0.0) ? 0.0 : -spec.c * std::pow(xx, 0.5 * (g - 2));
        double rl = std::abs(lap(x) - target_lap);

        double g2 = 0.0;
        for (int v = 0; v < dim; ++v) {
            double gv = grad[v](x);
            g2 += gv * gv;
        }
        double rg = std::abs(g2 - g * g * std::pow(xx, g - 1));

        report.max_laplacian_residual = std::max(report.max_laplacian_residual, rl);
        report.max_gradient_residual = std::max(report.max_gradient_residual, rg);
    }
    report.pass = report.max_laplacian_residual <= tol && report.max_gradient_residual <= tol;
    return report;
}

double rho_from_point(const MultiPoly& p, const FoliationSpec& spec, std::span<const double> x) {
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    if (std::abs(norm2 - 1.0) > 2.5e-12)
        throw std::invalid_argument("rho_from_point: x is not a unit vector");
    double f = p(x);
    if (std::abs(f) > 1.0 + 1e-9)
        throw std::domain_error("rho_from_point: |p(x)| > 1, not a valid Cartan polynomial value");
    f = std::clamp(f, -1.0, 1.0);
    return std::acos(f) / spec.g;
}

double mean_curvature(const FoliationSpec& spec, double t) {
    if (!(t > 0.0 && t < spec.diameter))
        throw std::domain_error("mean_curvature: t must lie strictly inside (0, D)");
    double gt = spec.g * t;
    return -(spec.n - 1) * std::cos(gt) / std::sin(gt) + spec.c / (spec.g * std::sin(gt));
}

DensityProfile::DensityProfile(const FoliationSpec& spec)
    : spec_(spec), expo_plus_(0.5 * (spec.m0 - 1)), expo_minus_(0.5 * (spec.m1 - 1)) {
    // mu0 = int_{-1}^{1} (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
    double a = expo_plus_, b = expo_minus_;
    double mu0 = std::exp((a + b + 1) * std::numbers::ln2 + std::lgamma(a + 1.0) +
                          std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    norm_ = spec.g / mu0;
}

double DensityProfile::log_deriv(double t) const {
    double gt = spec_.g * t;
    return (spec_.n - 1) * std::cos(gt) / std::sin(gt) - spec_.c / (spec_.g * std::sin(gt));
}

double DensityProfile::theta(double t) const {
    if (t <= 0.0 || t >= spec_.diameter) return 0.0;
    double x = std::cos(spec_.g * t);
    return norm_ * std::pow(1.0 - x, expo_plus_) * std::pow(1.0 + x, expo_minus_) *
           std::sin(spec_.g * t);
}

double DensityProfile::cumulative(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= spec_.diameter) return 1.0;
    int nseg = 1 + static_cast<int>(32.0 * t / spec_.diameter);
    return gauss_legendre([this](double r) { return theta(r); }, 0.0, t, nseg);
}

std::pair<double, double> DensityProfile::endpoint_exponents() const {
    double q = static_cast<double>(spec_.n - 1) / spec_.g;
    double r = spec_.c / (spec_.g * spec_.g);
    return {q - r, q + r};
}

DensityProfile density(const FoliationSpec& spec) { return DensityProfile(spec); }

}  // namespace pompeiu
