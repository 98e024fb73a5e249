#include "pompeiu/circle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace pompeiu {

namespace {
constexpr double kPi = std::numbers::pi;
}

double FourierFunction::eval(double x) const {
    double s = a0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double jj = static_cast<double>(j + 1);
        s += a[j] * std::cos(jj * x) + b[j] * std::sin(jj * x);
    }
    return s;
}

FourierFunction arc_integral_coeffs(const FourierFunction& f, double alpha) {
    if (!(alpha > 0.0 && alpha < kPi))
        throw std::invalid_argument("arc_integral_coeffs: alpha must lie in (0, pi)");
    FourierFunction g;
    g.a0 = 2.0 * f.a0 * alpha;
    g.a.resize(f.a.size(), 0.0);
    g.b.resize(f.b.size(), 0.0);
    for (std::size_t idx = 0; idx < f.a.size(); ++idx) {
        double j = static_cast<double>(idx + 1);
        double m = 2.0 / j * std::sin(j * alpha);
        double cj = std::cos(j * alpha), sj = std::sin(j * alpha);
        // (2/j) sin(j a) [a_j cos(j(c+a)) + b_j sin(j(c+a))] re-expanded in c.
        g.a[idx] = m * (f.a[idx] * cj + f.b[idx] * sj);
        g.b[idx] = m * (f.b[idx] * cj - f.a[idx] * sj);
    }
    return g;
}

std::vector<std::pair<long, long>> convergents(double x, long max_denominator) {
    std::vector<std::pair<long, long>> out;
    long p0 = 0, q0 = 1;  // p_{-2}/q_{-2}
    long p1 = 1, q1 = 0;  // p_{-1}/q_{-1}
    double v = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(v);
        if (fl > 1e17) break;
        long ai = static_cast<long>(fl);
        long p2 = ai * p1 + p0;
        long q2 = ai * q1 + q0;
        if (q2 > max_denominator || q2 < 0) break;
        out.emplace_back(p2, q2);
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = v - fl;
        if (frac < 1e-18) break;
        v = 1.0 / frac;
    }
    return out;
}

ArcClassification pompeiu_classify_arc(double alpha, long max_denominator) {
    if (!(alpha > 0.0 && alpha < kPi))
        throw std::invalid_argument("pompeiu_classify_arc: alpha must lie in (0, pi)");
    if (max_denominator < 1)
        throw std::invalid_argument("pompeiu_classify_arc: max_denominator must be >= 1");
    ArcClassification out;
    out.max_denominator = max_denominator;
    const double s = alpha / kPi;

    for (auto [p, q] : convergents(s, max_denominator)) {
        if (q < 1 || p < 1) continue;
        if (std::abs(s - static_cast<double>(p) / q) < 1e-12) {
            out.fails = true;
            out.witness = static_cast<int>(q);
            out.numerator = p;
            out.rational_error = std::abs(s - static_cast<double>(p) / q);
            // The witness cos(q x) must be annihilated by the arc integral.
            FourierFunction f;
            f.a.assign(q, 0.0);
            f.b.assign(q, 0.0);
            f.a[q - 1] = 1.0;
            FourierFunction g = arc_integral_coeffs(f, alpha);
            for (int j = 0; j < q; ++j)
                out.witness_residual =
                    std::max({out.witness_residual, std::abs(g.a[j]), std::abs(g.b[j])});
            if (out.witness_residual > 1e-12)
                throw std::runtime_error(
                    "pompeiu_classify_arc: witness mode not annihilated; alpha is not the "
                    "detected rational multiple of pi");
            return out;
        }
    }

    // Injectivity of f -> g on the truncation: every multiplier
    // 2 sin(j alpha)/j is bounded away from zero.
    out.truncation = 32;
    out.min_multiplier = 2.0 * alpha;  // the constant-term multiplier
    for (int j = 1; j <= out.truncation; ++j)
        out.min_multiplier =
            std::min(out.min_multiplier, std::abs(2.0 / j * std::sin(j * alpha)));
    // Image coefficients below 1e-12 force every source coefficient below
    // 1e-12 / min_multiplier; injectivity at the stated thresholds needs that
    // bound under 1e-9.
    out.injective_truncation = out.min_multiplier > 0.0 && 1e-12 / out.min_multiplier < 1e-9;
    return out;
}

double ArcFamily::center(int j) const { return offset + kPi / (2.0 * k) + 2.0 * kPi * j / k; }

bool ArcFamily::contains(double x) const {
    for (int j = 0; j < k; ++j) {
        double d = std::remainder(x - center(j), 2.0 * kPi);
        if (std::abs(d) < t) return true;
    }
    return false;
}

double multi_arc_integral(const ArcFamily& arcs, int ell, double acoef, double bcoef) {
    // Antiderivative of a cos(lx) + b sin(lx) is (a/l) sin(lx) - (b/l) cos(lx).
    double sum = 0.0;
    for (int j = 0; j < arcs.k; ++j) {
        double hi = arcs.center(j) + arcs.t;
        double lo = arcs.center(j) - arcs.t;
        sum += acoef / ell * (std::sin(ell * hi) - std::sin(ell * lo)) -
               bcoef / ell * (std::cos(ell * hi) - std::cos(ell * lo));
    }
    return sum;
}

MultiArcReport multi_arc_test(int k, int ell, double t, std::span<const double> offsets) {
    if (k < 2) throw std::invalid_argument("multi_arc_test: k must be >= 2");
    if (ell < 1) throw std::invalid_argument("multi_arc_test: ell must be >= 1");
    if (!(t > 0.0 && t < kPi / k))
        throw std::invalid_argument("multi_arc_test: t must lie in (0, pi/k)");
    MultiArcReport report;
    report.k = k;
    report.ell = ell;
    report.t = t;
    for (double c : offsets) {
        ArcFamily arcs{k, t, c};
        report.max_abs_integral =
            std::max({report.max_abs_integral, std::abs(multi_arc_integral(arcs, ell, 1.0, 0.0)),
                      std::abs(multi_arc_integral(arcs, ell, 0.0, 1.0))});
    }
    report.vanishes = report.max_abs_integral <= 1e-14;
    report.divisibility = (ell % k == 0);
    report.consistent = report.vanishes == !report.divisibility;
    // Radial-spectrum analogy with n = 1, g = k: l^2 is radial iff l = k m,
    // i.e. l(l+n-1) = l^2 lies in {g m (g m + n - 1)} = {k^2 m^2}.
    bool radial = false;
    for (int m = 0; k * m <= ell; ++m)
        if (static_cast<long>(k) * m * k * m == static_cast<long>(ell) * ell) radial = true;
    report.spectrum_analogy = (radial == report.divisibility);
    return report;
}

}  // namespace pompeiu
