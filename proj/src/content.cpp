#include "pompeiu/content.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pompeiu/quadrature_util.hpp"

namespace pompeiu {

ContentFunction::ContentFunction(const FoliationSpec& spec, const RadialEigenpair& eig)
    : spec_(spec), eig_(eig), density_(spec) {
    if (eig.k < 0) throw std::invalid_argument("ContentFunction: negative radial index");
    // k = 0 doubles as the volume-fraction function: rescale the constant
    // eigenfunction to 1 so Psi(D) = 1 under the normalized density.
    if (eig.k == 0) scale_ = 1.0 / eig_.y(0.0);
    auto f = [this](double r) { return integrand(r); };
    grid_.resize(kGridSize + 1);
    grid_[0] = 0.0;
    double h = grid_step();
    for (int i = 0; i < kGridSize; ++i)
        grid_[i + 1] = grid_[i] + adaptive_simpson(f, i * h, (i + 1) * h, 1e-15);

    if (eig_.k >= 1) {
        // Sign-change scan; grid spacing D/2048 is far below the minimal gap
        // between zeros at desk-scale k.  The first and last cells are skipped
        // because Psi vanishes at both endpoints only up to quadrature noise.
        // Grid values at quadrature-noise level are zeros sitting on a node
        // (pi/2 does this); counting them as sign changes would duplicate them.
        double gmax = 0.0;
        for (double v : grid_) gmax = std::max(gmax, std::abs(v));
        const double node_eps = 1e-12 * gmax;
        for (int i = 1; i + 1 < kGridSize; ++i) {
            double a = grid_[i], b = grid_[i + 1];
            if (std::abs(a) <= node_eps) {
                zeros_.push_back(i * h);
                continue;
            }
            if (std::abs(b) <= node_eps) continue;  // handled as the next node
            if ((a < 0.0) != (b < 0.0)) zeros_.push_back(refine_zero(i * h, (i + 1) * h));
        }
        if (static_cast<int>(zeros_.size()) > eig_.k)
            throw std::runtime_error("ContentFunction: zero count exceeds the index bound");
        // Parity of the zero count must match the endpoint signs of
        // Psi' = theta psi, else the grid scan missed a sign change.
        bool even = (eig_.y(1.0) > 0.0) == (eig_.y(-1.0) < 0.0);
        if (even != (zeros_.size() % 2 == 0))
            throw std::runtime_error("ContentFunction: zero-count parity check failed");
    }
}

double ContentFunction::integrand(double t) const {
    return scale_ * density_.theta(t) * eig_.psi(t, spec_.g);
}

double ContentFunction::operator()(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= spec_.diameter) return grid_.back();
    double h = grid_step();
    int i = std::min(static_cast<int>(t / h), kGridSize - 1);
    auto f = [this](double r) { return integrand(r); };
    return grid_[i] + adaptive_simpson(f, i * h, t, 1e-15);
}

double ContentFunction::refine_zero(double lo, double hi) const {
    double flo = (*this)(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        double fmid = (*this)(mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) == (fmid < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ContentFunction::bvp_residual(double t) const {
    // Psi' = theta psi and Psi'' = theta' psi + theta psi' hold exactly, so
    // the equation residual collapses to theta psi' + lambda Psi; what is
    // being measured is the accuracy of the quadrature for Psi.
    double x = std::cos(spec_.g * t);
    double dpsi = -spec_.g * std::sin(spec_.g * t) * eig_.dy(x) * scale_;
    return density_.theta(t) * dpsi + eig_.lambda * (*this)(t);
}

ContentFunction content_function(const FoliationSpec& spec, const RadialEigenpair& eig) {
    return ContentFunction(spec, eig);
}

std::vector<FreakRadius> freak_set(const FoliationSpec& spec, int kmax) {
    if (kmax < 1) throw std::invalid_argument("freak_set: kmax must be >= 1");
    auto pairs = solve_radial_spectrum(spec, kmax);
    std::vector<FreakRadius> out;
    for (int k = 1; k <= kmax; ++k) {
        ContentFunction psi(spec, pairs[k]);
        for (double t : psi.zeros()) {
            auto near = std::find_if(out.begin(), out.end(),
                                     [&](const FreakRadius& r) { return std::abs(r.t - t) <= 1e-9; });
            if (near != out.end())
                near->ks.push_back(k);
            else
                out.push_back({t, {k}});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const FreakRadius& a, const FreakRadius& b) { return a.t < b.t; });
    std::size_t bound = static_cast<std::size_t>(kmax) * (kmax + 1) / 2;
    std::size_t total = 0;
    for (const auto& r : out) total += r.ks.size();
    if (total > bound) throw std::runtime_error("freak_set: total zero count exceeds bound");
    return out;
}

double max_freak_gap(const FoliationSpec& spec, const std::vector<FreakRadius>& radii) {
    double prev = 0.0, gap = 0.0;
    for (const auto& r : radii) {
        gap = std::max(gap, r.t - prev);
        prev = r.t;
    }
    return std::max(gap, spec.diameter - prev);
}

}  // namespace pompeiu
