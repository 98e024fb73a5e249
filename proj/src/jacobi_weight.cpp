#include "pompeiu/jacobi_weight.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pompeiu {

double JacobiWeight::mu0() const {
    return std::exp((alpha + beta + 1) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                    std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

double JacobiWeight::operator()(double x) const {
    return std::pow(1.0 - x, alpha) * std::pow(1.0 + x, beta);
}

JacobiWeight radial_weight(const FoliationSpec& spec) {
    double q = static_cast<double>(spec.n - 1) / spec.g;
    double r = spec.c / (spec.g * spec.g);
    return {0.5 * (q - r) - 0.5, 0.5 * (q + r) - 0.5};
}

std::vector<double> weight_moments(const JacobiWeight& w, int mmax) {
    if (mmax < 0) throw std::invalid_argument("weight_moments: mmax must be >= 0");
    std::vector<double> mu(mmax + 1);
    double a = w.alpha, b = w.beta;
    mu[0] = w.mu0();
    if (mmax >= 1) mu[1] = (b - a) / (a + b + 2.0) * mu[0];
    for (int m = 1; m < mmax; ++m)
        mu[m + 1] = (m * mu[m - 1] + (b - a) * mu[m]) / (m + 2.0 + a + b);
    return mu;
}

QuadratureRule gauss_jacobi(const JacobiWeight& w, int npoints) {
    if (npoints < 1) throw std::invalid_argument("gauss_jacobi: npoints must be >= 1");
    double a = w.alpha, b = w.beta;
    Eigen::VectorXd diag(npoints), sub(npoints > 1 ? npoints - 1 : 1);
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < npoints; ++k) {
        double s = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (s * (s + 2.0));
    }
    for (int k = 1; k < npoints; ++k) {
        double s = 2.0 * k + a + b;
        double bk = 4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0));
        sub[k - 1] = std::sqrt(bk);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(std::max(npoints - 1, 0)),
                                  Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi: tridiagonal eigen-decomposition failed");
    QuadratureRule rule;
    rule.nodes = solver.eigenvalues();
    rule.weights.resize(npoints);
    double mu0 = w.mu0();
    for (int i = 0; i < npoints; ++i) {
        double first = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * first * first;
    }
    return rule;
}

}  // namespace pompeiu
