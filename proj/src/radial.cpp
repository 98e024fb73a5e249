#include "pompeiu/radial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace pompeiu {

namespace {

struct OperatorData {
    double drift;  // c / g^2
    double slope;  // (n-1)/g + 1
    double scale;  // g^2
};

OperatorData operator_data(const FoliationSpec& spec) {
    double g = spec.g;
    return {spec.c / (g * g), (spec.n - 1) / g + 1.0, g * g};
}

// Monomial coefficient vectors of P_0..P_N for weight exponents (a, b),
// via the same three-term recurrence as jacobi_values.
std::vector<Eigen::VectorXd> jacobi_monomials(double a, double b, int N) {
    std::vector<Eigen::VectorXd> mono(N + 1);
    mono[0] = Eigen::VectorXd::Zero(N + 1);
    mono[0][0] = 1.0;
    if (N >= 1) {
        mono[1] = Eigen::VectorXd::Zero(N + 1);
        mono[1][0] = 0.5 * (a - b);
        mono[1][1] = 0.5 * (a + b + 2.0);
    }
    for (int n = 1; n < N; ++n) {
        double s = 2.0 * n + a + b;
        double c1 = 2.0 * (n + 1.0) * (n + a + b + 1.0) * s;
        double cx = (s + 1.0) * (s + 2.0) * s;
        double c0 = (s + 1.0) * (a * a - b * b);
        double cm = 2.0 * (n + a) * (n + b) * (s + 2.0);
        Eigen::VectorXd next = Eigen::VectorXd::Zero(N + 1);
        for (int j = 0; j <= n; ++j) {
            next[j] += c0 * mono[n][j];
            next[j + 1] += cx * mono[n][j];
        }
        next -= cm * mono[n - 1];
        mono[n + 1] = next / c1;
    }
    return mono;
}

struct GalerkinSolve {
    std::vector<RadialEigenpair> pairs;
    double max_residual = 0.0;
};

double grid_residual(const RadialEigenpair& pair, const FoliationSpec& spec) {
    double ymax = 0.0, rmax = 0.0;
    for (int i = 0; i < 64; ++i) {
        double x = -1.0 + 2.0 * (i + 0.5) / 64.0;
        ymax = std::max(ymax, std::abs(pair.y(x)));
        rmax = std::max(rmax, std::abs(pair.equation_residual(spec, x)));
    }
    return rmax / std::max(ymax, 1e-300);
}

GalerkinSolve solve_at_order(const FoliationSpec& spec, int kmax, int N) {
    const JacobiWeight w = radial_weight(spec);
    const OperatorData op = operator_data(spec);
    const double a = w.alpha, b = w.beta;
    const std::vector<double> norms = jacobi_norms(a, b, N);

    // Mass matrix under w and stiffness under (1-x)^{a+1}(1+x)^{b+1}; both
    // integrands are polynomials, so the Gauss rules below are exact.
    QuadratureRule qm = gauss_jacobi(w, N + 2);
    QuadratureRule qk = gauss_jacobi({a + 1.0, b + 1.0}, N + 2);

    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N + 1, N + 1);
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(N + 1, N + 1);
    std::vector<double> p(N + 1), dp(N + 1);
    for (int q = 0; q < qm.nodes.size(); ++q) {
        jacobi_values(a, b, N, qm.nodes[q], p);
        double wq = qm.weights[q];
        for (int i = 0; i <= N; ++i)
            for (int j = i; j <= N; ++j) M(i, j) += wq * p[i] / norms[i] * p[j] / norms[j];
    }
    for (int q = 0; q < qk.nodes.size(); ++q) {
        // phi_i' = (i+a+b+1)/2 * P_{i-1}^{(a+1,b+1)} / norms[i]
        jacobi_values(a + 1.0, b + 1.0, N, qk.nodes[q], dp);
        double wq = qk.weights[q];
        for (int i = 1; i <= N; ++i)
            for (int j = i; j <= N; ++j) {
                double di = 0.5 * (i + a + b + 1.0) * dp[i - 1] / norms[i];
                double dj = 0.5 * (j + a + b + 1.0) * dp[j - 1] / norms[j];
                K(i, j) += wq * di * dj;
            }
    }
    M = M.selfadjointView<Eigen::Upper>();
    K = K.selfadjointView<Eigen::Upper>();

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(K, M);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("solve_radial_spectrum: generalized eigensolver failed");

    const std::vector<Eigen::VectorXd> mono = jacobi_monomials(a, b, kmax);
    GalerkinSolve out;
    out.pairs.reserve(kmax + 1);
    for (int k = 0; k <= kmax; ++k) {
        RadialEigenpair pair;
        pair.k = k;
        pair.lambda = op.scale * solver.eigenvalues()[k];
        pair.alpha = a;
        pair.beta = b;
        Eigen::VectorXd v = solver.eigenvectors().col(k);  // normalized v^T M v = 1

        // The k-th eigenfunction is a degree-k polynomial; components above
        // degree k are discretization noise.
        double tail = v.size() > k + 1 ? v.tail(v.size() - (k + 1)).cwiseAbs().maxCoeff() : 0.0;
        double head = v.head(k + 1).cwiseAbs().maxCoeff();
        pair.basis_coeffs = v.head(k + 1);
        for (int j = 0; j <= k; ++j) pair.basis_coeffs[j] /= norms[j];
        pair.coeffs = Eigen::VectorXd::Zero(k + 1);
        for (int j = 0; j <= k; ++j) pair.coeffs += pair.basis_coeffs[j] * mono[j].head(k + 1);
        if (pair.coeffs[k] < 0.0) {
            pair.basis_coeffs = -pair.basis_coeffs;
            pair.coeffs = -pair.coeffs;
        }
        double res = grid_residual(pair, spec);
        out.max_residual = std::max(out.max_residual, std::max(res, tail / head));
        out.pairs.push_back(std::move(pair));
    }
    return out;
}

}  // namespace

void jacobi_values(double a, double b, int N, double x, std::vector<double>& out) {
    out.resize(N + 1);
    out[0] = 1.0;
    if (N >= 1) out[1] = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for (int n = 1; n < N; ++n) {
        double s = 2.0 * n + a + b;
        double c1 = 2.0 * (n + 1.0) * (n + a + b + 1.0) * s;
        double cx = (s + 1.0) * ((a * a - b * b) + (s + 2.0) * s * x);
        double cm = 2.0 * (n + a) * (n + b) * (s + 2.0);
        out[n + 1] = (cx * out[n] - cm * out[n - 1]) / c1;
    }
}

std::vector<double> jacobi_norms(double a, double b, int N) {
    std::vector<double> norms(N + 1);
    for (int k = 0; k <= N; ++k) {
        double logh = (a + b + 1.0) * std::numbers::ln2 - std::log(2.0 * k + a + b + 1.0) +
                      std::lgamma(k + a + 1.0) + std::lgamma(k + b + 1.0) -
                      std::lgamma(k + a + b + 1.0) - std::lgamma(k + 1.0);
        norms[k] = std::exp(0.5 * logh);
    }
    return norms;
}

std::vector<double> closed_form_spectrum(const FoliationSpec& spec, int kmax) {
    if (kmax < 0) throw std::invalid_argument("closed_form_spectrum: kmax must be >= 0");
    std::vector<double> values(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        values[k] = static_cast<double>(spec.g) * k * (static_cast<double>(spec.g) * k + spec.n - 1);
    return values;
}

double RadialEigenpair::y(double x) const {
    const int K = static_cast<int>(basis_coeffs.size()) - 1;
    std::vector<double> p;
    jacobi_values(alpha, beta, K, x, p);
    double s = 0.0;
    for (int j = 0; j <= K; ++j) s += basis_coeffs[j] * p[j];
    return s;
}

double RadialEigenpair::dy(double x) const {
    const int K = static_cast<int>(basis_coeffs.size()) - 1;
    if (K < 1) return 0.0;
    std::vector<double> p;
    jacobi_values(alpha + 1.0, beta + 1.0, K - 1, x, p);
    double s = 0.0;
    for (int j = 1; j <= K; ++j)
        s += basis_coeffs[j] * 0.5 * (j + alpha + beta + 1.0) * p[j - 1];
    return s;
}

double RadialEigenpair::d2y(double x) const {
    const int K = static_cast<int>(basis_coeffs.size()) - 1;
    if (K < 2) return 0.0;
    std::vector<double> p;
    jacobi_values(alpha + 2.0, beta + 2.0, K - 2, x, p);
    double s = 0.0;
    for (int j = 2; j <= K; ++j)
        s += basis_coeffs[j] * 0.25 * (j + alpha + beta + 1.0) * (j + alpha + beta + 2.0) *
             p[j - 2];
    return s;
}

double RadialEigenpair::psi(double t, int g) const { return y(std::cos(g * t)); }

double RadialEigenpair::equation_residual(const FoliationSpec& spec, double x) const {
    OperatorData op = operator_data(spec);
    return (1.0 - x * x) * d2y(x) + (op.drift - op.slope * x) * dy(x) + lambda / op.scale * y(x);
}

std::vector<RadialEigenpair> solve_radial_spectrum(const FoliationSpec& spec, int kmax,
                                                   SolverInfo* info) {
    if (kmax < 0) throw std::invalid_argument("solve_radial_spectrum: kmax must be >= 0");
    const double tol = 1e-8;
    int N = kmax + 32;
    GalerkinSolve first = solve_at_order(spec, kmax, N);
    GalerkinSolve* result = &first;
    int used = N;
    GalerkinSolve second;
    if (first.max_residual > tol) {
        second = solve_at_order(spec, kmax, 2 * N);
        result = &second;
        used = 2 * N;
        if (second.max_residual > tol) {
            std::ostringstream msg;
            msg << "solve_radial_spectrum: residual above " << tol << " at N=" << N << " ("
                << first.max_residual << ") and N=" << 2 * N << " (" << second.max_residual << ")";
            throw ConvergenceError(msg.str());
        }
    }
    if (info) {
        info->basis_degree = used;
        info->max_residual = result->max_residual;
        info->residual_tolerance = tol;
    }
    // Simplicity of the spectrum (the ODE problem has simple eigenvalues).
    for (std::size_t i = 1; i < result->pairs.size(); ++i) {
        double gap = result->pairs[i].lambda - result->pairs[i - 1].lambda;
        if (!(gap > 1e-6 * result->pairs[i].lambda))
            throw ConvergenceError("solve_radial_spectrum: eigenvalue gap below 1e-6 lambda");
    }
    return std::move(result->pairs);
}

std::vector<double> recurrence_polynomial(const FoliationSpec& spec, int k) {
    if (spec.c != 0.0)
        throw std::invalid_argument(
            "recurrence_polynomial: only c = 0 is supported, use gram_polynomial");
    if (k < 0) throw std::invalid_argument("recurrence_polynomial: k must be >= 0");
    double q = static_cast<double>(spec.n - 1) / spec.g;
    double mu = static_cast<double>(k) * (k + q);  // lambda / g^2
    std::vector<double> a(k + 1, 0.0);
    a[k % 2] = 1.0;
    for (int j = k % 2; j + 2 <= k; j += 2)
        a[j + 2] = (j * (j + q) - mu) / ((j + 2.0) * (j + 1.0)) * a[j];
    return a;
}

std::vector<double> gram_polynomial(const FoliationSpec& spec, int k) {
    if (k < 0) throw std::invalid_argument("gram_polynomial: k must be >= 0");
    const JacobiWeight w = radial_weight(spec);
    const std::vector<double> mu = weight_moments(w, 2 * k + 2);
    auto inner = [&](const std::vector<double>& u, const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (u[i] != 0.0 && v[j] != 0.0) s += u[i] * v[j] * mu[i + j];
        return s;
    };
    // Modified Gram-Schmidt on 1, x, ..., x^k with one re-orthogonalization
    // pass; the moment matrix is ill-conditioned, the second pass buys a few
    // extra digits at moderate degree.
    std::vector<std::vector<double>> basis;
    for (int d = 0; d <= k; ++d) {
        std::vector<double> v(d + 1, 0.0);
        v[d] = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : basis) {
                double proj = inner(v, u);
                for (std::size_t i = 0; i < u.size(); ++i) v[i] -= proj * u[i];
            }
        double norm = std::sqrt(inner(v, v));
        for (double& vi : v) vi /= norm;
        basis.push_back(std::move(v));
    }
    return basis[k];
}

}  // namespace pompeiu
