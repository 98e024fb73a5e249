#include "pompeiu/quadrature_util.hpp"

#include <cmath>

namespace pompeiu {

namespace {

// 16-point Gauss-Legendre abscissae/weights on [-1, 1] (positive half).
constexpr double kGlx[8] = {
    0.0950125098376374401853, 0.2816035507792589132304,
    0.4580167776572273863424, 0.6178762444026437484467,
    0.7554044083550030338951, 0.8656312023878317438805,
    0.9445750230732325760780, 0.9894009349916499325962};
constexpr double kGlw[8] = {
    0.1894506104550684962854, 0.1826034150449235888667,
    0.1691565193950025381893, 0.1495959888165767320815,
    0.1246289712555338720525, 0.0951585116824927848099,
    0.0622535239386478928628, 0.0271524594117540948518};

double gl16(const std::function<double(double)>& f, double a, double b) {
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 8; ++i)
        sum += kGlw[i] * (f(mid + half * kGlx[i]) + f(mid - half * kGlx[i]));
    return half * sum;
}

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double fm, double whole, double tol, int depth, int max_depth) {
    if (depth > max_depth)
        throw QuadratureError("adaptive_simpson: depth limit exceeded");
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, flm);
    double right = simpson(f, m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_step(f, a, fa, m, fm, flm, left, 0.5 * tol, depth + 1, max_depth) +
           adaptive_step(f, m, fm, b, fb, frm, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b, int nseg) {
    if (nseg < 1) nseg = 1;
    double sum = 0.0;
    double h = (b - a) / nseg;
    for (int s = 0; s < nseg; ++s) sum += gl16(f, a + s * h, a + (s + 1) * h);
    return sum;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(f, a, fa, b, fb, fm);
    return adaptive_step(f, a, fa, b, fb, fm, whole, tol, 0, max_depth);
}

}  // namespace pompeiu
