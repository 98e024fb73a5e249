#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pompeiu {

/// Finite Fourier truncation a0 + sum_j (a_j cos(jx) + b_j sin(jx)).
struct FourierFunction {
    double a0 = 0.0;
    std::vector<double> a;  ///< cosine coefficients, index j-1
    std::vector<double> b;  ///< sine coefficients, index j-1

    int max_index() const { return static_cast<int>(a.size()); }
    double eval(double x) const;
};

/// Exact coefficients of g(c) = int_c^{c+2 alpha} f: the constant term is
/// 2 a0 alpha and the j-th pair is (2/j) sin(j alpha) times the (a_j, b_j)
/// pair rotated by angle j alpha.
FourierFunction arc_integral_coeffs(const FourierFunction& f, double alpha);

struct ArcClassification {
    bool fails = false;
    int witness = 0;          ///< denominator n: cos(n x) integrates to zero on all arcs
    long numerator = 0;       ///< alpha/pi = numerator/witness when fails
    long max_denominator = 0; ///< rationality search cap (always reported)
    double rational_error = 0.0;    ///< |alpha/pi - m/n| for the accepted rational
    double witness_residual = 0.0;  ///< largest image coefficient of the witness mode
    double min_multiplier = 0.0;    ///< smallest |2 sin(j alpha)/j| over j <= J, fails = false
    int truncation = 0;             ///< J used for the injectivity statement
    bool injective_truncation = false;  ///< image coefficients < 1e-12 force f below 1e-9
};

/// Arcs of half-length alpha fail the Pompeiu property exactly when alpha/pi
/// is rational; rationality is decided by continued-fraction convergents with
/// denominator <= max_denominator (undecidable from a float without a cap, so
/// the cap is part of the verdict).
ArcClassification pompeiu_classify_arc(double alpha, long max_denominator = 10000);

/// Union of k arcs of half-width t centered 2 pi / k apart (the tube of the
/// foliation by cos(k x), one arc per focal point), offset by c.
struct ArcFamily {
    int k = 1;
    double t = 0.0;
    double offset = 0.0;

    double center(int j) const;
    double total_measure() const { return 2.0 * k * t; }
    bool contains(double x) const;
};

/// Exact integral of a cos(l x) + b sin(l x) over the k-arc tube, by the
/// closed-form antiderivative.
double multi_arc_integral(const ArcFamily& arcs, int ell, double acoef, double bcoef);

struct MultiArcReport {
    int k = 0;
    int ell = 0;
    double t = 0.0;
    double max_abs_integral = 0.0;
    bool vanishes = false;        ///< all offsets vanish to 1e-14
    bool divisibility = false;    ///< k divides l
    bool consistent = false;      ///< vanishes == !divisibility
    bool spectrum_analogy = false;///< matches the n=1, g=k radial-spectrum rule
};

/// Integrates cos(l x) and sin(l x) tubes over every offset and checks the
/// vanish-iff-k-does-not-divide-l rule, cross-checked against the sphere
/// radial-spectrum analogy with n = 1, g = k.
MultiArcReport multi_arc_test(int k, int ell, double t, std::span<const double> offsets);

/// Continued-fraction convergents p/q of x with q <= max_denominator.
std::vector<std::pair<long, long>> convergents(double x, long max_denominator);

}  // namespace pompeiu
