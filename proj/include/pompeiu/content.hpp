#pragma once

#include <vector>

#include "pompeiu/foliation.hpp"
#include "pompeiu/radial.hpp"

namespace pompeiu {

/// Psi_k(t) = int_0^t theta(r) psi_k(r) dr for the normalized density, the
/// integral of the k-th radial eigenfunction over the tube of radius t (up to
/// the fixed geometric constant that does not move zeros).  Interior zeros
/// are located by a sign-change scan on a 2048-point uniform grid followed by
/// bisection to 1e-12 in t.
class ContentFunction {
public:
    ContentFunction(const FoliationSpec& spec, const RadialEigenpair& eig);

    const FoliationSpec& spec() const { return spec_; }
    int k() const { return eig_.k; }
    double lambda() const { return eig_.lambda; }
    const RadialEigenpair& eigenpair() const { return eig_; }

    double operator()(double t) const;

    /// theta(t) psi(t), the derivative of the content function.
    double integrand(double t) const;

    /// Sorted interior zero set S_k, empty for k = 0 (the monotone
    /// volume-fraction case, allowed but without zeros by construction).
    const std::vector<double>& zeros() const { return zeros_; }

    /// Residual of Psi'' - (theta'/theta) Psi' + lambda Psi at t, reduced to
    /// theta psi' + lambda Psi by the exact derivative relations.
    double bvp_residual(double t) const;

private:
    FoliationSpec spec_;
    RadialEigenpair eig_;
    DensityProfile density_;
    double scale_ = 1.0;  // 1/y_0 for k = 0, so that Psi is the volume fraction
    std::vector<double> grid_;  // cumulative values at i * D / kGridSize
    std::vector<double> zeros_;

    static constexpr int kGridSize = 2048;
    double grid_step() const { return spec_.diameter / kGridSize; }
    double refine_zero(double lo, double hi) const;
};

ContentFunction content_function(const FoliationSpec& spec, const RadialEigenpair& eig);

/// One freak radius with every radial index whose content function vanishes
/// there (indices merged with a 1e-9 tolerance in t).
struct FreakRadius {
    double t = 0.0;
    std::vector<int> ks;
};

/// Union of the zero sets S_1 .. S_kmax with provenance, sorted by t.
std::vector<FreakRadius> freak_set(const FoliationSpec& spec, int kmax);

/// Largest gap between consecutive elements of {0} u {t : freak radius} u {D}.
double max_freak_gap(const FoliationSpec& spec, const std::vector<FreakRadius>& radii);

}  // namespace pompeiu
