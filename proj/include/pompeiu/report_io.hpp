#pragma once

#include <string>
#include <vector>

#include "pompeiu/content.hpp"
#include "pompeiu/foliation.hpp"
#include "pompeiu/radial.hpp"
#include "pompeiu/verify.hpp"

namespace pompeiu {

/// Parses a radius that may be a plain decimal or a fraction of pi
/// ("0.3", "pi", "pi/4", "2pi/3", "3*pi/8"); special radii like pi/2 stay
/// exact to the last bit this way.
double parse_radius(const std::string& text);

/// Comma-separated list of radii.
std::vector<double> parse_radius_list(const std::string& text);

/// Spectrum table: closed form next to the solved eigenvalues with residuals.
std::string spectrum_csv(const FoliationSpec& spec, const std::vector<RadialEigenpair>& pairs,
                         const std::string& fingerprint);

/// Freak-radius table, one row per contributing index k.
std::string freak_csv(const FoliationSpec& spec, const std::vector<FreakRadius>& radii,
                      const std::string& fingerprint);

/// Solver metadata block accompanying a freak-radius table: basis size,
/// accepted residual, and the fixed zero-finding tolerances.  Seed-free; the
/// same inputs always produce the same block.
std::string freak_metadata_text(const FoliationSpec& spec, int kmax, const SolverInfo& info);

/// Structured-text record of a single integral estimate.
std::string estimate_to_text(const IntegralEstimate& estimate, const std::string& fingerprint);

/// Structured-text document for one verification report.
std::string report_to_text(const PompeiuReport& report);

/// Versioned key-value report block ("schema: <name>/1" first line).
class StructuredReport {
public:
    explicit StructuredReport(const std::string& schema);
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, long value);
    std::string str() const;

private:
    std::string body_;
};

}  // namespace pompeiu
