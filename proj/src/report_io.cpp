#include "pompeiu/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pompeiu {

double parse_radius(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
    if (s.empty()) throw std::invalid_argument("parse_radius: empty token");
    auto pos = s.find("pi");
    if (pos == std::string::npos) {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("parse_radius: bad token '" + text + "'");
        return v;
    }
    double coef = 1.0;
    if (pos > 0) coef = std::stod(s.substr(0, pos));
    double den = 1.0;
    std::string rest = s.substr(pos + 2);
    if (!rest.empty()) {
        if (rest[0] != '/') throw std::invalid_argument("parse_radius: bad token '" + text + "'");
        den = std::stod(rest.substr(1));
    }
    return coef * std::numbers::pi / den;
}

std::vector<double> parse_radius_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(parse_radius(token));
    if (out.empty()) throw std::invalid_argument("parse_radius_list: no radii in '" + text + "'");
    return out;
}

std::string spectrum_csv(const FoliationSpec& spec, const std::vector<RadialEigenpair>& pairs,
                         const std::string& fingerprint) {
    std::string out = "# " + fingerprint + "\n";
    out += "k,lambda_closed_form,lambda_solved,residual\n";
    char line[256];
    for (const RadialEigenpair& p : pairs) {
        double closed = static_cast<double>(spec.g) * p.k * (static_cast<double>(spec.g) * p.k + spec.n - 1);
        std::snprintf(line, sizeof line, "%d,%.17g,%.17g,%.3e\n", p.k, closed, p.lambda,
                      std::abs(p.lambda - closed) / (1.0 + closed));
        out += line;
    }
    return out;
}

std::string freak_csv(const FoliationSpec& spec, const std::vector<FreakRadius>& radii,
                      const std::string& fingerprint) {
    std::string out = "# " + fingerprint + "\n";
    out += "n,g,m0,m1,k,lambda,t_zero\n";
    char line[256];
    for (const FreakRadius& r : radii)
        for (int k : r.ks) {
            double lambda =
                static_cast<double>(spec.g) * k * (static_cast<double>(spec.g) * k + spec.n - 1);
            std::snprintf(line, sizeof line, "%d,%d,%d,%d,%d,%.17g,%.17g\n", spec.n, spec.g,
                          spec.m0, spec.m1, k, lambda, r.t);
            out += line;
        }
    return out;
}

StructuredReport::StructuredReport(const std::string& schema) {
    body_ = "schema: " + schema + "/1\n";
}

void StructuredReport::add(const std::string& key, const std::string& value) {
    body_ += key + ": " + value + "\n";
}

void StructuredReport::add(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    add(key, std::string(buf));
}

void StructuredReport::add(const std::string& key, long value) {
    add(key, std::to_string(value));
}

std::string StructuredReport::str() const { return body_; }

std::string freak_metadata_text(const FoliationSpec& spec, int kmax, const SolverInfo& info) {
    StructuredReport rep("pompeiu/zeros-meta");
    rep.add("n", static_cast<long>(spec.n));
    rep.add("g", static_cast<long>(spec.g));
    rep.add("m0", static_cast<long>(spec.m0));
    rep.add("m1", static_cast<long>(spec.m1));
    rep.add("kmax", static_cast<long>(kmax));
    rep.add("basis_degree", static_cast<long>(info.basis_degree));
    rep.add("max_equation_residual", info.max_residual);
    rep.add("residual_tolerance", info.residual_tolerance);
    rep.add("scan_grid_size", 2048L);
    rep.add("bisection_tolerance", 1e-12);
    rep.add("dedup_tolerance", 1e-9);
    return rep.str();
}

std::string estimate_to_text(const IntegralEstimate& estimate, const std::string& fingerprint) {
    StructuredReport rep("pompeiu/integral-estimate");
    rep.add("fingerprint", fingerprint);
    rep.add("value", estimate.value);
    rep.add("stderr", estimate.std_error);
    rep.add("n_samples", static_cast<long>(estimate.n_samples));
    rep.add("seed", static_cast<long>(estimate.seed));
    return rep.str();
}

std::string report_to_text(const PompeiuReport& report) {
    StructuredReport rep("pompeiu/verify-report");
    rep.add("n", static_cast<long>(report.spec.n));
    rep.add("g", static_cast<long>(report.spec.g));
    rep.add("m0", static_cast<long>(report.spec.m0));
    rep.add("m1", static_cast<long>(report.spec.m1));
    rep.add("t", report.t);
    if (report.radial_k >= 0)
        rep.add("radial_k", static_cast<long>(report.radial_k));
    else {
        rep.add("degree", static_cast<long>(report.degree));
        rep.add("harmonic_index", static_cast<long>(report.harmonic_index));
    }
    rep.add("lambda", report.lambda);
    rep.add("control", static_cast<long>(report.is_control ? 1 : 0));
    rep.add("threshold", report.threshold);
    rep.add("verdict", to_string(report.verdict));
    for (const RotationCell& cell : report.cells) {
        std::string key = "rotation_" + std::to_string(cell.rotation_index);
        char buf[160];
        std::snprintf(buf, sizeof buf, "value=%.17g stderr=%.17g z=%.6f", cell.estimate.value,
                      cell.estimate.std_error, cell.estimate.z());
        rep.add(key, std::string(buf));
    }
    return rep.str();
}

}  // namespace pompeiu
