// Command-line surface for the isoparametric-foliation verification library.
// Every command takes an explicit seed (default 42) and emits tables whose
// header comment carries the full configuration, so runs are reproducible
// byte for byte for any worker count.
//
// Exit codes: 0 all assertions in the batch passed, 2 usage or invalid
// parameters, 3 numeric failure (non-convergence or a failed verification).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>

#include "pompeiu/circle.hpp"
#include "pompeiu/content.hpp"
#include "pompeiu/harmonics.hpp"
#include "pompeiu/radial.hpp"
#include "pompeiu/report_io.hpp"
#include "pompeiu/verify.hpp"

using namespace pompeiu;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct CommonOptions {
    int n = 3, g = 2, m0 = 1, m1 = 1;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
};

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << text;
}

std::string fingerprint(const std::string& cmd, const CommonOptions& common,
                        const std::string& extra) {
    std::ostringstream ss;
    ss << "cmd=" << cmd << " n=" << common.n << " g=" << common.g << " m0=" << common.m0
       << " m1=" << common.m1 << " seed=" << common.seed;
    if (!extra.empty()) ss << ' ' << extra;
    ss << " schema=pompeiu/" << cmd << "-csv/1";
    return ss.str();
}

int run_spectrum(const CommonOptions& common, int kmax, const std::string& format) {
    FoliationSpec spec = make_foliation(common.n, common.g, common.m0, common.m1);
    auto pairs = solve_radial_spectrum(spec, kmax);
    std::string fp = fingerprint("spectrum", common, "kmax=" + std::to_string(kmax));
    if (format == "text") {
        StructuredReport rep("pompeiu/spectrum");
        rep.add("config", fp);
        for (const auto& p : pairs) {
            double closed = closed_form_spectrum(spec, p.k)[p.k];
            rep.add("lambda_" + std::to_string(p.k), p.lambda);
            rep.add("residual_" + std::to_string(p.k),
                    std::abs(p.lambda - closed) / (1.0 + closed));
        }
        emit(common.out, rep.str());
    } else {
        emit(common.out, spectrum_csv(spec, pairs, fp));
    }
    for (const auto& p : pairs) {
        double closed = static_cast<double>(spec.g) * p.k *
                        (static_cast<double>(spec.g) * p.k + spec.n - 1);
        if (std::abs(p.lambda - closed) > 1e-8 * (1.0 + closed)) {
            std::cerr << "spectrum: residual above tolerance at k=" << p.k << "\n";
            return kExitNumeric;
        }
    }
    return kExitOk;
}

int run_zeros(const CommonOptions& common, int kmax, const std::string& meta_out) {
    FoliationSpec spec = make_foliation(common.n, common.g, common.m0, common.m1);
    SolverInfo info;
    solve_radial_spectrum(spec, kmax, &info);
    auto radii = freak_set(spec, kmax);
    emit(common.out, freak_csv(spec, radii, fingerprint("zeros", common,
                                                        "kmax=" + std::to_string(kmax))));
    if (!meta_out.empty()) emit(meta_out, freak_metadata_text(spec, kmax, info));
    return kExitOk;
}

int run_polys(const CommonOptions& common, int kmax) {
    FoliationSpec spec = make_foliation(common.n, common.g, common.m0, common.m1);
    std::string csv = "# " + fingerprint("polys", common, "kmax=" + std::to_string(kmax)) + "\n";
    csv += "k,j,coefficient\n";
    char line[128];
    for (int k = 0; k <= kmax; ++k) {
        auto coeffs = gram_polynomial(spec, k);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            std::snprintf(line, sizeof line, "%d,%zu,%.17g\n", k, j, coeffs[j]);
            csv += line;
        }
    }
    emit(common.out, csv);
    return kExitOk;
}

int run_verify(const CommonOptions& common, int degree, int k, const std::string& radii_text,
               const std::string& freak_t_text, int rotations, long samples, int workers) {
    FoliationSpec spec = make_foliation(common.n, common.g, common.m0, common.m1);
    MultiPoly poly = cartan_polynomial(spec);
    VerifyConfig config;
    config.rotations = rotations;
    config.n_samples = samples;
    config.seed = common.seed;
    config.workers = workers;

    std::vector<PompeiuReport> reports;
    std::string extra = "rotations=" + std::to_string(rotations) +
                        " samples=" + std::to_string(samples) +
                        " workers=" + std::to_string(workers);
    if (!freak_t_text.empty()) {
        double t = parse_radius(freak_t_text);
        reports = verify_freak_radius(spec, poly, k, t, config);
        extra += " mode=freak k=" + std::to_string(k);
    } else {
        config.radii = parse_radius_list(radii_text);
        reports = verify_nonradial_failure(spec, poly, degree, config);
        extra += " mode=nonradial degree=" + std::to_string(degree);
    }
    emit(common.out, reports_to_csv(reports, fingerprint("verify", common, extra)));

    int failures = 0;
    for (const auto& rep : reports) {
        Verdict expected =
            rep.is_control ? Verdict::kPositiveControlNonzero : Verdict::kFailsPompeiuWitnessed;
        if (rep.verdict != expected) {
            ++failures;
            for (const auto& cell : rep.cells)
                std::cerr << "verify: unexpected cell t=" << rep.t << " rotation="
                          << cell.rotation_index << " value=" << cell.estimate.value
                          << " stderr=" << cell.estimate.std_error << " verdict="
                          << to_string(rep.verdict) << "\n";
        }
    }
    return failures == 0 ? kExitOk : kExitNumeric;
}

int run_circle(const CommonOptions& common, const std::string& alpha_over_pi,
               const std::string& alpha_text, long max_den, int arcs_k, int arcs_ell,
               const std::string& arcs_t, int offsets) {
    if (arcs_k > 0) {
        double t = arcs_t.empty() ? std::numbers::pi / (2.0 * arcs_k) : parse_radius(arcs_t);
        Rng rng(derive_stream(common.seed, {0x6f6666ULL}));
        std::vector<double> cs;
        std::string csv = "# cmd=circle mode=multi-arc k=" + std::to_string(arcs_k) +
                          " ell=" + std::to_string(arcs_ell) + " seed=" +
                          std::to_string(common.seed) + " schema=pompeiu/circle-csv/1\n";
        csv += "k,ell,t,c,cos_integral,sin_integral\n";
        char line[160];
        for (int i = 0; i < offsets; ++i) cs.push_back(rng.uniform(0.0, 2 * std::numbers::pi));
        for (double c : cs) {
            ArcFamily arcs{arcs_k, t, c};
            std::snprintf(line, sizeof line, "%d,%d,%.17g,%.17g,%.17g,%.17g\n", arcs_k, arcs_ell,
                          t, c, multi_arc_integral(arcs, arcs_ell, 1.0, 0.0),
                          multi_arc_integral(arcs, arcs_ell, 0.0, 1.0));
            csv += line;
        }
        emit(common.out, csv);
        MultiArcReport rep = multi_arc_test(arcs_k, arcs_ell, t, cs);
        if (!rep.consistent) {
            std::cerr << "circle: vanishing pattern disagrees with the divisibility rule\n";
            return kExitNumeric;
        }
        return kExitOk;
    }

    double alpha;
    if (!alpha_over_pi.empty()) {
        auto slash = alpha_over_pi.find('/');
        double num = std::stod(alpha_over_pi.substr(0, slash));
        double den = slash == std::string::npos ? 1.0 : std::stod(alpha_over_pi.substr(slash + 1));
        alpha = std::numbers::pi * num / den;
    } else if (!alpha_text.empty()) {
        alpha = parse_radius(alpha_text);
    } else {
        std::cerr << "circle: pass --alpha-over-pi or --alpha (or --k/--ell for multi-arc)\n";
        return kExitUsage;
    }
    ArcClassification cls = pompeiu_classify_arc(alpha, max_den);
    StructuredReport rep("pompeiu/classify");
    rep.add("alpha", alpha);
    rep.add("alpha_over_pi", alpha / std::numbers::pi);
    rep.add("max_denominator", static_cast<long>(cls.max_denominator));
    if (cls.fails) {
        rep.add("result", std::string("FAILS"));
        rep.add("witness", "cos(" + std::to_string(cls.witness) + "x)");
        rep.add("numerator", cls.numerator);
        rep.add("denominator", static_cast<long>(cls.witness));
    } else {
        rep.add("result", std::string("HAS_PROPERTY"));
        rep.add("note", "no rational approximation with denominator <= " +
                            std::to_string(cls.max_denominator));
        rep.add("truncation", static_cast<long>(cls.truncation));
        rep.add("min_multiplier", cls.min_multiplier);
    }
    emit(common.out, rep.str());
    return kExitOk;
}

int run_lambda2(const CommonOptions& common, const std::string& r_text,
                const std::string& sweep_text) {
    std::vector<double> rs;
    if (!sweep_text.empty())
        rs = parse_radius_list(sweep_text);
    else if (!r_text.empty())
        rs.push_back(parse_radius(r_text));
    else {
        std::cerr << "lambda2: pass --r or --sweep\n";
        return kExitUsage;
    }
    std::string csv = "# cmd=lambda2 schema=pompeiu/lambda2-csv/1\n";
    csv += "r,lambda2,bound_ok,equality\n";
    char line[128];
    bool all_ok = true;
    for (double r : rs) {
        Lambda2Result res = clifford_lambda2(r);
        std::snprintf(line, sizeof line, "%.17g,%.17g,%d,%d\n", r, res.lambda2,
                      res.bound_ok ? 1 : 0, res.equality ? 1 : 0);
        csv += line;
        all_ok = all_ok && res.bound_ok;
    }
    emit(common.out, csv);
    return all_ok ? kExitOk : kExitNumeric;
}

int run_addition(const CommonOptions& common, int ell) {
    Rng rng(derive_stream(common.seed, {0x616464ULL}));
    const int dim = common.n + 1;
    auto unit = [&]() {
        std::vector<double> x(dim);
        double norm2 = 0.0;
        for (double& v : x) {
            v = rng.next_gaussian();
            norm2 += v * v;
        }
        for (double& v : x) v /= std::sqrt(norm2);
        return x;
    };
    std::vector<double> y = unit();
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(unit());
    AdditionReport rep = addition_formula_check(common.n, ell, y, pts, common.seed);
    StructuredReport out("pompeiu/addition");
    out.add("n", static_cast<long>(common.n));
    out.add("degree", static_cast<long>(ell));
    out.add("value_at_y_residual", rep.value_at_y);
    out.add("zonal_residual", rep.zonal);
    out.add("basis_change_residual", rep.basis_change);
    out.add("radialization_residual", rep.radialization);
    emit(common.out, out.str());
    bool ok = rep.value_at_y <= 1e-9 && rep.zonal <= 1e-9 && rep.basis_change <= 1e-9;
    return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial spectra, freak radii, and Pompeiu-property verification on round spheres"};
    app.require_subcommand(1);

    CommonOptions common;
    int kmax = 10, degree = 1, radial_k = 2, rotations = 20, workers = 1;
    long samples = 1000000, max_den = 10000;
    int arcs_k = 0, arcs_ell = 1, offsets = 10;
    std::string radii = "0.3,pi/4,1.2", freak_t, format = "csv";
    std::string alpha_over_pi, alpha_text, r_text, sweep_text, arcs_t;

    auto add_common = [&](CLI::App* cmd, bool foliation) {
        if (foliation) {
            cmd->add_option("--n", common.n, "ambient sphere dimension");
            cmd->add_option("--g", common.g, "number of distinct principal curvatures");
            cmd->add_option("--m0", common.m0, "first multiplicity");
            cmd->add_option("--m1", common.m1, "second multiplicity");
        }
        cmd->add_option("--seed", common.seed, "master seed (default 42)");
        cmd->add_option("--out", common.out, "output path (default stdout)");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "closed-form vs solved radial spectrum");
    add_common(spectrum, true);
    spectrum->add_option("--kmax", kmax);
    spectrum->add_option("--format", format)->check(CLI::IsMember({"csv", "text"}));

    CLI::App* zeros = app.add_subcommand("zeros", "freak radii with provenance");
    add_common(zeros, true);
    zeros->add_option("--kmax", kmax);
    std::string meta_out;
    zeros->add_option("--meta-out", meta_out, "solver metadata block destination");

    CLI::App* polys = app.add_subcommand("polys", "radial polynomial coefficient tables");
    add_common(polys, true);
    polys->add_option("--kmax", kmax);

    CLI::App* verify = app.add_subcommand("verify", "rotated-tube integral verification");
    add_common(verify, true);
    verify->add_option("--degree", degree, "harmonic degree (nonradial mode)");
    verify->add_option("--radii", radii, "comma list, accepts fractions of pi");
    verify->add_option("--k", radial_k, "radial index (freak mode)");
    verify->add_option("--t", freak_t, "freak radius (enables freak mode)");
    verify->add_option("--rotations", rotations);
    verify->add_option("--samples", samples);
    verify->add_option("--workers", workers);

    CLI::App* circle = app.add_subcommand("circle", "arc classification and multi-arc tubes");
    add_common(circle, false);
    circle->add_option("--alpha-over-pi", alpha_over_pi, "rational like 1/3");
    circle->add_option("--alpha", alpha_text, "half-length, accepts fractions of pi");
    circle->add_option("--max-denominator", max_den);
    circle->add_option("--k", arcs_k, "multi-arc mode: foliation parameter");
    circle->add_option("--ell", arcs_ell, "multi-arc mode: test frequency");
    circle->add_option("--t", arcs_t, "multi-arc half-width");
    circle->add_option("--offsets", offsets);

    CLI::App* lambda2 = app.add_subcommand("lambda2", "Clifford-torus first positive eigenvalue");
    add_common(lambda2, false);
    lambda2->add_option("--r", r_text);
    lambda2->add_option("--sweep", sweep_text, "comma list of radii");

    CLI::App* addition = app.add_subcommand("addition", "addition-formula residuals");
    add_common(addition, true);
    addition->add_option("--ell", degree, "harmonic degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(common, kmax, format);
        if (zeros->parsed()) return run_zeros(common, kmax, meta_out);
        if (polys->parsed()) return run_polys(common, kmax);
        if (verify->parsed())
            return run_verify(common, degree, radial_k, radii, freak_t, rotations, samples,
                              workers);
        if (circle->parsed())
            return run_circle(common, alpha_over_pi, alpha_text, max_den, arcs_k, arcs_ell,
                              arcs_t, offsets);
        if (lambda2->parsed()) return run_lambda2(common, r_text, sweep_text);
        if (addition->parsed()) return run_addition(common, degree);
    } catch (const ConvergenceError& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
