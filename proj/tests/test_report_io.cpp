#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "pompeiu/report_io.hpp"

using namespace pompeiu;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("radius parsing handles decimals and fractions of pi") {
    CHECK(parse_radius("0.3") == 0.3);
    CHECK(parse_radius("pi") == kPi);
    CHECK(parse_radius("pi/4") == kPi / 4);
    CHECK(parse_radius("2pi/3") == 2 * kPi / 3);
    CHECK(parse_radius("3*pi/8") == 3 * kPi / 8);
    CHECK(parse_radius(" pi / 2 ") == kPi / 2);
    CHECK_THROWS_AS(parse_radius("pie"), std::invalid_argument);
    CHECK_THROWS_AS(parse_radius(""), std::invalid_argument);

    auto radii = parse_radius_list("0.3,pi/4,1.2");
    REQUIRE(radii.size() == 3);
    CHECK(radii[1] == kPi / 4);
}

TEST_CASE("spectrum CSV embeds the fingerprint and one row per k") {
    FoliationSpec spec = make_foliation(3, 2, 1, 1);
    auto pairs = solve_radial_spectrum(spec, 3);
    std::string csv = spectrum_csv(spec, pairs, "cmd=spectrum n=3 g=2 seed=42");
    CHECK(csv.find("# cmd=spectrum n=3 g=2 seed=42\n") == 0);
    CHECK(csv.find("k,lambda_closed_form,lambda_solved,residual") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 4);
}

TEST_CASE("freak CSV rows carry provenance") {
    FoliationSpec spec = make_foliation(2, 1, 1, 1);
    auto radii = freak_set(spec, 2);
    std::string csv = freak_csv(spec, radii, "cmd=zeros");
    CHECK(csv.find(",2,6,") != std::string::npos);  // k=2, lambda=6
}

TEST_CASE("structured report schema line") {
    StructuredReport rep("pompeiu/classify");
    rep.add("alpha", 0.5);
    rep.add("witness", 3L);
    std::string s = rep.str();
    CHECK(s.find("schema: pompeiu/classify/1\n") == 0);
    CHECK(s.find("witness: 3\n") != std::string::npos);
}

TEST_CASE("solver metadata block") {
    FoliationSpec spec = make_foliation(2, 1, 1, 1);
    SolverInfo info;
    solve_radial_spectrum(spec, 4, &info);
    CHECK(info.basis_degree == 36);
    CHECK(info.max_residual <= info.residual_tolerance);
    std::string text = freak_metadata_text(spec, 4, info);
    CHECK(text.find("schema: pompeiu/zeros-meta/1\n") == 0);
    CHECK(text.find("basis_degree: 36") != std::string::npos);
    CHECK(text.find("bisection_tolerance") != std::string::npos);
}

TEST_CASE("integral estimate and verify report serialize to structured text") {
    IntegralEstimate est;
    est.value = 0.25;
    est.std_error = 0.01;
    est.n_samples = 1000;
    est.seed = 42;
    std::string text = estimate_to_text(est, "cmd=demo");
    CHECK(text.find("schema: pompeiu/integral-estimate/1\n") == 0);
    CHECK(text.find("seed: 42") != std::string::npos);
    CHECK(text.find("n_samples: 1000") != std::string::npos);

    PompeiuReport rep;
    rep.spec = make_foliation(3, 2, 1, 1);
    rep.t = 0.5;
    rep.degree = 1;
    rep.harmonic_index = 2;
    rep.lambda = 3.0;
    rep.cells.push_back({0, est});
    rep.verdict = Verdict::kFailsPompeiuWitnessed;
    std::string doc = report_to_text(rep);
    CHECK(doc.find("schema: pompeiu/verify-report/1\n") == 0);
    CHECK(doc.find("verdict: FAILS_POMPEIU_WITNESSED") != std::string::npos);
    CHECK(doc.find("rotation_0:") != std::string::npos);
}
