#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pompeiu/jacobi_weight.hpp"
#include "pompeiu/radial.hpp"
#include "test_helpers.hpp"

using namespace pompeiu;

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

TEST_CASE("closed_form_spectrum known values") {
    FoliationSpec clifford = make_foliation(3, 2, 1, 1);
    CHECK(closed_form_spectrum(clifford, 3) == std::vector<double>{0, 8, 24, 48});

    FoliationSpec s2 = make_foliation(2, 1, 1, 1);
    CHECK(closed_form_spectrum(s2, 2) == std::vector<double>{0, 2, 6});

    FoliationSpec cubic = make_foliation(4, 3, 1, 1);
    CHECK(closed_form_spectrum(cubic, 1) == std::vector<double>{0, 18});
}

TEST_CASE("weight moments match direct quadrature") {
    JacobiWeight w{0.5, 1.5};
    auto mu = weight_moments(w, 8);
    for (int m = 0; m <= 8; ++m) {
        // x = cos t removes the endpoint branch points from the integrand.
        double direct = oracle::simpson(
            [&](double t) {
                double x = std::cos(t);
                return std::pow(x, m) * w(x) * std::sin(t);
            },
            0.0, std::numbers::pi, 1 << 12);
        CHECK(mu[m] == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("gauss_jacobi integrates polynomials exactly") {
    JacobiWeight w{1.0, 2.5};
    QuadratureRule rule = gauss_jacobi(w, 12);
    auto mu = weight_moments(w, 20);
    for (int m = 0; m <= 20; ++m) {
        double q = 0.0;
        for (int i = 0; i < rule.nodes.size(); ++i)
            q += rule.weights[i] * std::pow(rule.nodes[i], m);
        CHECK(q == doctest::Approx(mu[m]).epsilon(1e-12));
    }
}

TEST_CASE("solver reproduces the closed-form spectrum") {
    FoliationSpec clifford = make_foliation(3, 2, 1, 1);
    auto pairs = solve_radial_spectrum(clifford, 5);
    auto closed = closed_form_spectrum(clifford, 5);
    for (int k = 0; k <= 5; ++k)
        CHECK(std::abs(pairs[k].lambda - closed[k]) <= 1e-8 * (1.0 + closed[k]));
}

TEST_CASE("k=1 eigenfunctions in closed form") {
    // Geodesic spheres on S^2: y proportional to x (psi = cos t).
    auto s2 = solve_radial_spectrum(make_foliation(2, 1, 1, 1), 1);
    CHECK(oracle::coef_cosine(to_std(s2[1].coeffs), {0.0, 1.0}) >= 1.0 - 1e-12);

    // c = 4 case: lambda = 12 and y proportional to 1 - 3x.
    auto skew = solve_radial_spectrum(make_foliation(5, 2, 1, 3), 1);
    CHECK(skew[1].lambda == doctest::Approx(12.0).epsilon(1e-10));
    CHECK(oracle::coef_cosine(to_std(skew[1].coeffs), {1.0, -3.0}) >= 1.0 - 1e-10);
}

TEST_CASE("eigenpairs satisfy the equation on a grid and are normalized") {
    for (auto [n, g, m0, m1] : {std::tuple{2, 1, 1, 1}, {5, 2, 1, 3}, {4, 3, 1, 1}, {9, 4, 2, 2}}) {
        FoliationSpec spec = make_foliation(n, g, m0, m1);
        auto pairs = solve_radial_spectrum(spec, 10);
        QuadratureRule rule = gauss_jacobi(radial_weight(spec), 16);
        for (const auto& pair : pairs) {
            double ymax = 0.0, rmax = 0.0;
            for (int i = 0; i < 64; ++i) {
                double x = -1.0 + 2.0 * (i + 0.5) / 64.0;
                ymax = std::max(ymax, std::abs(pair.y(x)));
                rmax = std::max(rmax, std::abs(pair.equation_residual(spec, x)));
            }
            CHECK(rmax <= 1e-8 * ymax);
            CHECK(pair.coeffs.size() == pair.k + 1);

            double norm = 0.0;
            for (int i = 0; i < rule.nodes.size(); ++i) {
                double y = pair.y(rule.nodes[i]);
                norm += rule.weights[i] * y * y;
            }
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("monomial and Legendre representations agree") {
    auto pairs = solve_radial_spectrum(make_foliation(5, 2, 1, 3), 8);
    for (const auto& pair : pairs) {
        for (double x : {-0.9, -0.3, 0.1, 0.7}) {
            double horner = 0.0;
            for (int i = static_cast<int>(pair.coeffs.size()) - 1; i >= 0; --i)
                horner = horner * x + pair.coeffs[i];
            CHECK(horner == doctest::Approx(pair.y(x)).epsilon(1e-10));
        }
    }
}

TEST_CASE("recurrence_polynomial examples") {
    // S^2, k = 2: a2 = -lambda/(2 g^2) a0 = -3, giving 1 - 3x^2.
    auto r2 = recurrence_polynomial(make_foliation(2, 1, 1, 1), 2);
    CHECK(r2 == std::vector<double>{1.0, 0.0, -3.0});

    auto r0 = recurrence_polynomial(make_foliation(3, 2, 1, 1), 0);
    CHECK(r0 == std::vector<double>{1.0});

    auto r1 = recurrence_polynomial(make_foliation(3, 2, 1, 1), 1);
    CHECK(r1 == std::vector<double>{0.0, 1.0});

    CHECK_THROWS_AS(recurrence_polynomial(make_foliation(5, 2, 1, 3), 2), std::invalid_argument);
}

TEST_CASE("gram_polynomial matches the reference forms up to scale") {
    for (auto [n, g, m0, m1] : {std::tuple{2, 1, 1, 1}, {3, 2, 1, 1}, {5, 2, 1, 3}}) {
        FoliationSpec spec = make_foliation(n, g, m0, m1);
        CHECK(oracle::coef_cosine(gram_polynomial(spec, 1), oracle::reference_p1(n, g, spec.c)) >=
              1.0 - 1e-9);
        CHECK(oracle::coef_cosine(gram_polynomial(spec, 2), oracle::reference_p2(n, g, spec.c)) >=
              1.0 - 1e-9);
        CHECK(oracle::coef_cosine(gram_polynomial(spec, 3), oracle::reference_p3(n, g, spec.c)) >=
              1.0 - 1e-9);
    }
    // Spot values from the S^2 case: proportional to 12x^2 - 4.
    CHECK(oracle::coef_cosine(gram_polynomial(make_foliation(2, 1, 1, 1), 2), {-4.0, 0.0, 12.0}) >=
          1.0 - 1e-12);
}

TEST_CASE("gram_polynomial matches the weighted Rodrigues construction") {
    for (auto [n, g, m0, m1] : {std::tuple{2, 1, 1, 1}, {5, 2, 1, 3}, {4, 3, 1, 1}}) {
        FoliationSpec spec = make_foliation(n, g, m0, m1);
        JacobiWeight w = radial_weight(spec);
        for (int k = 1; k <= 4; ++k)
            CHECK(oracle::coef_cosine(gram_polynomial(spec, k),
                                      oracle::rodrigues_poly(w.alpha, w.beta, k)) >= 1.0 - 1e-9);
    }
}

TEST_CASE("odd/even parity of gram polynomials at c = 0") {
    FoliationSpec spec = make_foliation(2, 1, 1, 1);
    auto g3 = gram_polynomial(spec, 3);
    CHECK(std::abs(g3[0]) <= 1e-12);
    CHECK(std::abs(g3[2]) <= 1e-12);
    auto g4 = gram_polynomial(spec, 4);
    CHECK(std::abs(g4[1]) <= 1e-12);
    CHECK(std::abs(g4[3]) <= 1e-12);
}

TEST_CASE("triple agreement: recurrence, gram, solver") {
    for (auto [n, g, m0, m1] : {std::tuple{2, 1, 1, 1}, {3, 2, 1, 1}, {5, 2, 1, 3}}) {
        FoliationSpec spec = make_foliation(n, g, m0, m1);
        auto pairs = solve_radial_spectrum(spec, 8);
        for (int k = 0; k <= 8; ++k) {
            auto solver_coeffs = to_std(pairs[k].coeffs);
            auto gram = gram_polynomial(spec, k);
            CHECK(oracle::coef_cosine(solver_coeffs, gram) >= 1.0 - 1e-9);
            if (spec.c == 0.0) {
                auto rec = recurrence_polynomial(spec, k);
                CHECK(oracle::coef_cosine(rec, gram) >= 1.0 - 1e-9);
                CHECK(oracle::coef_cosine(rec, solver_coeffs) >= 1.0 - 1e-9);
            }
        }
    }
}

TEST_CASE("spectrum agreement across every admissible parameter set, n <= 12") {
    int tested = 0;
    for (int g : {1, 2, 3, 4, 6})
        for (int n = 2; n <= 12; ++n) {
            if ((2 * (n - 1)) % g != 0) continue;
            int total = 2 * (n - 1) / g;
            if (total < 2) continue;
            for (int m0 = 1; m0 < total; ++m0) {
                FoliationSpec spec = make_foliation(n, g, m0, total - m0);
                auto pairs = solve_radial_spectrum(spec, 10);
                auto closed = closed_form_spectrum(spec, 10);
                for (int k = 0; k <= 10; ++k)
                    CHECK(std::abs(pairs[k].lambda - closed[k]) <= 1e-8 * (1.0 + closed[k]));
                ++tested;
            }
        }
    CHECK(tested > 100);
}

TEST_CASE("the eigenvalue n of linear functions is never radial for g >= 2") {
    for (auto [n, g, m0, m1] : {std::tuple{3, 2, 1, 1}, {5, 2, 1, 3}, {4, 3, 1, 1}, {9, 4, 2, 2},
                                {13, 6, 2, 2}}) {
        FoliationSpec spec = make_foliation(n, g, m0, m1);
        auto closed = closed_form_spectrum(spec, 10);
        double mingap = 1e300;
        for (double lam : closed) mingap = std::min(mingap, std::abs(lam - n));
        CHECK(mingap > 0.0);
        // Monotone beyond the crossing: the first radial eigenvalue already
        // exceeds n, and the sequence increases.
        CHECK(closed[1] > n);
        for (int k = 1; k <= 10; ++k) CHECK(closed[k] > closed[k - 1]);
    }
}
