#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include <sstream>

#include "pompeiu/harmonics.hpp"
#include "pompeiu/rng.hpp"
#include "test_helpers.hpp"

using namespace pompeiu;

namespace {

constexpr double kPi = std::numbers::pi;

double gram_entry(int n, const MultiPoly& u, const MultiPoly& v) {
    MultiPoly prod = u * v;
    double s = 0.0;
    for (const auto& [e, c] : prod.terms()) s += c * sphere_moment(n, e);
    return s;
}

std::vector<double> random_unit(Rng& rng, int dim) {
    std::vector<double> x(dim);
    double norm2 = 0.0;
    for (double& v : x) {
        v = rng.next_gaussian();
        norm2 += v * v;
    }
    for (double& v : x) v /= std::sqrt(norm2);
    return x;
}

}  // namespace

TEST_CASE("sphere volume and moments") {
    CHECK(sphere_volume(2) == doctest::Approx(4 * kPi).epsilon(1e-14));
    CHECK(sphere_volume(3) == doctest::Approx(2 * kPi * kPi).epsilon(1e-14));

    CHECK(sphere_moment(2, std::vector<int>{0, 0, 0}) == doctest::Approx(4 * kPi));
    CHECK(sphere_moment(2, std::vector<int>{2, 0, 0}) == doctest::Approx(4 * kPi / 3));
    CHECK(sphere_moment(2, std::vector<int>{4, 0, 0}) == doctest::Approx(4 * kPi / 5));
    CHECK(sphere_moment(2, std::vector<int>{1, 2, 0}) == 0.0);
    CHECK(sphere_moment(3, std::vector<int>{2, 0, 0, 0}) ==
          doctest::Approx(2 * kPi * kPi / 4));
}

TEST_CASE("harmonic dimensions") {
    CHECK(harmonic_dimension(2, 0) == 1);
    CHECK(harmonic_dimension(2, 1) == 3);
    CHECK(harmonic_dimension(2, 2) == 5);
    CHECK(harmonic_dimension(3, 3) == 16);
    CHECK(harmonic_dimension(4, 2) == 14);
    CHECK(harmonic_basis(2, 2).multiplicity == 5);
    CHECK(harmonic_basis(3, 3).multiplicity == 16);
    CHECK_THROWS_AS(harmonic_basis(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(harmonic_basis(3, 9), std::invalid_argument);
}

TEST_CASE("bases are homogeneous, harmonic, and orthonormal") {
    for (auto [n, ell] : {std::pair{2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}}) {
        EigenBasis basis = harmonic_basis(n, ell);
        for (const MultiPoly& u : basis.basis) {
            CHECK(u.is_homogeneous());
            CHECK(u.degree() == ell);
            CHECK(u.laplacian().max_abs_coef() <= 1e-10 * std::max(1.0, u.max_abs_coef()));
        }
        for (int i = 0; i < basis.multiplicity; ++i)
            for (int j = i; j < basis.multiplicity; ++j) {
                double expected = i == j ? 1.0 : 0.0;
                CHECK(std::abs(gram_entry(n, basis.basis[i], basis.basis[j]) - expected) <= 1e-10);
            }
    }
}

TEST_CASE("degree-1 kernel on S^2 reproduces the scaled coordinates") {
    EigenBasis basis = harmonic_basis(2, 1);
    // A(x, y) = (3 / 4pi) <x, y> regardless of the basis.
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto x = random_unit(rng, 3);
        auto y = random_unit(rng, 3);
        double a = 0.0, dot = 0.0;
        for (const MultiPoly& u : basis.basis) a += u(x) * u(y);
        for (int i = 0; i < 3; ++i) dot += x[i] * y[i];
        CHECK(a == doctest::Approx(3.0 / (4 * kPi) * dot).epsilon(1e-12));
    }
}

TEST_CASE("restrictions are Laplace eigenfunctions (finite differences)") {
    const double h = 1e-4;
    for (auto [n, ell] : {std::pair{2, 2}, {3, 3}, {4, 2}}) {
        EigenBasis basis = harmonic_basis(n, ell);
        double eigenvalue = basis.eigenvalue();
        Rng rng(derive_stream(17, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(ell)}));
        const int dim = n + 1;
        const MultiPoly& u = basis.basis[static_cast<std::size_t>(rng.next_below(basis.basis.size()))];
        int checked = 0;
        while (checked < 100) {
            auto x = random_unit(rng, dim);
            if (std::abs(u(x)) < 0.05) continue;  // avoid relative-error blowup near zeros
            // Random tangent frame, completed by Gram-Schmidt.
            std::vector<std::vector<double>> frame;
            while (static_cast<int>(frame.size()) < n) {
                auto v = random_unit(rng, dim);
                double dx = 0.0;
                for (int i = 0; i < dim; ++i) dx += v[i] * x[i];
                for (int i = 0; i < dim; ++i) v[i] -= dx * x[i];
                for (const auto& w : frame) {
                    double dw = 0.0;
                    for (int i = 0; i < dim; ++i) dw += v[i] * w[i];
                    for (int i = 0; i < dim; ++i) v[i] -= dw * w[i];
                }
                double norm2 = 0.0;
                for (double vi : v) norm2 += vi * vi;
                if (norm2 < 1e-4) continue;
                for (double& vi : v) vi /= std::sqrt(norm2);
                frame.push_back(v);
            }
            // Sum of second derivatives along retracted curves equals the
            // (positive) Laplacian applied with the opposite sign.
            double lap = 0.0;
            for (const auto& v : frame) {
                std::vector<double> plus(dim), minus(dim);
                double np = 0.0, nm = 0.0;
                for (int i = 0; i < dim; ++i) {
                    plus[i] = x[i] + h * v[i];
                    minus[i] = x[i] - h * v[i];
                    np += plus[i] * plus[i];
                    nm += minus[i] * minus[i];
                }
                np = std::sqrt(np);
                nm = std::sqrt(nm);
                for (int i = 0; i < dim; ++i) {
                    plus[i] /= np;
                    minus[i] /= nm;
                }
                lap += (u(plus) - 2.0 * u(x) + u(minus)) / (h * h);
            }
            CHECK(-lap == doctest::Approx(eigenvalue * u(x)).epsilon(1e-4));
            ++checked;
        }
    }
}

TEST_CASE("radialize fixes radial functions and averages the rest") {
    FoliationSpec spec = make_foliation(2, 1, 1, 1);
    MultiPoly p = cartan_polynomial(spec);

    auto ones = radialize([](std::span<const double>) { return 1.0; }, spec, p, 20000, 16, 9);
    for (std::size_t b = 0; b < ones.means.size(); ++b) {
        CHECK(ones.means[b] == doctest::Approx(1.0));
        CHECK(ones.std_errors[b] == doctest::Approx(0.0));
    }

    // Zonal average of x1 around the pole e1 is cos(t).
    auto zonal = radialize([](std::span<const double> x) { return x[0]; }, spec, p, 200000, 16, 9);
    for (std::size_t b = 0; b < zonal.means.size(); ++b) {
        double band = 4.0 * zonal.std_errors[b] + 0.5 * spec.diameter / 16.0;
        CHECK(std::abs(zonal.means[b] - std::cos(zonal.centers[b])) <= band);
    }

    // Odd symmetry about the axis: leaf averages of x2 vanish.
    auto odd = radialize([](std::span<const double> x) { return x[1]; }, spec, p, 200000, 16, 9);
    for (std::size_t b = 0; b < odd.means.size(); ++b)
        CHECK(std::abs(odd.means[b]) <= 4.0 * odd.std_errors[b] + 1e-12);

    CHECK_THROWS_AS(radialize([](std::span<const double>) { return 1.0; }, spec, p, 10000, 512, 9),
                    std::runtime_error);
}

TEST_CASE("radialize is idempotent within binning error") {
    FoliationSpec spec = make_foliation(2, 1, 1, 1);
    MultiPoly p = cartan_polynomial(spec);
    auto first = radialize([](std::span<const double> x) { return x[0] * x[0]; }, spec, p, 100000,
                           16, 21);
    auto step = [&](std::span<const double> x) {
        double rho = rho_from_point(p, spec, x);
        int b = std::min(static_cast<int>(rho / spec.diameter * 16), 15);
        return first.means[b];
    };
    auto second = radialize(step, spec, p, 100000, 16, 22);
    for (std::size_t b = 0; b < second.means.size(); ++b)
        CHECK(std::abs(second.means[b] - first.means[b]) <=
              4.0 * (first.std_errors[b] + second.std_errors[b]) + 1e-9);
}

TEST_CASE("addition formula residuals") {
    Rng rng(33);
    for (auto [n, ell] : {std::pair{2, 1}, {2, 2}, {3, 2}}) {
        auto y = random_unit(rng, n + 1);
        std::vector<std::vector<double>> pts;
        for (int i = 0; i < 100; ++i) pts.push_back(random_unit(rng, n + 1));
        AdditionReport rep = addition_formula_check(n, ell, y, pts);
        CHECK(rep.value_at_y <= 1e-9);
        CHECK(rep.zonal <= 1e-10);
        CHECK(rep.basis_change <= 1e-9);
        CHECK(rep.radialization <= 1e-9);  // zero when inside the sampling band
    }
}

TEST_CASE("degree-1 addition formula in closed form") {
    Rng rng(41);
    auto y = random_unit(rng, 3);
    EigenBasis basis = harmonic_basis(2, 1);
    for (int trial = 0; trial < 10; ++trial) {
        auto x = random_unit(rng, 3);
        double a = 0.0, dot = 0.0;
        for (const MultiPoly& u : basis.basis) a += u(x) * u(y);
        for (int i = 0; i < 3; ++i) dot += x[i] * y[i];
        double phi = std::sqrt(sphere_volume(2) / 3.0) * a;
        CHECK(phi == doctest::Approx(std::sqrt(3.0 / (4 * kPi)) * dot).epsilon(1e-12));
    }
}

TEST_CASE("basis coefficient tables round-trip") {
    EigenBasis basis = harmonic_basis(3, 2);
    std::stringstream ss;
    write_basis(ss, basis);
    EigenBasis back = read_basis(ss);
    REQUIRE(back.multiplicity == basis.multiplicity);
    CHECK(back.degree == 2);
    Rng rng(77);
    for (int j = 0; j < basis.multiplicity; ++j)
        for (int trial = 0; trial < 8; ++trial) {
            auto x = random_unit(rng, 4);
            CHECK(back.basis[j](x) == doctest::Approx(basis.basis[j](x)).epsilon(1e-15));
        }
}

TEST_CASE("kernel values are basis independent at random point pairs") {
    for (auto [n, ell] : {std::pair{2, 2}, {3, 3}}) {
        EigenBasis a = harmonic_basis(n, ell);
        EigenBasis b = harmonic_basis(n, ell, /*order=*/3);
        Rng rng(derive_stream(101, {static_cast<std::uint64_t>(n)}));
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            auto x = random_unit(rng, n + 1);
            auto y = random_unit(rng, n + 1);
            double ka = 0.0, kb = 0.0;
            for (const MultiPoly& u : a.basis) ka += u(x) * u(y);
            for (const MultiPoly& u : b.basis) kb += u(x) * u(y);
            worst = std::max(worst, std::abs(ka - kb));
        }
        CHECK(worst <= 1e-9);
    }
}
