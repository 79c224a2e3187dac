#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "varreg/oracle.hpp"
#include "varreg/variability.hpp"
#include "test_support.hpp"

using namespace varreg;
using varreg::testing::approx_eq;
using varreg::testing::rel_gap;

TEST_CASE("branch classification") {
    const Complex z0{0.2, 0.1};
    CHECK(classify(HyperbolicData(z0, {Complex{0.3, 0.0}, Complex{0.5, 0.0}})).kind ==
          BranchKind::Interior);

    const BranchClass deg =
        classify(HyperbolicData(z0, {Complex{0.2, 0.0}, Complex{1.0, 0.0}, Complex{0.0, 0.0},
                                     Complex{0.0, 0.0}}));
    CHECK(deg.kind == BranchKind::BlaschkeDegenerate);
    CHECK(deg.degenerate_index == 1);
    CHECK(deg.label() == "blaschke_degenerate:1");

    CHECK(classify(HyperbolicData(z0, {Complex{1.0, 0.0}})).kind ==
          BranchKind::ConstantUnimodular);

    CHECK_THROWS_AS(classify(HyperbolicData(
                        z0, {Complex{0.2, 0.0}, Complex{1.0, 0.0}, Complex{0.3, 0.0}})),
                    InvalidInput);
}

TEST_CASE("first-order disk is the classical bound") {
    SplitMix64 rng(51);
    for (int t = 0; t < 50; ++t) {
        const Complex z0 = rng.disk(0.8);
        const Complex g0 = rng.disk(0.9);
        const ClosedDisk disk = disk_nth(HyperbolicData(z0, {g0}));
        CHECK(std::abs(disk.center) < 1e-14);
        CHECK(disk.radius ==
              doctest::Approx((1.0 - std::norm(g0)) / (1.0 - std::norm(z0))).epsilon(1e-13));
    }
}

TEST_CASE("second-order disk matches the explicit forms") {
    SplitMix64 rng(52);
    for (int t = 0; t < 100; ++t) {
        const Complex z0 = rng.disk(0.7);
        const Complex g0 = rng.disk(0.8);
        const Complex g1 = rng.disk(0.95);
        const ClosedDisk via_pipeline = disk_nth(HyperbolicData(z0, {g0, g1}));
        const ClosedDisk via_formula = c2_rho2_explicit(z0, g0, g1);
        CHECK(std::abs(via_pipeline.center - via_formula.center) < 1e-12);
        CHECK(std::abs(via_pipeline.radius - via_formula.radius) < 1e-12);
    }

    SUBCASE("gamma_1 = 0 centers the disk") {
        const ClosedDisk d = c2_rho2_explicit(Complex{0.3, 0.0}, Complex{0.4, 0.0},
                                              Complex{0.0, 0.0});
        CHECK(d.center == Complex{0.0, 0.0});
        CHECK(d.radius == doctest::Approx(2.0 * (1.0 - 0.16) / (0.91 * 0.91)));
    }
    SUBCASE("unimodular gamma_1 collapses the radius") {
        const ClosedDisk d = disk_nth(
            HyperbolicData(Complex{0.3, 0.0}, {Complex{0.4, 0.0}, Complex{1.0, 0.0}}));
        CHECK(d.radius == 0.0);
    }
}

TEST_CASE("zero data at the origin gives radius n!") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Complex> gammas(n, Complex{0.0, 0.0});
        const ClosedDisk d = disk_nth(HyperbolicData(Complex{0.0, 0.0}, gammas));
        double nfact = 1.0;
        for (std::size_t i = 2; i <= n; ++i)
            nfact *= static_cast<double>(i);
        CHECK(std::abs(d.center) < 1e-14);
        CHECK(d.radius == doctest::Approx(nfact).epsilon(1e-13));
    }
}

TEST_CASE("unimodular constant data is the point disk at zero") {
    const ClosedDisk d = disk_nth(HyperbolicData(Complex{0.2, 0.0}, {Complex{0.0, 1.0}}));
    CHECK(d.center == Complex{0.0, 0.0});
    CHECK(d.radius == 0.0);
    const TruncatedSeries f = extremal_series(
        ExtremalSpec{HyperbolicData(Complex{0.2, 0.0}, {Complex{0.0, 1.0}}),
                     ExtremalTail{Complex{0.0, 0.0}}},
        3);
    CHECK(f.coeff(0) == Complex{0.0, 1.0});
    CHECK(f.coeff(1) == Complex{0.0, 0.0});
}

TEST_CASE("extremal collapses to a monomial at zero data") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Complex> gammas(n, Complex{0.0, 0.0});
        const Complex eps{0.6, -0.3};
        const HyperbolicData data(Complex{0.0, 0.0}, gammas);
        const TruncatedSeries f = extremal_series(ExtremalSpec{data, ExtremalTail{eps}}, n + 2);
        for (std::size_t k = 0; k <= n + 2; ++k) {
            if (k == n)
                CHECK(approx_eq(f.coeff(k), eps, 1e-15));
            else
                CHECK(std::abs(f.coeff(k)) < 1e-15);
        }
        double nfact = 1.0;
        for (std::size_t i = 2; i <= n; ++i)
            nfact *= static_cast<double>(i);
        CHECK(approx_eq(derivative_at_center(f, n), nfact * eps, 1e-13));
    }
}

TEST_CASE("center and boundary are attained by the extremal family") {
    SplitMix64 rng(53);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
        const Complex z0 = rng.disk(0.7);
        std::vector<Complex> gammas;
        for (std::size_t k = 0; k < n; ++k)
            gammas.push_back(rng.disk(0.8));
        const HyperbolicData data(z0, gammas);
        const ClosedDisk disk = disk_nth(data);

        const TruncatedSeries center_fn =
            extremal_series(ExtremalSpec{data, ExtremalTail{Complex{0.0, 0.0}}}, n + 2);
        CHECK(rel_gap(derivative_at_center(center_fn, n), disk.center) < 1e-8);

        const Complex eps = rng.unit(1.0);
        const TruncatedSeries boundary_fn =
            extremal_series(ExtremalSpec{data, ExtremalTail{eps}}, n + 2);
        const double dist = std::abs(derivative_at_center(boundary_fn, n) - disk.center);
        CHECK(dist / disk.radius == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("random Schur tails stay inside the disk") {
    SplitMix64 rng(54);
    const HyperbolicData data(Complex{0.3, -0.2},
                              {Complex{0.25, 0.4}, Complex{-0.3, 0.1}, Complex{0.2, 0.2}});
    const ClosedDisk disk = disk_nth(data);
    for (int t = 0; t < 300; ++t) {
        const ExtremalTail tail = random_schur_tail(rng, 0.8);
        const TruncatedSeries f = extremal_series(ExtremalSpec{data, tail}, 5);
        const double dist = std::abs(derivative_at_center(f, 3) - disk.center);
        CHECK(dist <= disk.radius * (1.0 + 1e-8));
    }
}

TEST_CASE("series and pointwise extremal evaluations agree") {
    SplitMix64 rng(55);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
        const Complex z0 = rng.disk(0.5);
        std::vector<Complex> gammas;
        for (std::size_t k = 0; k < n; ++k)
            gammas.push_back(rng.disk(0.7));
        const ExtremalSpec spec{HyperbolicData(z0, gammas),
                                random_schur_tail(rng, 0.8)};
        const TruncatedSeries f = extremal_series(spec, 8);
        const Complex at = z0 + rng.disk(0.08);
        CHECK(approx_eq(f.eval(at), extremal_eval(spec, at), 1e-8));
        CHECK(std::abs(extremal_eval(spec, rng.disk(0.95))) <= 1.0 + 1e-12);
    }
}

TEST_CASE("degenerate branch forces the Blaschke product") {
    SplitMix64 rng(56);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
        const std::size_t j = 1 + rng.next() % (n - 1);
        const Complex z0 = rng.disk(0.6);
        std::vector<Complex> gammas{rng.disk(0.7)};
        for (std::size_t k = 1; k < n; ++k) {
            if (k < j)
                gammas.push_back(rng.disk(0.7));
            else if (k == j)
                gammas.push_back(rng.unit(1.0));
            else
                gammas.push_back(Complex{0.0, 0.0});
        }
        const HyperbolicData data(z0, gammas);
        const ClosedDisk disk = disk_nth(data);
        CHECK(disk.radius == 0.0);

        const ExtremalSpec spec{data, ExtremalTail{Complex{0.0, 0.0}}};
        const TruncatedSeries f = extremal_series(spec, n + 2);
        CHECK(rel_gap(derivative_at_center(f, n), disk.center) < 1e-8);

        // the forced function is a Blaschke product of degree j: unimodular
        // on the circle
        const Complex on_circle = extremal_eval(spec, rng.unit(1.0));
        CHECK(std::abs(on_circle) == doctest::Approx(1.0).epsilon(1e-10));
    }
}
