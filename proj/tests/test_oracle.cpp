#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "varreg/oracle.hpp"
#include "test_support.hpp"

using namespace varreg;
using varreg::testing::rel_gap;

namespace {

// independent copy of the splitmix state transition
std::uint64_t reference_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

TEST_CASE("generator matches the documented transition") {
    for (std::uint64_t seed : {0ULL, 42ULL, 0x8000000000000000ULL, 123456789ULL}) {
        SplitMix64 rng(seed);
        std::uint64_t state = seed;
        for (int i = 0; i < 16; ++i)
            CHECK(rng.next() == reference_next(state));
    }
}

TEST_CASE("uniform draws land in range") {
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    for (int i = 0; i < 200; ++i) {
        CHECK(std::abs(rng.unit(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(rng.disk(0.8)) <= 0.8);
    }
}

TEST_CASE("random Schur tails map the disk into the closed disk") {
    SplitMix64 rng(71);
    for (int t = 0; t < 100; ++t) {
        const ExtremalTail tail = random_schur_tail(rng, 0.8);
        for (int s = 0; s < 100; ++s) {
            const Complex z = rng.disk(0.999);
            const Complex value = std::holds_alternative<Complex>(tail)
                                      ? std::get<Complex>(tail)
                                      : blaschke_eval(std::get<BlaschkeProduct>(tail), z);
            CHECK(std::abs(value) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("containment run on zero data pins the radius") {
    // all-zero data at the origin, n = 3: unimodular tails land on |value| = 6
    const HyperbolicData
        data(Complex{0.0, 0.0}, {Complex{0.0, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}});
    TrialConfig config;
    config.trials = 400;
    const ContainmentReport report = run_containment(config, data);
    CHECK(report.pass);
    CHECK(report.boundary_trials > 0);
    CHECK(report.boundary_deviation < 1e-12);
    CHECK(report.max_violation <= 1e-12);
}

TEST_CASE("containment reports are deterministic and seed-sensitive") {
    SplitMix64 rng(72);
    const HyperbolicData data(Complex{0.2, 0.3}, {Complex{0.1, -0.2}, Complex{0.4, 0.1}});
    TrialConfig config;
    config.trials = 300;

    const ContainmentReport a = run_containment(config, data);
    const ContainmentReport b = run_containment(config, data);
    CHECK(std::memcmp(&a.max_violation, &b.max_violation, sizeof(double)) == 0);
    CHECK(std::memcmp(&a.boundary_deviation, &b.boundary_deviation, sizeof(double)) == 0);
    CHECK(a.boundary_trials == b.boundary_trials);

    config.seed = 43;
    const ContainmentReport c = run_containment(config, data);
    CHECK((c.max_violation != a.max_violation || c.boundary_trials != a.boundary_trials));
}

TEST_CASE("containment requires the interior branch") {
    const HyperbolicData degenerate(Complex{0.1, 0.0}, {Complex{0.2, 0.0}, Complex{1.0, 0.0}});
    TrialConfig config;
    CHECK_THROWS_AS(run_containment(config, degenerate), InvalidInput);
}

TEST_CASE("full battery passes at reduced scale") {
    TrialConfig config;
    config.trials = 150;
    config.n_max = 4;
    const Report report = run_roundtrips(config);
    CHECK(report.suites.size() == 12);
    for (const auto& [name, suite] : report.suites) {
        CAPTURE(name);
        CHECK(suite.pass);
    }
    CHECK(report.all_pass());
}

TEST_CASE("adversarial conditioning is reported, not crashed") {
    TrialConfig config;
    config.trials = 50;
    config.z0_modulus_max = 0.95;
    const Report report = run_roundtrips(config);
    CHECK(report.suites.size() == 12);
    // worst errors must stay finite even when conditioning degrades
    for (const auto& [name, suite] : report.suites) {
        CAPTURE(name);
        CHECK(suite.worst_error < 1e9);
    }
}

TEST_CASE("cauchy derivative cross-checks the series route") {
    SplitMix64 rng(73);
    for (int t = 0; t < 20; ++t) {
        std::vector<Complex> zeros{rng.disk(0.7), rng.disk(0.7), rng.disk(0.7)};
        const BlaschkeProduct b(rng.uniform(0.0, 6.28), zeros);
        const Complex z0 = rng.disk(0.5);
        const auto series = blaschke_series(b, z0, 6);
        for (int n = 1; n <= 4; ++n) {
            const Complex via_cauchy = cauchy_derivative(
                [&](Complex z) { return blaschke_eval(b, z); }, z0, n,
                0.4 * (1.0 - std::abs(z0)));
            CHECK(rel_gap(via_cauchy, derivative_at_center(series, static_cast<std::size_t>(n))) <
                  1e-10);
        }
    }
}
