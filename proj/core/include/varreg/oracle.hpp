#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "varreg/dieudonne.hpp"

namespace varreg {

struct TrialConfig {
    std::uint64_t seed = 42;
    int trials = 1000;
    int n_max = 5;
    double z0_modulus_max = 0.7;
    double gamma_modulus_max = 0.8;
    double tolerance = 1e-8;
};

// Explicit splitmix-style 64-bit generator so reports are reproducible
// across implementations; the state transition is documented in the README.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // modulus * e^{i theta}, theta uniform in [0, 2 pi)
    Complex unit(double modulus = 1.0);
    // area-uniform in |z| <= rmax
    Complex disk(double rmax);

private:
    std::uint64_t state_;
};

// Draws uniformly among interior constants, unimodular constants and
// Blaschke products of degree 1..3.
ExtremalTail random_schur_tail(SplitMix64& rng, double gamma_modulus_max);

struct SuiteResult {
    bool pass = true;
    double worst_error = 0.0;
    int trials = 0;
};

struct ContainmentReport {
    double max_violation = 0.0;       // max (dist - rho) / rho over trials
    double boundary_deviation = 0.0;  // max |dist/rho - 1| over unimodular tails
    int trials = 0;
    int boundary_trials = 0;
    bool pass = false;
};

struct Report {
    std::vector<std::pair<std::string, SuiteResult>> suites;

    bool all_pass() const {
        for (const auto& [name, result] : suites)
            if (!result.pass)
                return false;
        return true;
    }
};

// Monte Carlo containment and boundary-attainment check against the disk of
// the n-th derivative; trials run in parallel with per-trial seeds and
// commutative reductions, so reports are order-independent.
ContainmentReport run_containment(const TrialConfig& config, const HyperbolicData& data);
ContainmentReport run_containment(const TrialConfig& config, const DieudonneData& data);

// Individual verification suites; tolerances are pinned per suite.
SuiteResult suite_schur_roundtrip(const TrialConfig& config);
SuiteResult suite_blaschke_coefficients(const TrialConfig& config);
SuiteResult suite_closed_forms(const TrialConfig& config);
SuiteResult suite_g3_adjudication(const TrialConfig& config);
SuiteResult suite_peschl_inversion(const TrialConfig& config);
SuiteResult suite_center_consistency(const TrialConfig& config);
SuiteResult suite_boundary_attainment(const TrialConfig& config);
SuiteResult suite_containment(const TrialConfig& config);
SuiteResult suite_degenerate_branch(const TrialConfig& config);
SuiteResult suite_dieudonne_radius(const TrialConfig& config);
SuiteResult suite_divided_difference(const TrialConfig& config);
SuiteResult suite_determinism(const TrialConfig& config);

// The full battery in a fixed order.
Report run_roundtrips(const TrialConfig& config);

// Trapezoidal Cauchy-integral derivative of a pointwise-evaluable function:
// an independent differentiation route that never touches series
// arithmetic.
Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z0, int n,
                          double radius, int points = 128);

} // namespace varreg
