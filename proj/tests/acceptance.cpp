// Acceptance battery: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <sstream>
#include <string>

#include "varreg/cli.hpp"
#include "varreg/oracle.hpp"

using namespace varreg;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool pass, double worst, double tol,
            int trials, const std::string& note = "") {
    std::printf("%s  criterion %2d  %-28s worst %.3e  (tol %.1e, %d trials)%s%s\n",
                pass ? "PASS" : "FAIL", criterion, name.c_str(), worst, tol, trials,
                note.empty() ? "" : "  -- ", note.c_str());
    if (!pass)
        ++failures;
}

TrialConfig base_config() {
    TrialConfig config;
    config.seed = 42;
    config.trials = 1000;
    config.n_max = 5;
    return config;
}

} // namespace

int main() {
    // 1. parameter/coefficient roundtrip: 1000 draws, n <= 6, |gamma| <= 0.9
    {
        TrialConfig config = base_config();
        config.n_max = 6;
        config.gamma_modulus_max = 0.9;
        const SuiteResult r = suite_schur_roundtrip(config);
        report(1, "schur_roundtrip", r.pass, r.worst_error, 1e-10, r.trials);
    }

    // 2. Taylor coefficients of 200 random Blaschke maps fixing 0 equal the
    //    coefficient polynomials of the extracted parameters
    {
        const SuiteResult r = suite_blaschke_coefficients(base_config());
        report(2, "blaschke_coefficients", r.pass, r.worst_error, 1e-9, r.trials);
    }

    // 3. printed closed forms (D_2, D_3, H^2, H^3, c_2/rho_2, c'_2/rho'_2)
    //    against the general-order pipeline on 500 draws
    {
        const SuiteResult r = suite_closed_forms(base_config());
        report(3, "closed_forms", r.pass, r.worst_error, 1e-9, r.trials);
    }

    // 4. G_3 monomial adjudication by the series oracle
    {
        const SuiteResult r = suite_g3_adjudication(base_config());
        report(4, "g3_adjudication", r.pass, r.worst_error, 1e-9, r.trials,
               "series oracle selects G_3 = -(1-|g1|^2) conj(g1) g2^2; the single-power variant is rejected");
    }

    // 5. centers: formula route equals the series route on 300 configurations
    {
        const SuiteResult r = suite_center_consistency(base_config());
        report(5, "center_consistency", r.pass, r.worst_error, 1e-8, r.trials);
    }

    // 6. boundary attainment with 100 unimodular tails per configuration,
    //    for f and for h
    {
        const SuiteResult r = suite_boundary_attainment(base_config());
        report(6, "boundary_attainment", r.pass, r.worst_error, 1e-8, r.trials);
    }

    // 7. containment of 1000 random Schur tails per configuration
    {
        const SuiteResult r = suite_containment(base_config());
        report(7, "containment", r.pass, r.worst_error, 1e-8, r.trials);
    }

    // 8. degenerate data: radius 0 and the unique derivative sits at the
    //    center across constructions (series and Cauchy-integral routes)
    {
        const SuiteResult r = suite_degenerate_branch(base_config());
        report(8, "degenerate_branch", r.pass, r.worst_error, 1e-8, r.trials);
    }

    // 9. first-order origin-fixing radius: r/(1-r^2) = 2/3 at z0 = 1/2,
    //    w0 = 0, attained by h(z) = z(z - z0)/(1 - z0 z) and exceeding the
    //    (r^2-s^2)/(r(1-s^2)) variant
    {
        const SuiteResult r = suite_dieudonne_radius(base_config());
        report(9, "dieudonne_radius", r.pass, r.worst_error, 1e-12, r.trials,
               "radius follows the recurrence rho'_n = r rho_n");
    }

    // 10. clustered divided differences converge at first order: error
    //     ratios within [1.5, 2.5] per halving over h in [1e-3, 1e-1]
    {
        const SuiteResult r = suite_divided_difference(base_config());
        report(10, "divided_difference", r.pass, r.worst_error, 0.5, r.trials,
               "worst entry is the largest |ratio - 2|");
    }

    // 11. `verify --seed 42` twice produces byte-identical reports
    {
        std::ostringstream out1, err1, out2, err2;
        const int c1 = run_cli({"verify", "--seed", "42"}, out1, err1);
        const int c2 = run_cli({"verify", "--seed", "42"}, out2, err2);
        const bool pass = c1 == 0 && c2 == 0 && out1.str() == out2.str() && !out1.str().empty();
        report(11, "verify_determinism", pass, pass ? 0.0 : 1.0, 0.0, 2);
    }

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
