#include "varreg/variability.hpp"

#include <cmath>
#include <string>

namespace varreg {

namespace {

double dfactorial(std::size_t n) {
    double acc = 1.0;
    for (std::size_t i = 2; i <= n; ++i)
        acc *= static_cast<double>(i);
    return acc;
}

double dpow_int(double base, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

Complex tail_value_at(const ExtremalTail& tail, Complex z) {
    if (const Complex* c = std::get_if<Complex>(&tail)) {
        if (std::abs(*c) > 1.0 + 1e-12)
            throw InvalidInput("modulus_out_of_range", "extremal tail constant must have |.| <= 1");
        return *c;
    }
    return blaschke_eval(std::get<BlaschkeProduct>(tail), z);
}

TruncatedSeries tail_series_at(const ExtremalTail& tail, Complex z0, std::size_t order) {
    if (const Complex* c = std::get_if<Complex>(&tail)) {
        if (std::abs(*c) > 1.0 + 1e-12)
            throw InvalidInput("modulus_out_of_range", "extremal tail constant must have |.| <= 1");
        return TruncatedSeries::constant(z0, *c, order);
    }
    return blaschke_series(std::get<BlaschkeProduct>(tail), z0, order);
}

} // namespace

std::string BranchClass::label() const {
    switch (kind) {
    case BranchKind::Interior:
        return "interior";
    case BranchKind::BlaschkeDegenerate:
        return "blaschke_degenerate:" + std::to_string(degenerate_index);
    case BranchKind::ConstantUnimodular:
        return "constant_unimodular";
    }
    return "interior";
}

BranchClass classify(const HyperbolicData& data) {
    if (std::abs(data.gamma(0)) >= 1.0 - kUnitModulusTol)
        return {BranchKind::ConstantUnimodular, 0};
    for (std::size_t j = 1; j < data.n(); ++j) {
        if (std::abs(data.gamma(j)) >= 1.0 - kUnitModulusTol) {
            for (std::size_t k = j + 1; k < data.n(); ++k) {
                if (std::abs(data.gamma(k)) > 1e-12)
                    throw InvalidInput("inconsistent_data",
                                       "gamma_" + std::to_string(j) +
                                           " has unit modulus but gamma_" + std::to_string(k) +
                                           " is nonzero; no admissible map exists");
            }
            return {BranchKind::BlaschkeDegenerate, j};
        }
    }
    return {BranchKind::Interior, 0};
}

ClosedDisk disk_nth(const HyperbolicData& data) {
    const BranchClass branch = classify(data);
    if (branch.kind == BranchKind::ConstantUnimodular)
        return {Complex{0.0, 0.0}, 0.0}; // unimodular constant: all derivatives vanish

    const std::size_t n = data.n();
    const Complex z0 = data.z0();
    const Complex gamma0 = data.gamma(0);
    const std::span<const Complex> higher(data.gammas().data() + 1, n - 1);

    const double nfact = dfactorial(n);
    const double denom = dpow_int(1.0 - std::norm(z0), static_cast<int>(n));
    const Complex center = (1.0 - std::norm(gamma0)) / denom *
                           (nfact * g_poly(higher) - s_remainder(z0, gamma0, higher));

    double radius = 0.0;
    if (branch.kind == BranchKind::Interior) {
        double prod = 1.0;
        for (const Complex& g : data.gammas())
            prod *= 1.0 - std::norm(g);
        radius = nfact * prod / denom;
    }
    return {center, radius};
}

TruncatedSeries extremal_series(const ExtremalSpec& spec, std::size_t order) {
    const BranchClass branch = classify(spec.data);
    const Complex z0 = spec.data.z0();
    const Complex gamma0 = spec.data.gamma(0);
    const std::span<const Complex> higher(spec.data.gammas().data() + 1, spec.data.n() - 1);

    switch (branch.kind) {
    case BranchKind::ConstantUnimodular:
        return TruncatedSeries::constant(z0, gamma0, order);
    case BranchKind::BlaschkeDegenerate: {
        const std::size_t j = branch.degenerate_index;
        const TruncatedSeries tail = TruncatedSeries::constant(z0, higher[j - 1], order);
        return nested_moebius_series(z0, gamma0, higher.subspan(0, j - 1), tail, order);
    }
    case BranchKind::Interior:
        break;
    }
    return nested_moebius_series(z0, gamma0, higher, tail_series_at(spec.tail, z0, order), order);
}

Complex extremal_eval(const ExtremalSpec& spec, Complex z) {
    const BranchClass branch = classify(spec.data);
    const Complex z0 = spec.data.z0();
    const Complex gamma0 = spec.data.gamma(0);
    const std::span<const Complex> higher(spec.data.gammas().data() + 1, spec.data.n() - 1);

    if (branch.kind == BranchKind::ConstantUnimodular)
        return gamma0;

    const BracketValue u_val = bracket(z, z0);
    if (u_val.infinite)
        throw NumericalError("pole", "extremal_eval: inner factor degenerates at z");
    const Complex u = u_val.value;

    std::size_t m = higher.size();
    Complex w;
    if (branch.kind == BranchKind::BlaschkeDegenerate) {
        const std::size_t j = branch.degenerate_index;
        w = higher[j - 1] * u;
        m = j - 1;
    } else {
        w = tail_value_at(spec.tail, z) * u;
    }
    for (std::size_t k = m; k-- > 0;)
        w = u * moebius_t(higher[k], w);
    return moebius_t(gamma0, w);
}

ClosedDisk c2_rho2_explicit(Complex z0, Complex gamma0, Complex gamma1) {
    if (!(std::abs(z0) < 1.0) || !(std::abs(gamma0) < 1.0))
        throw InvalidInput("modulus_out_of_range", "z0 and gamma_0 must lie in the open disk");
    if (std::abs(gamma1) > 1.0 + 1e-12)
        throw InvalidInput("modulus_out_of_range", "|gamma_1| must be <= 1");
    const double one_mz = 1.0 - std::norm(z0);
    const double one_mg0 = 1.0 - std::norm(gamma0);
    const Complex center =
        2.0 * one_mg0 / (one_mz * one_mz) * (std::conj(z0) - std::conj(gamma0) * gamma1) * gamma1;
    const double radius = 2.0 * one_mg0 * (1.0 - std::norm(gamma1)) / (one_mz * one_mz);
    return {center, radius};
}

} // namespace varreg
