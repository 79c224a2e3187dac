#include "varreg/dieudonne.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace varreg {

namespace {

// (c_m, rho_m) for the prefix data (z0, gamma_0..gamma_{m-1}), with the
// conventions c_0 = 0, rho_0 = 1 forced by f^{(0)}(z0) = gamma_0.
ClosedDisk prefix_disk(const HyperbolicData& hyp, std::size_t m) {
    if (m == 0)
        return {Complex{0.0, 0.0}, 1.0};
    return disk_nth(hyp.prefix(m));
}

} // namespace

DieudonneData::DieudonneData(Complex z0, Complex w0, std::vector<Complex> gammas)
    : z0_(z0), w0_(w0), gammas_(std::move(gammas)) {
    if (!(std::abs(z0_) < 1.0))
        throw InvalidInput("modulus_out_of_range", "|z0| must be < 1");
    if (z0_ == Complex{0.0, 0.0})
        throw InvalidInput("precondition", "z0 must be nonzero");
    if (!(std::abs(w0_) < std::abs(z0_)))
        throw InvalidInput("precondition", "|w0| must be strictly less than |z0|");
    for (std::size_t k = 0; k < gammas_.size(); ++k) {
        if (std::abs(gammas_[k]) > 1.0 + 1e-12)
            throw InvalidInput("modulus_out_of_range",
                               "|gamma_" + std::to_string(k + 1) + "| exceeds 1");
    }
}

HyperbolicData DieudonneData::hyperbolic() const {
    std::vector<Complex> all;
    all.reserve(gammas_.size() + 1);
    all.push_back(gamma0());
    all.insert(all.end(), gammas_.begin(), gammas_.end());
    return HyperbolicData(z0_, std::move(all));
}

DieudonneData DieudonneData::prefix(std::size_t m) const {
    if (m == 0 || m > n())
        throw InvalidInput("bad_argument", "prefix length out of range");
    return DieudonneData(z0_, w0_,
                         std::vector<Complex>(gammas_.begin(), gammas_.begin() + (m - 1)));
}

DieudonneData DieudonneData::from_ws(Complex z0, Complex w0, std::span<const Complex> ws) {
    GammaChain chain = gamma_from_w(z0, w0, ws);
    if (!chain.degenerate_at)
        return DieudonneData(z0, w0, std::move(chain.gammas));

    // Forced Blaschke stage: the remaining prescribed derivatives must
    // match the unique admissible map, and the theorem's branch fills the
    // tail with zeros.
    const std::size_t j = *chain.degenerate_at;
    std::vector<Complex> gammas = chain.gammas;
    gammas.resize(ws.size(), Complex{0.0, 0.0});
    DieudonneData data(z0, w0, std::move(gammas));

    if (j < ws.size()) {
        const std::size_t order = ws.size() + 2;
        const TruncatedSeries h =
            extremal_h_series(data, ExtremalTail{Complex{0.0, 0.0}}, order);
        for (std::size_t k = j + 1; k <= ws.size(); ++k) {
            const Complex forced = derivative_at_center(h, k);
            const double scale = std::max(1.0, std::abs(forced));
            if (std::abs(ws[k - 1] - forced) > 1e-8 * scale)
                throw InvalidInput("inconsistent_data",
                                   "w_" + std::to_string(k) +
                                       " does not match the map forced by the boundary value at index " +
                                       std::to_string(j));
        }
    }
    return data;
}

ClosedDisk dieudonne_disk(const DieudonneData& data) {
    const std::size_t n = data.n();
    const HyperbolicData hyp = data.hyperbolic();
    const ClosedDisk lower = prefix_disk(hyp, n - 1);
    const ClosedDisk top = disk_nth(hyp);
    const Complex gamma_last = hyp.gamma(n - 1);
    const double dn = static_cast<double>(n);

    const Complex center = dn * lower.center + dn * lower.radius * gamma_last +
                           data.z0() * top.center;
    const double radius = data.r() * top.radius;
    return {center, radius};
}

std::vector<Complex> w_from_gamma(const DieudonneData& data) {
    std::vector<Complex> ws;
    ws.reserve(data.n() - 1);
    for (std::size_t k = 1; k < data.n(); ++k) {
        const ClosedDisk dk = dieudonne_disk(data.prefix(k));
        ws.push_back(dk.center + dk.radius * data.z0() * data.gammas()[k - 1] / data.r());
    }
    return ws;
}

GammaChain gamma_from_w(Complex z0, Complex w0, std::span<const Complex> ws) {
    GammaChain chain;
    for (std::size_t k = 1; k <= ws.size(); ++k) {
        const DieudonneData data(z0, w0, chain.gammas);
        const ClosedDisk dk = dieudonne_disk(data);
        const double dist = std::abs(ws[k - 1] - dk.center);
        const Complex gk = (ws[k - 1] - dk.center) * std::abs(z0) / (dk.radius * z0);
        const double mod = std::abs(gk);
        if (mod > 1.0 + kUnitModulusTol)
            throw InfeasibleError(k, dist - dk.radius,
                                  "w_" + std::to_string(k) +
                                      " lies outside the reachable disk by " +
                                      std::to_string(dist - dk.radius));
        chain.gammas.push_back(gk);
        if (mod >= 1.0 - kUnitModulusTol) {
            chain.degenerate_at = k;
            return chain;
        }
    }
    return chain;
}

TruncatedSeries extremal_h_series(const DieudonneData& data, const ExtremalTail& tail,
                                  std::size_t order) {
    const TruncatedSeries f = extremal_series(ExtremalSpec{data.hyperbolic(), tail}, order);
    return TruncatedSeries::identity(data.z0(), order) * f;
}

Complex extremal_h_eval(const DieudonneData& data, const ExtremalTail& tail, Complex z) {
    return z * extremal_eval(ExtremalSpec{data.hyperbolic(), tail}, z);
}

} // namespace varreg
