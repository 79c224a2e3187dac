#pragma once

#include <optional>

#include "varreg/variability.hpp"

namespace varreg {

// Constraints for origin-fixing maps h with h(z0) = w0 and higher-order
// data given either as hyperbolic parameters gamma_1..gamma_{n-1} of
// f = h/z or as ordinary derivatives w_1..w_{n-1} of h.
class DieudonneData {
public:
    DieudonneData(Complex z0, Complex w0, std::vector<Complex> gammas);

    // Converts prescribed derivatives w_1..w_{n-1} into the gamma chain;
    // throws InfeasibleError when some w_k lies outside its reachable disk
    // and inconsistent_data when values past a forced Blaschke stage do not
    // match the unique admissible map.
    static DieudonneData from_ws(Complex z0, Complex w0, std::span<const Complex> ws);

    Complex z0() const { return z0_; }
    Complex w0() const { return w0_; }
    double r() const { return std::abs(z0_); }
    double s() const { return std::abs(w0_); }
    Complex gamma0() const { return w0_ / z0_; }
    const std::vector<Complex>& gammas() const { return gammas_; }
    std::size_t n() const { return gammas_.size() + 1; }

    // The data of f = h/z: (z0, gamma_0, gamma_1..gamma_{n-1}).
    HyperbolicData hyperbolic() const;
    // Same z0, w0 with only gamma_1..gamma_{m-1} (m <= n).
    DieudonneData prefix(std::size_t m) const;

private:
    Complex z0_;
    Complex w0_;
    std::vector<Complex> gammas_;
};

// The exact variability disk of h^{(n)}(z0), n = data.n():
//   c'_n = n c_{n-1} + n rho_{n-1} gamma_{n-1} + z0 c_n,  rho'_n = r rho_n.
ClosedDisk dieudonne_disk(const DieudonneData& data);

// w_k = c'_k + rho'_k z0 gamma_k / r for k = 1..n-1.
std::vector<Complex> w_from_gamma(const DieudonneData& data);

struct GammaChain {
    std::vector<Complex> gammas;
    std::optional<std::size_t> degenerate_at; // 1-based, first unit-modulus gamma
};

// Inverse of w_from_gamma, computed iteratively; boundary values stop the
// chain with a degeneracy report.
GammaChain gamma_from_w(Complex z0, Complex w0, std::span<const Complex> ws);

// Series about z0 of h = z * f_{gamma, tail}.
TruncatedSeries extremal_h_series(const DieudonneData& data, const ExtremalTail& tail,
                                  std::size_t order);

// Pointwise evaluation of the same h.
Complex extremal_h_eval(const DieudonneData& data, const ExtremalTail& tail, Complex z);

} // namespace varreg
