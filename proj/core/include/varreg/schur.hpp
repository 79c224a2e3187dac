#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "varreg/series.hpp"

namespace varreg {

// |gamma| >= 1 - kUnitModulusTol is treated as unit modulus; exact unit
// modulus is unreachable in floating point from generic inputs.
inline constexpr double kUnitModulusTol = 1e-10;
// Beyond this the data cannot come from a self-map.
inline constexpr double kInconsistentTol = 1e-6;

// Prescribed value and hyperbolic derivatives at z0:
// gammas = (gamma_0, gamma_1, ..., gamma_{n-1}).
class HyperbolicData {
public:
    HyperbolicData(Complex z0, std::vector<Complex> gammas);

    Complex z0() const { return z0_; }
    const std::vector<Complex>& gammas() const { return gammas_; }
    std::size_t n() const { return gammas_.size(); }
    Complex gamma(std::size_t k) const { return gammas_.at(k); }
    // Data truncated to the first m gammas (1 <= m <= n).
    HyperbolicData prefix(std::size_t m) const;

private:
    Complex z0_;
    std::vector<Complex> gammas_;
};

// Memoized window evaluations of the F recurrence over a fixed parameter
// list; the recurrence consumes shifted argument windows, so entries are
// keyed by (start index, window length).
class SchurPolynomialTable {
public:
    explicit SchurPolynomialTable(std::span<const Complex> gammas);

    // F_len(gammas[start], ..., gammas[start+len-1]).
    Complex f(std::size_t start, std::size_t len);

private:
    std::vector<Complex> gammas_;
    std::vector<Complex> memo_;
    std::vector<char> have_;

    std::size_t index(std::size_t start, std::size_t len) const {
        return start * (gammas_.size() + 1) + len;
    }
};

// F_n over the whole list.
Complex f_poly(std::span<const Complex> gammas);

// G_{m+1} on m arguments: the gamma_{m+1} = 0 slice of F_{m+1}.  G_1 = 0.
Complex g_poly(std::span<const Complex> gammas);

// a_k = F_k(gamma_1..gamma_k) for each k.
std::vector<Complex> coefficients_from_parameters(std::span<const Complex> gammas);

struct SchurParameters {
    std::vector<Complex> gammas;
    // 1-based index of the first unit-modulus parameter (finite Blaschke
    // case); extraction stops there.
    std::optional<std::size_t> degenerate_at;
};

// Inverts the coefficient map stepwise.  Throws inconsistent_data when a
// parameter exceeds unit modulus beyond tolerance.
SchurParameters parameters_from_coefficients(std::span<const Complex> coeffs);

// g = [f o T_{z0}, f(z0)] expanded at 0: the one differentiation engine
// shared by the hyperbolic and invariant-derivative layers.
TruncatedSeries moebius_renormalized_series(const TruncatedSeries& f_series);

// H^k f(z0) for k = 1..n from a series of f about z0.
SchurParameters hyperbolic_derivatives(const TruncatedSeries& f_series, std::size_t n);

// Hyperbolic divided difference of order nodes.size() evaluated at z, by
// the bracket-quotient recursion.  Nodes must be pairwise distinct and
// distinct from z; infinity signals propagate as tagged values.
BracketValue divided_difference(const std::function<Complex(Complex)>& f, Complex z,
                                std::span<const Complex> nodes);

} // namespace varreg
