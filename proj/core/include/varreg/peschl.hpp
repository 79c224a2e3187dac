#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "varreg/schur.hpp"

namespace varreg {

// (-1)^{n-k} n!(n-1)! / (k!(k-1)!(n-k)!) for 1 <= k <= n, 0 otherwise.
// Exact integer arithmetic with overflow detection (hard error, never
// silent wraparound).
std::int64_t alpha_coeff(int n, int k);

// Exact binomial coefficient, overflow-checked.
std::int64_t binomial(int n, int k);

// Partial exponential Bell polynomial A_{n,k}(x_1..x_{n-k+1}): sum over
// multi-indices j with sum j_i = k, sum i*j_i = n of
// n! * prod x_i^{j_i} / ((i!)^{j_i} j_i!).  Coefficients are exact integers.
Complex bell_partial(int n, int k, std::span<const Complex> x);

// D^1 f(z0) .. D^n f(z0) as k! times the k-th coefficient of the
// Moebius-renormalized series.
std::vector<Complex> peschl_from_series(const TruncatedSeries& f_series, std::size_t n);

// D^1..D^n from z0, f(z0) and the ordinary derivatives f'(z0)..f^{(n)}(z0),
// by the triangular Bell-polynomial formula (lower orders first).
std::vector<Complex> peschl_from_ordinary(Complex z0, Complex f0,
                                          std::span<const Complex> derivs);

// f^{(n)}(z0) from D^1 f(z0)..D^n f(z0).
Complex ordinary_from_peschl(Complex z0, Complex f0, std::span<const Complex> ds);

// s_{n-1}(z0) for n = gammas.size() + 1, computed through a reference
// function with the prescribed data; well-defined because the remainder
// depends only on (z0, gamma_0, gamma_1..gamma_{n-1}).
Complex s_remainder(Complex z0, Complex gamma0, std::span<const Complex> gammas);

// H^n f from D^1..D^n and H^1..H^{n-1}:
//   (D^n - n! G_n(H^1..H^{n-1})) / (n! prod_k (1 - |H^k|^2)).
Complex hyperbolic_from_peschl(std::span<const Complex> ds, std::span<const Complex> hs);

} // namespace varreg
