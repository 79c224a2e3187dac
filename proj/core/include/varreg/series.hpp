#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "varreg/moebius.hpp"

namespace varreg {

// Divisor constant-term floor for series division.  Legitimate divisors in
// this library have constant term bounded away from zero by the callers.
inline constexpr double kDivFloor = 1e-12;

// Finitely many Taylor coefficients about a fixed center; coefficient k
// multiplies (z - center)^k.  Arithmetic requires equal centers and equal
// orders; the caller aligns first (recentering is always an explicit
// composition, never automatic).
class TruncatedSeries {
public:
    TruncatedSeries(Complex center, std::vector<Complex> coeffs);

    static TruncatedSeries constant(Complex center, Complex value, std::size_t order);
    // Series of (z - center).
    static TruncatedSeries displacement(Complex center, std::size_t order);
    // Series of z itself.
    static TruncatedSeries identity(Complex center, std::size_t order);

    Complex center() const { return center_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(std::size_t k) const;

    // Horner evaluation of the truncation at z.
    Complex eval(Complex z) const;

private:
    Complex center_;
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator+(const TruncatedSeries& a, Complex c);
TruncatedSeries operator-(const TruncatedSeries& a, Complex c);
TruncatedSeries operator-(Complex c, const TruncatedSeries& a);
TruncatedSeries operator*(Complex c, const TruncatedSeries& a);

// Cauchy quotient truncated at the common order; requires the divisor
// constant term to stay above kDivFloor.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

// Taylor coefficients of outer(inner(.)) at inner's center, exact through
// the common order.  The inner constant term must equal outer's center
// (the value the outer expansion sits at); Horner evaluation in series
// arithmetic.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// (S + a) / (1 + conj(a) S).
TruncatedSeries moebius_t_series(Complex a, const TruncatedSeries& s);

// Series of z -> [z, w] about `center`, computed by series division.
TruncatedSeries bracket_series(Complex w, Complex center, std::size_t order);

// Series of T_{-z0} about z0 (the recurring inner factor): constant term 0.
TruncatedSeries moebius_t_neg_series(Complex z0, std::size_t order);

TruncatedSeries blaschke_series(const BlaschkeProduct& b, Complex center, std::size_t order);

// k! * coeffs[k].
Complex derivative_at_center(const TruncatedSeries& s, std::size_t k);

// Innermost-out build of
//   T_{gamma0}( u T_{g_1}( ... u T_{g_m}( tail * u ) ... ) ),   u = T_{-z0},
// expanded about z0.  `tail` must be a series about z0 at the same order.
TruncatedSeries nested_moebius_series(Complex z0, Complex gamma0,
                                      std::span<const Complex> gammas,
                                      const TruncatedSeries& tail, std::size_t order);

} // namespace varreg
