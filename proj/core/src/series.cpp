#include "varreg/series.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace varreg {

namespace {

void require_aligned(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.center() != b.center())
        throw InvalidInput("center_mismatch", "series centers differ");
    if (a.order() != b.order())
        throw InvalidInput("order_mismatch", "series orders differ");
}

} // namespace

TruncatedSeries::TruncatedSeries(Complex center, std::vector<Complex> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw InvalidInput("order_out_of_range", "series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::constant(Complex center, Complex value, std::size_t order) {
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    c[0] = value;
    return TruncatedSeries(center, std::move(c));
}

TruncatedSeries TruncatedSeries::displacement(Complex center, std::size_t order) {
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    if (order >= 1)
        c[1] = 1.0;
    return TruncatedSeries(center, std::move(c));
}

TruncatedSeries TruncatedSeries::identity(Complex center, std::size_t order) {
    std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
    c[0] = center;
    if (order >= 1)
        c[1] = 1.0;
    return TruncatedSeries(center, std::move(c));
}

Complex TruncatedSeries::coeff(std::size_t k) const {
    if (k >= coeffs_.size())
        throw InvalidInput("order_out_of_range",
                           "coefficient index " + std::to_string(k) + " exceeds order " +
                               std::to_string(order()));
    return coeffs_[k];
}

Complex TruncatedSeries::eval(Complex z) const {
    const Complex x = z - center_;
    Complex acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;)
        acc = acc * x + coeffs_[k];
    return acc;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_aligned(a, b);
    std::vector<Complex> c(a.coeffs());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] += b.coeffs()[k];
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_aligned(a, b);
    std::vector<Complex> c(a.coeffs());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] -= b.coeffs()[k];
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_aligned(a, b);
    std::vector<Complex> c(a.coeffs().size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; i + j < c.size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return TruncatedSeries(a.center(), std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, Complex c) {
    std::vector<Complex> v(a.coeffs());
    v[0] += c;
    return TruncatedSeries(a.center(), std::move(v));
}

TruncatedSeries operator-(const TruncatedSeries& a, Complex c) { return a + (-c); }

TruncatedSeries operator-(Complex c, const TruncatedSeries& a) {
    std::vector<Complex> v(a.coeffs());
    for (Complex& x : v)
        x = -x;
    v[0] += c;
    return TruncatedSeries(a.center(), std::move(v));
}

TruncatedSeries operator*(Complex c, const TruncatedSeries& a) {
    std::vector<Complex> v(a.coeffs());
    for (Complex& x : v)
        x *= c;
    return TruncatedSeries(a.center(), std::move(v));
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
    require_aligned(num, den);
    const Complex d0 = den.coeffs()[0];
    if (std::abs(d0) < kDivFloor)
        throw NumericalError("division_floor",
                             "series division by constant term of modulus " +
                                 std::to_string(std::abs(d0)));
    std::vector<Complex> t(num.coeffs().size(), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < t.size(); ++k) {
        Complex acc = num.coeffs()[k];
        for (std::size_t j = 1; j <= k; ++j)
            acc -= den.coeffs()[j] * t[k - j];
        t[k] = acc / d0;
    }
    return TruncatedSeries(num.center(), std::move(t));
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (outer.order() != inner.order())
        throw InvalidInput("order_mismatch", "composition requires equal orders");
    if (std::abs(inner.coeffs()[0] - outer.center()) > 1e-9)
        throw InvalidInput("composition_alignment",
                           "inner constant term does not match outer center");
    std::vector<Complex> shifted(inner.coeffs());
    shifted[0] = 0.0; // residual below the alignment tolerance is dropped
    const TruncatedSeries x(inner.center(), std::move(shifted));

    TruncatedSeries acc =
        TruncatedSeries::constant(inner.center(), outer.coeffs().back(), inner.order());
    for (std::size_t k = outer.coeffs().size() - 1; k-- > 0;)
        acc = acc * x + outer.coeffs()[k];
    return acc;
}

TruncatedSeries moebius_t_series(Complex a, const TruncatedSeries& s) {
    if (std::abs(a) > 1.0 + 1e-12)
        throw InvalidInput("modulus_out_of_range", "moebius_t_series: |a| must be <= 1");
    return series_div(s + a, std::conj(a) * s + Complex{1.0, 0.0});
}

TruncatedSeries bracket_series(Complex w, Complex center, std::size_t order) {
    // numerator (z - w) and denominator (1 - conj(w) z) in powers of (z - center)
    std::vector<Complex> nc(order + 1, Complex{0.0, 0.0});
    nc[0] = center - w;
    if (order >= 1)
        nc[1] = 1.0;
    std::vector<Complex> dc(order + 1, Complex{0.0, 0.0});
    dc[0] = 1.0 - std::conj(w) * center;
    if (order >= 1)
        dc[1] = -std::conj(w);
    return series_div(TruncatedSeries(center, std::move(nc)),
                      TruncatedSeries(center, std::move(dc)));
}

TruncatedSeries moebius_t_neg_series(Complex z0, std::size_t order) {
    if (std::abs(z0) >= 1.0)
        throw InvalidInput("modulus_out_of_range", "moebius_t_neg_series: |z0| must be < 1");
    return bracket_series(z0, z0, order);
}

TruncatedSeries blaschke_series(const BlaschkeProduct& b, Complex center, std::size_t order) {
    TruncatedSeries acc =
        TruncatedSeries::constant(center, std::polar(1.0, b.theta()), order);
    for (const Complex& zero : b.zeros())
        acc = acc * bracket_series(zero, center, order);
    return acc;
}

Complex derivative_at_center(const TruncatedSeries& s, std::size_t k) {
    if (k > s.order())
        throw InvalidInput("order_out_of_range",
                           "derivative order " + std::to_string(k) + " exceeds series order " +
                               std::to_string(s.order()));
    double fact = 1.0;
    for (std::size_t j = 2; j <= k; ++j)
        fact *= static_cast<double>(j);
    return fact * s.coeffs()[k];
}

TruncatedSeries nested_moebius_series(Complex z0, Complex gamma0,
                                      std::span<const Complex> gammas,
                                      const TruncatedSeries& tail, std::size_t order) {
    if (tail.center() != z0 || tail.order() != order)
        throw InvalidInput("center_mismatch", "tail series must be centered at z0 at the build order");
    const TruncatedSeries u = moebius_t_neg_series(z0, order);
    TruncatedSeries w = tail * u;
    for (std::size_t k = gammas.size(); k-- > 0;)
        w = u * moebius_t_series(gammas[k], w);
    return moebius_t_series(gamma0, w);
}

} // namespace varreg
