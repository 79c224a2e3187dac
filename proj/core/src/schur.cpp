#include "varreg/schur.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace varreg {

HyperbolicData::HyperbolicData(Complex z0, std::vector<Complex> gammas)
    : z0_(z0), gammas_(std::move(gammas)) {
    if (gammas_.empty())
        throw InvalidInput("bad_argument", "at least gamma_0 is required");
    if (!(std::abs(z0_) < 1.0))
        throw InvalidInput("modulus_out_of_range", "|z0| must be < 1");
    for (std::size_t k = 0; k < gammas_.size(); ++k) {
        if (std::abs(gammas_[k]) > 1.0 + 1e-12)
            throw InvalidInput("modulus_out_of_range",
                               "|gamma_" + std::to_string(k) + "| exceeds 1");
    }
}

HyperbolicData HyperbolicData::prefix(std::size_t m) const {
    if (m == 0 || m > gammas_.size())
        throw InvalidInput("bad_argument", "prefix length out of range");
    return HyperbolicData(z0_, std::vector<Complex>(gammas_.begin(), gammas_.begin() + m));
}

SchurPolynomialTable::SchurPolynomialTable(std::span<const Complex> gammas)
    : gammas_(gammas.begin(), gammas.end()),
      memo_(gammas_.size() * (gammas_.size() + 1), Complex{0.0, 0.0}),
      have_(gammas_.size() * (gammas_.size() + 1), 0) {}

Complex SchurPolynomialTable::f(std::size_t start, std::size_t len) {
    if (len == 0 || start + len > gammas_.size())
        throw InvalidInput("bad_argument", "F window out of range");
    if (len == 1)
        return gammas_[start];
    const std::size_t at = index(start, len);
    if (have_[at])
        return memo_[at];
    const double head = 1.0 - std::norm(gammas_[start]);
    Complex value;
    if (len == 2) {
        value = head * gammas_[start + 1];
    } else {
        value = head * f(start + 1, len - 1);
        Complex corr{0.0, 0.0};
        for (std::size_t k = 2; k + 1 <= len; ++k)
            corr += f(start + 1, len - k) * f(start, k);
        value -= std::conj(gammas_[start]) * corr;
    }
    memo_[at] = value;
    have_[at] = 1;
    return value;
}

Complex f_poly(std::span<const Complex> gammas) {
    if (gammas.empty())
        throw InvalidInput("bad_argument", "f_poly requires a nonempty list");
    SchurPolynomialTable table(gammas);
    return table.f(0, gammas.size());
}

Complex g_poly(std::span<const Complex> gammas) {
    if (gammas.empty())
        return Complex{0.0, 0.0}; // G_1 = 0
    std::vector<Complex> padded(gammas.begin(), gammas.end());
    padded.push_back(Complex{0.0, 0.0});
    return f_poly(padded);
}

std::vector<Complex> coefficients_from_parameters(std::span<const Complex> gammas) {
    SchurPolynomialTable table(gammas);
    std::vector<Complex> coeffs(gammas.size());
    for (std::size_t k = 1; k <= gammas.size(); ++k)
        coeffs[k - 1] = table.f(0, k);
    return coeffs;
}

SchurParameters parameters_from_coefficients(std::span<const Complex> coeffs) {
    SchurParameters out;
    double prod = 1.0;
    for (std::size_t k = 1; k <= coeffs.size(); ++k) {
        const Complex gk = (coeffs[k - 1] - g_poly(out.gammas)) / prod;
        const double mod = std::abs(gk);
        if (mod > 1.0 + kInconsistentTol)
            throw InvalidInput("inconsistent_data",
                               "coefficient data is not from a self-map: |gamma_" +
                                   std::to_string(k) + "| = " + std::to_string(mod));
        out.gammas.push_back(gk);
        if (mod >= 1.0 - kUnitModulusTol) {
            out.degenerate_at = k;
            return out;
        }
        prod *= 1.0 - mod * mod;
    }
    return out;
}

TruncatedSeries moebius_renormalized_series(const TruncatedSeries& f_series) {
    const Complex z0 = f_series.center();
    const std::size_t order = f_series.order();
    const Complex w0 = f_series.coeffs()[0];
    if (1.0 - std::norm(w0) < 1e-12)
        throw InvalidInput("degenerate_data", "|f(z0)| too close to 1 for renormalization");

    // T_{z0} about 0, constant term z0
    std::vector<Complex> nc(order + 1, Complex{0.0, 0.0});
    nc[0] = z0;
    if (order >= 1)
        nc[1] = 1.0;
    std::vector<Complex> dc(order + 1, Complex{0.0, 0.0});
    dc[0] = 1.0;
    if (order >= 1)
        dc[1] = std::conj(z0);
    const TruncatedSeries inner = series_div(TruncatedSeries(Complex{0.0, 0.0}, std::move(nc)),
                                             TruncatedSeries(Complex{0.0, 0.0}, std::move(dc)));

    const TruncatedSeries composed = series_compose(f_series, inner);
    return series_div(composed - w0, Complex{1.0, 0.0} - std::conj(w0) * composed);
}

SchurParameters hyperbolic_derivatives(const TruncatedSeries& f_series, std::size_t n) {
    if (n == 0)
        throw InvalidInput("bad_argument", "order n must be >= 1");
    if (f_series.order() < n)
        throw InvalidInput("order_out_of_range", "series order too low for requested n");
    const TruncatedSeries g = moebius_renormalized_series(f_series);
    std::vector<Complex> coeffs(g.coeffs().begin() + 1, g.coeffs().begin() + 1 + n);
    return parameters_from_coefficients(coeffs);
}

BracketValue divided_difference(const std::function<Complex(Complex)>& f, Complex z,
                                std::span<const Complex> nodes) {
    const std::size_t n = nodes.size();
    std::vector<Complex> points(nodes.begin(), nodes.end());
    points.push_back(z);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw InvalidInput("node_coincidence", "divided difference nodes must be distinct");

    std::vector<BracketValue> level(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        level[i] = BracketValue::finite(f(points[i]));

    for (std::size_t j = 1; j <= n; ++j) {
        const BracketValue pivot = level[j - 1];
        const Complex pivot_point = points[j - 1];
        for (std::size_t i = points.size(); i-- > j;) {
            const BracketValue& cur = level[i];
            BracketValue num;
            if (cur.infinite || pivot.infinite)
                num = BracketValue::infinity();
            else
                num = bracket(cur.value, pivot.value);
            const BracketValue den = bracket(points[i], pivot_point);
            if (num.infinite) {
                level[i] = BracketValue::infinity();
            } else if (den.infinite) {
                level[i] = BracketValue::finite(Complex{0.0, 0.0});
            } else {
                level[i] = BracketValue::finite(num.value / den.value);
            }
        }
    }
    return level[n];
}

} // namespace varreg
