#include "varreg/peschl.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace varreg {

namespace {

using Int128 = __int128;

constexpr Int128 kInt64Max = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow_checked(Int128 v, const char* what) {
    if (v > kInt64Max || v < -kInt64Max)
        throw NumericalError("integer_overflow", std::string(what) + " overflows 64 bits");
    return static_cast<std::int64_t>(v);
}

Int128 factorial128(int n) {
    Int128 acc = 1;
    for (int i = 2; i <= n; ++i) {
        acc *= i;
        if (acc > (Int128(1) << 120))
            throw NumericalError("integer_overflow", "factorial overflows");
    }
    return acc;
}

Int128 binomial128(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > (Int128(1) << 120))
            throw NumericalError("integer_overflow", "binomial overflows");
    }
    return acc;
}

double dfactorial(std::size_t n) {
    double acc = 1.0;
    for (std::size_t i = 2; i <= n; ++i)
        acc *= static_cast<double>(i);
    return acc;
}

// std::pow on complex arguments goes through exp/log and misbehaves at 0;
// plain repeated multiplication is exact for the small exponents used here.
Complex cpow_int(Complex base, int e) {
    Complex acc{1.0, 0.0};
    for (int i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

double dpow_int(double base, int e) {
    double acc = 1.0;
    for (int i = 0; i < e; ++i)
        acc *= base;
    return acc;
}

} // namespace

std::int64_t binomial(int n, int k) { return narrow_checked(binomial128(n, k), "binomial"); }

std::int64_t alpha_coeff(int n, int k) {
    if (k < 1 || k > n)
        return 0;
    const Int128 magnitude = binomial128(n, k) * binomial128(n - 1, k - 1) * factorial128(n - k);
    const std::int64_t value = narrow_checked(magnitude, "alpha coefficient");
    return ((n - k) % 2 == 0) ? value : -value;
}

Complex bell_partial(int n, int k, std::span<const Complex> x) {
    if (k < 1 || k > n)
        throw InvalidInput("order_out_of_range", "bell_partial requires 1 <= k <= n");
    const int len = n - k + 1;
    if (static_cast<int>(x.size()) < len)
        throw InvalidInput("bad_argument", "bell_partial needs x_1..x_{n-k+1}");

    const Int128 nfact = factorial128(n);
    Complex total{0.0, 0.0};
    std::vector<int> j(static_cast<std::size_t>(len), 0);

    // bounded recursive enumeration of multi-indices with
    // sum j_i = k and sum i*j_i = n
    auto enumerate = [&](auto&& self, int i, int parts_left, int weight_left) -> void {
        if (i == len) {
            if (parts_left != 0 || weight_left != 0)
                return;
            Int128 denom = 1;
            Complex mono{1.0, 0.0};
            for (int t = 0; t < len; ++t) {
                const int jt = j[static_cast<std::size_t>(t)];
                if (jt == 0)
                    continue;
                const Int128 ifact = factorial128(t + 1);
                for (int rep = 0; rep < jt; ++rep) {
                    denom *= ifact;
                    mono *= x[static_cast<std::size_t>(t)];
                }
                denom *= factorial128(jt);
            }
            if (nfact % denom != 0)
                throw NumericalError("integer_overflow", "bell coefficient is not integral");
            total += static_cast<double>(narrow_checked(nfact / denom, "bell coefficient")) * mono;
            return;
        }
        const int weight = i + 1;
        const int max_j = std::min(parts_left, weight_left / weight);
        for (int jt = 0; jt <= max_j; ++jt) {
            j[static_cast<std::size_t>(i)] = jt;
            self(self, i + 1, parts_left - jt, weight_left - jt * weight);
        }
        j[static_cast<std::size_t>(i)] = 0;
    };
    enumerate(enumerate, 0, k, n);
    return total;
}

std::vector<Complex> peschl_from_series(const TruncatedSeries& f_series, std::size_t n) {
    if (n == 0)
        throw InvalidInput("bad_argument", "order n must be >= 1");
    if (f_series.order() < n)
        throw InvalidInput("order_out_of_range", "series order too low for requested n");
    const TruncatedSeries g = moebius_renormalized_series(f_series);
    std::vector<Complex> ds(n);
    for (std::size_t k = 1; k <= n; ++k)
        ds[k - 1] = derivative_at_center(g, k);
    return ds;
}

std::vector<Complex> peschl_from_ordinary(Complex z0, Complex f0,
                                          std::span<const Complex> derivs) {
    if (derivs.empty())
        throw InvalidInput("bad_argument", "at least f'(z0) is required");
    if (!(std::abs(z0) < 1.0) || !(std::abs(f0) < 1.0))
        throw InvalidInput("modulus_out_of_range", "z0 and f(z0) must lie in the open disk");
    const double one_mz = 1.0 - std::norm(z0);
    const double one_mf = 1.0 - std::norm(f0);
    const Complex zbar = std::conj(z0);
    const Complex neg_fbar = -std::conj(f0);

    const int n = static_cast<int>(derivs.size());
    std::vector<Complex> ds(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        Complex first{0.0, 0.0};
        for (int k = 1; k <= m; ++k) {
            first += static_cast<double>(alpha_coeff(m, k)) * cpow_int(zbar, m - k) *
                     dpow_int(one_mz, k) * derivs[static_cast<std::size_t>(k - 1)] / one_mf;
        }
        Complex second{0.0, 0.0};
        for (int k = 2; k <= m; ++k) {
            const double kfact = static_cast<double>(narrow_checked(factorial128(k), "k!"));
            second += kfact * cpow_int(neg_fbar, k - 1) *
                      bell_partial(m, k, std::span<const Complex>(ds.data(),
                                                                  static_cast<std::size_t>(m - k + 1)));
        }
        ds[static_cast<std::size_t>(m - 1)] = first - second;
    }
    return ds;
}

Complex ordinary_from_peschl(Complex z0, Complex f0, std::span<const Complex> ds) {
    if (ds.empty())
        throw InvalidInput("bad_argument", "at least D^1 is required");
    if (!(std::abs(z0) < 1.0) || !(std::abs(f0) < 1.0))
        throw InvalidInput("modulus_out_of_range", "z0 and f(z0) must lie in the open disk");
    const int n = static_cast<int>(ds.size());
    const double one_mz = 1.0 - std::norm(z0);
    const double one_mf = 1.0 - std::norm(f0);
    const Complex zbar = std::conj(z0);
    const Complex neg_fbar = -std::conj(f0);

    Complex sum{0.0, 0.0};
    for (int k = 1; k <= n; ++k) {
        Complex bk{0.0, 0.0};
        const double kfact = static_cast<double>(narrow_checked(factorial128(k), "k!"));
        for (int l = 1; l <= k; ++l) {
            const double lfact = static_cast<double>(narrow_checked(factorial128(l), "l!"));
            bk += (lfact / kfact) * cpow_int(neg_fbar, l - 1) *
                  bell_partial(k, l, std::span<const Complex>(ds.data(),
                                                              static_cast<std::size_t>(k - l + 1)));
        }
        sum += static_cast<double>(binomial(n - 1, k - 1)) * cpow_int(zbar, n - k) * bk;
    }
    const double nfact = static_cast<double>(narrow_checked(factorial128(n), "n!"));
    return nfact * one_mf / dpow_int(one_mz, n) * sum;
}

Complex s_remainder(Complex z0, Complex gamma0, std::span<const Complex> gammas) {
    const std::size_t n = gammas.size() + 1;
    if (n == 1)
        return Complex{0.0, 0.0}; // s_0 = 0
    if (!(std::abs(z0) < 1.0))
        throw InvalidInput("modulus_out_of_range", "|z0| must be < 1");
    if (std::abs(gamma0) >= 1.0 - kUnitModulusTol)
        throw InvalidInput("degenerate_data", "s_remainder requires |gamma_0| < 1");

    // Reference function: the epsilon = 0 nested build on the interior
    // branch, or the finite Blaschke branch function when a gamma hits the
    // unit circle.
    std::size_t cut = gammas.size();
    Complex tail_value{0.0, 0.0};
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        if (std::abs(gammas[k]) >= 1.0 - kUnitModulusTol) {
            cut = k;
            tail_value = gammas[k];
            break;
        }
    }

    const std::size_t order = n + 2;
    const TruncatedSeries tail = TruncatedSeries::constant(z0, tail_value, order);
    const TruncatedSeries f_ref =
        nested_moebius_series(z0, gamma0, gammas.subspan(0, cut), tail, order);

    const std::vector<Complex> ds = peschl_from_series(f_ref, n);
    const Complex f_n = derivative_at_center(f_ref, n);
    const double one_mz = 1.0 - std::norm(z0);
    return ds[n - 1] - dpow_int(one_mz, static_cast<int>(n)) * f_n / (1.0 - std::norm(gamma0));
}

Complex hyperbolic_from_peschl(std::span<const Complex> ds, std::span<const Complex> hs) {
    if (ds.empty())
        throw InvalidInput("bad_argument", "at least D^1 is required");
    const std::size_t n = ds.size();
    if (hs.size() != n - 1)
        throw InvalidInput("bad_argument", "need H^1..H^{n-1} alongside D^1..D^n");
    if (n == 1)
        return ds[0];
    const double nfact = dfactorial(n);
    double prod = 1.0;
    for (const Complex& h : hs)
        prod *= 1.0 - std::norm(h);
    const double denom = nfact * prod;
    if (std::abs(denom) < 1e-12)
        throw NumericalError("degenerate_denominator",
                             "a lower-order hyperbolic derivative has unit modulus");
    return (ds[n - 1] - nfact * g_poly(hs)) / denom;
}

} // namespace varreg
