#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "varreg/errors.hpp"

namespace varreg {

using Complex = std::complex<double>;

// Denominator floor below which a Moebius quotient is treated as a pole.
// Only exact antipodal boundary pairs reach it from admissible inputs.
inline constexpr double kPoleFloor = 1e-300;

// Value of the bracket [z,w] = (z-w)/(1 - conj(w) z).  Infinity is a
// legitimate output (a tagged value), not an error; downstream code
// branches on it.
struct BracketValue {
    Complex value{0.0, 0.0};
    bool infinite = false;

    static BracketValue finite(Complex v) { return {v, false}; }
    static BracketValue infinity() { return {Complex{0.0, 0.0}, true}; }
};

BracketValue bracket(Complex z, Complex w);

// T_a(z) = (z + a) / (1 + conj(a) z); maps the unit disk onto itself for
// |a| < 1.  Throws a pole error when the denominator vanishes.
Complex moebius_t(Complex a, Complex z);

struct ClosedDisk {
    Complex center{0.0, 0.0};
    double radius = 0.0;

    bool contains(Complex point, double slack = 0.0) const {
        return std::abs(point - center) <= radius + slack;
    }
    // Negative inside the disk, positive outside.
    double signed_distance(Complex point) const { return std::abs(point - center) - radius; }
};

// e^{i theta} prod_j [z, z_j] with all |z_j| < 1.  Degree 0 is the
// unimodular constant e^{i theta}; the angle is stored rather than the
// constant so unit modulus holds exactly.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;
    BlaschkeProduct(double theta, std::vector<Complex> zeros);

    double theta() const { return theta_; }
    const std::vector<Complex>& zeros() const { return zeros_; }
    std::size_t degree() const { return zeros_.size(); }

private:
    double theta_ = 0.0;
    std::vector<Complex> zeros_{};
};

Complex blaschke_eval(const BlaschkeProduct& b, Complex z);

} // namespace varreg
