#pragma once

#include <cmath>
#include <complex>

#include "varreg/moebius.hpp"

namespace varreg::testing {

inline bool approx_eq(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

inline double rel_gap(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace varreg::testing
