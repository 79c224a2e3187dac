#pragma once

#include <string>
#include <variant>

#include "varreg/peschl.hpp"

namespace varreg {

enum class BranchKind { Interior, BlaschkeDegenerate, ConstantUnimodular };

struct BranchClass {
    BranchKind kind = BranchKind::Interior;
    // 1-based index of the unit-modulus gamma; meaningful for
    // BlaschkeDegenerate only.
    std::size_t degenerate_index = 0;

    std::string label() const;
};

// Interior iff every modulus is interior; BlaschkeDegenerate(j) requires
// gamma_{j+1}..gamma_{n-1} = 0 (otherwise no admissible map exists and the
// data is rejected); ConstantUnimodular iff |gamma_0| = 1.
BranchClass classify(const HyperbolicData& data);

// The exact variability disk of f^{(n)}(z0) over maps with the prescribed
// data, n = data.n().  Degenerate branches give radius 0.
ClosedDisk disk_nth(const HyperbolicData& data);

// Tail of the nested extremal build: a constant epsilon with |epsilon| <= 1
// or a Schur function f* given as a Blaschke product (degree 0 covers
// unimodular constants).
using ExtremalTail = std::variant<Complex, BlaschkeProduct>;

struct ExtremalSpec {
    HyperbolicData data;
    ExtremalTail tail;
};

// Series about z0 of the nested extremal with the given tail; the
// degenerate branches build the forced function instead (the tail is
// ignored there).
TruncatedSeries extremal_series(const ExtremalSpec& spec, std::size_t order);

// Pointwise evaluation of the same nested function.
Complex extremal_eval(const ExtremalSpec& spec, Complex z);

// Second-derivative closed forms; exists solely as an independent
// cross-check of disk_nth at n = 2.
ClosedDisk c2_rho2_explicit(Complex z0, Complex gamma0, Complex gamma1);

} // namespace varreg
