#include "varreg/moebius.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace varreg {

BracketValue bracket(Complex z, Complex w) {
    if (z * std::conj(w) == Complex{-1.0, 0.0})
        return BracketValue::infinity();
    const Complex denom = 1.0 - std::conj(w) * z;
    if (std::abs(denom) < kPoleFloor)
        return BracketValue::infinity();
    return BracketValue::finite((z - w) / denom);
}

Complex moebius_t(Complex a, Complex z) {
    if (std::abs(a) > 1.0 + 1e-12)
        throw InvalidInput("modulus_out_of_range", "moebius_t: |a| must be <= 1, got " +
                                                       std::to_string(std::abs(a)));
    const Complex denom = 1.0 + std::conj(a) * z;
    if (std::abs(denom) < kPoleFloor)
        throw NumericalError("pole", "moebius_t: 1 + conj(a) z vanishes");
    return (z + a) / denom;
}

BlaschkeProduct::BlaschkeProduct(double theta, std::vector<Complex> zeros)
    : theta_(theta), zeros_(std::move(zeros)) {
    for (std::size_t j = 0; j < zeros_.size(); ++j) {
        if (!(std::abs(zeros_[j]) < 1.0))
            throw InvalidInput("modulus_out_of_range",
                               "blaschke zero " + std::to_string(j) + " has modulus >= 1");
    }
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw InvalidInput("modulus_out_of_range", "blaschke_eval: |z| must be <= 1");
    Complex acc = std::polar(1.0, b.theta());
    for (const Complex& zero : b.zeros())
        acc *= bracket(z, zero).value;
    return acc;
}

} // namespace varreg
