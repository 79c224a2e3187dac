#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varreg {

// Errors carry a machine-readable kind; the CLI maps InvalidInput to exit
// code 1 and NumericalError to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

// Requested derivative data lies outside the reachable disk; keeps the
// offending index and the distance-to-disk excess for diagnostics.
class InfeasibleError : public InvalidInput {
public:
    InfeasibleError(std::size_t index, double excess, const std::string& message)
        : InvalidInput("infeasible", message), index_(index), excess_(excess) {}

    std::size_t index() const noexcept { return index_; }
    double excess() const noexcept { return excess_; }

private:
    std::size_t index_;
    double excess_;
};

} // namespace varreg
