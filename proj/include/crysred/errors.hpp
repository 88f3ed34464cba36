#pragma once

#include <stdexcept>
#include <string>

namespace crysred {

// Raised when a comparison or branch cannot be decided at the current
// working precision; callers are expected to retry at higher precision.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonUnitError : std::runtime_error {
    explicit NonUnitError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularMatrix : std::runtime_error {
    explicit SingularMatrix(const std::string& msg) : std::runtime_error(msg) {}
};

// (T-a)psi came out non-integral: an implementation bug, not a math case.
struct IntegralityFailure : std::runtime_error {
    explicit IntegralityFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct BranchMismatch : std::runtime_error {
    explicit BranchMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonSquareCentre : std::runtime_error {
    explicit NonSquareCentre(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace crysred
