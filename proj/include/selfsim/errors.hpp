#pragma once

#include <stdexcept>
#include <string>

namespace selfsim {

// Precondition violated by the caller (bad matrix, wrong subgroup, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Certified precision too small for the requested computation.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A configured enumeration or sampling cap was exceeded.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace selfsim
