#pragma once

#include <stdexcept>
#include <string>

namespace canbase {

/// A rational operation received a zero divisor. In the decomposition
/// pipeline this indicates a zero pivot or malformed input.
class division_by_zero : public std::domain_error {
public:
    division_by_zero() : std::domain_error("division by zero") {}
};

/// A rational function that was expected to reduce to a Laurent polynomial
/// did not. The factorization theory guarantees integrality of L, Q, P and
/// F, so this always indicates a bug upstream (ordering, pairing, solve).
class not_laurent : public std::domain_error {
public:
    explicit not_laurent(const std::string& what)
        : std::domain_error("not a Laurent polynomial: " + what) {}
};

/// A diagonal pivot vanished during LDLT or a solve. The bilinear form is
/// non-degenerate, so a zero pivot means the basis order is inconsistent.
class zero_pivot : public std::domain_error {
public:
    explicit zero_pivot(std::size_t index)
        : std::domain_error("zero pivot at index " + std::to_string(index)) {}
};

/// A Weyl-group sum would exceed the configured summand cap.
class resource_limit : public std::runtime_error {
public:
    resource_limit(unsigned long long needed, unsigned long long cap)
        : std::runtime_error("Weyl sum needs " + std::to_string(needed) +
                             " summands, cap is " + std::to_string(cap)) {}
};

} // namespace canbase
