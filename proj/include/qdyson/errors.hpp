#pragma once

#include <stdexcept>
#include <string>

namespace qdyson {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments or malformed specs (negative a, index out of range, ...).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

// exact_div was asked to divide polynomials that do not divide exactly.
// The nonzero residual is kept as evidence: it signals either a wrong
// closed form or a wrong extracted coefficient.
class NonExactDivision : public Error {
public:
    NonExactDivision(const std::string& what, std::string remainder)
        : Error(what), remainder_str(std::move(remainder)) {}
    std::string remainder_str;
};

// as_signed_q_power applied to something that is not +-q^L.
class NotAMonomial : public Error {
public:
    explicit NotAMonomial(const std::string& what) : Error(what) {}
};

// Expansion or spec exceeds the configured size caps.
class SizeLimitExceeded : public Error {
public:
    explicit SizeLimitExceeded(const std::string& what) : Error(what) {}
};

// The hypothesized closed-form shape does not match the extracted data.
class AnsatzFailure : public Error {
public:
    explicit AnsatzFailure(const std::string& what, bool collision = false)
        : Error(what), exponent_collision(collision) {}
    bool exponent_collision;
};

// The affine fit's linear system has no unique solution.
class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& what) : Error(what) {}
};

// The affine fit solved but with non-integer coefficients: the
// piecewise-linear hypothesis fails at these samples.
class NonIntegerFit : public Error {
public:
    explicit NonIntegerFit(const std::string& what) : Error(what) {}
};

}  // namespace qdyson
