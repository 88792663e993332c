#ifndef WILLMORE_ERRORS_HPP
#define WILLMORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace willmore {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct BackendMismatch : Error {
    BackendMismatch() : Error("coefficient backends differ") {}
};

struct LeadingPartNotInvertible : Error {
    explicit LeadingPartNotInvertible(const std::string& msg = "leading part is not a single invertible monomial")
        : Error(msg) {}
};

struct InsufficientOrder : Error {
    explicit InsufficientOrder(const std::string& msg = "requested data lies outside the reliable window")
        : Error(msg) {}
};

struct RIndependenceViolated : Error {
    explicit RIndependenceViolated(const std::string& msg = "circle integral depends on the contour radius")
        : Error(msg) {}
};

struct ExpansionFailure : Error {
    explicit ExpansionFailure(const std::string& msg) : Error(msg) {}
};

struct NotNormal : Error {
    explicit NotNormal(const std::string& msg = "vector field is not normal to the surface") : Error(msg) {}
};

struct NotMeromorphic : Error {
    explicit NotMeromorphic(const std::string& msg = "form is not meromorphic") : Error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct ParityViolation : Error {
    explicit ParityViolation(const std::string& msg = "end/branch data violates the degree parity constraint")
        : Error(msg) {}
};

struct NonConvergent : Error {
    explicit NonConvergent(const std::string& msg = "quadrature did not converge") : Error(msg) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace willmore

#endif
