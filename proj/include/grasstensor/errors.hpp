#ifndef GRASSTENSOR_ERRORS_HPP
#define GRASSTENSOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grasstensor {

/// Shape or index mismatch between operands.
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input (JSON files, rational literals, multi-indices).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Inconsistent projection setup: profile does not partition k+1, a view is
/// rank-deficient, alpha out of range, and similar semantic problems.
struct SetupError : std::runtime_error {
    explicit SetupError(const std::string& what) : std::runtime_error(what) {}
};

/// The genericity assumption fails for a setup, so canonical-form and
/// closed-formula operations refuse to run.
struct GenericityError : std::runtime_error {
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// A condition that is mathematically impossible for valid inputs was hit.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace grasstensor

#endif
