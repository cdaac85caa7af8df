#ifndef SCHMIDT_ERRORS_HPP
#define SCHMIDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schmidt {

/* Base class for everything thrown by this library. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* A value violates a structural invariant (checked constructors). The
 * message names the violated invariant. */
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/* Bad user-facing parameters (identity hypotheses, caps, spec strings). */
struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

/* A finite index-set prefix was queried past its end. */
struct ExhaustedError : Error {
    explicit ExhaustedError(const std::string& msg) : Error(msg) {}
};

/* An enumeration or expansion would not terminate at the given caps. */
struct InfiniteSetError : Error {
    explicit InfiniteSetError(const std::string& msg) : Error(msg) {}
};

/* Request exceeds a hard resource bound (e.g. factorial enumeration). */
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

}  // namespace schmidt

#endif
