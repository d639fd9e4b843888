#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clairaut {

// Common base so callers can catch anything thrown by this library in one go.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Expression source could not be parsed. `offset` is the byte position of the
// first offending character; `expected` describes what would have been legal.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset, std::string expected)
        : Error(what), offset(offset), expected(std::move(expected)) {}
    std::size_t offset;
    std::string expected;
};

// Evaluation left the real domain (sqrt of a negative, log of a non-positive,
// division by zero, fractional power of a negative base, overflow).
struct DomainError : Error {
    DomainError(const std::string& what, std::string subexpression)
        : Error(what), subexpression(std::move(subexpression)) {}
    std::string subexpression;
};

// Root finding was asked for a bracket that does not straddle a sign change.
struct NoBracketError : Error {
    using Error::Error;
};

// An iterative routine hit its iteration cap before meeting its tolerance.
struct MaxIterationsError : Error {
    using Error::Error;
};

// A parameter value fell outside the curve/branch domain.
struct OutOfDomainError : Error {
    using Error::Error;
};

// A parameter value fell inside an excluded neighborhood of a parametric curve.
struct ExcludedParameterError : Error {
    using Error::Error;
};

// An implicit relation had no roots anywhere on the sampled domain.
struct NoRootsError : Error {
    using Error::Error;
};

// A point handed to a residual check does not lie on the surface.
struct NotOnSurfaceError : Error {
    using Error::Error;
};

// The implicit surface has |F_z| ~ 0 at the point, so z_x = -F_x/F_z is
// meaningless there. Distinct from NotOnSurfaceError on purpose: the point IS
// on the surface, the explicit-slope question is what fails.
struct VerticalTangentError : Error {
    using Error::Error;
};

// A classification candidate does not satisfy f = 0 and df/dparam = 0.
struct CandidateNotOnFamilyError : Error {
    using Error::Error;
};

// Catalog lookup for a name that is not registered.
struct UnknownEntryError : Error {
    using Error::Error;
};

// A family-spec document (CLI input) is malformed or uses unknown keys.
struct SpecError : Error {
    using Error::Error;
};

} // namespace clairaut
