#pragma once

#include <stdexcept>
#include <string>

namespace lame {

/// Base class for all numeric / input failures raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The cubic has (numerically) a multiple root; the curve is singular.
struct DegenerateCubic : Error {
    using Error::Error;
};

/// A series expansion was requested too close to a singular point.
struct NearSingular : Error {
    using Error::Error;
};

/// A fundamental matrix was evaluated outside its safe disk.
struct OutsideDisk : Error {
    using Error::Error;
};

/// Newton refinement of an algebraic number lost its root.
struct RootLost : Error {
    using Error::Error;
};

/// The working precision is too small for the requested recognition.
struct InsufficientPrecision : Error {
    using Error::Error;
};

/// A loop segment could not be routed around a singular point.
struct PathCollision : Error {
    using Error::Error;
};

/// No sign change of the bisection objective within the search range.
struct NoBracket : Error {
    using Error::Error;
};

/// The descent step size underflowed before reaching the tolerance.
struct Stalled : Error {
    using Error::Error;
};

/// A catalog or curve file violates the expected schema.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace lame
