#pragma once

#include <stdexcept>
#include <string>

namespace lllshift {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad group spec, empty sets where nonempty required, etc.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An element whose shape does not belong to the group it is used with.
class ElementMismatch : public Error {
public:
    using Error::Error;
};

/// A position was requested outside the finite window an assignment lives on.
class WindowError : public Error {
public:
    using Error::Error;
};

/// A proven bound failed to hold on a built instance. Always an implementation bug.
class BoundViolation : public Error {
public:
    using Error::Error;
};

class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace lllshift
