#ifndef VERON_ERRORS_HPP
#define VERON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace veron {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPrimeCharacteristic : public Error {
public:
    using Error::Error;
};

class ReducibleModulus : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// An element or object was used with a field it does not belong to.
class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Two subspaces or vectors live in different ambient dimensions.
class AmbientMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class ParamOutOfRange : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed the documented size bounds.
class EnumerationTooLarge : public Error {
public:
    using Error::Error;
};

/// A computation was requested outside the hypotheses under which its
/// result is meaningful (e.g. a small-field case).
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

}  // namespace veron

#endif
