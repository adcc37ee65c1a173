#pragma once

#include <stdexcept>

namespace ppart {

// User-level failures: malformed input, invalid operations on the given data,
// resource guards.  The command line tool maps these to exit code 1.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Poset file does not follow the grammar (bad header, bad relation line, ...).
class ParseError : public Error {
public:
  using Error::Error;
};

// Relation lines close into a cycle, so no partial order exists.
class CycleError : public Error {
public:
  using Error::Error;
};

// duplicate() was asked to act at an element that admits no hanging
// decomposition below it.
class InvalidDuplication : public Error {
public:
  using Error::Error;
};

// A closed-form routine was called on a poset whose ring is not a complete
// intersection.
class NotCompleteIntersection : public Error {
public:
  using Error::Error;
};

// An enumeration exceeded its configured step / size budget.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

// A construction certificate cannot be replayed (unknown or colliding labels).
class CertificateError : public Error {
public:
  using Error::Error;
};

// Broken internal invariant: something the theory guarantees failed to hold.
// The command line tool maps these to exit code 2.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The three independent complete-intersection deciders returned different
// answers on the same poset.
class MethodDisagreement : public InternalError {
public:
  using InternalError::InternalError;
};

}  // namespace ppart
