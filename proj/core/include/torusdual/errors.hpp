#pragma once

#include <stdexcept>
#include <string>

namespace torusdual {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition (e.g. a chain that is not a cycle).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An operation was asked for outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (group order, bar-complex table size) was exceeded.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// The requested model shape is not supported by the computation route.
class UnsupportedModel : public Error {
 public:
  using Error::Error;
};

/// Class-formation hypotheses fail, so an operation that depends on them refuses to run.
class HypothesisFailure : public Error {
 public:
  using Error::Error;
};

/// Internal inconsistency between two computation routes that should agree.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace torusdual
