#ifndef SC_ERRORS_HPP
#define SC_ERRORS_HPP

#include <stdexcept>

namespace sc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text that cannot be parsed into a word, or a symbol outside the alphabet.
class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// A size limit was hit; the caller should pick a cheaper method or smaller input.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class NotAllDistinct : public Error {
 public:
  using Error::Error;
};

/// The requested construction divides by d-1 and is undefined for d = 1.
class DNotSupported : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed. Always a bug.
class InternalInvariantBroken : public Error {
 public:
  using Error::Error;
};

}  // namespace sc

#endif  // SC_ERRORS_HPP
