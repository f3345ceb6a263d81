#pragma once

#include <stdexcept>
#include <string>

namespace bbs {

// Every failure raised by the library derives from Error. The C API maps the
// concrete type onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A term mentions a variable the ordering does not rank.
class OrderingDomainError : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

// Input violates a mathematical precondition (not divisor-closed, not on the
// scheme, not zero-dimensional, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured safety cutoff was hit. Never silently truncated.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& cutoff, const std::string& detail)
      : Error("resource limit '" + cutoff + "' exceeded: " + detail), cutoff_(cutoff) {}
  const std::string& cutoff() const { return cutoff_; }

 private:
  std::string cutoff_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Something the theory says cannot happen did happen.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bbs
