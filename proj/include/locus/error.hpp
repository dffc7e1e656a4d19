#pragma once

#include <stdexcept>
#include <string>

namespace locus {

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("coefficient field mismatch") {}
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("ring mismatch") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& what)
      : Error(what + " of the zero polynomial") {}
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class UnitIdeal : public Error {
 public:
  UnitIdeal() : Error("the localizing ideal is the unit ideal") {}
};

class NotMinimal : public Error {
 public:
  NotMinimal() : Error("complex still contains units; prune it first") {}
};

/// Raised when the length loop hits its iteration cap.
class InfiniteLength : public Error {
 public:
  explicit InfiniteLength(long cap)
      : Error("length may be infinite: iteration cap " + std::to_string(cap) +
              " reached"),
        cap_(cap) {}
  long cap() const noexcept { return cap_; }

 private:
  long cap_;
};

}  // namespace locus
