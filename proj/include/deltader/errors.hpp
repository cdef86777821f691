#pragma once

#include <stdexcept>
#include <string>

namespace deltader {

// Malformed input: bad literals, invalid files, constructor preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of an operation does not hold.
class MathError : public std::runtime_error {
 public:
  MathError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DivisionByZero : public MathError {
 public:
  explicit DivisionByZero(const std::string& what) : MathError("DivisionByZero", what) {}
};

// Division in a quotient ring by an element sharing a factor with the modulus.
// `witness` is the monic gcd, printed as a coefficient list.
class NonInvertible : public MathError {
 public:
  NonInvertible(const std::string& what, std::string witness)
      : MathError("NonInvertible", what + " (gcd " + witness + ")"), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace deltader
