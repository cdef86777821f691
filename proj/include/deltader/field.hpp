#pragma once

// Exact scalars: arbitrary-precision rationals, prime fields GF(p) with p >= 5,
// and univariate quotient rings base[t]/(f) over either of those.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace deltader {

enum class FieldKind { Rationals, PrimeField, QuotientRing };

namespace detail {
struct FieldRep;
}

class FieldElement;
class Polynomial;

/// Immutable, cheaply copyable handle to a scalar domain.
///
/// A default-constructed Field is the rationals. Prime fields reject
/// characteristic 2 and 3. Quotient rings take a monic modulus of degree >= 1
/// over Q or GF(p); they need not be fields, and division reports a gcd
/// witness when the divisor shares a factor with the modulus.
class Field {
 public:
  Field();

  static Field rationals();
  static Field prime_field(std::uint64_t p);
  static Field quotient_ring(const Field& base, const Polynomial& modulus);

  FieldKind kind() const;
  /// 0 for Q and quotient rings over Q.
  std::uint64_t characteristic() const;
  /// Base of a quotient ring; the field itself otherwise.
  const Field& base() const;
  /// Modulus of a quotient ring. Throws for other kinds.
  const Polynomial& modulus() const;
  /// deg(f) for quotient rings, 1 otherwise.
  std::size_t degree() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement from_rational(const mpq_class& q) const;
  /// Exact literal: "3", "-7/4", or for quotient rings also "t".
  /// Decimals and anything else are rejected with InputError.
  FieldElement parse(std::string_view literal) const;
  /// The class of t in a quotient ring.
  FieldElement generator() const;

  std::string describe() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  const detail::FieldRep* rep() const { return rep_.get(); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldRep> rep);

  std::shared_ptr<const detail::FieldRep> rep_;
};

/// A canonical-form element of a Field. Values are immutable.
class FieldElement {
 public:
  /// Zero of Q.
  FieldElement();

  static FieldElement from_rational(const Field& f, mpq_class q);
  static FieldElement from_residue(const Field& f, std::uint64_t r);
  static FieldElement from_coefficients(const Field& f, std::vector<FieldElement> coeffs);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  bool operator==(const FieldElement& b) const;
  bool operator!=(const FieldElement& b) const { return !(*this == b); }

  const mpq_class& rational() const;
  std::uint64_t residue() const;
  /// Quotient-ring representative, exactly deg(f) base coefficients (low first).
  const std::vector<FieldElement>& coefficients() const;

  /// "p/q" or "p" for Q, the residue for GF(p), a polynomial in t otherwise.
  std::string to_string() const;

 private:
  using Payload = std::variant<mpq_class, std::uint64_t, std::vector<FieldElement>>;
  FieldElement(Field f, Payload p) : field_(std::move(f)), payload_(std::move(p)) {}

  void require_same(const FieldElement& b) const;

  Field field_;
  Payload payload_;
};

using Vector = std::vector<FieldElement>;

/// Quotient ring over `base` whose modulus is irreducible of degree
/// >= degree_bound + 1. The generator then behaves as a transcendental
/// parameter for every polynomial identity of degree <= degree_bound.
/// Over Q the modulus is t^d - 2 (Eisenstein at 2); over GF(p) it is the
/// first irreducible t^d + g(t) with g enumerated by its base-p digits.
Field adjoin_parameter(const Field& base, std::size_t degree_bound);

/// Deterministic primality for 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace deltader
