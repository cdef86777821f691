#pragma once

#include <string>
#include <utility>
#include <vector>

#include "deltader/field.hpp"

namespace deltader {

/// Dense univariate polynomial over a Field, coefficients low degree first.
/// The zero polynomial has degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field f = Field());
  Polynomial(Field f, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  /// c * t^k
  static Polynomial monomial(const FieldElement& c, std::size_t k);
  /// t - r
  static Polynomial linear_root(const FieldElement& r);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  FieldElement coeff(std::size_t k) const;
  FieldElement leading() const;

  Polynomial operator+(const Polynomial& b) const;
  Polynomial operator-(const Polynomial& b) const;
  Polynomial operator*(const Polynomial& b) const;
  Polynomial operator*(const FieldElement& c) const;
  Polynomial operator-() const;

  /// Euclidean division; the divisor's leading coefficient must be invertible.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  /// Quotient of an exact division, or throws MathError if a remainder is left.
  Polynomial divide_exact(const Polynomial& d) const;

  FieldElement eval(const FieldElement& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  /// this^e mod m, for e given in decimal or as mpz.
  Polynomial powmod(const mpz_class& e, const Polynomial& m) const;

  bool operator==(const Polynomial& b) const;
  bool operator!=(const Polynomial& b) const { return !(*this == b); }

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g, s, t;  // g = s*a + t*b, g monic
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Distinct roots lying in the coefficient field, sorted by their string
/// form. Supported over Q (Hensel lifting plus rational reconstruction) and
/// GF(p) (Cantor-Zassenhaus on gcd(f, t^p - t)).
std::vector<FieldElement> roots(const Polynomial& f);

/// Irreducibility over GF(p) via Rabin's test.
bool is_irreducible(const Polynomial& f);

/// Characteristic polynomial det(t*I - M) of a square matrix given row-major.
Polynomial characteristic_polynomial(const Field& f, std::size_t n, const std::vector<FieldElement>& rows);

}  // namespace deltader
