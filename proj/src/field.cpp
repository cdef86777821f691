#include "deltader/field.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "deltader/errors.hpp"
#include "deltader/polynomial.hpp"

namespace deltader {

namespace detail {

struct FieldRep {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;
  std::unique_ptr<Field> base;
  std::unique_ptr<Polynomial> modulus;
};

}  // namespace detail

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  __int128 t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    __int128 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw DivisionByZero("no inverse modulo " + std::to_string(p));
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
  mpz_class r = v % mpz_class(std::to_string(p));
  if (r < 0) r += mpz_class(std::to_string(p));
  return std::stoull(r.get_str());
}

const std::shared_ptr<const detail::FieldRep>& rationals_rep() {
  static const auto rep = std::make_shared<const detail::FieldRep>();
  return rep;
}

bool is_rational_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field

Field::Field() : rep_(rationals_rep()) {}

Field::Field(std::shared_ptr<const detail::FieldRep> rep) : rep_(std::move(rep)) {}

Field Field::rationals() { return Field(); }

Field Field::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("GF(p) requires a prime p, got " + std::to_string(p));
  if (p < 5) throw InputError("characteristic 2 and 3 are not supported (p = " + std::to_string(p) + ")");
  auto rep = std::make_shared<detail::FieldRep>();
  rep->kind = FieldKind::PrimeField;
  rep->p = p;
  return Field(std::move(rep));
}

Field Field::quotient_ring(const Field& base, const Polynomial& modulus) {
  if (base.kind() == FieldKind::QuotientRing) throw InputError("quotient ring base must be Q or GF(p)");
  if (modulus.field() != base) throw InputError("modulus coefficients must lie in the base field");
  if (modulus.degree() < 1) throw InputError("quotient modulus must have degree >= 1");
  if (!modulus.leading().is_one()) throw InputError("quotient modulus must be monic");
  auto rep = std::make_shared<detail::FieldRep>();
  rep->kind = FieldKind::QuotientRing;
  rep->p = base.characteristic();
  rep->base = std::make_unique<Field>(base);
  rep->modulus = std::make_unique<Polynomial>(modulus);
  return Field(std::move(rep));
}

FieldKind Field::kind() const { return rep_->kind; }

std::uint64_t Field::characteristic() const { return rep_->p; }

const Field& Field::base() const { return kind() == FieldKind::QuotientRing ? *rep_->base : *this; }

const Polynomial& Field::modulus() const {
  if (kind() != FieldKind::QuotientRing) throw std::logic_error("modulus() on a field that is not a quotient ring");
  return *rep_->modulus;
}

std::size_t Field::degree() const {
  return kind() == FieldKind::QuotientRing ? static_cast<std::size_t>(rep_->modulus->degree()) : 1;
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
  if (kind() == FieldKind::PrimeField) {
    const auto p = static_cast<long long>(rep_->p);
    long long r = v % p;
    return FieldElement::from_residue(*this, static_cast<std::uint64_t>(r < 0 ? r + p : r));
  }
  return from_rational(mpq_class(mpz_class(static_cast<long>(v))));
}

FieldElement Field::from_rational(const mpq_class& q) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return FieldElement::from_rational(*this, q);
    case FieldKind::PrimeField: {
      std::uint64_t num = reduce_mpz(q.get_num(), rep_->p);
      std::uint64_t den = reduce_mpz(q.get_den(), rep_->p);
      if (den == 0) throw DivisionByZero("denominator vanishes in GF(" + std::to_string(rep_->p) + ")");
      return FieldElement::from_residue(*this, mul_mod(num, inv_mod(den, rep_->p), rep_->p));
    }
    case FieldKind::QuotientRing: {
      std::vector<FieldElement> c(degree(), base().zero());
      c[0] = base().from_rational(q);
      return FieldElement::from_coefficients(*this, std::move(c));
    }
  }
  throw std::logic_error("unreachable");
}

FieldElement Field::parse(std::string_view literal) const {
  std::string s;
  for (char ch : literal)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (kind() == FieldKind::QuotientRing && (s == "t" || s == "+t")) return generator();
  if (kind() == FieldKind::QuotientRing && s == "-t") return -generator();
  if (!is_rational_literal(s)) throw InputError("not an exact scalar literal: '" + std::string(literal) + "'");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  auto slash = s.find('/');
  mpz_class num(s.substr(0, slash), 10);
  mpz_class den(1);
  if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
  if (den == 0) throw InputError("zero denominator in '" + s + "'");
  q = mpq_class(num, den);
  q.canonicalize();
  try {
    return from_rational(q);
  } catch (const DivisionByZero& e) {
    throw InputError(std::string("literal '") + s + "' is undefined in " + describe());
  }
}

FieldElement Field::generator() const {
  if (kind() != FieldKind::QuotientRing) throw std::logic_error("generator() on a field that is not a quotient ring");
  std::vector<FieldElement> c(degree(), base().zero());
  if (degree() == 1) {
    // t = -f0 when f = t + f0
    c[0] = -rep_->modulus->coeff(0);
  } else {
    c[1] = base().one();
  }
  return FieldElement::from_coefficients(*this, std::move(c));
}

std::string Field::describe() const {
  switch (kind()) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "GF(" + std::to_string(rep_->p) + ")";
    case FieldKind::QuotientRing:
      return rep_->base->describe() + "[t]/(" + rep_->modulus->to_string() + ")";
  }
  return "?";
}

bool Field::operator==(const Field& other) const {
  if (rep_ == other.rep_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case FieldKind::Rationals:
      return true;
    case FieldKind::PrimeField:
      return rep_->p == other.rep_->p;
    case FieldKind::QuotientRing:
      return *rep_->base == *other.rep_->base && *rep_->modulus == *other.rep_->modulus;
  }
  return false;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement() : field_(), payload_(mpq_class(0)) {}

FieldElement FieldElement::from_rational(const Field& f, mpq_class q) {
  if (f.kind() != FieldKind::Rationals) return f.from_rational(q);
  q.canonicalize();
  return FieldElement(f, Payload(std::move(q)));
}

FieldElement FieldElement::from_residue(const Field& f, std::uint64_t r) {
  if (f.kind() != FieldKind::PrimeField) throw std::logic_error("from_residue on a non prime field");
  return FieldElement(f, Payload(r % f.characteristic()));
}

FieldElement FieldElement::from_coefficients(const Field& f, std::vector<FieldElement> coeffs) {
  if (f.kind() != FieldKind::QuotientRing) throw std::logic_error("from_coefficients on a non quotient ring");
  Polynomial poly(f.base(), std::move(coeffs));
  if (poly.degree() >= static_cast<int>(f.degree())) poly = poly % f.modulus();
  std::vector<FieldElement> c(f.degree(), f.base().zero());
  for (std::size_t k = 0; k < poly.coefficients().size(); ++k) c[k] = poly.coefficients()[k];
  return FieldElement(f, Payload(std::move(c)));
}

void FieldElement::require_same(const FieldElement& b) const {
  if (field_.rep() != b.field_.rep() && field_ != b.field_) {
    throw std::invalid_argument("mixed-field arithmetic: " + field_.describe() + " vs " + b.field_.describe());
  }
}

bool FieldElement::is_zero() const {
  switch (payload_.index()) {
    case 0:
      return sgn(std::get<0>(payload_)) == 0;
    case 1:
      return std::get<1>(payload_) == 0;
    default:
      for (const auto& c : std::get<2>(payload_))
        if (!c.is_zero()) return false;
      return true;
  }
}

bool FieldElement::is_one() const {
  switch (payload_.index()) {
    case 0:
      return std::get<0>(payload_) == 1;
    case 1:
      return std::get<1>(payload_) == 1;
    default: {
      const auto& c = std::get<2>(payload_);
      if (!c[0].is_one()) return false;
      for (std::size_t k = 1; k < c.size(); ++k)
        if (!c[k].is_zero()) return false;
      return true;
    }
  }
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  require_same(b);
  switch (payload_.index()) {
    case 0:
      return FieldElement(field_, Payload(mpq_class(std::get<0>(payload_) + std::get<0>(b.payload_))));
    case 1: {
      std::uint64_t p = field_.characteristic();
      std::uint64_t s = std::get<1>(payload_) + std::get<1>(b.payload_);
      return FieldElement(field_, Payload(s >= p ? s - p : s));
    }
    default: {
      std::vector<FieldElement> c = std::get<2>(payload_);
      const auto& d = std::get<2>(b.payload_);
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += d[k];
      return FieldElement(field_, Payload(std::move(c)));
    }
  }
}

FieldElement FieldElement::operator-() const {
  switch (payload_.index()) {
    case 0:
      return FieldElement(field_, Payload(mpq_class(-std::get<0>(payload_))));
    case 1: {
      std::uint64_t r = std::get<1>(payload_);
      return FieldElement(field_, Payload(r == 0 ? r : field_.characteristic() - r));
    }
    default: {
      std::vector<FieldElement> c = std::get<2>(payload_);
      for (auto& x : c) x = -x;
      return FieldElement(field_, Payload(std::move(c)));
    }
  }
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  require_same(b);
  if (payload_.index() == 0)
    return FieldElement(field_, Payload(mpq_class(std::get<0>(payload_) - std::get<0>(b.payload_))));
  return *this + (-b);
}

FieldElement FieldElement::operator*(const FieldElement& b) const {
  require_same(b);
  switch (payload_.index()) {
    case 0:
      return FieldElement(field_, Payload(mpq_class(std::get<0>(payload_) * std::get<0>(b.payload_))));
    case 1:
      return FieldElement(field_,
                          Payload(mul_mod(std::get<1>(payload_), std::get<1>(b.payload_), field_.characteristic())));
    default: {
      Polynomial x(field_.base(), std::get<2>(payload_));
      Polynomial y(field_.base(), std::get<2>(b.payload_));
      return from_coefficients(field_, (x * y % field_.modulus()).coefficients());
    }
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.describe());
  switch (payload_.index()) {
    case 0:
      return FieldElement(field_, Payload(mpq_class(1 / std::get<0>(payload_))));
    case 1:
      return FieldElement(field_, Payload(inv_mod(std::get<1>(payload_), field_.characteristic())));
    default: {
      Polynomial x(field_.base(), std::get<2>(payload_));
      ExtendedGcd eg = extended_gcd(x, field_.modulus());
      if (eg.g.degree() != 0) {
        throw NonInvertible(to_string() + " is not invertible in " + field_.describe(), eg.g.to_string());
      }
      return from_coefficients(field_, (eg.s % field_.modulus()).coefficients());
    }
  }
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  require_same(b);
  return *this * b.inverse();
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement r = field_.one();
  FieldElement a = *this;
  while (e) {
    if (e & 1) r *= a;
    a *= a;
    e >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& b) const {
  if (field_.rep() != b.field_.rep() && field_ != b.field_) return false;
  return payload_ == b.payload_;
}

const mpq_class& FieldElement::rational() const {
  if (payload_.index() != 0) throw std::logic_error("rational() on a non-rational element");
  return std::get<0>(payload_);
}

std::uint64_t FieldElement::residue() const {
  if (payload_.index() != 1) throw std::logic_error("residue() on a non-residue element");
  return std::get<1>(payload_);
}

const std::vector<FieldElement>& FieldElement::coefficients() const {
  if (payload_.index() != 2) throw std::logic_error("coefficients() on a non quotient-ring element");
  return std::get<2>(payload_);
}

std::string FieldElement::to_string() const {
  switch (payload_.index()) {
    case 0:
      return std::get<0>(payload_).get_str();
    case 1:
      return std::to_string(std::get<1>(payload_));
    default:
      return Polynomial(field_.base(), std::get<2>(payload_)).to_string();
  }
}

// ---------------------------------------------------------------------------

Field adjoin_parameter(const Field& base, std::size_t degree_bound) {
  if (degree_bound < 1) throw InputError("adjoin_parameter needs degree_bound >= 1");
  if (base.kind() == FieldKind::QuotientRing) throw InputError("adjoin_parameter base must be Q or GF(p)");
  const std::size_t d = degree_bound + 1;
  std::vector<FieldElement> c(d + 1, base.zero());
  c[d] = base.one();
  if (base.kind() == FieldKind::Rationals) {
    c[0] = base.from_int(-2);
    return Field::quotient_ring(base, Polynomial(base, c));
  }
  const std::uint64_t p = base.characteristic();
  // Enumerate t^d + g(t), g read off the base-p digits of a counter.
  for (std::uint64_t counter = 1;; ++counter) {
    std::uint64_t m = counter;
    for (std::size_t k = 0; k < d; ++k) {
      c[k] = FieldElement::from_residue(base, m % p);
      m /= p;
    }
    if (m != 0) break;
    if (c[0].is_zero()) continue;
    Polynomial f(base, c);
    if (is_irreducible(f)) return Field::quotient_ring(base, f);
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace deltader
