#include "deltader/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "deltader/errors.hpp"

namespace deltader {

Polynomial::Polynomial(Field f) : field_(std::move(f)) {}

Polynomial::Polynomial(Field f, std::vector<FieldElement> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t k) {
  std::vector<FieldElement> v(k + 1, c.field().zero());
  v[k] = c;
  return Polynomial(c.field(), std::move(v));
}

Polynomial Polynomial::linear_root(const FieldElement& r) { return Polynomial(r.field(), {-r, r.field().one()}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

FieldElement Polynomial::leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

Polynomial Polynomial::operator+(const Polynomial& b) const {
  std::vector<FieldElement> c(std::max(coeffs_.size(), b.coeffs_.size()), field_.zero());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] = coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> c = coeffs_;
  for (auto& x : c) x = -x;
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& b) const { return *this + (-b); }

Polynomial Polynomial::operator*(const Polynomial& b) const {
  if (is_zero() || b.is_zero()) return Polynomial(field_);
  std::vector<FieldElement> c(coeffs_.size() + b.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) c[i + j] += coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  std::vector<FieldElement> v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(field_, std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(field_), *this};
  const FieldElement inv_lead = d.leading().inverse();
  std::vector<FieldElement> r = coeffs_;
  std::vector<FieldElement> q(coeffs_.size() - d.coeffs_.size() + 1, field_.zero());
  const std::size_t dd = d.coeffs_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    FieldElement c = r[k + dd] * inv_lead;
    if (c.is_zero()) continue;
    q[k] = c;
    for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= c * d.coeffs_[j];
  }
  r.resize(dd);
  return {Polynomial(field_, std::move(q)), Polynomial(field_, std::move(r))};
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw MathError("InexactDivision", to_string() + " by " + d.to_string());
  return q;
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = x.field().zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<FieldElement> c(coeffs_.size() - 1, field_.zero());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * field_.from_int(static_cast<long long>(k));
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::powmod(const mpz_class& e, const Polynomial& m) const {
  Polynomial result = Polynomial::constant(field_.one()) % m;
  Polynomial base = *this % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = result * base % m;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& b) const { return field_ == b.field_ && coeffs_ == b.coeffs_; }

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(f.one()), s1(f);
  Polynomial t0(f), t1 = Polynomial::constant(f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FieldElement inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

// ---------------------------------------------------------------------------
// Root finding

namespace {

using ZPoly = std::vector<mpz_class>;

// Scale a rational polynomial to a primitive integer one.
ZPoly to_primitive_integer(const Polynomial& f) {
  mpz_class l = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly z;
  mpz_class g = 0;
  for (const auto& c : f.coefficients()) {
    mpq_class v = c.rational() * l;
    z.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& c : z) c /= g;
  return z;
}

mpz_class eval_mod(const ZPoly& f, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = (acc * x + f[k]) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

ZPoly zderivative(const ZPoly& f) {
  ZPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<unsigned long>(k));
  return d;
}

// a/b with |a|,|b| <= bound and a = b*r mod m, if one exists.
bool rational_reconstruction(const mpz_class& r, const mpz_class& m, const mpz_class& bound, mpq_class& out) {
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    mpz_class t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

std::vector<FieldElement> rational_roots(const Polynomial& f0) {
  const Field& Q = f0.field();
  std::vector<FieldElement> found;
  Polynomial f = f0;
  // Zero root.
  std::size_t low = 0;
  while (low < f.coefficients().size() && f.coefficients()[low].is_zero()) ++low;
  if (low > 0) {
    found.push_back(Q.zero());
    f = Polynomial(Q, std::vector<FieldElement>(f.coefficients().begin() + static_cast<long>(low), f.coefficients().end()));
  }
  if (f.degree() < 1) return found;
  // Square-free part.
  Polynomial g = gcd(f, f.derivative());
  if (g.degree() > 0) f = f.divide_exact(g);
  ZPoly z = to_primitive_integer(f);
  const mpz_class bound = std::max(abs(z.front()), abs(z.back()));

  // Pick a prime not dividing the leading coefficient that keeps f square-free.
  std::uint64_t ell = 101;
  Field Fl;
  Polynomial fl;
  for (;; ell += 2) {
    if (!is_prime(ell)) continue;
    if (z.back() % mpz_class(static_cast<unsigned long>(ell)) == 0) continue;
    Fl = Field::prime_field(ell);
    std::vector<FieldElement> c;
    for (const auto& v : z) c.push_back(Fl.from_rational(mpq_class(v)));
    fl = Polynomial(Fl, c);
    if (gcd(fl, fl.derivative()).degree() == 0) break;
  }
  std::vector<FieldElement> mod_roots = roots(fl);

  const mpz_class need = 2 * bound * bound + 1;
  const ZPoly dz = zderivative(z);
  for (const auto& r : mod_roots) {
    mpz_class m = static_cast<unsigned long>(ell);
    mpz_class x = static_cast<unsigned long>(r.residue());
    while (m <= need) {
      // Newton step modulo m^2.
      mpz_class m2 = m * m;
      mpz_class fx = eval_mod(z, x, m2);
      mpz_class dx = eval_mod(dz, x, m2);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), dx.get_mpz_t(), m2.get_mpz_t()) == 0) break;
      x = (x - fx * inv) % m2;
      if (x < 0) x += m2;
      m = m2;
    }
    mpq_class cand;
    if (!rational_reconstruction(x, m, bound, cand)) continue;
    FieldElement e = Q.from_rational(cand);
    if (f.eval(e).is_zero()) found.push_back(e);
  }
  return found;
}

std::vector<FieldElement> split_linear(const Polynomial& g, std::uint64_t& seed) {
  // g is monic, square-free, a product of distinct linear factors.
  if (g.degree() <= 0) return {};
  const Field& F = g.field();
  if (g.degree() == 1) return {-g.coeff(0)};
  const std::uint64_t p = F.characteristic();
  const mpz_class half = (mpz_class(static_cast<unsigned long>(p)) - 1) / 2;
  for (;;) {
    FieldElement a = F.from_int(static_cast<long long>(seed++ % p));
    Polynomial h = Polynomial(F, {a, F.one()}).powmod(half, g) - Polynomial::constant(F.one());
    Polynomial d = gcd(h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      auto left = split_linear(d, seed);
      auto right = split_linear(g.divide_exact(d), seed);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<FieldElement> prime_field_roots(const Polynomial& f) {
  const Field& F = f.field();
  Polynomial m = f.monic();
  Polynomial t = Polynomial::monomial(F.one(), 1);
  Polynomial tp = t.powmod(mpz_class(static_cast<unsigned long>(F.characteristic())), m);
  Polynomial g = gcd(tp - t, m);
  std::uint64_t seed = 1;
  return split_linear(g, seed);
}

}  // namespace

std::vector<FieldElement> roots(const Polynomial& f) {
  if (f.is_zero()) throw InputError("roots of the zero polynomial");
  std::vector<FieldElement> out;
  switch (f.field().kind()) {
    case FieldKind::Rationals:
      out = rational_roots(f);
      break;
    case FieldKind::PrimeField:
      out = prime_field_roots(f);
      break;
    case FieldKind::QuotientRing:
      throw InputError("root finding over quotient rings is not supported");
  }
  std::sort(out.begin(), out.end(), [](const FieldElement& a, const FieldElement& b) {
    if (a.field().kind() == FieldKind::Rationals) return a.rational() < b.rational();
    return a.residue() < b.residue();
  });
  return out;
}

bool is_irreducible(const Polynomial& f) {
  const Field& F = f.field();
  if (F.kind() != FieldKind::PrimeField) throw InputError("irreducibility test is implemented over GF(p) only");
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  Polynomial m = f.monic();
  Polynomial t = Polynomial::monomial(F.one(), 1);
  const mpz_class p = static_cast<unsigned long>(F.characteristic());
  std::vector<int> prime_divisors;
  for (int q = 2, r = d; q <= r; ++q) {
    if (r % q == 0) {
      prime_divisors.push_back(q);
      while (r % q == 0) r /= q;
    }
  }
  // frob[i] = t^(p^i) mod m
  std::vector<Polynomial> frob{t % m};
  for (int i = 1; i <= d; ++i) frob.push_back(frob.back().powmod(p, m));
  if (frob[static_cast<std::size_t>(d)] != t % m) return false;
  for (int q : prime_divisors) {
    if (gcd(frob[static_cast<std::size_t>(d / q)] - t, m).degree() != 0) return false;
  }
  return true;
}

Polynomial characteristic_polynomial(const Field& f, std::size_t n, const std::vector<FieldElement>& rows) {
  // Reduce to upper Hessenberg form by similarity, then run the standard
  // determinant recurrence on the Hessenberg matrix.
  std::vector<FieldElement> h = rows;
  auto at = [&](std::size_t i, std::size_t j) -> FieldElement& { return h[i * n + j]; };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = n;
    for (std::size_t i = m; i < n; ++i) {
      if (!at(i, m - 1).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t k = 0; k < n; ++k) std::swap(at(piv, k), at(m, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(at(k, piv), at(k, m));
    }
    const FieldElement inv = at(m, m - 1).inverse();
    for (std::size_t j = m + 1; j < n; ++j) {
      FieldElement u = at(j, m - 1) * inv;
      if (u.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) at(j, k) -= u * at(m, k);
      for (std::size_t k = 0; k < n; ++k) at(k, m) += u * at(k, j);
    }
  }
  std::vector<Polynomial> p{Polynomial::constant(f.one())};
  const Polynomial t = Polynomial::monomial(f.one(), 1);
  for (std::size_t m = 1; m <= n; ++m) {
    Polynomial pm = (t - Polynomial::constant(at(m - 1, m - 1))) * p[m - 1];
    FieldElement prod = f.one();
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod *= at(i, i - 1);
      if (prod.is_zero()) break;
      pm = pm - p[i - 1] * (at(i - 1, m - 1) * prod);
    }
    p.push_back(std::move(pm));
  }
  return p[n];
}

}  // namespace deltader
