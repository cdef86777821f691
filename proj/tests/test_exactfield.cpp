#include <doctest.h>

#include "deltader/errors.hpp"
#include "deltader/linalg.hpp"
#include "deltader/polynomial.hpp"
#include "oracle.hpp"

using namespace deltader;

namespace {

std::vector<FieldElement> samples(const Field& f, int count) {
  std::vector<FieldElement> out;
  for (int k = 0; k < count; ++k) {
    if (f.kind() == FieldKind::QuotientRing) {
      std::vector<FieldElement> cs;
      for (std::size_t d = 0; d < f.degree(); ++d) cs.push_back(oracle::random_element(f.base()));
      out.push_back(FieldElement::from_coefficients(f, cs));
    } else {
      out.push_back(oracle::random_element(f));
    }
  }
  return out;
}

void check_axioms(const Field& f) {
  const auto xs = samples(f, 12);
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < xs.size(); b += 3) {
      const auto &x = xs[a], &y = xs[b], &z = xs[(a + b) % xs.size()];
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x - x == f.zero());
      if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

// Trial division by every monic polynomial of degree <= deg/2.
bool irreducible_by_search(const Polynomial& g) {
  const Field& f = g.field();
  const std::uint64_t p = f.characteristic();
  const int half = g.degree() / 2;
  for (int d = 1; d <= half; ++d) {
    std::uint64_t count = 1;
    for (int k = 0; k < d; ++k) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<FieldElement> cs;
      std::uint64_t c = code;
      for (int k = 0; k < d; ++k, c /= p) cs.push_back(f.from_int(static_cast<long long>(c % p)));
      cs.push_back(f.one());
      if ((g % Polynomial(f, cs)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field axioms on samples") {
  check_axioms(Field::rationals());
  check_axioms(Field::prime_field(7));
  check_axioms(Field::prime_field(101));
  const Field g5 = Field::prime_field(5);
  // t^2 + 2 has no root mod 5, so the quotient is GF(25).
  check_axioms(Field::quotient_ring(g5, Polynomial(g5, {g5.from_int(2), g5.zero(), g5.one()})));
}

TEST_CASE("literals") {
  const Field q = Field::rationals();
  CHECK(q.parse("-7/4") == q.from_int(-7) / q.from_int(4));
  CHECK(q.parse("6/8").to_string() == "3/4");
  CHECK_THROWS_AS(q.parse("0.5"), InputError);
  CHECK_THROWS_AS(q.parse("1/0"), InputError);
  CHECK_THROWS_AS(q.parse("x"), InputError);
  const Field g5 = Field::prime_field(5);
  CHECK(g5.parse("1/2") == g5.from_int(3));
  CHECK(g5.parse("-1") == g5.from_int(4));
  CHECK_THROWS_AS(g5.parse("1/5"), InputError);
  CHECK_THROWS(Field::prime_field(3));
  CHECK_THROWS(Field::prime_field(9));
}

TEST_CASE("division by zero") {
  const Field q = Field::rationals();
  CHECK_THROWS_AS(q.one() / q.zero(), DivisionByZero);
  CHECK_THROWS_AS(Field::prime_field(7).zero().inverse(), DivisionByZero);
}

TEST_CASE("quotient ring zero divisors report the gcd") {
  const Field g5 = Field::prime_field(5);
  // (t - 1)(t + 1)
  const Field R = Field::quotient_ring(g5, Polynomial(g5, {g5.from_int(-1), g5.zero(), g5.one()}));
  const FieldElement x = FieldElement::from_coefficients(R, {g5.from_int(-1), g5.one()});
  try {
    (void)x.inverse();
    FAIL("expected NonInvertible");
  } catch (const NonInvertible& e) {
    CHECK(e.witness() == Polynomial(g5, {g5.from_int(-1), g5.one()}).to_string());
  }
  const FieldElement t = R.generator();
  CHECK(t * t == R.one());
}

TEST_CASE("adjoin_parameter gives an irreducible modulus of the requested degree") {
  for (std::uint64_t p : {5ULL, 7ULL}) {
    for (std::size_t bound : {1u, 3u, 5u, 9u}) {
      const Field E = adjoin_parameter(Field::prime_field(p), bound);
      CHECK(E.modulus().degree() >= static_cast<int>(bound) + 1);
      if (E.modulus().degree() <= 10) CHECK(irreducible_by_search(E.modulus()));
      CHECK(is_irreducible(E.modulus()));
    }
  }
  const Field E = adjoin_parameter(Field::rationals(), 4);
  CHECK(E.modulus().degree() == 5);
  CHECK(roots(E.modulus()).empty());
}

TEST_CASE("polynomial roots against exhaustive evaluation") {
  const Field g7 = Field::prime_field(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<FieldElement> cs;
    for (int k = 0; k < 5; ++k) cs.push_back(oracle::random_element(g7));
    cs.push_back(g7.one());
    const Polynomial f(g7, cs);
    std::vector<FieldElement> brute;
    for (long long x = 0; x < 7; ++x)
      if (f.eval(g7.from_int(x)).is_zero()) brute.push_back(g7.from_int(x));
    auto r = roots(f);
    CHECK(r.size() == brute.size());
    for (const auto& x : r) CHECK(f.eval(x).is_zero());
  }
  const Field q = Field::rationals();
  Polynomial f = Polynomial::constant(q.one());
  for (const char* r : {"3/2", "-2", "1/3", "5"}) f = f * Polynomial::linear_root(q.parse(r));
  f = f * Polynomial(q, {q.one(), q.zero(), q.one()});
  auto r = roots(f * q.from_int(6));
  REQUIRE(r.size() == 4);
  for (const auto& x : r) CHECK(f.eval(x).is_zero());
}

TEST_CASE("gcd and division") {
  const Field q = Field::rationals();
  const Polynomial a = Polynomial::linear_root(q.from_int(1)) * Polynomial::linear_root(q.from_int(2));
  const Polynomial b = Polynomial::linear_root(q.from_int(2)) * Polynomial::linear_root(q.from_int(3));
  CHECK(gcd(a, b) == Polynomial::linear_root(q.from_int(2)));
  const auto [qq, rr] = (a * b + Polynomial::constant(q.one())).divmod(a);
  CHECK(qq * a + rr == a * b + Polynomial::constant(q.one()));
  CHECK(rr.degree() < a.degree());
  const ExtendedGcd e = extended_gcd(a, b);
  CHECK(e.s * a + e.t * b == e.g);
}

TEST_CASE("characteristic polynomial agrees with det(tI - M) at sample points") {
  for (const Field& f : {Field::rationals(), Field::prime_field(11)}) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 4;
      std::vector<FieldElement> m;
      for (std::size_t k = 0; k < n * n; ++k) m.push_back(oracle::random_element(f));
      const Polynomial chi = characteristic_polynomial(f, n, m);
      CHECK(chi.degree() == 4);
      for (long long t = -2; t <= 2; ++t) {
        std::vector<Vector> M(n, Vector(n, f.zero()));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) M[i][j] = (i == j ? f.from_int(t) : f.zero()) - m[i * n + j];
        CHECK(chi.eval(f.from_int(t)) == oracle::det(M));
      }
    }
  }
}

TEST_CASE("nullspace and rank against textbook elimination") {
  for (const Field& f : {Field::rationals(), Field::prime_field(7)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t r = 6, c = 8;
      Matrix M(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = oracle::random_element(f, -2, 2);
      // force a dependency
      M.set_row(5, add(M.row(0), M.row(1)));
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < r; ++i) rows.push_back(M.row(i));
      const std::size_t rk = oracle::rank(rows);
      CHECK(rank(M) == rk);
      const auto ns = nullspace(M);
      CHECK(ns.size() == c - rk);
      for (const auto& v : ns)
        for (std::size_t i = 0; i < r; ++i) {
          FieldElement s = f.zero();
          for (std::size_t j = 0; j < c; ++j) s += M(i, j) * v[j];
          CHECK(s.is_zero());
        }
    }
  }
}

TEST_CASE("subspace dimension formula") {
  const Field f = Field::prime_field(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vector> a, b;
    for (int k = 0; k < 3; ++k) {
      Vector u(6, f.zero()), v(6, f.zero());
      for (auto& x : u) x = oracle::random_element(f, 0, 4);
      for (auto& x : v) x = oracle::random_element(f, 0, 4);
      a.push_back(u);
      b.push_back(v);
    }
    b.push_back(a[0]);
    const Subspace U = Subspace::span(f, 6, a), V = Subspace::span(f, 6, b);
    CHECK(U.intersect(V).dim() + U.sum(V).dim() == U.dim() + V.dim());
    CHECK(U.intersect(V).dim() >= 1);
  }
}
