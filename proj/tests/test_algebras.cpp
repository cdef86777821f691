#include <doctest.h>

#include "deltader/constructors.hpp"
#include "deltader/errors.hpp"
#include "deltader/serialize.hpp"
#include "oracle.hpp"

using namespace deltader;

namespace {

// Jacobi defect J(x,y,z) = x(yz) + y(zx) + z(xy) by direct expansion.
bool jacobi_by_hand(const Algebra& A) {
  const std::size_t n = A.dim();
  const Field& f = A.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = unit_vector(f, n, i), y = unit_vector(f, n, j), z = unit_vector(f, n, k);
        const Vector s = add(add(A.multiply(x, A.multiply(y, z)), A.multiply(y, A.multiply(z, x))),
                             A.multiply(z, A.multiply(x, y)));
        if (!is_zero(s)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("sl2 and sl3 satisfy Jacobi") {
  const Algebra sl2 = make_sl(Field::rationals(), 2);
  CHECK(sl2.dim() == 3);
  CHECK(validate(sl2, Law::Jacobi).ok());
  CHECK(jacobi_by_hand(sl2));
  const Algebra sl3 = make_sl(Field::rationals(), 3);
  CHECK(sl3.dim() == 8);
  CHECK(validate(sl3, Law::Jacobi).ok());
}

TEST_CASE("perturbed sl2 reports a Jacobi defect") {
  const Algebra sl2 = make_sl(Field::rationals(), 2);
  const Algebra bad = sl2.perturbed(0, 1, 1, Field::rationals().one());
  const ValidationReport r = validate(bad, Law::Jacobi);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(jacobi_by_hand(bad));
  const auto& v = r.violations.front();
  CHECK(v.indices.size() == 3);
  CHECK_FALSE(is_zero(v.defect));
}

TEST_CASE("Lie builder rejects squares; superlie needs a grading") {
  const Field q = Field::rationals();
  AlgebraBuilder b(q, 2, Flavor::Lie);
  CHECK_THROWS(b.add(0, 0, 1, 1));
  AlgebraBuilder s(q, 2, Flavor::SuperLie);
  CHECK_THROWS(s.add(0, 1, 1, 1));
  s.grading({0, 1});
  CHECK_THROWS(s.add(0, 0, 0, 1));
  CHECK_NOTHROW(s.add(1, 1, 0, 1));
}

TEST_CASE("Witt-type algebras") {
  const Field q = Field::rationals();
  const Algebra W = make_witt_type(q, WittSupport{{-1, 0, 1}, std::nullopt});
  CHECK(W.dim() == 3);
  CHECK(validate(W, Law::Jacobi).ok());
  CHECK_THROWS_AS(make_witt_type(q, WittSupport{{0, 1, 2}, std::nullopt}), MathError);
  CHECK_THROWS_AS(make_witt_type(q, WittSupport{{1, 2}, std::nullopt}), InputError);
  const Algebra Z5 = make_witt_type(Field::prime_field(5), WittSupport{{0, 1, 2, 3, 4}, 5});
  CHECK(validate(Z5, Law::Jacobi).ok());
  CHECK_THROWS_AS(make_witt_type(Field::prime_field(5), WittSupport{{0, 1}, 6}), InputError);
}

TEST_CASE("Zassenhaus algebras and divided powers") {
  for (auto [p, n] : {std::pair{5ULL, 1u}, {7ULL, 1u}, {5ULL, 2u}}) {
    const Algebra W = make_zassenhaus(p, n);
    std::uint64_t dim = 1;
    for (unsigned k = 0; k < n; ++k) dim *= p;
    CHECK(W.dim() == dim);
    CHECK(validate(W, Law::Jacobi).ok());
    const Algebra O = make_divided_powers(p, n);
    CHECK(O.dim() == dim);
    CHECK(validate(O, Law::Assoc).ok());
  }
  // W_1(1) on e_i = x^(i+1) ∂ with divided powers x^(a) x^(b) = C(a+b, a) x^(a+b):
  // [e_i, e_j] = (C(i+j+1, i+1) - C(i+j+1, j+1)) e_{i+j}.
  auto choose = [](long long n, long long k) {
    if (k < 0 || k > n) return 0LL;
    long long c = 1;
    for (long long t = 1; t <= k; ++t) c = c * (n - k + t) / t;
    return c;
  };
  const Algebra W = make_zassenhaus(5, 1);
  const Field& f = W.field();
  for (long long i = -1; i <= 3; ++i)
    for (long long j = -1; j <= 3; ++j) {
      const Vector v = W.multiply_basis(static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1));
      Vector expect = zero_vector(f, 5);
      if (i + j >= -1 && i + j <= 3)
        expect[static_cast<std::size_t>(i + j + 1)] = f.from_int(choose(i + j + 1, i + 1) - choose(i + j + 1, j + 1));
      CHECK(v == expect);
    }
  CHECK(binomial_mod(7, 3, 5) == 0);  // C(7,3) = 35
  CHECK(binomial_mod(6, 2, 5) == 0);  // 15
  CHECK(binomial_mod(8, 3, 7) == 0);  // 56
  CHECK(binomial_mod(9, 4, 7) == 126 % 7);
}

TEST_CASE("current algebras and deformations") {
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  const Algebra dual = make_truncated_polynomials(q, 2);
  const Algebra C = make_current(sl2, dual);
  CHECK(C.dim() == 6);
  CHECK(validate(C, Law::Jacobi).ok());
  CHECK_THROWS_AS(make_current(dual, sl2), MathError);
  const Algebra Z = make_deformed_zassenhaus(5, 2);
  CHECK(Z.dim() == 25);
  CHECK(validate(Z, Law::Jacobi).ok());
  const Algebra O = make_divided_powers(5, 1);
  const Algebra Od = make_derivation_algebra(O, divided_power_derivative(5, 1));
  CHECK(validate(Od, Law::Jacobi).ok());
}

TEST_CASE("semidirect sum with the adjoint module") {
  const Algebra sl2 = make_sl(Field::rationals(), 2);
  const ModuleAction ad = ModuleAction::adjoint(sl2);
  CHECK(validate_module(ad).ok());
  const Algebra S = make_semidirect(ad);
  CHECK(S.dim() == 6);
  CHECK(validate(S, Law::Jacobi).ok());
}

TEST_CASE("osp(1|2) and its Grassmann envelope") {
  const Algebra L = make_osp12(Field::rationals());
  CHECK(validate(L, Law::SuperJacobi).ok());
  CHECK(validate_form(L).ok());
  const Algebra G = make_grassmann_envelope(L, 3);
  CHECK(G.dim() == 3 * 4 + 2 * 4);
  CHECK(validate(G, Law::Jacobi).ok());
  CHECK(jacobi_by_hand(G));
  // x = e_3, y = e_4: perturb [x, y] = H.
  const Algebra Lp = L.perturbed(3, 4, 0, Field::rationals().one());
  CHECK_FALSE(validate(Lp, Law::SuperJacobi).ok());
  CHECK_FALSE(validate(make_grassmann_envelope(Lp, 3), Law::Jacobi).ok());
  CHECK_THROWS_AS(make_grassmann_envelope(make_sl(Field::rationals(), 2), 2), MathError);
}

TEST_CASE("Grassmann monomial signs") {
  CHECK(grassmann_product(0b01, 0b10) == std::pair{1, 0b11u});
  CHECK(grassmann_product(0b10, 0b01) == std::pair{-1, 0b11u});
  CHECK(grassmann_product(0b11, 0b01).first == 0);
  CHECK(grassmann_product(0b110, 0b001) == std::pair{1, 0b111u});
}

TEST_CASE("JSON round trip is byte identical") {
  for (const Algebra& A : {make_sl(Field::rationals(), 2), make_osp12(Field::rationals()), make_zassenhaus(5, 1),
                           make_elduque4(Field::prime_field(5))}) {
    const std::string s = canonical_dump(algebra_to_json(A));
    const Algebra B = algebra_from_json(json::parse(s));
    CHECK(B == A);
    CHECK(canonical_dump(algebra_to_json(B)) == s);
  }
}

TEST_CASE("fixtures load and validate") {
  for (const char* name : {"sl2", "sl3", "osp1_2", "elduque4", "elduque4_gf5", "w11_gf5", "w11_gf7", "w12_gf5"})
    CHECK_NOTHROW(load_fixture(name));
  CHECK_THROWS_AS(algebra_from_json(json::parse(std::string("{\"field\":{\"kind\":\"Q\"},\"dim\":1.5}"))),
                  std::exception);
  json dec = algebra_to_json(make_sl(Field::rationals(), 2));
  dec["products"][0]["terms"][0][1] = 0.5;
  CHECK_THROWS_AS(algebra_from_json(dec), InputError);
}

TEST_CASE("derived subspace and center") {
  const Algebra E = make_elduque4(Field::rationals());
  CHECK(derived_subspace(E).dim() == 3);
  CHECK(center(E).dim() == 0);
  CHECK(center(make_abelian(Field::rationals(), 3)).dim() == 3);
}
