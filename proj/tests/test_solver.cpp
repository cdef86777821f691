#include <doctest.h>

#include "deltader/constructors.hpp"
#include "deltader/errors.hpp"
#include "oracle.hpp"
#include "deltader/solver.hpp"

using namespace deltader;

namespace {

const char* kDeltas[] = {"-1", "0", "1/2", "1", "2", "1/3", "-2/5"};

// D(e_i) = (i + 2) e_{i+1} on W_1(1), basis e_{-1}, ..., e_{p-2}.
LinearMap nilpotent_half_map(std::uint64_t p) {
  const Field f = Field::prime_field(p);
  LinearMap D = LinearMap::zero(f, p, p);
  for (std::size_t k = 0; k + 1 < p; ++k) D(k, k + 1) = f.from_int(static_cast<long long>(k) + 1);
  return D;
}

}  // namespace

TEST_CASE("delta-derivation dimensions agree with the dense oracle") {
  const Field q = Field::rationals();
  for (const Algebra& A : {make_sl(q, 2), make_elduque4(q), make_witt_type(q, WittSupport{{-1, 0, 1}, std::nullopt}),
                           make_current(make_sl(q, 2), make_truncated_polynomials(q, 2)), make_abelian(q, 2)}) {
    for (const char* d : kDeltas) {
      const SolutionSpace s = solve_delta_derivations(A, q.parse(d));
      CHECK_MESSAGE(s.dim() == oracle::delta_dim(A, q.parse(d)), "delta " << d << " dim " << A.dim());
      for (const auto& D : s.basis) CHECK(is_delta_derivation(A, D, q.parse(d)));
    }
  }
  const Algebra W = make_zassenhaus(5, 1);
  for (const char* d : {"1/2", "1", "-1", "2"})
    CHECK(solve_delta_derivations(W, W.field().parse(d)).dim() == oracle::delta_dim(W, W.field().parse(d)));
}

TEST_CASE("known dimensions") {
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  CHECK(solve_delta_derivations(sl2, q.parse("1/2")).dim() == 1);
  CHECK(solve_delta_derivations(sl2, q.parse("-1")).dim() == 5);
  CHECK(solve_delta_derivations(sl2, q.parse("1")).dim() == 3);
  CHECK(solve_delta_derivations(sl2, q.parse("0")).dim() == 0);
  CHECK(solve_centroid(sl2).dim() == 1);
  CHECK(solve_delta_derivations(make_zassenhaus(5, 1), Field::prime_field(5).parse("1/2")).dim() == 5);
  CHECK(solve_delta_derivations(make_zassenhaus(7, 1), Field::prime_field(7).parse("1/2")).dim() == 7);
}

TEST_CASE("solution bases are canonical") {
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  const SolutionSpace a = solve_delta_derivations(sl2, q.parse("-1"));
  const SolutionSpace b = solve_delta_derivations(sl2, q.parse("-1"));
  CHECK(a.basis == b.basis);
  CHECK(a.contains(a.basis[0] * q.from_int(3) + a.basis[1]));
  CHECK_FALSE(a.contains(LinearMap::identity(q, 3)));
}

TEST_CASE("centroid against the oracle and inclusion in the 1/2-derivations") {
  const Field q = Field::rationals();
  for (const Algebra& A : {make_sl(q, 2), make_sl(q, 3), make_elduque4(q), make_abelian(q, 2),
                           make_current(make_sl(q, 2), make_truncated_polynomials(q, 2))}) {
    const SolutionSpace c = solve_centroid(A);
    CHECK(c.dim() == oracle::centroid_dim(A));
    const SolutionSpace h = solve_delta_derivations(A, q.parse("1/2"));
    for (const auto& chi : c.basis) {
      CHECK(is_centroid_element(A, chi));
      CHECK(h.contains(chi));
    }
  }
}

TEST_CASE("system shape for 16-dimensional Lie algebras") {
  const Field q = Field::rationals();
  for (const Algebra& A : {make_abelian(q, 16), make_semidirect(ModuleAction::trivial(make_sl(q, 3), 8))}) {
    REQUIRE(A.dim() == 16);
    const LinearSystem s = assemble_system(A, q.parse("1/2"));
    CHECK(s.row_count() == 1920);
    CHECK(s.cols == 256);
  }
  const Algebra S = make_semidirect(ModuleAction::trivial(make_sl(q, 2), 13));
  REQUIRE(S.dim() == 16);
  const LinearSystem s = assemble_system(S, q.one());
  CHECK(s.row_count() == 1920);
  CHECK(s.cols == 256);
}

TEST_CASE("module-valued delta-derivations into the adjoint module") {
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  for (const char* d : kDeltas) {
    const SolutionSpace m = solve_module_valued(ModuleAction::adjoint(sl2), q.parse(d));
    CHECK(m.dim() == solve_delta_derivations(sl2, q.parse(d)).dim());
  }
  const SolutionSpace t = solve_module_valued(ModuleAction::trivial(sl2, 2), q.one());
  CHECK(t.dim() == 0);
}

TEST_CASE("quasiderivations of sl3") {
  const Field q = Field::rationals();
  const Algebra sl3 = make_sl(q, 3);
  const SolutionSpace qd = solve_quasiderivations(sl3);
  for (std::size_t k = 0; k < qd.dim(); ++k) CHECK(is_quasiderivation(sl3, qd.basis[k], qd.partners[k]));
  CHECK(quasiderivation_projection_dim(qd) == oracle::delta_dim(sl3, q.one()) + oracle::centroid_dim(sl3));
}

TEST_CASE("superderivations of osp(1|2) against the oracle") {
  const Field q = Field::rationals();
  const Algebra L = make_osp12(q);
  for (const char* d : {"1/2", "1", "-1", "2", "0"})
    for (int p = 0; p < 2; ++p) {
      const SolutionSpace s = solve_superderivations(L, q.parse(d), p);
      CHECK_MESSAGE(s.dim() == oracle::delta_dim(L, q.parse(d), p, true), "delta " << d << " parity " << p);
      for (const auto& D : s.basis) {
        CHECK(is_delta_superderivation(L, D, q.parse(d), p));
        CHECK(is_homogeneous(L, D, p));
      }
    }
  for (int p = 0; p < 2; ++p) CHECK(solve_supercentroid(L, p).dim() == oracle::centroid_dim(L, p));
  CHECK_THROWS_AS(solve_superderivations(make_sl(q, 2), q.one(), 0), MathError);
}

TEST_CASE("parametric solve on sl2 and pointwise agreement") {
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  const ParametricResult r = solve_parametric(sl2);
  CHECK(r.generic_dim == 0);
  REQUIRE(r.specials.size() == 3);
  CHECK(r.specials[0].first == q.parse("-1"));
  CHECK(r.specials[1].first == q.parse("1/2"));
  CHECK(r.specials[2].first == q.parse("1"));
  for (const auto& [d, dim] : r.specials) CHECK(dim == oracle::delta_dim(sl2, d));
  for (const char* d : {"3", "-7/2", "2/9", "11", "-1/4"}) CHECK(oracle::delta_dim(sl2, q.parse(d)) == r.generic_dim);
  CHECK_THROWS_AS(solve_parametric(sl2, 4), InputError);
}

TEST_CASE("parametric solve on the Elduque algebra") {
  const Field q = Field::rationals();
  const Algebra E = make_elduque4(q);
  const ParametricResult r = solve_parametric(E);
  CHECK(r.generic_dim == oracle::delta_dim(E, q.parse("5/7")));
  for (const auto& [d, dim] : r.specials) CHECK(dim == oracle::delta_dim(E, d));
  for (const auto& x : roots(r.witness_minor)) CHECK(oracle::delta_dim(E, x) >= r.generic_dim);
}

TEST_CASE("Witt type on Z_25 versus W_1(2)") {
  const Field f = Field::prime_field(5);
  std::vector<long long> all;
  for (long long k = 0; k < 25; ++k) all.push_back(k);
  const Algebra W = make_witt_type(f, WittSupport{all, 25});
  const Algebra Z = make_zassenhaus(5, 2);
  CHECK(solve_delta_derivations(W, f.parse("1/2")).dim() == 25);
  CHECK(solve_delta_derivations(Z, f.parse("1/2")).dim() == 25);
  // Not isomorphic: W_1(2) carries the extra outer derivation.
  CHECK(solve_delta_derivations(W, f.one()).dim() == 25);
  CHECK(solve_delta_derivations(Z, f.one()).dim() == 26);
}

TEST_CASE("exp-quasiautomorphisms") {
  const Algebra W = make_zassenhaus(5, 1);
  const Field& f = W.field();
  const LinearMap D = nilpotent_half_map(5);
  REQUIRE(is_delta_derivation(W, D, f.parse("1/2")));
  unsigned idx = 0;
  CHECK_THROWS_AS(exp_nilpotent(D, &idx), MathError);
  try {
    exp_quasiautomorphism(W, D, f.parse("1/2"));
  } catch (const MathError& e) {
    CHECK(e.kind() == "NilpotencyTooDeep");
  }
  const LinearMap D2 = compose(D, D);
  CHECK(is_delta_derivation(W, D2, f.parse("1/2")));
  const QuasiAutomorphism qa = exp_quasiautomorphism(W, D2, f.parse("1/2"));
  CHECK(qa.verified);
  CHECK(qa.nilpotency_index == 3);
  try {
    exp_nilpotent(LinearMap::identity(f, 5));
    FAIL("identity is not nilpotent");
  } catch (const MathError& e) {
    CHECK(e.kind() == "NotNilpotent");
  }
  // An ordinary nilpotent derivation gives automorphisms.
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  const LinearMap ad_e = sl2.left_multiplication(1);
  const QuasiAutomorphism a = exp_quasiautomorphism(sl2, ad_e, q.one());
  CHECK(a.verified);
  CHECK(a.phi == a.psi);
}

TEST_CASE("Grassmann lifts of superderivations") {
  const Field q = Field::rationals();
  const Algebra L = make_osp12(q);
  const Algebra G = make_grassmann_envelope(L, 3);
  for (const char* d : {"1", "1/2"})
    for (int p = 0; p < 2; ++p)
      for (const auto& D : solve_superderivations(L, q.parse(d), p).basis) {
        const unsigned g = p ? 0b001u : 0b011u;
        const LinearMap Dh = lift_grassmann(L, D, p, g, 3);
        CHECK(is_delta_derivation(G, Dh, q.parse(d)));
      }
  const LinearMap odd = solve_superderivations(L, q.one(), 1).basis.at(0);
  CHECK_THROWS_AS(lift_grassmann(L, odd, 1, 0b011u, 3), MathError);
  const LinearMap M = lift_grassmann_module(L, LinearMap::identity(q, 5), 3);
  CHECK(M.domain_dim() == G.dim());
  CHECK(M.codomain_dim() == 5 * 8);
}
