#include <doctest.h>

#include <algorithm>
#include <bit>

#include "deltader/constructors.hpp"
#include "deltader/errors.hpp"
#include "deltader/super.hpp"
#include "oracle.hpp"

using namespace deltader;

namespace {

// Naive s4: every 4-tuple of basis vectors, all 24 orderings, Koszul sign
// computed from the inversions of each ordering.
std::size_t naive_s4_dim(const Algebra& A, bool super) {
  const Field& f = A.field();
  const std::size_t n = A.dim();
  std::vector<Vector> rows;
  std::size_t rk = 0;
  std::size_t t[4];
  for (t[0] = 0; t[0] < n; ++t[0])
    for (t[1] = 0; t[1] < n; ++t[1])
      for (t[2] = 0; t[2] < n; ++t[2])
        for (t[3] = 0; t[3] < n; ++t[3]) {
          if (!super && !(t[0] < t[1] && t[1] < t[2] && t[2] < t[3])) continue;
          if (super && !(t[0] <= t[1] && t[1] <= t[2] && t[2] <= t[3])) continue;
          for (std::size_t y = 0; y < n; ++y) {
            int perm[4] = {0, 1, 2, 3};
            Vector sum = zero_vector(f, n);
            do {
              int sign = 1;
              for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                  if (perm[a] > perm[b]) {
                    sign = -sign;
                    if (super && A.parity(t[perm[a]]) && A.parity(t[perm[b]])) sign = -sign;
                  }
              Vector v = unit_vector(f, n, y);
              for (int a = 0; a < 4; ++a) v = A.multiply(v, unit_vector(f, n, t[perm[a]]));
              axpy(sum, f.from_int(sign), v);
            } while (std::next_permutation(perm, perm + 4));
            // Orderings of equal odd arguments were each counted once per
            // arrangement of the equal entries; rescale by their multiplicity.
            std::size_t mult = 1;
            for (int a = 0; a < 4;) {
              int b = a;
              while (b < 4 && t[b] == t[a]) ++b;
              for (int k = 2; k <= b - a; ++k) mult *= static_cast<std::size_t>(k);
              a = b;
            }
            if (!is_zero(sum)) {
              rows.push_back(scale(f.from_int(1) / f.from_int(static_cast<long long>(mult)), sum));
              rk = oracle::rank(rows);
              if (rk == n) return n;
            }
          }
        }
  return rk;
}

}  // namespace

TEST_CASE("s4 of small algebras against the naive evaluation") {
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  CHECK(compute_s4(sl2, IdentityLaw::Ordinary).dim() == 0);
  CHECK(check_standard_identity(sl2, IdentityLaw::Ordinary));
  CHECK(compute_s4(make_abelian(q, 5), IdentityLaw::Ordinary).dim() == 0);

  const Algebra sl3 = make_sl(q, 3);
  const IdealBasis s = compute_s4(sl3, IdentityLaw::Ordinary);
  CHECK(s.dim() == 8);
  CHECK(s.is_ideal);
  CHECK(naive_s4_dim(sl3, false) == 8);

  const Algebra E = make_elduque4(q);
  CHECK(compute_s4(E, IdentityLaw::Ordinary).dim() == naive_s4_dim(E, false));
  CHECK(check_standard_identity(E, IdentityLaw::Ordinary));

  const Algebra L = make_osp12(q);
  const IdealBasis ss = compute_s4(L, IdentityLaw::Super);
  CHECK(ss.dim() == naive_s4_dim(L, true));
  CHECK(ss.is_ideal);
  CHECK_THROWS_AS(compute_s4(sl2, IdentityLaw::Super), MathError);
}

TEST_CASE("s4 of the Grassmann envelope against G(s4(L))") {
  const Field q = Field::rationals();
  const Algebra L = make_osp12(q);
  const Algebra sl2 = make_sl(q, 2);  // the even part of L
  for (unsigned m : {1u, 3u, 5u}) {
    const Algebra G = make_grassmann_envelope(L, m);
    const IdealBasis sG = compute_s4(G, IdentityLaw::Ordinary);
    const Subspace expected = envelope_subspace(L, compute_s4(L, IdentityLaw::Super).span, m);
    CHECK(expected.contains(sG.span));
    // Products landing on the unit monomial only involve L_0 ⊗ 1, so that
    // component of s4(G(L)) is s4(L_0) ⊗ 1 = 0, while G(s4(L)) = G(L).
    const EnvelopeBasis eb = envelope_basis(L, m);
    std::vector<Vector> unit_part;
    for (std::size_t I = 0; I < eb.elements.size(); ++I)
      if (eb.elements[I].second == 0) unit_part.push_back(unit_vector(q, G.dim(), I));
    const Subspace U = Subspace::span(q, G.dim(), unit_part);
    CHECK(U.dim() == 3);
    CHECK(sG.span.intersect(U).dim() == compute_s4(sl2, IdentityLaw::Ordinary).dim());
    CHECK(sG.span.sum(U) == expected);
    CHECK_FALSE(sG.span == expected);
    CHECK(check_standard_identity(G, IdentityLaw::Ordinary) == check_standard_identity(L, IdentityLaw::Super));
  }
}

TEST_CASE("kernel containment") {
  const Field q = Field::rationals();
  const Algebra sl2 = make_sl(q, 2);
  const IdealBasis s0 = compute_s4(sl2, IdentityLaw::Ordinary);
  CHECK(verify_kernel_containment(solve_delta_derivations(sl2, q.from_int(2)), s0));
  CHECK(verify_kernel_containment(solve_delta_derivations(sl2, q.one()), s0));

  // sl3 ⊕ K: δ = 2 solutions exist (they kill sl3 and move the centre).
  const Algebra S = make_semidirect(ModuleAction::trivial(make_sl(q, 3), 1));
  const SolutionSpace d2 = solve_delta_derivations(S, q.from_int(2));
  CHECK(d2.dim() > 0);
  const IdealBasis s4 = compute_s4(S, IdentityLaw::Ordinary);
  CHECK(s4.dim() == 8);
  CHECK(verify_kernel_containment(d2, s4));
  const SolutionSpace d1 = solve_delta_derivations(S, q.one());
  CHECK_FALSE(verify_kernel_containment(d1, s4));
}

TEST_CASE("even superderivations are the grading-preserving δ-derivations") {
  const Field q = Field::rationals();
  const Algebra L = make_osp12(q);
  for (const char* d : {"1", "1/2", "-1", "2"}) {
    const FieldElement delta = q.parse(d);
    const SolutionSpace even = solve_superderivations(L, delta, 0);
    const SolutionSpace all = solve_delta_derivations(L, delta);
    for (const auto& D : even.basis) CHECK(all.contains(D));
    std::size_t preserving = 0;
    for (const auto& D : all.basis) preserving += is_homogeneous(L, D, 0);
    CHECK(even.dim() >= preserving);
    CHECK(even.dim() == oracle::delta_dim(L, delta, 0, true));
  }
}

TEST_CASE("kernels of lifted maps split by parity") {
  const Field q = Field::rationals();
  const Algebra L = make_osp12(q);
  const unsigned m = 3;
  const Algebra G = make_grassmann_envelope(L, m);
  for (int p = 0; p < 2; ++p)
    for (const auto& D : solve_superderivations(L, q.one(), p).basis) {
      const LinearMap lifted = lift_grassmann_module(L, D, m);
      std::size_t k0 = 0, k1 = 0;
      const Subspace K = kernel(D);
      for (const auto& v : K.basis()) {
        bool even = true, odd = true;
        for (std::size_t i = 0; i < L.dim(); ++i)
          if (!v[i].is_zero()) (L.parity(i) ? even : odd) = false;
        k0 += even;
        k1 += odd;
      }
      // Homogeneous kernels: the basis of Ker D splits into parity parts.
      CHECK(k0 + k1 == K.dim());
      CHECK(kernel(lifted).dim() == k0 * (1u << (m - 1)) + k1 * (1u << (m - 1)));
      CHECK(lifted.domain_dim() == G.dim());
    }
}

TEST_CASE("desk check") {
  const Field q = Field::rationals();
  const DeskCheckReport a = desk_check_theorems(make_sl(q, 2));
  CHECK(a.hypotheses_met);
  CHECK(a.passed);
  CHECK(a.centroid_dim == 1);
  CHECK(a.half_equals_centroid);
  CHECK(a.rows[0].dims[0] == 5);  // δ = -1

  const DeskCheckReport b = desk_check_theorems(make_osp12(q));
  CHECK(b.hypotheses_met);
  CHECK(b.form_attached);
  CHECK(b.half_equals_centroid);
  CHECK(b.zero_off_special);
  CHECK(b.passed);

  AlgebraBuilder ab(q, 2, Flavor::SuperLie);
  ab.grading({0, 1});
  const DeskCheckReport c = desk_check_theorems(ab.build());
  CHECK_FALSE(c.hypotheses_met);
  CHECK_FALSE(c.passed);
  CHECK_FALSE(c.note.empty());
}
