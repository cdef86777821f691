#pragma once

// Concrete algebras: Witt type, Zassenhaus, divided powers, currents,
// semidirect sums, deformations, Grassmann envelopes and small fixtures.

#include <cstdint>
#include <optional>
#include <vector>

#include "deltader/algebra.hpp"

namespace deltader {

/// Binomial coefficient C(m, k) mod p by Lucas' theorem; 0 when k < 0 or k > m.
std::uint64_t binomial_mod(long long m, long long k, std::uint64_t p);

Algebra make_abelian(const Field& f, std::size_t n);

/// sl(n) from matrix commutators on the basis H_1..H_{n-1}, E_ij (i<j), E_ij (i>j),
/// with H_i = E_ii - E_{i+1,i+1}. For n = 2 the basis is h, e, f.
Algebra make_sl(const Field& f, std::size_t n);

/// Support set of a Witt-type algebra: integers, or residues mod `modulus`.
struct WittSupport {
  std::vector<long long> elements;
  std::optional<long long> modulus;
};

/// [e_a, e_b] = (b - a) e_{a+b}. Sums of distinct elements must stay in R;
/// otherwise MathError("NotClosed") names the pair.
Algebra make_witt_type(const Field& f, const WittSupport& R);

/// W_1(n) over GF(p) on e_{-1}, ..., e_{p^n - 2}.
Algebra make_zassenhaus(std::uint64_t p, unsigned n);

/// O_1(n): x^i x^j = C(i+j, j) x^{i+j}, 0 <= i, j < p^n.
Algebra make_divided_powers(std::uint64_t p, unsigned n);

/// L ⊗ A with [x⊗a, y⊗b] = [x,y] ⊗ ab; basis index i * dim(A) + j.
Algebra make_current(const Algebra& L, const Algebra& A);

/// L ⊕ M with [x, m] = x•m, [m, x] = -x•m, [M, M] = 0.
Algebra make_semidirect(const ModuleAction& M);

/// W_1(1) ⊗ O_1(n-1) with bracket [.,.] + Φ, where
/// Φ(e_{-1}⊗a, e_{-1}⊗b) = e_{p-2} ⊗ (a∂(b) - b∂(a)).
Algebra make_deformed_zassenhaus(std::uint64_t p, unsigned n);

/// The derivation ∂ of O_1(n) with ∂(x^i) = x^{i-1}.
LinearMap divided_power_derivative(std::uint64_t p, unsigned n);

/// A∂ with [a∂, b∂] = (a∂(b) - b∂(a))∂. Throws MathError("NotADerivation").
Algebra make_derivation_algebra(const Algebra& A, const LinearMap& partial);

/// Basis a, u, v, w with [a,u] = u, [a,v] = w, [a,w] = v.
Algebra make_elduque4(const Field& f);

/// The simple Lie superalgebra osp(1|2): even H, E, F and odd x, y,
/// with its supersymmetric invariant form.
Algebra make_osp12(const Field& f);

/// ℚ[x]/(x^k) (or over any field) as an associative commutative algebra.
Algebra make_truncated_polynomials(const Field& f, std::size_t k);

/// Grassmann algebra on m generators: monomials are bitmasks.
struct GrassmannMonomial {
  unsigned mask = 0;
  int parity() const;
};
/// Product of monomials: sign (0 when they share a generator) and mask.
std::pair<int, unsigned> grassmann_product(unsigned a, unsigned b);

/// Basis of G(L): pairs (index in L, monomial) with matching parity.
struct EnvelopeBasis {
  unsigned m = 0;
  std::vector<std::pair<std::size_t, unsigned>> elements;
  std::size_t index_of(std::size_t i, unsigned mask) const;
};
EnvelopeBasis envelope_basis(const Algebra& L, unsigned m);

/// Even part of L ⊗ G truncated to m odd generators.
/// Throws MathError("GradingMissing") if L is not graded.
Algebra make_grassmann_envelope(const Algebra& L, unsigned m);

/// Form (x⊗g, y⊗h) = B(x,y) f(gh) on G(L); f is indexed by monomial mask.
Matrix make_form_envelope(const Algebra& L, unsigned m, const Vector& f);

}  // namespace deltader
