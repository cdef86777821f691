#pragma once

// The s₄ ideal, standard (super)identity checks, Grassmann-envelope images of
// subspaces, and the theorem desk check for prime (super)algebras.
//
// s₄ is spanned by Σ_σ ε(σ) [[[[y, x_σ1], x_σ2], x_σ3], x_σ4] over basis
// vectors y, x_1..x_4. In the super law ε(σ) is the Koszul sign: every
// transposition of adjacent arguments contributes -1, and an extra -1 when
// both are odd. The ordinary law uses sgn(σ).

#include <optional>
#include <string>
#include <vector>

#include "deltader/solver.hpp"

namespace deltader {

enum class IdentityLaw { Ordinary, Super };

struct IdealBasis {
  Algebra algebra;
  Subspace span;
  /// [L, span] ⊆ span
  bool is_ideal = false;
  std::size_t dim() const { return span.dim(); }
};

/// Sums over x-multisets of basis indices: distinct for the ordinary law; for
/// the super law odd basis vectors may repeat, since the identity is symmetric
/// in odd arguments. Only nonzero partial products are expanded. Stops early once
/// the span is the whole algebra. Throws MathError("GradingMissing") for the
/// super law on an ungraded algebra.
IdealBasis compute_s4(const Algebra& alg, IdentityLaw law);

bool check_standard_identity(const Algebra& alg, IdentityLaw law);

/// Every basis map of the space kills every vector of the ideal.
bool verify_kernel_containment(const SolutionSpace& space, const IdealBasis& ideal);

/// G(S) ⊆ G(L) for a graded subspace S of L: spanned by s₀⊗g (|g| even) and
/// s₁⊗g (|g| odd), in the basis of make_grassmann_envelope(L, m).
Subspace envelope_subspace(const Algebra& L, const Subspace& S, unsigned m);

struct DeskCheckRow {
  FieldElement delta;
  /// Parity 0 and 1 dimensions (superderivations), or only the first entry
  /// (δ-derivations) for ungraded algebras.
  std::vector<std::size_t> dims;
};

struct DeskCheckReport {
  /// Perfect with zero center: necessary for the simple fixtures we run.
  bool hypotheses_met = false;
  std::string note;
  bool graded = false;
  std::optional<ParametricResult> parametric;
  std::vector<DeskCheckRow> rows;
  std::size_t centroid_dim = 0;
  std::vector<std::size_t> supercentroid_dims;
  bool half_equals_centroid = false;
  bool zero_off_special = false;
  bool specials_within_known_set = false;
  /// Whether the half/centroid comparison is asserted (an invariant form is attached).
  bool form_attached = false;
  /// All assertions that apply hold. False when hypotheses are not met.
  bool passed = false;
};

DeskCheckReport desk_check_theorems(const Algebra& alg);

}  // namespace deltader
