#pragma once

// Linear systems for δ-derivations and their relatives, solved exactly.
//
// Unknown layout: a map D with D(e_i) = sum_j d_ij e_j occupies columns
// i * m + j (d_11, ..., d_1m, d_21, ...). Solution bases are the reduced row
// echelon form of the flattened maps, so they depend only on the space.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltader/algebra.hpp"
#include "deltader/linalg.hpp"
#include "deltader/polynomial.hpp"

namespace deltader {

enum class SolutionKind { DeltaDer, DeltaSuperDer, Centroid, SuperCentroid, QuasiDer, ModuleValued };

std::string to_string(SolutionKind k);

struct LinearSystem {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  std::size_t row_count() const { return rows.size(); }
};

struct SolutionSpace {
  Algebra algebra;
  SolutionKind kind = SolutionKind::DeltaDer;
  /// Meaningless for the centroid kinds and quasiderivations (set to 1).
  FieldElement delta;
  /// Parity of homogeneous solutions for the super kinds, 0 otherwise.
  int parity = 0;
  /// Solution maps. For QuasiDer these are the D components of the pair basis.
  std::vector<LinearMap> basis;
  /// F components matching basis, QuasiDer only.
  std::vector<LinearMap> partners;

  std::size_t dim() const { return basis.size(); }
  /// Span of the flattened basis maps.
  Subspace span() const;
  bool contains(const LinearMap& m) const;
};

/// δ-derivation equations over n^2 unknowns. Lie algebras give one row per
/// (i < j, l), i.e. n^2(n-1)/2 rows; other flavors use every ordered pair.
LinearSystem assemble_system(const Algebra& alg, const FieldElement& delta);

SolutionSpace solve_delta_derivations(const Algebra& alg, const FieldElement& delta);

/// D([x,y]) = δ x•D(y) - δ y•D(x) for a left module; maps are n x mdim.
SolutionSpace solve_module_valued(const ModuleAction& M, const FieldElement& delta);

/// χ(xy) = χ(x)y = xχ(y).
SolutionSpace solve_centroid(const Algebra& alg);
/// χ(xy) = χ(x)y = (-1)^{|χ||x|} xχ(y), homogeneous of the given parity.
SolutionSpace solve_supercentroid(const Algebra& alg, int parity);

/// Pairs (D, F) with F(xy) = D(x)y + xD(y).
SolutionSpace solve_quasiderivations(const Algebra& alg);
/// Dimension of the projection of the quasiderivation space onto D.
std::size_t quasiderivation_projection_dim(const SolutionSpace& q);

/// D(xy) = δD(x)y + δ(-1)^{|D||x|} xD(y), homogeneous of the given parity.
SolutionSpace solve_superderivations(const Algebra& alg, const FieldElement& delta, int parity);

bool is_delta_derivation(const Algebra& alg, const LinearMap& D, const FieldElement& delta);
bool is_delta_superderivation(const Algebra& alg, const LinearMap& D, const FieldElement& delta, int parity);
bool is_centroid_element(const Algebra& alg, const LinearMap& chi);
bool is_supercentroid_element(const Algebra& alg, const LinearMap& chi, int parity);
bool is_quasiderivation(const Algebra& alg, const LinearMap& D, const LinearMap& F);
bool is_homogeneous(const Algebra& alg, const LinearMap& D, int parity);

/// ad(e_i): x -> e_i x
std::vector<LinearMap> inner_derivations(const Algebra& alg);

struct ParametricResult {
  /// The quotient ring carrying the generic δ.
  Field parameter_ring;
  std::size_t generic_rank = 0;
  std::size_t generic_dim = 0;
  /// Nonzero maximal minor of the system in δ; its roots contain every special value.
  Polynomial witness_minor;
  /// Base-field values of δ where the solution space is larger than generic.
  std::vector<std::pair<FieldElement, std::size_t>> specials;
};

/// Solves the δ-derivation system with δ a parameter. The generic rank is
/// computed over adjoin_parameter(base, degree_bound) (default n^2), which
/// is exact because every minor has degree at most the rank.
ParametricResult solve_parametric(const Algebra& alg, std::optional<std::size_t> degree_bound = std::nullopt);

/// Lift to G(L) (even part of L⊗G, m generators):
/// D̂(x⊗h) = D(x)⊗gh for a homogeneous D of the parity of the monomial g.
/// Throws MathError("ParityMismatch").
LinearMap lift_grassmann(const Algebra& L, const LinearMap& D, int parity, unsigned g, unsigned m);

/// D⊗id from G(L) into the full L⊗G; L⊗G is indexed by i * 2^m + mask.
LinearMap lift_grassmann_module(const Algebra& L, const LinearMap& D, unsigned m);

struct QuasiAutomorphism {
  LinearMap phi;
  LinearMap psi;
  /// Smallest k with D^k = 0 (and F^k = 0 when F is given).
  unsigned nilpotency_index = 0;
  /// psi(e_i e_j) = phi(e_i) phi(e_j) on all basis pairs.
  bool verified = false;
};

/// exp of a nilpotent map: sum_{k < index} X^k / k!.
/// Throws MathError("NotNilpotent") or, in characteristic p when the index is
/// at least p, MathError("NilpotencyTooDeep").
LinearMap exp_nilpotent(const LinearMap& X, unsigned* index = nullptr);

/// φ = exp(δD), ψ = exp(D). With F given (a quasiderivation pair) φ = exp(D),
/// ψ = exp(F) and δ is ignored.
QuasiAutomorphism exp_quasiautomorphism(const Algebra& alg, const LinearMap& D, const FieldElement& delta,
                                        const std::optional<LinearMap>& F = std::nullopt);

}  // namespace deltader
