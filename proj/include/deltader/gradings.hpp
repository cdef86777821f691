#pragma once

// Root space decompositions with respect to commuting δ-derivations and the
// partial operation λ∘μ = δ(λ + μ) on the roots.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "deltader/algebra.hpp"
#include "deltader/polynomial.hpp"

namespace deltader {

using Root = Vector;

struct RootDecomposition {
  Algebra algebra;
  std::vector<LinearMap> derivations;
  FieldElement delta;
  /// Sorted lexicographically by the residues / rational values.
  std::vector<Root> roots;
  std::vector<Subspace> spaces;
  bool complete = false;
  /// defined[a][b]: [L_a, L_b] != 0.
  std::vector<std::vector<bool>> defined;
  /// δ(λ_a + λ_b) for every pair (meaningful where defined).
  std::vector<std::vector<Root>> circ;
  /// [L_a, L_b] ⊆ L_{δ(λ_a+λ_b)} held for every defined pair.
  bool inclusion_holds = false;

  std::optional<std::size_t> root_index(const Root& r) const;
};

/// Throws MathError with kind NonCommuting, NotADerivation or NonSplitting
/// (the message carries the factor without roots in the field).
RootDecomposition root_decompose(const Algebra& alg, const std::vector<LinearMap>& derivations,
                                 const FieldElement& delta);

struct AssociativityWitness {
  std::size_t a = 0, b = 0, c = 0;  // root indices
  Root left;                        // (λ_a ∘ λ_b) ∘ λ_c
  Root right;                       // λ_a ∘ (λ_b ∘ λ_c)
};

struct SemigroupVerdict {
  /// false means no contradiction was found, not that an embedding exists.
  bool non_semigroup = false;
  std::optional<AssociativityWitness> witness;
};

/// Looks for (λ∘μ)∘η != λ∘(μ∘η) with all four products defined.
SemigroupVerdict check_semigroup(const RootDecomposition& dec);

struct PropRoot1Report {
  /// Pairwise distinct (λ, μ, η) with [[L_λ, L_μ], L_η] != 0.
  std::optional<std::array<std::size_t, 3>> condition_i;
  /// Distinct (λ, μ) with [[L_λ, L_λ], L_μ] != 0.
  std::optional<std::array<std::size_t, 2>> condition_ii;
  bool fires() const { return condition_i.has_value() || condition_ii.has_value(); }
};

/// Throws MathError("BadDelta") for δ ∈ {0, 1}.
PropRoot1Report check_prop_root1(const RootDecomposition& dec);

struct RootSumReport {
  bool satisfiable = true;
  /// Roots η with no λ, μ such that η = δ(λ + μ).
  std::vector<Root> violations;
};

RootSumReport check_root_sum(const std::vector<Root>& roots, const FieldElement& delta);
RootSumReport check_root_sum(const std::vector<FieldElement>& roots, const FieldElement& delta);

std::string root_to_string(const Root& r);

}  // namespace deltader
