#pragma once

// The ½-derivations of an algebra as a ring under composition.

#include <optional>
#include <utility>
#include <vector>

#include "deltader/constructors.hpp"
#include "deltader/solver.hpp"

namespace deltader {

struct CompositionRing {
  Algebra algebra;
  std::vector<LinearMap> basis;
  /// table[i][j]: coordinates of basis[i] ∘ basis[j].
  std::vector<std::vector<Vector>> table;
  /// Coordinates of the identity map.
  Vector unit;

  const Field& field() const { return algebra.field(); }
  std::size_t dim() const { return basis.size(); }
  /// The map with the given coordinates.
  LinearMap element(const Vector& coords) const;
  Vector multiply(const Vector& u, const Vector& v) const;
  Vector power(const Vector& u, std::uint64_t k) const;
};

/// Throws InputError unless the space holds ½-derivations, and
/// MathError("NotClosed") naming the first basis pair whose composite leaves
/// the span (or the identity, if it is missing).
CompositionRing build_composition_ring(const SolutionSpace& space);

struct CommutativityReport {
  bool commutative = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};
CommutativityReport check_commutative(const CompositionRing& ring);

struct ZeroDivisorPair {
  Vector u, v;  // ring coordinates, u ∘ v = 0
};

/// Basis pairs with vanishing product, followed by (u^{k-1}, u) for nilpotent
/// radical basis vectors u of index k when dim <= 6 and the ring is commutative.
std::vector<ZeroDivisorPair> find_zero_divisors(const CompositionRing& ring);

/// Basis of the nilradical in ring coordinates. Over GF(p) this is the kernel
/// of x -> x^(p^k) with p^k >= dim; over Q the radical of (x, y) -> Tr(L_xy).
/// Throws MathError("NotCommutative").
std::vector<Vector> nilradical(const CompositionRing& ring);

struct LocalityReport {
  bool is_local = false;
  std::size_t nilradical_dim = 0;
};
LocalityReport locality_report(const CompositionRing& ring);

/// The maps D_γ(e_α) = e_{α+γ} (0 if α+γ ∉ R) for γ ∈ ½R = {γ ∈ R : 2γ ∈ R},
/// in the basis of make_witt_type(f, R).
std::vector<std::pair<long long, LinearMap>> witt_half_basis(const Field& f, const WittSupport& R);

}  // namespace deltader
