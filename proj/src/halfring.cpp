#include "deltader/halfring.hpp"

#include <algorithm>

#include "deltader/errors.hpp"

namespace deltader {

LinearMap CompositionRing::element(const Vector& coords) const {
  const std::size_t n = algebra.dim();
  LinearMap m = LinearMap::zero(field(), n, n);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) m = m + basis[i] * coords[i];
  return m;
}

Vector CompositionRing::multiply(const Vector& u, const Vector& v) const {
  Vector out = zero_vector(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!v[j].is_zero()) axpy(out, u[i] * v[j], table[i][j]);
  }
  return out;
}

Vector CompositionRing::power(const Vector& u, std::uint64_t k) const {
  Vector result = unit, base = u;
  while (k) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return result;
}

CompositionRing build_composition_ring(const SolutionSpace& space) {
  const Field& f = space.algebra.field();
  if (space.kind != SolutionKind::DeltaDer || space.delta != f.parse("1/2"))
    throw InputError("a composition ring needs the 1/2-derivations of an algebra");
  CompositionRing ring;
  ring.algebra = space.algebra;
  const std::size_t n = space.algebra.dim();
  std::vector<Vector> flat;
  for (const auto& m : space.basis) flat.push_back(m.flatten());
  const Subspace span = Subspace::span(f, n * n, flat);
  for (const auto& v : span.basis()) ring.basis.push_back(LinearMap::from_flat(f, n, n, v));
  const std::size_t d = ring.basis.size();
  auto coords = [&](const LinearMap& m) { return span.coordinates(m.flatten()); };
  auto id = coords(LinearMap::identity(f, n));
  if (!id) throw MathError("NotClosed", "the identity map is not in the span");
  ring.unit = *id;
  ring.table.assign(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = coords(compose(ring.basis[i], ring.basis[j]));
      if (!c)
        throw MathError("NotClosed", "basis maps " + std::to_string(i) + " and " + std::to_string(j) +
                                         " compose outside the span");
      ring.table[i][j] = std::move(*c);
    }
  return ring;
}

CommutativityReport check_commutative(const CompositionRing& ring) {
  CommutativityReport rep;
  for (std::size_t i = 0; i < ring.dim(); ++i)
    for (std::size_t j = i + 1; j < ring.dim(); ++j)
      if (ring.table[i][j] != ring.table[j][i]) {
        rep.commutative = false;
        rep.witness = std::make_pair(i, j);
        return rep;
      }
  return rep;
}

std::vector<Vector> nilradical(const CompositionRing& ring) {
  if (!check_commutative(ring).commutative) throw MathError("NotCommutative", "the composition ring is not commutative");
  const Field& f = ring.field();
  const std::size_t d = ring.dim();
  Matrix M(f, d, d);
  if (f.kind() == FieldKind::PrimeField) {
    const std::uint64_t p = f.characteristic();
    std::uint64_t q = p;
    while (q < d) q *= p;
    for (std::size_t i = 0; i < d; ++i) M.set_row(i, ring.power(unit_vector(f, d, i), q));
  } else if (f.kind() == FieldKind::Rationals) {
    auto trace_of_mult = [&](const Vector& z) {
      FieldElement t = f.zero();
      for (std::size_t k = 0; k < d; ++k) t += ring.multiply(z, unit_vector(f, d, k))[k];
      return t;
    };
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M(i, j) = trace_of_mult(ring.table[i][j]);
  } else {
    throw InputError("nilradicals are computed over Q or GF(p)");
  }
  return kernel(LinearMap(M)).basis();
}

std::vector<ZeroDivisorPair> find_zero_divisors(const CompositionRing& ring) {
  const Field& f = ring.field();
  const std::size_t d = ring.dim();
  std::vector<ZeroDivisorPair> out;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (is_zero(ring.table[i][j])) out.push_back({unit_vector(f, d, i), unit_vector(f, d, j)});
  if (d <= 6 && check_commutative(ring).commutative && f.kind() != FieldKind::QuotientRing) {
    for (const auto& u : nilradical(ring)) {
      Vector prev = u, cur = ring.multiply(u, u);
      while (!is_zero(cur)) {
        prev = cur;
        cur = ring.multiply(cur, u);
      }
      out.push_back({prev, u});
    }
  }
  return out;
}

LocalityReport locality_report(const CompositionRing& ring) {
  LocalityReport rep;
  rep.nilradical_dim = nilradical(ring).size();
  rep.is_local = rep.nilradical_dim + 1 == ring.dim();
  return rep;
}

std::vector<std::pair<long long, LinearMap>> witt_half_basis(const Field& f, const WittSupport& R) {
  const Algebra W = make_witt_type(f, R);
  std::vector<long long> elems = R.elements;
  auto norm = [&](long long v) { return R.modulus ? ((v % *R.modulus) + *R.modulus) % *R.modulus : v; };
  for (auto& e : elems) e = norm(e);
  std::sort(elems.begin(), elems.end());
  auto index = [&](long long v) -> std::optional<std::size_t> {
    auto it = std::lower_bound(elems.begin(), elems.end(), norm(v));
    if (it == elems.end() || *it != norm(v)) return std::nullopt;
    return static_cast<std::size_t>(it - elems.begin());
  };
  const std::size_t n = elems.size();
  std::vector<std::pair<long long, LinearMap>> out;
  for (long long g : elems) {
    if (!index(2 * g)) continue;
    LinearMap D = LinearMap::zero(f, n, n);
    for (std::size_t a = 0; a < n; ++a)
      if (auto k = index(elems[a] + g)) D(a, *k) = f.one();
    if (!is_delta_derivation(W, D, f.parse("1/2")))
      throw std::logic_error("D_" + std::to_string(g) + " is not a 1/2-derivation");
    out.emplace_back(g, std::move(D));
  }
  return out;
}

}  // namespace deltader
