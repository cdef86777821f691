#include "deltader/gradings.hpp"

#include <algorithm>
#include <sstream>

#include "deltader/errors.hpp"
#include "deltader/solver.hpp"

namespace deltader {

namespace {

bool scalar_less(const FieldElement& x, const FieldElement& y) {
  if (x.field().kind() == FieldKind::Rationals) return x.rational() < y.rational();
  return x.residue() < y.residue();
}

bool root_less(const Root& a, const Root& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), scalar_less);
}

// Eigenvalues of D, assuming its characteristic polynomial splits.
std::vector<FieldElement> split_eigenvalues(const LinearMap& D) {
  const Field& f = D.field();
  Polynomial chi = characteristic_polynomial(f, D.domain_dim(), D.matrix().data());
  std::vector<FieldElement> ev = roots(chi);
  Polynomial rest = chi;
  for (const auto& l : ev) {
    const Polynomial lin = Polynomial::linear_root(l);
    while (rest.degree() > 0 && rest.eval(l).is_zero()) rest = rest.divide_exact(lin);
  }
  if (rest.degree() > 0)
    throw MathError("NonSplitting", "characteristic polynomial factor " + rest.to_string() + " has no roots in " +
                                        f.describe());
  std::sort(ev.begin(), ev.end(), scalar_less);
  return ev;
}

Subspace generalized_eigenspace(const LinearMap& D, const FieldElement& l) {
  const std::size_t n = D.domain_dim();
  LinearMap shifted = D - LinearMap::identity(D.field(), n) * l;
  return kernel(shifted.power(static_cast<unsigned>(n)));
}

Subspace bracket(const Algebra& A, const Subspace& U, const Subspace& V) {
  std::vector<Vector> prods;
  for (const auto& u : U.basis())
    for (const auto& v : V.basis()) {
      Vector w = A.multiply(u, v);
      if (!is_zero(w)) prods.push_back(std::move(w));
    }
  return Subspace::span(A.field(), A.dim(), prods);
}

}  // namespace

std::optional<std::size_t> RootDecomposition::root_index(const Root& r) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == r) return k;
  return std::nullopt;
}

std::string root_to_string(const Root& r) {
  if (r.size() == 1) return r[0].to_string();
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < r.size(); ++k) os << (k ? ", " : "") << r[k].to_string();
  os << ")";
  return os.str();
}

RootDecomposition root_decompose(const Algebra& alg, const std::vector<LinearMap>& derivations,
                                 const FieldElement& delta) {
  const Field& f = alg.field();
  if (f.kind() == FieldKind::QuotientRing) throw InputError("root decompositions need Q or GF(p)");
  if (derivations.empty()) throw InputError("at least one map is required");
  const std::size_t n = alg.dim();
  for (const auto& D : derivations)
    if (D.domain_dim() != n || D.codomain_dim() != n) throw InputError("maps must be dim x dim");
  for (std::size_t a = 0; a < derivations.size(); ++a)
    for (std::size_t b = a + 1; b < derivations.size(); ++b)
      if (!commutator(derivations[a], derivations[b]).is_zero())
        throw MathError("NonCommuting", "maps " + std::to_string(a) + " and " + std::to_string(b) + " do not commute");
  for (std::size_t a = 0; a < derivations.size(); ++a)
    if (!is_delta_derivation(alg, derivations[a], delta))
      throw MathError("NotADerivation", "map " + std::to_string(a) + " is not a " + delta.to_string() + "-derivation");

  RootDecomposition dec;
  dec.algebra = alg;
  dec.derivations = derivations;
  dec.delta = delta;

  std::vector<std::pair<Root, Subspace>> parts{{Root{}, Subspace::whole(f, n)}};
  for (const auto& D : derivations) {
    std::vector<std::pair<Root, Subspace>> next;
    for (const auto& l : split_eigenvalues(D)) {
      Subspace E = generalized_eigenspace(D, l);
      for (const auto& [r, S] : parts) {
        Subspace I = S.intersect(E);
        if (I.dim() == 0) continue;
        Root r2 = r;
        r2.push_back(l);
        next.emplace_back(std::move(r2), std::move(I));
      }
    }
    parts = std::move(next);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return root_less(x.first, y.first); });
  std::size_t total = 0;
  for (auto& [r, S] : parts) {
    total += S.dim();
    dec.roots.push_back(r);
    dec.spaces.push_back(S);
  }
  dec.complete = total == n;

  const std::size_t k = dec.roots.size();
  dec.defined.assign(k, std::vector<bool>(k, false));
  dec.circ.assign(k, std::vector<Root>(k));
  dec.inclusion_holds = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      Root c;
      for (std::size_t t = 0; t < dec.roots[a].size(); ++t) c.push_back(delta * (dec.roots[a][t] + dec.roots[b][t]));
      dec.circ[a][b] = c;
      Subspace P = bracket(alg, dec.spaces[a], dec.spaces[b]);
      if (P.dim() == 0) continue;
      dec.defined[a][b] = true;
      auto idx = dec.root_index(c);
      if (!idx || !dec.spaces[*idx].contains(P)) dec.inclusion_holds = false;
    }
  return dec;
}

SemigroupVerdict check_semigroup(const RootDecomposition& dec) {
  SemigroupVerdict v;
  const std::size_t k = dec.roots.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (!dec.defined[a][b]) continue;
      auto ab = dec.root_index(dec.circ[a][b]);
      if (!ab) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (!dec.defined[b][c] || !dec.defined[*ab][c]) continue;
        auto bc = dec.root_index(dec.circ[b][c]);
        if (!bc || !dec.defined[a][*bc]) continue;
        const Root& left = dec.circ[*ab][c];
        const Root& right = dec.circ[a][*bc];
        if (left != right) {
          v.non_semigroup = true;
          v.witness = AssociativityWitness{a, b, c, left, right};
          return v;
        }
      }
    }
  return v;
}

PropRoot1Report check_prop_root1(const RootDecomposition& dec) {
  if (dec.delta.is_zero() || dec.delta.is_one())
    throw MathError("BadDelta", "the criterion needs delta different from 0 and 1");
  const Algebra& A = dec.algebra;
  const std::size_t k = dec.roots.size();
  PropRoot1Report rep;
  std::vector<std::vector<Subspace>> br(k, std::vector<Subspace>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (dec.defined[a][b]) br[a][b] = bracket(A, dec.spaces[a], dec.spaces[b]);
  for (std::size_t a = 0; a < k && !rep.condition_i; ++a)
    for (std::size_t b = 0; b < k && !rep.condition_i; ++b) {
      if (b == a || !dec.defined[a][b]) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (c == a || c == b) continue;
        if (bracket(A, br[a][b], dec.spaces[c]).dim() > 0) {
          rep.condition_i = std::array<std::size_t, 3>{a, b, c};
          break;
        }
      }
    }
  for (std::size_t a = 0; a < k && !rep.condition_ii; ++a) {
    if (!dec.defined[a][a]) continue;
    for (std::size_t b = 0; b < k; ++b) {
      if (b == a) continue;
      if (bracket(A, br[a][a], dec.spaces[b]).dim() > 0) {
        rep.condition_ii = std::array<std::size_t, 2>{a, b};
        break;
      }
    }
  }
  return rep;
}

RootSumReport check_root_sum(const std::vector<Root>& roots, const FieldElement& delta) {
  RootSumReport rep;
  for (const auto& eta : roots) {
    bool found = false;
    for (std::size_t a = 0; a < roots.size() && !found; ++a)
      for (std::size_t b = a; b < roots.size() && !found; ++b) {
        Root s;
        for (std::size_t t = 0; t < eta.size(); ++t) s.push_back(delta * (roots[a][t] + roots[b][t]));
        found = s == eta;
      }
    if (!found) rep.violations.push_back(eta);
  }
  rep.satisfiable = rep.violations.empty();
  return rep;
}

RootSumReport check_root_sum(const std::vector<FieldElement>& roots, const FieldElement& delta) {
  std::vector<Root> rs;
  for (const auto& r : roots) rs.push_back(Root{r});
  return check_root_sum(rs, delta);
}

}  // namespace deltader
