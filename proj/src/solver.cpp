#include "deltader/solver.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "deltader/constructors.hpp"
#include "deltader/errors.hpp"

namespace deltader {

std::string to_string(SolutionKind k) {
  switch (k) {
    case SolutionKind::DeltaDer:
      return "delta_der";
    case SolutionKind::DeltaSuperDer:
      return "delta_superder";
    case SolutionKind::Centroid:
      return "centroid";
    case SolutionKind::SuperCentroid:
      return "supercentroid";
    case SolutionKind::QuasiDer:
      return "quasider";
    case SolutionKind::ModuleValued:
      return "module_valued";
  }
  return "?";
}

namespace {

// One equation per output coordinate l of a fixed basis pair.
class EquationBlock {
 public:
  EquationBlock(std::size_t count) : eqs_(count) {}

  void add(std::size_t l, std::size_t col, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = eqs_[l].try_emplace(col, c);
    if (!fresh) it->second += c;
  }

  void emit(std::vector<SparseRow>& out, bool keep_empty) {
    for (auto& e : eqs_) {
      SparseRow r;
      for (auto& [col, c] : e)
        if (!c.is_zero()) r.emplace_back(col, c);
      if (!r.empty() || keep_empty) out.push_back(std::move(r));
      e.clear();
    }
  }

 private:
  std::vector<std::map<std::size_t, FieldElement>> eqs_;
};

std::vector<std::pair<std::size_t, std::size_t>> equation_pairs(const Algebra& A) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (A.flavor() != Flavor::Lie || i < j) out.emplace_back(i, j);
  return out;
}

FieldElement sign_of(const Field& f, int exponent) { return exponent % 2 ? -f.one() : f.one(); }

// Rows forcing d_ij = 0 whenever parity(e_j) != parity(e_i) + parity.
void homogeneity_rows(const Algebra& A, int parity, std::vector<SparseRow>& out) {
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((A.parity(i) + parity) % 2 != A.parity(j)) out.push_back({{i * n + j, A.field().one()}});
}

// δ-(super)derivation rows: D(e_i e_j) - δ D(e_i) e_j - δ s_i e_i D(e_j),
// with s_i = (-1)^{parity * |e_i|}.
void derivation_rows(const Algebra& A, const FieldElement& delta, int parity, std::vector<SparseRow>& out,
                     bool keep_empty) {
  const std::size_t n = A.dim();
  EquationBlock eq(n);
  for (auto [i, j] : equation_pairs(A)) {
    for (const auto& [k, c] : A.product(i, j))
      for (std::size_t l = 0; l < n; ++l) eq.add(l, k * n + l, c);
    const FieldElement md = -delta;
    const FieldElement mds = md * sign_of(A.field(), parity * A.parity(i));
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [l, c] : A.product(k, j)) eq.add(l, i * n + k, md * c);
      for (const auto& [l, c] : A.product(i, k)) eq.add(l, j * n + k, mds * c);
    }
    eq.emit(out, keep_empty);
  }
}

std::vector<LinearMap> to_maps(const Field& f, std::size_t dom, std::size_t cod, const std::vector<Vector>& vs) {
  std::vector<LinearMap> out;
  for (const auto& v : vs) out.push_back(LinearMap::from_flat(f, dom, cod, v));
  return out;
}

SolutionSpace make_space(const Algebra& A, SolutionKind kind, const FieldElement& delta, int parity) {
  SolutionSpace s;
  s.algebra = A;
  s.kind = kind;
  s.delta = delta;
  s.parity = parity;
  return s;
}

void check_parity(int parity) {
  if (parity != 0 && parity != 1) throw InputError("parity must be 0 or 1");
}

}  // namespace

Subspace SolutionSpace::span() const {
  std::vector<Vector> vs;
  for (const auto& m : basis) vs.push_back(m.flatten());
  const std::size_t amb = basis.empty() ? algebra.dim() * algebra.dim() : basis[0].domain_dim() * basis[0].codomain_dim();
  return Subspace::span(algebra.field(), amb, vs);
}

bool SolutionSpace::contains(const LinearMap& m) const {
  Subspace s = span();
  if (s.ambient() != m.domain_dim() * m.codomain_dim()) return false;
  return s.contains(m.flatten());
}

LinearSystem assemble_system(const Algebra& A, const FieldElement& delta) {
  LinearSystem sys;
  sys.cols = A.dim() * A.dim();
  derivation_rows(A, delta, 0, sys.rows, true);
  return sys;
}

SolutionSpace solve_delta_derivations(const Algebra& A, const FieldElement& delta) {
  const std::size_t n = A.dim();
  std::vector<SparseRow> rows;
  derivation_rows(A, delta, 0, rows, false);
  SolutionSpace s = make_space(A, SolutionKind::DeltaDer, delta, 0);
  s.basis = to_maps(A.field(), n, n, nullspace(A.field(), n * n, rows));
  return s;
}

SolutionSpace solve_superderivations(const Algebra& A, const FieldElement& delta, int parity) {
  check_parity(parity);
  if (!A.has_grading()) throw MathError("GradingMissing", "superderivations need a Z2-grading");
  const std::size_t n = A.dim();
  std::vector<SparseRow> rows;
  homogeneity_rows(A, parity, rows);
  derivation_rows(A, delta, parity, rows, false);
  SolutionSpace s = make_space(A, SolutionKind::DeltaSuperDer, delta, parity);
  s.basis = to_maps(A.field(), n, n, nullspace(A.field(), n * n, rows));
  return s;
}

SolutionSpace solve_module_valued(const ModuleAction& M, const FieldElement& delta) {
  const Algebra& A = M.algebra();
  if (!validate_module(M).ok()) throw MathError("InvalidAction", "the action does not respect the bracket");
  const std::size_t n = A.dim(), m = M.mdim();
  std::vector<SparseRow> rows;
  EquationBlock eq(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // D(e_i e_j) - δ e_i•D(e_j) + δ e_j•D(e_i)
      for (const auto& [k, c] : A.product(i, j))
        for (std::size_t l = 0; l < m; ++l) eq.add(l, k * m + l, c);
      for (std::size_t k = 0; k < m; ++k) {
        for (const auto& [l, c] : M.act(i, k)) eq.add(l, j * m + k, -delta * c);
        for (const auto& [l, c] : M.act(j, k)) eq.add(l, i * m + k, delta * c);
      }
      eq.emit(rows, false);
    }
  SolutionSpace s = make_space(A, SolutionKind::ModuleValued, delta, 0);
  s.basis = to_maps(A.field(), n, m, nullspace(A.field(), n * m, rows));
  return s;
}

namespace {

SolutionSpace centroid_impl(const Algebra& A, int parity, bool super) {
  const std::size_t n = A.dim();
  std::vector<SparseRow> rows;
  if (super) homogeneity_rows(A, parity, rows);
  EquationBlock eq(n);
  const FieldElement mone = -A.field().one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // χ(e_i e_j) - χ(e_i) e_j
      for (const auto& [k, c] : A.product(i, j))
        for (std::size_t l = 0; l < n; ++l) eq.add(l, k * n + l, c);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [l, c] : A.product(k, j)) eq.add(l, i * n + k, -c);
      eq.emit(rows, false);
      // χ(e_i e_j) - s e_i χ(e_j)
      const FieldElement s = super ? sign_of(A.field(), parity * A.parity(i)) : A.field().one();
      for (const auto& [k, c] : A.product(i, j))
        for (std::size_t l = 0; l < n; ++l) eq.add(l, k * n + l, c);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& [l, c] : A.product(i, k)) eq.add(l, j * n + k, mone * s * c);
      eq.emit(rows, false);
    }
  SolutionSpace s = make_space(A, super ? SolutionKind::SuperCentroid : SolutionKind::Centroid, A.field().one(), parity);
  s.basis = to_maps(A.field(), n, n, nullspace(A.field(), n * n, rows));
  return s;
}

}  // namespace

SolutionSpace solve_centroid(const Algebra& A) { return centroid_impl(A, 0, false); }

SolutionSpace solve_supercentroid(const Algebra& A, int parity) {
  check_parity(parity);
  if (!A.has_grading()) throw MathError("GradingMissing", "the supercentroid needs a Z2-grading");
  return centroid_impl(A, parity, true);
}

SolutionSpace solve_quasiderivations(const Algebra& A) {
  const std::size_t n = A.dim(), nn = n * n;
  std::vector<SparseRow> rows;
  EquationBlock eq(n);
  for (auto [i, j] : equation_pairs(A)) {
    // F(e_i e_j) - D(e_i) e_j - e_i D(e_j)
    for (const auto& [k, c] : A.product(i, j))
      for (std::size_t l = 0; l < n; ++l) eq.add(l, nn + k * n + l, c);
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [l, c] : A.product(k, j)) eq.add(l, i * n + k, -c);
      for (const auto& [l, c] : A.product(i, k)) eq.add(l, j * n + k, -c);
    }
    eq.emit(rows, false);
  }
  SolutionSpace s = make_space(A, SolutionKind::QuasiDer, A.field().one(), 0);
  for (const auto& v : nullspace(A.field(), 2 * nn, rows)) {
    s.basis.push_back(LinearMap::from_flat(A.field(), n, n, Vector(v.begin(), v.begin() + static_cast<long>(nn))));
    s.partners.push_back(LinearMap::from_flat(A.field(), n, n, Vector(v.begin() + static_cast<long>(nn), v.end())));
  }
  return s;
}

std::size_t quasiderivation_projection_dim(const SolutionSpace& q) { return q.span().dim(); }

// ---------------------------------------------------------------------------
// Direct checks

namespace {

// a e_j for a coordinate vector a
Vector left_times_basis(const Algebra& A, const Vector& a, std::size_t j) {
  Vector r(A.dim(), A.field().zero());
  for (std::size_t k = 0; k < A.dim(); ++k) {
    if (a[k].is_zero()) continue;
    for (const auto& [l, c] : A.product(k, j)) r[l] += a[k] * c;
  }
  return r;
}

Vector basis_times_right(const Algebra& A, std::size_t i, const Vector& b) {
  Vector r(A.dim(), A.field().zero());
  for (std::size_t k = 0; k < A.dim(); ++k) {
    if (b[k].is_zero()) continue;
    for (const auto& [l, c] : A.product(i, k)) r[l] += b[k] * c;
  }
  return r;
}

bool square_map(const Algebra& A, const LinearMap& D) { return D.domain_dim() == A.dim() && D.codomain_dim() == A.dim(); }

}  // namespace

bool is_homogeneous(const Algebra& A, const LinearMap& D, int parity) {
  for (std::size_t i = 0; i < D.domain_dim(); ++i)
    for (std::size_t j = 0; j < D.codomain_dim(); ++j)
      if (!D(i, j).is_zero() && (A.parity(i) + parity) % 2 != A.parity(j)) return false;
  return true;
}

bool is_delta_superderivation(const Algebra& A, const LinearMap& D, const FieldElement& delta, int parity) {
  if (!square_map(A, D)) return false;
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = D.apply(A.multiply_basis(i, j));
      Vector r1 = left_times_basis(A, D.image(i), j);
      Vector r2 = basis_times_right(A, i, D.image(j));
      FieldElement s = delta * sign_of(A.field(), parity * A.parity(i));
      for (std::size_t l = 0; l < n; ++l) lhs[l] -= delta * r1[l] + s * r2[l];
      if (!is_zero(lhs)) return false;
    }
  return true;
}

bool is_delta_derivation(const Algebra& A, const LinearMap& D, const FieldElement& delta) {
  return is_delta_superderivation(A, D, delta, 0);
}

bool is_supercentroid_element(const Algebra& A, const LinearMap& chi, int parity) {
  if (!square_map(A, chi)) return false;
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = chi.apply(A.multiply_basis(i, j));
      if (lhs != left_times_basis(A, chi.image(i), j)) return false;
      Vector r = basis_times_right(A, i, chi.image(j));
      if (parity * A.parity(i) % 2) r = scale(-A.field().one(), r);
      if (lhs != r) return false;
    }
  return true;
}

bool is_centroid_element(const Algebra& A, const LinearMap& chi) { return is_supercentroid_element(A, chi, 0); }

bool is_quasiderivation(const Algebra& A, const LinearMap& D, const LinearMap& F) {
  if (!square_map(A, D) || !square_map(A, F)) return false;
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = F.apply(A.multiply_basis(i, j));
      if (lhs != add(left_times_basis(A, D.image(i), j), basis_times_right(A, i, D.image(j)))) return false;
    }
  return true;
}

std::vector<LinearMap> inner_derivations(const Algebra& A) {
  std::vector<LinearMap> out;
  for (std::size_t i = 0; i < A.dim(); ++i) out.push_back(A.left_multiplication(i));
  return out;
}

// ---------------------------------------------------------------------------
// Grassmann lifts

LinearMap lift_grassmann(const Algebra& L, const LinearMap& D, int parity, unsigned g, unsigned m) {
  check_parity(parity);
  if (std::popcount(g) % 2 != parity) throw MathError("ParityMismatch", "the monomial's parity differs from the map's");
  if (g >= (1u << m)) throw InputError("monomial uses more generators than the envelope has");
  if (!is_homogeneous(L, D, parity)) throw MathError("ParityMismatch", "the map is not homogeneous of the given parity");
  EnvelopeBasis eb = envelope_basis(L, m);
  const std::size_t N = eb.elements.size();
  LinearMap out(L.field(), N, N);
  for (std::size_t I = 0; I < N; ++I) {
    auto [i, h] = eb.elements[I];
    auto [sign, gh] = grassmann_product(g, h);
    if (sign == 0) continue;
    for (std::size_t j = 0; j < L.dim(); ++j) {
      if (D(i, j).is_zero()) continue;
      std::size_t J = eb.index_of(j, gh);
      out(I, J) += sign > 0 ? D(i, j) : -D(i, j);
    }
  }
  return out;
}

LinearMap lift_grassmann_module(const Algebra& L, const LinearMap& D, unsigned m) {
  EnvelopeBasis eb = envelope_basis(L, m);
  const std::size_t N = eb.elements.size(), G = std::size_t{1} << m;
  LinearMap out(L.field(), N, L.dim() * G);
  for (std::size_t I = 0; I < N; ++I) {
    auto [i, h] = eb.elements[I];
    for (std::size_t j = 0; j < L.dim(); ++j)
      if (!D(i, j).is_zero()) out(I, j * G + h) = D(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exponentials

LinearMap exp_nilpotent(const LinearMap& X, unsigned* index_out) {
  const Field& f = X.field();
  const std::size_t n = X.domain_dim();
  std::vector<LinearMap> powers{LinearMap::identity(f, n)};
  while (!powers.back().is_zero()) {
    if (powers.size() > n) throw MathError("NotNilpotent", "the map is not nilpotent");
    powers.push_back(compose(X, powers.back()));
  }
  const unsigned index = static_cast<unsigned>(powers.size() - 1);
  if (index_out) *index_out = index;
  const std::uint64_t p = f.characteristic();
  if (p != 0 && index >= p)
    throw MathError("NilpotencyTooDeep", "nilpotency index " + std::to_string(index) + " is not below the characteristic " +
                                             std::to_string(p));
  LinearMap r = LinearMap::zero(f, n, n);
  FieldElement fact = f.one();
  for (unsigned k = 0; k < index; ++k) {
    if (k > 0) fact *= f.from_int(k);
    r = r + powers[k] * fact.inverse();
  }
  return r;
}

QuasiAutomorphism exp_quasiautomorphism(const Algebra& A, const LinearMap& D, const FieldElement& delta,
                                        const std::optional<LinearMap>& F) {
  QuasiAutomorphism q;
  unsigned idx = 0;
  if (F) {
    unsigned idx_f = 0;
    q.phi = exp_nilpotent(D, &idx);
    q.psi = exp_nilpotent(*F, &idx_f);
    idx = std::max(idx, idx_f);
  } else {
    q.psi = exp_nilpotent(D, &idx);
    q.phi = exp_nilpotent(D * delta);
  }
  q.nilpotency_index = idx;
  q.verified = true;
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n && q.verified; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (q.psi.apply(A.multiply_basis(i, j)) != A.multiply(q.phi.image(i), q.phi.image(j))) {
        q.verified = false;
        break;
      }
  return q;
}

}  // namespace deltader
