#include <algorithm>
#include <map>

#include "deltader/errors.hpp"
#include "deltader/solver.hpp"

namespace deltader {

namespace {

// Row of A + tB, as (column, a, b).
struct PencilEntry {
  std::size_t col;
  FieldElement a, b;
};
using PencilRow = std::vector<PencilEntry>;

std::vector<PencilRow> pencil(const Algebra& A) {
  const Field& f = A.field();
  LinearSystem s0 = assemble_system(A, f.zero());
  LinearSystem s1 = assemble_system(A, f.one());
  std::vector<PencilRow> out;
  for (std::size_t r = 0; r < s0.rows.size(); ++r) {
    std::map<std::size_t, std::pair<FieldElement, FieldElement>> m;
    for (const auto& [c, v] : s0.rows[r]) m.insert_or_assign(c, std::make_pair(v, -v));
    for (const auto& [c, v] : s1.rows[r]) {
      auto it = m.try_emplace(c, f.zero(), f.zero()).first;
      it->second.second = v - it->second.first;
    }
    PencilRow row;
    for (auto& [c, ab] : m)
      if (!ab.first.is_zero() || !ab.second.is_zero()) row.push_back({c, ab.first, ab.second});
    if (!row.empty()) out.push_back(std::move(row));
  }
  return out;
}

std::size_t rank_at(const Field& f, std::size_t cols, const std::vector<PencilRow>& rows, const FieldElement& t) {
  SpanBuilder b(f, cols);
  for (const auto& row : rows) {
    SparseRow r;
    for (const auto& e : row) {
      FieldElement v = e.a + e.b * t;
      if (!v.is_zero()) r.emplace_back(e.col, v);
    }
    b.insert(r);
    if (b.full()) break;
  }
  return b.dim();
}

// det(A + tB) of a square polynomial matrix by Bareiss' fraction-free elimination.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> M, const Field& f) {
  const std::size_t r = M.size();
  if (r == 0) return Polynomial::constant(f.one());
  Polynomial prev = Polynomial::constant(f.one());
  bool negate = false;
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t p = k;
    while (p < r && M[p][k].is_zero()) ++p;
    if (p == r) return Polynomial(f);
    if (p != k) {
      std::swap(M[p], M[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < r; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]).divide_exact(prev);
      M[i][k] = Polynomial(f);
    }
    prev = M[k][k];
  }
  return negate ? -M[r - 1][r - 1] : M[r - 1][r - 1];
}

bool value_less(const FieldElement& x, const FieldElement& y) {
  if (x.field().kind() == FieldKind::Rationals) return x.rational() < y.rational();
  return x.residue() < y.residue();
}

}  // namespace

ParametricResult solve_parametric(const Algebra& A, std::optional<std::size_t> degree_bound) {
  const Field& base = A.field();
  if (base.kind() == FieldKind::QuotientRing) throw InputError("parametric solving needs Q or GF(p) as the base field");
  const std::size_t cols = A.dim() * A.dim();
  const std::size_t bound = degree_bound.value_or(cols);
  if (bound < cols) throw InputError("the degree bound must be at least the number of unknowns");
  const std::vector<PencilRow> rows = pencil(A);

  ParametricResult res;
  res.parameter_ring = adjoin_parameter(base, bound);
  const Field& E = res.parameter_ring;

  // Generic rank over E; remember which rows enlarged the span.
  SpanBuilder b(E, cols);
  std::vector<std::size_t> accepted;
  for (std::size_t r = 0; r < rows.size() && !b.full(); ++r) {
    SparseRow row;
    for (const auto& e : rows[r]) {
      FieldElement v = FieldElement::from_coefficients(E, {e.a, e.b});
      if (!v.is_zero()) row.emplace_back(e.col, v);
    }
    if (b.insert(row)) accepted.push_back(r);
  }
  const Echelon ech = b.finish();
  res.generic_rank = ech.pivots.size();
  res.generic_dim = cols - res.generic_rank;

  // A nonzero maximal minor: accepted rows against pivot columns.
  const std::size_t rk = res.generic_rank;
  std::vector<std::vector<Polynomial>> M(rk, std::vector<Polynomial>(rk, Polynomial(base)));
  std::map<std::size_t, std::size_t> col_pos;
  for (std::size_t k = 0; k < rk; ++k) col_pos[ech.pivots[k]] = k;
  for (std::size_t i = 0; i < rk; ++i)
    for (const auto& e : rows[accepted[i]]) {
      auto it = col_pos.find(e.col);
      if (it != col_pos.end()) M[i][it->second] = Polynomial(base, {e.a, e.b});
    }
  res.witness_minor = bareiss_determinant(std::move(M), base);
  if (res.witness_minor.is_zero()) throw std::logic_error("maximal minor vanished identically");

  std::vector<FieldElement> candidates = roots(res.witness_minor);
  for (const char* lit : {"-1", "0", "1/2", "1"}) candidates.push_back(base.parse(lit));
  std::sort(candidates.begin(), candidates.end(), value_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& d : candidates) {
    const std::size_t dim = cols - rank_at(base, cols, rows, d);
    if (dim > res.generic_dim) res.specials.emplace_back(d, dim);
  }
  return res;
}

}  // namespace deltader
