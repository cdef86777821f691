#include "deltader/algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "deltader/errors.hpp"

namespace deltader {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Lie:
      return "lie";
    case Flavor::Assoc:
      return "assoc";
    case Flavor::SuperLie:
      return "superlie";
  }
  return "?";
}

std::string to_string(Law l) {
  switch (l) {
    case Law::Jacobi:
      return "jacobi";
    case Law::SuperJacobi:
      return "superjacobi";
    case Law::Assoc:
      return "assoc";
    case Law::None:
      return "none";
  }
  return "?";
}

struct Algebra::Data {
  Field field;
  std::size_t dim = 0;
  Flavor flavor = Flavor::Lie;
  std::vector<std::string> names;
  std::optional<std::vector<int>> grading;
  std::optional<Matrix> form;
  std::vector<SparseVec> table;  // n*n, every ordered pair
};

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("e" + std::to_string(i + 1));
  return v;
}

void check_index(std::size_t i, std::size_t n) {
  if (i >= n) throw InputError("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraBuilder

AlgebraBuilder::AlgebraBuilder(Field f, std::size_t dim, Flavor flavor)
    : field_(std::move(f)), dim_(dim), flavor_(flavor), names_(default_names(dim)) {
  if (dim == 0) throw InputError("algebra dimension must be at least 1");
  table_.assign(dim * dim, {});
  touched_.assign(dim * dim, false);
}

AlgebraBuilder& AlgebraBuilder::names(std::vector<std::string> names) {
  if (names.size() != dim_) throw InputError("expected " + std::to_string(dim_) + " basis names");
  names_ = std::move(names);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::grading(std::vector<int> parities) {
  if (parities.size() != dim_) throw InputError("grading length must equal the dimension");
  for (int p : parities)
    if (p != 0 && p != 1) throw InputError("grading entries must be 0 or 1");
  grading_ = std::move(parities);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::form(Matrix m) {
  if (m.rows() != dim_ || m.cols() != dim_) throw InputError("form must be a dim x dim matrix");
  if (m.field() != field_) throw InputError("form entries must lie in the algebra's field");
  form_ = std::move(m);
  return *this;
}

AlgebraBuilder& AlgebraBuilder::add(std::size_t i, std::size_t j, std::size_t k, long long c) {
  return add(i, j, k, field_.from_int(c));
}

AlgebraBuilder& AlgebraBuilder::add(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c) {
  check_index(i, dim_);
  check_index(j, dim_);
  check_index(k, dim_);
  if (c.field() != field_) throw InputError("structure constant lies in a different field");
  if (c.is_zero()) return *this;
  FieldElement v = c;
  switch (flavor_) {
    case Flavor::Lie:
      if (i == j) throw InputError("e_i e_i must vanish in an anticommutative algebra");
      if (i > j) {
        std::swap(i, j);
        v = -v;
      }
      break;
    case Flavor::Assoc:
      if (i > j) std::swap(i, j);
      break;
    case Flavor::SuperLie: {
      if (!grading_) throw InputError("a superalgebra needs its grading before products are added");
      const int pi = (*grading_)[i], pj = (*grading_)[j];
      if (i == j && pi == 0) throw InputError("the square of an even element must vanish in a Lie superalgebra");
      if (i > j) {
        std::swap(i, j);
        v = (pi && pj) ? v : -v;
      }
      break;
    }
  }
  auto& row = table_[i * dim_ + j];
  if (row.empty()) row.assign(dim_, field_.zero());
  row[k] += v;
  touched_[i * dim_ + j] = true;
  return *this;
}

Algebra AlgebraBuilder::build() const {
  auto d = std::make_shared<Algebra::Data>();
  d->field = field_;
  d->dim = dim_;
  d->flavor = flavor_;
  d->names = names_;
  d->grading = grading_;
  d->form = form_;
  d->table.assign(dim_ * dim_, {});
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      if (!touched_[i * dim_ + j]) continue;
      const auto& row = table_[i * dim_ + j];
      SparseVec fwd, back;
      FieldElement sign = field_.one();
      if (flavor_ == Flavor::Lie) sign = -sign;
      if (flavor_ == Flavor::SuperLie && !((*grading_)[i] && (*grading_)[j])) sign = -sign;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (row[k].is_zero()) continue;
        fwd.emplace_back(k, row[k]);
        back.emplace_back(k, sign * row[k]);
      }
      d->table[i * dim_ + j] = fwd;
      if (i != j) d->table[j * dim_ + i] = back;
    }
  return Algebra(std::move(d));
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra() : Algebra(AlgebraBuilder(Field(), 1, Flavor::Lie).build()) {}

const Field& Algebra::field() const { return d_->field; }
std::size_t Algebra::dim() const { return d_->dim; }
Flavor Algebra::flavor() const { return d_->flavor; }
const std::vector<std::string>& Algebra::names() const { return d_->names; }
bool Algebra::has_grading() const { return d_->grading.has_value(); }

const std::vector<int>& Algebra::grading() const {
  if (!d_->grading) throw MathError("GradingMissing", "the algebra has no Z2-grading");
  return *d_->grading;
}

int Algebra::parity(std::size_t i) const { return d_->grading ? (*d_->grading)[i] : 0; }

bool Algebra::has_form() const { return d_->form.has_value(); }

const Matrix& Algebra::form() const {
  if (!d_->form) throw MathError("FormMissing", "the algebra has no bilinear form");
  return *d_->form;
}

const SparseVec& Algebra::product(std::size_t i, std::size_t j) const { return d_->table[i * d_->dim + j]; }

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  Vector r(n, field().zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& p = product(i, j);
      if (p.empty()) continue;
      FieldElement c = x[i] * y[j];
      for (const auto& [k, v] : p) r[k] += c * v;
    }
  }
  return r;
}

Vector Algebra::multiply_basis(std::size_t i, std::size_t j) const { return densify(field(), dim(), product(i, j)); }

std::vector<std::pair<std::size_t, std::size_t>> Algebra::stored_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = (flavor() == Flavor::Lie ? i + 1 : i); j < n; ++j)
      if (!product(i, j).empty()) out.emplace_back(i, j);
  return out;
}

Algebra Algebra::with_grading(std::vector<int> parities) const {
  AlgebraBuilder b(field(), dim(), flavor());
  b.names(names()).grading(std::move(parities));
  if (has_form()) b.form(form());
  for (auto [i, j] : stored_pairs())
    for (const auto& [k, c] : product(i, j)) b.add(i, j, k, c);
  return b.build();
}

Algebra Algebra::with_form(Matrix m) const {
  auto d = std::make_shared<Data>(*d_);
  if (m.rows() != dim() || m.cols() != dim()) throw InputError("form must be a dim x dim matrix");
  d->form = std::move(m);
  return Algebra(std::move(d));
}

Algebra Algebra::without_form() const {
  auto d = std::make_shared<Data>(*d_);
  d->form.reset();
  return Algebra(std::move(d));
}

Algebra Algebra::perturbed(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c) const {
  AlgebraBuilder b(field(), dim(), flavor());
  b.names(names());
  if (has_grading()) b.grading(grading());
  if (has_form()) b.form(form());
  for (auto [a, bb] : stored_pairs())
    for (const auto& [kk, v] : product(a, bb)) b.add(a, bb, kk, v);
  b.add(i, j, k, c);
  return b.build();
}

LinearMap Algebra::left_multiplication(std::size_t i) const {
  LinearMap m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j)
    for (const auto& [k, c] : product(i, j)) m(j, k) = c;
  return m;
}

LinearMap Algebra::left_multiplication(const Vector& x) const {
  LinearMap m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : product(i, j)) m(j, k) += x[i] * c;
  }
  return m;
}

bool Algebra::operator==(const Algebra& o) const {
  if (d_ == o.d_) return true;
  return field() == o.field() && dim() == o.dim() && flavor() == o.flavor() && names() == o.names() &&
         d_->grading == o.d_->grading && d_->form == o.d_->form && d_->table == o.d_->table;
}

// ---------------------------------------------------------------------------
// ModuleAction

ModuleAction::ModuleAction(Algebra alg, std::size_t mdim) : alg_(std::move(alg)), mdim_(mdim) {
  if (mdim == 0) throw InputError("module dimension must be at least 1");
  table_.assign(alg_.dim() * mdim_, {});
}

ModuleAction ModuleAction::adjoint(const Algebra& alg) {
  ModuleAction m(alg, alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) m.table_[i * m.mdim_ + j] = alg.product(i, j);
  return m;
}

ModuleAction ModuleAction::trivial(const Algebra& alg, std::size_t mdim) { return ModuleAction(alg, mdim); }

ModuleAction& ModuleAction::add(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c) {
  check_index(i, alg_.dim());
  check_index(j, mdim_);
  check_index(k, mdim_);
  if (c.is_zero()) return *this;
  auto& row = table_[i * mdim_ + j];
  for (auto it = row.begin(); it != row.end(); ++it)
    if (it->first == k) {
      it->second += c;
      if (it->second.is_zero()) row.erase(it);
      return *this;
    }
  row.emplace_back(k, c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return *this;
}

Vector ModuleAction::act(const Vector& x, const Vector& m) const {
  Vector r(mdim_, alg_.field().zero());
  for (std::size_t i = 0; i < alg_.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < mdim_; ++j) {
      if (m[j].is_zero()) continue;
      FieldElement c = x[i] * m[j];
      for (const auto& [k, v] : act(i, j)) r[k] += c * v;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Validation

Vector densify(const Field& f, std::size_t n, const SparseVec& v) {
  Vector r(n, f.zero());
  for (const auto& [k, c] : v) r[k] += c;
  return r;
}

namespace {

// (sum_k a_k e_k) e_j, accumulated into out with factor s
void acc_left(const Algebra& A, Vector& out, const FieldElement& s, const SparseVec& a, std::size_t j) {
  for (const auto& [k, c] : a) {
    FieldElement f = s * c;
    for (const auto& [l, v] : A.product(k, j)) out[l] += f * v;
  }
}

// e_i (sum_k b_k e_k)
void acc_right(const Algebra& A, Vector& out, const FieldElement& s, std::size_t i, const SparseVec& b) {
  for (const auto& [k, c] : b) {
    FieldElement f = s * c;
    for (const auto& [l, v] : A.product(i, k)) out[l] += f * v;
  }
}

void check_grading(const Algebra& A, ValidationReport& rep) {
  if (!A.has_grading()) return;
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j))
        if ((A.parity(i) + A.parity(j)) % 2 != A.parity(k)) {
          rep.violations.push_back({"grading", {i, j, k}, A.multiply_basis(i, j)});
          break;
        }
}

}  // namespace

Law default_law(const Algebra& alg) {
  switch (alg.flavor()) {
    case Flavor::Lie:
      return Law::Jacobi;
    case Flavor::Assoc:
      return Law::Assoc;
    case Flavor::SuperLie:
      return Law::SuperJacobi;
  }
  return Law::None;
}

ValidationReport validate(const Algebra& A, Law law) {
  ValidationReport rep;
  rep.law = law;
  const std::size_t n = A.dim();
  const Field& F = A.field();
  const FieldElement one = F.one(), mone = -F.one();
  if (law == Law::SuperJacobi && !A.has_grading())
    throw MathError("GradingMissing", "super-Jacobi needs a Z2-grading");
  check_grading(A, rep);
  switch (law) {
    case Law::None:
      break;
    case Law::Jacobi:
      // (xy)z + (yz)x + (zx)y
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = (A.flavor() == Flavor::Lie ? i + 1 : i); j < n; ++j)
          for (std::size_t k = (A.flavor() == Flavor::Lie ? j + 1 : j); k < n; ++k) {
            Vector d(n, F.zero());
            acc_left(A, d, one, A.product(i, j), k);
            acc_left(A, d, one, A.product(j, k), i);
            acc_left(A, d, one, A.product(k, i), j);
            if (!is_zero(d)) rep.violations.push_back({"jacobi", {i, j, k}, d});
          }
      break;
    case Law::SuperJacobi:
      // (-1)^{|x||z|} x(yz) + (-1)^{|y||x|} y(zx) + (-1)^{|z||y|} z(xy)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
          for (std::size_t k = j; k < n; ++k) {
            const int pi = A.parity(i), pj = A.parity(j), pk = A.parity(k);
            Vector d(n, F.zero());
            acc_right(A, d, (pi && pk) ? mone : one, i, A.product(j, k));
            acc_right(A, d, (pj && pi) ? mone : one, j, A.product(k, i));
            acc_right(A, d, (pk && pj) ? mone : one, k, A.product(i, j));
            if (!is_zero(d)) rep.violations.push_back({"superjacobi", {i, j, k}, d});
          }
      break;
    case Law::Assoc:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            Vector d(n, F.zero());
            acc_left(A, d, one, A.product(i, j), k);
            acc_right(A, d, mone, i, A.product(j, k));
            if (!is_zero(d)) rep.violations.push_back({"assoc", {i, j, k}, d});
          }
      break;
  }
  return rep;
}

ValidationReport validate_form(const Algebra& A) {
  const Matrix& B = A.form();
  ValidationReport rep;
  rep.law = Law::None;
  const std::size_t n = A.dim();
  const Field& F = A.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement expect = B(j, i);
      if (A.parity(i) && A.parity(j)) expect = -expect;
      if (B(i, j) != expect) rep.violations.push_back({"symmetry", {i, j}, {B(i, j) - expect}});
      if (A.parity(i) != A.parity(j) && !B(i, j).is_zero()) rep.violations.push_back({"parity", {i, j}, {B(i, j)}});
    }
  // B(e_i e_j, e_k) - B(e_i, e_j e_k)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        FieldElement d = F.zero();
        for (const auto& [l, c] : A.product(i, j)) d += c * B(l, k);
        for (const auto& [l, c] : A.product(j, k)) d -= c * B(i, l);
        if (!d.is_zero()) rep.violations.push_back({"invariance", {i, j, k}, {d}});
      }
  return rep;
}

ValidationReport validate_module(const ModuleAction& M) {
  const Algebra& A = M.algebra();
  ValidationReport rep;
  rep.law = Law::None;
  const std::size_t n = A.dim(), m = M.mdim();
  const Field& F = A.field();
  if (A.flavor() != Flavor::Lie) throw MathError("InvalidAction", "modules are supported over Lie algebras only");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector d(m, F.zero());
        for (const auto& [l, c] : A.product(i, j))
          for (const auto& [r, v] : M.act(l, k)) d[r] += c * v;
        for (const auto& [l, c] : M.act(j, k))
          for (const auto& [r, v] : M.act(i, l)) d[r] -= c * v;
        for (const auto& [l, c] : M.act(i, k))
          for (const auto& [r, v] : M.act(j, l)) d[r] += c * v;
        if (!is_zero(d)) rep.violations.push_back({"module", {i, j, k}, d});
      }
  return rep;
}

Subspace derived_subspace(const Algebra& A) {
  std::vector<Vector> vs;
  for (auto [i, j] : A.stored_pairs()) vs.push_back(A.multiply_basis(i, j));
  return Subspace::span(A.field(), A.dim(), vs);
}

Subspace center(const Algebra& A) {
  // unknown x: sum_i x_i C_ij^k = 0 for all j, k
  const std::size_t n = A.dim();
  std::vector<std::map<std::size_t, FieldElement>> eq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : A.product(i, j)) {
        auto [it, fresh] = eq[j * n + k].try_emplace(i, c);
        if (!fresh) it->second += c;
      }
  std::vector<SparseRow> rows;
  for (auto& e : eq) {
    if (e.empty()) continue;
    SparseRow r;
    for (auto& [i, c] : e)
      if (!c.is_zero()) r.emplace_back(i, c);
    rows.push_back(std::move(r));
  }
  return Subspace::span(A.field(), n, nullspace(A.field(), n, rows));
}

}  // namespace deltader
