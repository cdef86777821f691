#include "deltader/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

namespace deltader {

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v(n, f.zero());
  v[i] = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const FieldElement& c, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= c;
  return r;
}

void axpy(Vector& v, const FieldElement& c, const Vector& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!w[i].is_zero()) v[i] += c * w[i];
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = v[j];
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const FieldElement& x = b(k, j);
        if (!x.is_zero()) r(i, j) += a * x;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

Matrix Matrix::operator*(const FieldElement& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const { return deltader::is_zero(data_); }

bool Matrix::operator==(const Matrix& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_; }

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(Field f, std::size_t domain, std::size_t codomain) : m_(std::move(f), domain, codomain) {}

LinearMap LinearMap::identity(const Field& f, std::size_t n) { return LinearMap(Matrix::identity(f, n)); }

LinearMap LinearMap::zero(const Field& f, std::size_t domain, std::size_t codomain) {
  return LinearMap(f, domain, codomain);
}

LinearMap LinearMap::from_flat(const Field& f, std::size_t domain, std::size_t codomain, const Vector& flat) {
  if (flat.size() != domain * codomain) throw std::invalid_argument("flat map has wrong length");
  LinearMap m(f, domain, codomain);
  for (std::size_t i = 0; i < domain; ++i)
    for (std::size_t j = 0; j < codomain; ++j) m(i, j) = flat[i * codomain + j];
  return m;
}

Vector LinearMap::apply(const Vector& x) const {
  Vector r(codomain_dim(), field().zero());
  for (std::size_t i = 0; i < domain_dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < codomain_dim(); ++j) {
      const FieldElement& d = m_(i, j);
      if (!d.is_zero()) r[j] += x[i] * d;
    }
  }
  return r;
}

LinearMap LinearMap::power(unsigned k) const {
  LinearMap r = identity(field(), domain_dim());
  for (unsigned i = 0; i < k; ++i) r = compose(*this, r);
  return r;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  // rows are images, so (outer ∘ inner) has matrix inner * outer
  return LinearMap(inner.matrix() * outer.matrix());
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) { return compose(a, b) - compose(b, a); }

// ---------------------------------------------------------------------------
// Row reduction kernels
//
// Every stored row is in reduced form: its support is its pivot column plus
// columns that are not yet pivots. Row operations therefore only touch the
// current free columns, which shrink as the rank grows.

namespace {

using Index = std::vector<std::size_t>;

struct PrimeOps {
  using T = std::uint64_t;
  std::uint64_t p;
  bool is_zero(T a) const { return a == 0; }
  T inv(T a) const {
    __int128 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      __int128 q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return static_cast<T>(t < 0 ? t + p : t);
  }
  T mul(T a, T b) const { return static_cast<T>(static_cast<unsigned __int128>(a) * b % p); }
  T lift(const FieldElement& e) const { return e.residue(); }
  FieldElement lower(const Field& f, T a) const { return FieldElement::from_residue(f, a); }
  T zero() const { return 0; }
  // row -= c * other on the listed columns
  void submul(std::vector<T>& row, T c, const std::vector<T>& other, const Index& cols) const {
    const T nc = p - c;
    if (p < (1ull << 31)) {
      for (std::size_t j : cols)
        if (other[j]) row[j] = (row[j] + nc * other[j]) % p;
    } else {
      for (std::size_t j : cols)
        if (other[j]) row[j] = (row[j] + mul(nc, other[j])) % p;
    }
  }
  void scale(std::vector<T>& row, T c, const Index& cols) const {
    for (std::size_t j : cols)
      if (row[j]) row[j] = mul(row[j], c);
  }
};

struct RationalOps {
  using T = mpq_class;
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T inv(const T& a) const { return 1 / a; }
  T lift(const FieldElement& e) const { return e.rational(); }
  FieldElement lower(const Field& f, const T& a) const { return FieldElement::from_rational(f, a); }
  T zero() const { return 0; }
  void submul(std::vector<T>& row, const T& c, const std::vector<T>& other, const Index& cols) const {
    T tmp;
    for (std::size_t j : cols) {
      if (sgn(other[j]) == 0) continue;
      tmp = c * other[j];
      row[j] -= tmp;
    }
  }
  void scale(std::vector<T>& row, const T& c, const Index& cols) const {
    for (std::size_t j : cols)
      if (sgn(row[j]) != 0) row[j] *= c;
  }
};

struct GenericOps {
  using T = FieldElement;
  Field f;
  bool is_zero(const T& a) const { return a.is_zero(); }
  T inv(const T& a) const { return a.inverse(); }
  T lift(const FieldElement& e) const { return e; }
  FieldElement lower(const Field&, const T& a) const { return a; }
  T zero() const { return f.zero(); }
  void submul(std::vector<T>& row, const T& c, const std::vector<T>& other, const Index& cols) const {
    for (std::size_t j : cols)
      if (!other[j].is_zero()) row[j] -= c * other[j];
  }
  void scale(std::vector<T>& row, const T& c, const Index& cols) const {
    for (std::size_t j : cols)
      if (!row[j].is_zero()) row[j] *= c;
  }
};

template <class Ops>
class IncrementalRref {
 public:
  using T = typename Ops::T;

  IncrementalRref(Ops ops, std::size_t cols) : ops_(std::move(ops)), cols_(cols), pivot_of_col_(cols, -1) {
    for (std::size_t j = 0; j < cols; ++j) free_.push_back(j);
  }

  std::size_t dim() const { return rows_.size(); }

  bool insert_dense(std::vector<T> r) {
    if (free_.empty()) return false;
    for (std::size_t c = 0; c < cols_; ++c) {
      long k = pivot_of_col_[c];
      if (k < 0 || ops_.is_zero(r[c])) continue;
      T f = r[c];
      ops_.submul(r, f, rows_[static_cast<std::size_t>(k)], free_);
      r[c] = ops_.zero();
    }
    auto it = std::find_if(free_.begin(), free_.end(), [&](std::size_t j) { return !ops_.is_zero(r[j]); });
    if (it == free_.end()) return false;
    const std::size_t c0 = *it;
    ops_.scale(r, ops_.inv(r[c0]), free_);
    free_.erase(it);
    for (auto& other : rows_) {
      if (ops_.is_zero(other[c0])) continue;
      T f = other[c0];
      ops_.submul(other, f, r, free_);
      other[c0] = ops_.zero();
    }
    pivot_of_col_[c0] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(r));
    pivots_.push_back(c0);
    return true;
  }

  bool insert(const Vector& v) {
    std::vector<T> r(cols_, ops_.zero());
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) r[j] = ops_.lift(v[j]);
    return insert_dense(std::move(r));
  }

  bool insert(const SparseRow& s) {
    if (s.empty()) return false;
    std::vector<T> r(cols_, ops_.zero());
    for (const auto& [j, x] : s) r[j] = ops_.lift(x);
    return insert_dense(std::move(r));
  }

  Echelon finish(const Field& f) const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    Echelon e;
    e.cols = cols_;
    for (std::size_t k : order) {
      e.pivots.push_back(pivots_[k]);
      Vector v(cols_, f.zero());
      for (std::size_t j = 0; j < cols_; ++j)
        if (!ops_.is_zero(rows_[k][j])) v[j] = ops_.lower(f, rows_[k][j]);
      e.rows.push_back(std::move(v));
    }
    return e;
  }

 private:
  Ops ops_;
  std::size_t cols_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> pivot_of_col_;
  Index free_;
};

}  // namespace

struct SpanBuilder::Impl {
  std::variant<IncrementalRref<PrimeOps>, IncrementalRref<RationalOps>, IncrementalRref<GenericOps>> kernel;
};

SpanBuilder::SpanBuilder(const Field& f, std::size_t cols) : field_(f), cols_(cols) {
  switch (f.kind()) {
    case FieldKind::PrimeField:
      impl_.reset(new Impl{IncrementalRref<PrimeOps>(PrimeOps{f.characteristic()}, cols)});
      break;
    case FieldKind::Rationals:
      impl_.reset(new Impl{IncrementalRref<RationalOps>(RationalOps{}, cols)});
      break;
    case FieldKind::QuotientRing:
      impl_.reset(new Impl{IncrementalRref<GenericOps>(GenericOps{f}, cols)});
      break;
  }
}

SpanBuilder::~SpanBuilder() = default;
SpanBuilder::SpanBuilder(SpanBuilder&&) noexcept = default;
SpanBuilder& SpanBuilder::operator=(SpanBuilder&&) noexcept = default;

bool SpanBuilder::insert(const Vector& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match the span width");
  return std::visit([&](auto& k) { return k.insert(row); }, impl_->kernel);
}

bool SpanBuilder::insert(const SparseRow& row) {
  return std::visit([&](auto& k) { return k.insert(row); }, impl_->kernel);
}

std::size_t SpanBuilder::dim() const {
  return std::visit([](const auto& k) { return k.dim(); }, impl_->kernel);
}

Echelon SpanBuilder::finish() const {
  return std::visit([&](const auto& k) { return k.finish(field_); }, impl_->kernel);
}

Echelon row_reduce(const Field& f, std::size_t cols, const std::vector<SparseRow>& rows) {
  SpanBuilder b(f, cols);
  for (const auto& r : rows) {
    b.insert(r);
    if (b.full()) break;
  }
  return b.finish();
}

Echelon row_reduce(const Matrix& m) {
  SpanBuilder b(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    b.insert(m.row(i));
    if (b.full()) break;
  }
  return b.finish();
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

namespace {

std::vector<Vector> nullspace_from_echelon(const Field& f, const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> raw;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(e.cols, f.zero());
    v[free] = f.one();
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    raw.push_back(std::move(v));
  }
  if (raw.empty()) return raw;
  SpanBuilder b(f, e.cols);
  for (const auto& v : raw) b.insert(v);
  return b.finish().rows;
}

}  // namespace

std::vector<Vector> nullspace(const Field& f, std::size_t cols, const std::vector<SparseRow>& rows) {
  return nullspace_from_echelon(f, row_reduce(f, cols, rows));
}

std::vector<Vector> nullspace(const Matrix& m) { return nullspace_from_echelon(m.field(), row_reduce(m)); }

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient) {}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors) {
  SpanBuilder b(f, ambient);
  for (const auto& v : vectors) {
    b.insert(v);
    if (b.full()) break;
  }
  Echelon e = b.finish();
  Subspace s(f, ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(f, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match subspace ambient dimension");
  Vector coords(basis_.size(), field_.zero());
  Vector rest = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    coords[k] = rest[pivots_[k]];
    if (!coords[k].is_zero()) axpy(rest, -coords[k], basis_[k]);
  }
  if (!deltader::is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Solve sum a_i u_i - sum b_j w_j = 0 and map the a-part back.
  const std::size_t du = dim(), dw = other.dim();
  if (du == 0 || dw == 0) return Subspace(field_, ambient_);
  Matrix m(field_, ambient_, du + dw);
  for (std::size_t k = 0; k < ambient_; ++k) {
    for (std::size_t i = 0; i < du; ++i) m(k, i) = basis_[i][k];
    for (std::size_t j = 0; j < dw; ++j) m(k, du + j) = -other.basis_[j][k];
  }
  std::vector<Vector> out;
  for (const auto& sol : nullspace(m)) {
    Vector v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < du; ++i) axpy(v, sol[i], basis_[i]);
    out.push_back(std::move(v));
  }
  return span(field_, ambient_, out);
}

Subspace kernel(const LinearMap& m) {
  // x * M = 0  <=>  M^T x^T = 0
  return Subspace::span(m.field(), m.domain_dim(), nullspace(m.matrix().transpose()));
}

Subspace image(const LinearMap& m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.domain_dim(); ++i) rows.push_back(m.image(i));
  return Subspace::span(m.field(), m.codomain_dim(), rows);
}

}  // namespace deltader
