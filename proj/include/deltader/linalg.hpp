#pragma once

// Dense exact linear algebra over a Field: matrices, linear maps, subspaces
// and row reduction. Large systems are fed as sparse rows and reduced with
// a kernel specialised to the scalar kind (machine words for GF(p), GMP
// rationals for Q, generic elements otherwise).

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "deltader/field.hpp"

namespace deltader {

using SparseRow = std::vector<std::pair<std::size_t, FieldElement>>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const FieldElement& c, const Vector& v);
/// v += c * w
void axpy(Vector& v, const FieldElement& c, const Vector& w);

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  void set_row(std::size_t i, const Vector& v);
  const std::vector<FieldElement>& data() const { return data_; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix operator-(const Matrix& b) const;
  Matrix operator*(const FieldElement& c) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Matrix& b) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

/// Linear map between coordinate spaces in fixed bases.
/// Row i of the coefficient matrix is the image of the i-th basis vector:
/// D(e_i) = sum_j d_ij e_j.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Field f, std::size_t domain, std::size_t codomain);
  explicit LinearMap(Matrix m) : m_(std::move(m)) {}
  static LinearMap identity(const Field& f, std::size_t n);
  static LinearMap zero(const Field& f, std::size_t domain, std::size_t codomain);
  /// Inverse of flatten(): row-major d_11, d_12, ..., d_1m, d_21, ...
  static LinearMap from_flat(const Field& f, std::size_t domain, std::size_t codomain, const Vector& flat);

  const Field& field() const { return m_.field(); }
  std::size_t domain_dim() const { return m_.rows(); }
  std::size_t codomain_dim() const { return m_.cols(); }

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  FieldElement& operator()(std::size_t i, std::size_t j) { return m_(i, j); }

  Vector image(std::size_t i) const { return m_.row(i); }
  Vector apply(const Vector& x) const;

  LinearMap operator+(const LinearMap& b) const { return LinearMap(m_ + b.m_); }
  LinearMap operator-(const LinearMap& b) const { return LinearMap(m_ - b.m_); }
  LinearMap operator*(const FieldElement& c) const { return LinearMap(m_ * c); }

  /// this^k for endomorphisms.
  LinearMap power(unsigned k) const;

  bool is_zero() const { return m_.is_zero(); }
  bool operator==(const LinearMap& b) const { return m_ == b.m_; }
  bool operator!=(const LinearMap& b) const { return !(m_ == b.m_); }

  Vector flatten() const { return m_.data(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

/// outer ∘ inner
LinearMap compose(const LinearMap& outer, const LinearMap& inner);
/// [a, b] = a∘b - b∘a
LinearMap commutator(const LinearMap& a, const LinearMap& b);

/// Reduced row echelon form: rows sorted by pivot column, each pivot entry 1
/// and the only nonzero in its column.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<Vector> rows;
};

/// Incremental row reduction. Rows are reduced on insertion, so the span's
/// dimension is available at every step.
class SpanBuilder {
 public:
  SpanBuilder(const Field& f, std::size_t cols);
  ~SpanBuilder();
  SpanBuilder(SpanBuilder&&) noexcept;
  SpanBuilder& operator=(SpanBuilder&&) noexcept;

  /// Returns true if the row enlarged the span.
  bool insert(const Vector& row);
  bool insert(const SparseRow& row);
  std::size_t dim() const;
  bool full() const { return dim() == cols_; }
  Echelon finish() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  Field field_;
  std::size_t cols_;
};

Echelon row_reduce(const Field& f, std::size_t cols, const std::vector<SparseRow>& rows);
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Canonical nullspace basis of the system rows * x = 0: the reduced row
/// echelon form of any basis, so it depends only on the solution space.
std::vector<Vector> nullspace(const Field& f, std::size_t cols, const std::vector<SparseRow>& rows);
std::vector<Vector> nullspace(const Matrix& m);

/// A subspace of K^n held by its reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace whole(const Field& f, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates with respect to basis(), if v lies in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  bool contains(const Vector& v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of a linear map as a subspace of its domain.
Subspace kernel(const LinearMap& m);
/// Image of a linear map as a subspace of its codomain.
Subspace image(const LinearMap& m);

}  // namespace deltader
