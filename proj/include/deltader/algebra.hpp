#pragma once

// Finite-dimensional algebras given by structure constants
// e_i e_j = sum_k C_ij^k e_k, modules over them, and identity checks.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltader/field.hpp"
#include "deltader/linalg.hpp"

namespace deltader {

/// Lie: anticommutative, e_i e_i = 0.
/// Assoc: commutative (associativity is checked by validate).
/// SuperLie: super-anticommutative w.r.t. the grading,
///   e_j e_i = -(-1)^{|i||j|} e_i e_j; squares of odd vectors may be nonzero.
enum class Flavor { Lie, Assoc, SuperLie };

enum class Law { Jacobi, SuperJacobi, Assoc, None };

std::string to_string(Flavor f);
std::string to_string(Law l);

using SparseVec = std::vector<std::pair<std::size_t, FieldElement>>;

class Algebra;

/// Accumulates structure constants. Any ordered pair may be set; the
/// opposite product is synthesised from the flavor.
class AlgebraBuilder {
 public:
  AlgebraBuilder(Field f, std::size_t dim, Flavor flavor);

  AlgebraBuilder& names(std::vector<std::string> names);
  /// Required before add() for SuperLie.
  AlgebraBuilder& grading(std::vector<int> parities);
  AlgebraBuilder& form(Matrix m);
  /// e_i e_j += c e_k
  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c);
  AlgebraBuilder& add(std::size_t i, std::size_t j, std::size_t k, long long c);

  Algebra build() const;

 private:
  Field field_;
  std::size_t dim_;
  Flavor flavor_;
  std::vector<std::string> names_;
  std::optional<std::vector<int>> grading_;
  std::optional<Matrix> form_;
  // canonical pair -> dense coefficient vector
  std::vector<std::vector<FieldElement>> table_;
  std::vector<bool> touched_;
};

/// Immutable, cheaply copyable.
class Algebra {
 public:
  Algebra();

  const Field& field() const;
  std::size_t dim() const;
  Flavor flavor() const;
  const std::vector<std::string>& names() const;
  bool has_grading() const;
  const std::vector<int>& grading() const;
  int parity(std::size_t i) const;
  bool has_form() const;
  const Matrix& form() const;

  bool anticommutative() const { return flavor() != Flavor::Assoc; }

  /// e_i e_j for any ordered pair.
  const SparseVec& product(std::size_t i, std::size_t j) const;
  /// Dense product of coordinate vectors.
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector multiply_basis(std::size_t i, std::size_t j) const;

  /// Canonical stored pairs: i < j for Lie, i <= j otherwise, nonzero only.
  std::vector<std::pair<std::size_t, std::size_t>> stored_pairs() const;

  Algebra with_grading(std::vector<int> parities) const;
  Algebra with_form(Matrix m) const;
  Algebra without_form() const;
  /// Copy with e_i e_j (and its synthesised opposite) shifted by c e_k.
  Algebra perturbed(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c) const;

  /// Left multiplication ad(e_i) as a linear map, x -> e_i x.
  LinearMap left_multiplication(std::size_t i) const;
  LinearMap left_multiplication(const Vector& x) const;

  bool operator==(const Algebra& other) const;

  struct Data;

 private:
  friend class AlgebraBuilder;
  explicit Algebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// Left module: x_i • m_j = sum_k A_ij^k m_k.
class ModuleAction {
 public:
  ModuleAction(Algebra alg, std::size_t mdim);
  static ModuleAction adjoint(const Algebra& alg);
  static ModuleAction trivial(const Algebra& alg, std::size_t mdim);

  ModuleAction& add(std::size_t i, std::size_t j, std::size_t k, const FieldElement& c);

  const Algebra& algebra() const { return alg_; }
  std::size_t mdim() const { return mdim_; }
  const SparseVec& act(std::size_t i, std::size_t j) const { return table_[i * mdim_ + j]; }
  Vector act(const Vector& x, const Vector& m) const;

 private:
  Algebra alg_;
  std::size_t mdim_;
  std::vector<SparseVec> table_;
};

struct Violation {
  std::string kind;
  std::vector<std::size_t> indices;
  Vector defect;
};

struct ValidationReport {
  Law law = Law::None;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the law plus structural conditions (grading compatibility).
/// SuperJacobi without a grading throws MathError("GradingMissing").
ValidationReport validate(const Algebra& alg, Law law);
/// The law an algebra of this flavor is expected to satisfy.
Law default_law(const Algebra& alg);

/// Invariance B(xy, z) = B(x, yz), plus supersymmetry and evenness when graded.
ValidationReport validate_form(const Algebra& alg);

/// [x,y]•m = x•(y•m) - y•(x•m) on basis triples.
ValidationReport validate_module(const ModuleAction& m);

/// Vector of a sparse combination.
Vector densify(const Field& f, std::size_t n, const SparseVec& v);

/// Commutant [L,L] as a subspace.
Subspace derived_subspace(const Algebra& alg);
/// Annihilator {x : xL = 0}.
Subspace center(const Algebra& alg);

}  // namespace deltader
