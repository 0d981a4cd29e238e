#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "modrep/field.hpp"

namespace modrep {

/// Coordinates of a vector in some fixed basis.
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a finite field. Column vectors are the
/// convention: a matrix of shape (m, n) maps F^n to F^m.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  /// Entries given as integers reduced into the prime field.
  static Matrix from_ints(FieldPtr field, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix column(FieldPtr field, const Vector& v);
  static Matrix row(FieldPtr field, const Vector& v);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Scalar> row_span(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Scalar> row_span(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector row_vector(std::size_t i) const;
  Vector col_vector(std::size_t j) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix transpose() const;
  Matrix scaled(Scalar s) const;
  Vector apply(const Vector& v) const;

  bool is_zero() const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(std::span<const Matrix> parts);
Matrix vstack(std::span<const Matrix> parts);
/// Block-diagonal matrix from square or rectangular blocks.
Matrix block_diag(std::span<const Matrix> parts);
/// Row-major flattening of a matrix into a single vector.
Vector flatten(const Matrix& m);
Matrix unflatten(FieldPtr field, const Vector& v, std::size_t rows, std::size_t cols);

/// A subspace of F^n in canonical form: the rows of `basis()` are the
/// nonzero rows of a reduced row-echelon matrix. Two subspaces are equal
/// exactly when their bases are identical entry for entry.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(FieldPtr field, std::size_t ambient);
  static Subspace full(FieldPtr field, std::size_t ambient);
  /// Row span of `rows`.
  static Subspace span(const Matrix& rows);
  static Subspace span(FieldPtr field, std::size_t ambient, std::span<const Vector> vectors);

  const FieldPtr& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  /// Basis vectors as the columns of an (ambient x dim) matrix.
  Matrix inclusion() const { return basis_.transpose(); }

  /// Normal form of v modulo this subspace (pivot coordinates cleared).
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldPtr field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Output of row reduction.
struct Reduction {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Subspace kernel;  ///< {x : M x = 0}, inside F^cols
  Subspace image;   ///< column space, inside F^rows
};

/// Reduced row-echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
Reduction mat_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);

/// X with A X = B, free variables set to zero, or nullopt when the system
/// is inconsistent. Throws InputError when row counts differ.
std::optional<Matrix> linear_solve(const Matrix& a, const Matrix& b);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace modrep
