#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/field.hpp"

namespace axial {

class Vector {
 public:
  Vector() = default;
  Vector(FieldPtr f, size_t n);
  Vector(FieldPtr f, std::vector<FieldElement> entries);
  static Vector unit(FieldPtr f, size_t n, size_t i);

  const FieldPtr& field() const { return f_; }
  size_t size() const { return c_.size(); }
  const FieldElement& operator[](size_t i) const { return c_[i]; }
  FieldElement& operator[](size_t i) { return c_[i]; }
  const std::vector<FieldElement>& entries() const { return c_; }
  bool is_zero() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const FieldElement& s, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b);
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

 private:
  FieldPtr f_;
  std::vector<FieldElement> c_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, size_t rows, size_t cols);
  static Matrix identity(FieldPtr f, size_t n);
  static Matrix from_columns(FieldPtr f, size_t rows, const std::vector<Vector>& cols);
  static Matrix from_rows(FieldPtr f, size_t cols, const std::vector<Vector>& rows);

  const FieldPtr& field() const { return f_; }
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const FieldElement& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }
  FieldElement& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
  Vector row(size_t i) const;
  Vector column(size_t j) const;
  bool is_zero() const;

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  FieldPtr f_;
  size_t r_ = 0, c_ = 0;
  std::vector<FieldElement> d_;
};

struct RrefResult {
  Matrix form;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

// Gauss-Jordan elimination; the pivot is the first row with a nonzero entry
// in the leftmost unsettled column.
RrefResult rref(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

// A subspace of F^n stored as the nonzero rows of its RREF basis matrix.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(FieldPtr f, size_t ambient);
  static Subspace full(FieldPtr f, size_t ambient);
  static Subspace span(FieldPtr f, size_t ambient, const std::vector<Vector>& gens);

  const FieldPtr& field() const { return f_; }
  size_t ambient() const { return n_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix& basis_matrix() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis() const;

 private:
  FieldPtr f_;
  size_t n_ = 0;
  Matrix basis_;
  std::vector<size_t> pivots_;
};

Subspace kernel(const Matrix& m);

// Coefficients c with sum c_i * spanners_i == target, free variables set to
// zero; nullopt when target is outside the span.
std::optional<std::vector<FieldElement>> solve_in_span(const Vector& target, const std::vector<Vector>& spanners);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
bool contains_vector(const Subspace& a, const Vector& v);
bool subspace_equals(const Subspace& a, const Subspace& b);
bool is_direct_sum_with(const Subspace& a, const Subspace& b);

}  // namespace axial
