#include "axial/linalg.hpp"

#include "axial/errors.hpp"

namespace axial {

namespace {

void require_length(size_t a, size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": lengths " + std::to_string(a) + " and " + std::to_string(b));
  }
}

}  // namespace

Vector::Vector(FieldPtr f, size_t n) : f_(f), c_(n, FieldElement::zero(f)) {}

Vector::Vector(FieldPtr f, std::vector<FieldElement> entries) : f_(std::move(f)), c_(std::move(entries)) {
  for (const auto& e : c_) {
    if (!same_field(e.field(), f_)) throw Error(ErrorKind::DescriptorMismatch, "vector entry from another field");
  }
}

Vector Vector::unit(FieldPtr f, size_t n, size_t i) {
  Vector v(f, n);
  v.c_.at(i) = FieldElement::one(f);
  return v;
}

bool Vector::is_zero() const {
  for (const auto& e : c_)
    if (!e.is_zero()) return false;
  return true;
}

Vector Vector::operator-() const {
  Vector r = *this;
  for (auto& e : r.c_) e = -e;
  return r;
}

Vector& Vector::operator+=(const Vector& o) {
  require_length(size(), o.size(), "vector sum");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_length(size(), o.size(), "vector difference");
  for (size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

Vector operator*(const FieldElement& s, const Vector& v) {
  Vector r = v;
  for (auto& e : r.c_) e = s * e;
  return r;
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Matrix::Matrix(FieldPtr f, size_t rows, size_t cols)
    : f_(f), r_(rows), c_(cols), d_(rows * cols, FieldElement::zero(f)) {}

Matrix Matrix::identity(FieldPtr f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(f);
  return m;
}

Matrix Matrix::from_columns(FieldPtr f, size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    require_length(cols[j].size(), rows, "matrix column");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(FieldPtr f, size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    require_length(rows[i].size(), cols, "matrix row");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vector Matrix::row(size_t i) const {
  return Vector(f_, std::vector<FieldElement>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_));
}

Vector Matrix::column(size_t j) const {
  std::vector<FieldElement> v;
  v.reserve(r_);
  for (size_t i = 0; i < r_; ++i) v.push_back((*this)(i, j));
  return Vector(f_, std::move(v));
}

bool Matrix::is_zero() const {
  for (const auto& e : d_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  require_length(c_, v.size(), "matrix-vector product");
  Vector out(f_, r_);
  for (size_t j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < r_; ++i) {
      const FieldElement& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_length(a.c_, b.r_, "matrix product");
  Matrix m(a.f_, a.r_, b.c_);
  for (size_t i = 0; i < a.r_; ++i)
    for (size_t k = 0; k < a.c_; ++k) {
      const FieldElement& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.c_; ++j) {
        const FieldElement& y = b(k, j);
        if (!y.is_zero()) m(i, j) += x * y;
      }
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_length(a.r_, b.r_, "matrix sum rows");
  require_length(a.c_, b.c_, "matrix sum cols");
  Matrix m = a;
  for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] += b.d_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_length(a.r_, b.r_, "matrix difference rows");
  require_length(a.c_, b.c_, "matrix difference cols");
  Matrix m = a;
  for (size_t i = 0; i < m.d_.size(); ++i) m.d_[i] -= b.d_[i];
  return m;
}

Matrix operator*(const FieldElement& s, const Matrix& m) {
  Matrix r = m;
  for (auto& e : r.d_) e = s * e;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) return false;
  for (size_t i = 0; i < a.d_.size(); ++i)
    if (a.d_[i] != b.d_[i]) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.form;
  const size_t rows = a.rows(), cols = a.cols();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (size_t j = c; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    FieldElement inv = a(r, c).inverse();
    for (size_t j = c; j < cols; ++j)
      if (!a(r, j).is_zero()) a(r, j) = a(r, j) * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      FieldElement factor = a(i, c);
      for (size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::one(m.field());
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.form(i, n + j);
  return inv;
}

Subspace Subspace::zero(FieldPtr f, size_t ambient) {
  Subspace s;
  s.f_ = f;
  s.n_ = ambient;
  s.basis_ = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(FieldPtr f, size_t ambient) {
  Subspace s;
  s.f_ = f;
  s.n_ = ambient;
  s.basis_ = Matrix::identity(f, ambient);
  for (size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(FieldPtr f, size_t ambient, const std::vector<Vector>& gens) {
  Subspace s = zero(f, ambient);
  if (gens.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(f, ambient, gens));
  Matrix basis(f, r.rank, ambient);
  for (size_t i = 0; i < r.rank; ++i)
    for (size_t j = 0; j < ambient; ++j) basis(i, j) = r.form(i, j);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
  return out;
}

Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = Vector::unit(m.field(), n, free);
    for (size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, gens);
}

std::optional<std::vector<FieldElement>> solve_in_span(const Vector& target, const std::vector<Vector>& spanners) {
  const FieldPtr& f = target.field();
  const size_t n = target.size();
  const size_t k = spanners.size();
  Matrix aug(f, n, k + 1);
  for (size_t j = 0; j < k; ++j) {
    require_length(spanners[j].size(), n, "spanner");
    for (size_t i = 0; i < n; ++i) aug(i, j) = spanners[j][i];
  }
  for (size_t i = 0; i < n; ++i) aug(i, k) = target[i];
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == k) return std::nullopt;
  std::vector<FieldElement> coeffs(k, FieldElement::zero(f));
  for (size_t i = 0; i < r.rank; ++i) coeffs[r.pivots[i]] = r.form(i, k);
  return coeffs;
}

namespace {

void require_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !same_field(a.field(), b.field())) {
    throw Error(ErrorKind::AmbientMismatch,
                "subspaces of dimension " + std::to_string(a.ambient()) + " and " + std::to_string(b.ambient()));
  }
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  std::vector<Vector> gens = a.basis();
  for (auto& v : b.basis()) gens.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient(), gens);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  const size_t n = a.ambient(), ra = a.dim(), rb = b.dim();
  if (ra == 0 || rb == 0) return Subspace::zero(a.field(), n);
  // Solutions of sum x_i a_i - sum y_j b_j = 0 give the common vectors.
  Matrix m(a.field(), n, ra + rb);
  for (size_t i = 0; i < ra; ++i)
    for (size_t r = 0; r < n; ++r) m(r, i) = a.basis_matrix()(i, r);
  for (size_t j = 0; j < rb; ++j)
    for (size_t r = 0; r < n; ++r) m(r, ra + j) = -b.basis_matrix()(j, r);
  Subspace k = kernel(m);
  std::vector<Vector> common;
  for (const Vector& sol : k.basis()) {
    Vector v(a.field(), n);
    for (size_t i = 0; i < ra; ++i)
      if (!sol[i].is_zero()) v += sol[i] * a.basis_matrix().row(i);
    common.push_back(std::move(v));
  }
  return Subspace::span(a.field(), n, common);
}

bool contains_vector(const Subspace& a, const Vector& v) {
  require_length(a.ambient(), v.size(), "membership");
  Vector w = v;
  for (size_t i = 0; i < a.dim(); ++i) {
    FieldElement c = w[a.pivots()[i]];
    if (!c.is_zero()) w -= c * a.basis_matrix().row(i);
  }
  return w.is_zero();
}

bool subspace_equals(const Subspace& a, const Subspace& b) {
  require_ambient(a, b);
  return a.pivots() == b.pivots() && a.basis_matrix() == b.basis_matrix();
}

bool is_direct_sum_with(const Subspace& a, const Subspace& b) {
  return subspace_sum(a, b).dim() == a.dim() + b.dim();
}

}  // namespace axial
