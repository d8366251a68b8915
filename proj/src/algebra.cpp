#include "axial/algebra.hpp"

#include <set>

#include "axial/errors.hpp"

namespace axial {

Algebra::Algebra(FieldPtr f, std::vector<std::string> labels, const Table& table)
    : f_(std::move(f)), labels_(std::move(labels)), table_(labels_.size() * labels_.size()) {
  const size_t n = labels_.size();
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorKind::InvalidInput, "empty basis label");
    if (!seen.insert(l).second) throw Error(ErrorKind::InvalidInput, "duplicate basis label '" + l + "'");
  }
  for (const auto& [key, value] : table) {
    auto [i, j] = key;
    if (i >= n || j >= n) throw Error(ErrorKind::DimensionMismatch, "product index out of range");
    if (value.size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "product " + labels_[i] + "*" + labels_[j] + " has wrong length");
    }
    if (!same_field(value.field(), f_)) {
      throw Error(ErrorKind::DescriptorMismatch, "product " + labels_[i] + "*" + labels_[j] + " over another field");
    }
    if (table_[i * n + j].has_value()) {
      throw Error(ErrorKind::InvalidInput, "duplicate product " + labels_[i] + "*" + labels_[j]);
    }
    if (value.is_zero()) continue;
    table_[i * n + j] = value;
    table_[j * n + i] = value;
  }
}

std::optional<size_t> Algebra::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

const Vector* Algebra::product(size_t i, size_t j) const {
  const auto& slot = table_[i * dim() + j];
  return slot ? &*slot : nullptr;
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorKind::DimensionMismatch, "multiply outside the ambient space");
  Vector out(f_, n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Vector* p = product(i, j);
      if (!p) continue;
      FieldElement c = x[i] * y[j];
      for (size_t k = 0; k < n; ++k)
        if (!(*p)[k].is_zero()) out[k] += c * (*p)[k];
    }
  }
  return out;
}

Matrix Algebra::adjoint(const Vector& a) const {
  const size_t n = dim();
  if (a.size() != n) throw Error(ErrorKind::DimensionMismatch, "adjoint outside the ambient space");
  std::vector<Vector> cols;
  for (size_t j = 0; j < n; ++j) cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(f_, n, cols);
}

Subspace generated_subalgebra(const Algebra& alg, const std::vector<Vector>& gens) {
  Subspace s = Subspace::span(alg.field(), alg.dim(), gens);
  for (size_t iter = 0; iter <= alg.dim(); ++iter) {
    std::vector<Vector> b = s.basis();
    std::vector<Vector> next = b;
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i; j < b.size(); ++j) next.push_back(alg.multiply(b[i], b[j]));
    Subspace grown = Subspace::span(alg.field(), alg.dim(), next);
    if (grown.dim() == s.dim()) return s;
    s = std::move(grown);
  }
  return s;
}

bool is_ideal(const Algebra& alg, const Subspace& s) {
  for (const Vector& v : s.basis())
    for (size_t i = 0; i < alg.dim(); ++i)
      if (!contains_vector(s, alg.multiply(alg.basis_vector(i), v))) return false;
  return true;
}

namespace {

bool preserves_products(const Algebra& src, const Algebra& tgt, const Matrix& m) {
  if (m.cols() != src.dim() || m.rows() != tgt.dim()) return false;
  std::vector<Vector> images;
  for (size_t i = 0; i < src.dim(); ++i) images.push_back(m.column(i));
  for (size_t i = 0; i < src.dim(); ++i)
    for (size_t j = i; j < src.dim(); ++j) {
      const Vector* p = src.product(i, j);
      Vector lhs = p ? m.apply(*p) : tgt.zero_vector();
      if (lhs != tgt.multiply(images[i], images[j])) return false;
    }
  return true;
}

}  // namespace

bool is_homomorphism(const AlgebraMap& m) { return preserves_products(*m.source, *m.target, m.matrix); }

bool is_endomorphism(const Algebra& alg, const Matrix& m) { return preserves_products(alg, alg, m); }

Quotient quotient(const AlgebraPtr& alg, const Subspace& ideal) {
  if (ideal.ambient() != alg->dim()) throw Error(ErrorKind::AmbientMismatch, "ideal lives in another space");
  if (!is_ideal(*alg, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not closed under multiplication by the algebra");
  const size_t n = alg->dim();
  const FieldPtr& f = alg->field();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<size_t> reps;
  std::vector<long> slot(n, -1);
  for (size_t k = 0; k < n; ++k)
    if (!is_pivot[k]) {
      slot[k] = static_cast<long>(reps.size());
      reps.push_back(k);
    }
  const size_t m = reps.size();
  // Projection: e_k -> coset k for representatives; a pivot coordinate is
  // rewritten through its RREF row, which lies in the ideal.
  Matrix proj(f, m, n);
  for (size_t k : reps) proj(slot[k], k) = FieldElement::one(f);
  for (size_t r = 0; r < ideal.dim(); ++r) {
    size_t p = ideal.pivots()[r];
    for (size_t k : reps) proj(slot[k], p) = -ideal.basis_matrix()(r, k);
  }
  std::vector<std::string> labels;
  for (size_t k : reps) labels.push_back(alg->labels()[k]);
  Algebra::Table table;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      const Vector* p = alg->product(reps[a], reps[b]);
      if (!p) continue;
      Vector img = proj.apply(*p);
      if (!img.is_zero()) table.emplace(std::make_pair(a, b), std::move(img));
    }
  auto q = std::make_shared<const Algebra>(f, labels, table);
  return Quotient{q, AlgebraMap{alg, q, proj}, reps};
}

const char* extend_status_name(ExtendStatus s) {
  switch (s) {
    case ExtendStatus::Ok: return "ok";
    case ExtendStatus::Inconsistent: return "Inconsistent";
    case ExtendStatus::NotGenerating: return "NotGenerating";
  }
  return "?";
}

ExtendResult extend_from_generators(const AlgebraPtr& alg, const std::vector<std::pair<Vector, Vector>>& pairs,
                                    const AlgebraPtr& target) {
  if (!same_field(alg->field(), target->field())) {
    throw Error(ErrorKind::DescriptorMismatch, "source and target algebras live over different fields");
  }
  std::vector<Vector> srcs, imgs;
  ExtendResult result;
  // Adds a word; returns false on an inconsistency.
  auto add = [&](const Vector& s, const Vector& t) {
    auto coeffs = solve_in_span(s, srcs);
    if (!coeffs) {
      srcs.push_back(s);
      imgs.push_back(t);
      return true;
    }
    Vector expect = target->zero_vector();
    for (size_t i = 0; i < coeffs->size(); ++i)
      if (!(*coeffs)[i].is_zero()) expect += (*coeffs)[i] * imgs[i];
    return expect == t;
  };
  for (const auto& [s, t] : pairs) {
    if (s.size() != alg->dim() || t.size() != target->dim()) {
      throw Error(ErrorKind::DimensionMismatch, "generator pair outside the algebras");
    }
    if (!add(s, t)) {
      result.status = ExtendStatus::Inconsistent;
      result.detail = "generator images violate a linear dependency among the generators";
      return result;
    }
  }
  size_t frontier = 0;  // words with index >= frontier are new in this round
  for (unsigned round = 1; frontier < srcs.size(); ++round) {
    const size_t end = srcs.size();
    for (size_t a = 0; a < end; ++a)
      for (size_t b = std::max(a, frontier); b < end; ++b) {
        Vector s = alg->multiply(srcs[a], srcs[b]);
        Vector t = target->multiply(imgs[a], imgs[b]);
        if (!add(s, t)) {
          result.status = ExtendStatus::Inconsistent;
          result.detail = "product of words " + std::to_string(a) + " and " + std::to_string(b) + " in round " +
                          std::to_string(round) + " has an inconsistent image";
          return result;
        }
      }
    frontier = end;
  }
  if (srcs.size() < alg->dim()) {
    result.status = ExtendStatus::NotGenerating;
    result.detail = "generators span a subalgebra of dimension " + std::to_string(srcs.size());
    return result;
  }
  Matrix s = Matrix::from_columns(alg->field(), alg->dim(), srcs);
  Matrix t = Matrix::from_columns(alg->field(), target->dim(), imgs);
  result.map = AlgebraMap{alg, target, t * *inverse(s)};
  return result;
}

}  // namespace axial
