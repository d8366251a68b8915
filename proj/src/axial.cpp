#include "axial/axial.hpp"

#include "axial/errors.hpp"

namespace axial {

FusionRule FusionRule::majorana(const FieldElement& eta) {
  const FieldPtr& f = eta.field();
  return FusionRule{{FieldElement::zero(f), FieldElement::one(f), eta, eta}};
}

const std::vector<int>& FusionRule::allowed(int i, int j) {
  static const std::vector<int> table[4][4] = {
      {{0}, {0}, {2}, {3}},
      {{0}, {1}, {2}, {3}},
      {{2}, {2}, {0, 1}, {3}},
      {{3}, {3}, {3}, {0, 1, 2}},
  };
  return table[i][j];
}

std::array<size_t, 4> AxisDecomposition::dims() const {
  return {parts[0].dim(), parts[1].dim(), parts[2].dim(), parts[3].dim()};
}

AxisDecomposition split_eigenspace(const Algebra& alg, const Vector& a, const FieldElement& eta, const Matrix& tau) {
  const FieldPtr& f = alg.field();
  const size_t n = alg.dim();
  if (eta.is_zero() || eta.is_one()) throw Error(ErrorKind::ConstraintViolation, "eta must differ from 0 and 1");
  if (alg.multiply(a, a) != a) throw Error(ErrorKind::NotIdempotent, "axis is not idempotent");
  Matrix id = Matrix::identity(f, n);
  if (tau * tau != id) throw Error(ErrorKind::InvolutionMismatch, "tau is not an involution");
  if (tau.apply(a) != a) throw Error(ErrorKind::InvolutionMismatch, "tau does not fix the axis");
  Matrix ad = alg.adjoint(a);
  Subspace m0 = kernel(ad);
  Subspace e = kernel(ad - eta * id);
  AxisDecomposition dec{a, {}, FusionRule::majorana(eta)};
  dec.parts[0] = m0;
  dec.parts[1] = Subspace::span(f, n, {a});
  dec.parts[2] = intersection(e, kernel(tau - id));
  dec.parts[3] = intersection(e, kernel(tau + id));
  Subspace total = Subspace::zero(f, n);
  size_t sum_dims = 0;
  for (const auto& part : dec.parts) {
    total = subspace_sum(total, part);
    sum_dims += part.dim();
  }
  if (sum_dims != n || total.dim() != n) {
    auto d = dec.dims();
    throw Error(ErrorKind::NotSemisimple, "parts have dimensions (" + std::to_string(d[0]) + "," +
                                              std::to_string(d[1]) + "," + std::to_string(d[2]) + "," +
                                              std::to_string(d[3]) + ") in dimension " + std::to_string(n));
  }
  return dec;
}

std::vector<FusionViolation> check_fusion(const Algebra& alg, const AxisDecomposition& dec) {
  std::vector<FusionViolation> out;
  std::array<std::vector<Vector>, 4> bases;
  for (int i = 0; i < 4; ++i) bases[i] = dec.parts[i].basis();
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Subspace target = Subspace::zero(alg.field(), alg.dim());
      for (int k : FusionRule::allowed(i, j)) target = subspace_sum(target, dec.parts[k]);
      for (size_t x = 0; x < bases[i].size(); ++x)
        for (size_t y = (i == j ? x : 0); y < bases[j].size(); ++y) {
          Vector z = alg.multiply(bases[i][x], bases[j][y]);
          if (!contains_vector(target, z)) out.push_back({i, j, z});
        }
    }
  return out;
}

Matrix miyamoto(const Algebra& alg, const AxisDecomposition& dec) {
  const FieldPtr& f = alg.field();
  const size_t n = alg.dim();
  std::vector<Vector> cols;
  std::vector<bool> negate;
  for (int i = 0; i < 4; ++i)
    for (auto& v : dec.parts[i].basis()) {
      cols.push_back(std::move(v));
      negate.push_back(i == 3);
    }
  Matrix b = Matrix::from_columns(f, n, cols);
  auto b_inv = inverse(b);
  if (!b_inv) throw Error(ErrorKind::NotSemisimple, "decomposition parts do not form a basis");
  Matrix d = Matrix::identity(f, n);
  for (size_t i = 0; i < n; ++i)
    if (negate[i]) d(i, i) = -d(i, i);
  Matrix t = b * d * *b_inv;
  if (!is_endomorphism(alg, t)) {
    throw Error(ErrorKind::MiyamotoNotAutomorphism, "negating M^3 does not give an automorphism");
  }
  return t;
}

const Vector& DihedralData::axis(int i) const {
  auto it = axes.find(i);
  if (it == axes.end()) throw Error(ErrorKind::WindowTooSmall, "axis a_" + std::to_string(i) + " is outside the window");
  return it->second;
}

void extend_window(DihedralData& dd, int n) {
  for (int i = dd.hi() + 1; i <= n + 1; ++i) dd.axes[i] = dd.f1.apply(dd.axes.at(i - 1));
  for (int i = dd.lo() - 1; i >= -n; --i) {
    dd.axes[i] = dd.f1_inv ? dd.f1_inv->apply(dd.axes.at(i + 1)) : dd.tau0.apply(dd.axis(-i));
  }
}

DihedralData make_dihedral(const Algebra& alg, const std::map<int, Vector>& declared, const Matrix& f1,
                           const Matrix& tau0, const FieldElement& eta, int n) {
  if (!declared.count(0)) throw Error(ErrorKind::InvalidInput, "the axis window must contain index 0");
  if (f1.rows() != alg.dim() || f1.cols() != alg.dim() || tau0.rows() != alg.dim() || tau0.cols() != alg.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "shift or flip map has the wrong shape");
  }
  DihedralData dd;
  dd.declared = declared;
  dd.f1 = f1;
  dd.f1_inv = inverse(f1);
  dd.tau0 = tau0;
  dd.eta = eta;
  dd.axes[0] = declared.at(0);
  extend_window(dd, std::max(n, 1));
  return dd;
}

namespace {

std::string axis_name(int i) { return "a_" + std::to_string(i); }

}  // namespace

DihedralReport check_dihedral(const Algebra& alg, const DihedralData& dd, int jlo, int jhi) {
  DihedralReport rep;
  const FieldPtr& f = alg.field();
  const size_t n = alg.dim();
  Matrix id = Matrix::identity(f, n);

  // (D1) the window axes generate the algebra.
  std::vector<Vector> window;
  for (const auto& [i, v] : dd.axes) window.push_back(v);
  size_t gen = generated_subalgebra(alg, window).dim();
  if (gen != n) {
    rep.d1 = false;
    rep.violations.push_back("D1: axes generate a subalgebra of dimension " + std::to_string(gen) + " < " +
                             std::to_string(n));
  }

  // (D2) f1 is an automorphism carrying the declared axes.
  if (!is_endomorphism(alg, dd.f1)) {
    rep.d2 = false;
    rep.violations.push_back("D2: shift map is not multiplicative");
  }
  if (!dd.f1_inv) {
    rep.d2 = false;
    rep.violations.push_back("D2: shift map is not invertible");
  }
  for (const auto& [i, v] : dd.declared) {
    if (dd.has(i) && dd.axis(i) != v) {
      rep.d2 = false;
      rep.violations.push_back("D2: declared " + axis_name(i) + " differs from the shifted a_0");
    }
  }

  // Flip tau0.
  if (!is_endomorphism(alg, dd.tau0)) {
    rep.d3 = false;
    rep.violations.push_back("D3: flip map is not multiplicative");
  }
  if (dd.tau0 * dd.tau0 != id) {
    rep.d3 = false;
    rep.violations.push_back("D3: flip map is not an involution");
  }

  // Conjugates tau_j = f1^j tau0 f1^-j, built one step at a time.
  auto conjugate = [&](int j) -> std::optional<Matrix> {
    if (!dd.f1_inv) return j == 0 ? std::optional<Matrix>(dd.tau0) : std::nullopt;
    Matrix t = dd.tau0;
    for (int s = 0; s < j; ++s) t = dd.f1 * t * *dd.f1_inv;
    for (int s = 0; s > j; --s) t = *dd.f1_inv * t * dd.f1;
    return t;
  };

  for (int j = jlo; j <= jhi; ++j) {
    if (!dd.has(j)) continue;
    auto tau_j = conjugate(j);
    if (!tau_j) {
      rep.d3 = false;
      rep.violations.push_back("D3: cannot conjugate the flip to " + axis_name(j));
      continue;
    }
    AxisDecomposition dec;
    try {
      dec = split_eigenspace(alg, dd.axis(j), dd.eta, *tau_j);
    } catch (const Error& e) {
      rep.fusion_ok = false;
      rep.d3 = false;
      rep.fusion_violations.push_back(axis_name(j) + ": " + e.what());
      continue;
    }
    if (j == 0) rep.dims_at_a0 = dec.dims();
    for (const auto& v : check_fusion(alg, dec)) {
      rep.fusion_ok = false;
      rep.fusion_violations.push_back(axis_name(j) + ": M^" + std::to_string(v.i) + " * M^" + std::to_string(v.j) +
                                      " leaves the allowed parts");
    }
    try {
      Matrix m = miyamoto(alg, dec);
      if (m != *tau_j) {
        rep.d3 = false;
        rep.violations.push_back("D3: Miyamoto involution of " + axis_name(j) + " differs from the conjugated flip");
      }
    } catch (const Error& e) {
      rep.d3 = false;
      rep.violations.push_back("D3: " + axis_name(j) + ": " + e.what());
    }
    for (const auto& [i, v] : dd.axes) {
      int k = 2 * j - i;
      if (!dd.has(k)) continue;
      if (tau_j->apply(v) != dd.axis(k)) {
        rep.d3 = false;
        rep.violations.push_back("D3: flip at " + axis_name(j) + " sends " + axis_name(i) + " elsewhere than " +
                                 axis_name(k));
        break;
      }
    }
  }
  return rep;
}

RelationWitness axial_dimension(const Algebra& alg, const DihedralData& dd_in, int window) {
  const FieldPtr& f = alg.field();
  const size_t n = alg.dim();
  DihedralData dd = dd_in;
  extend_window(dd, window);
  auto rank_of = [&](int k) {
    std::vector<Vector> vs;
    for (int i = -k; i <= k + 1; ++i) vs.push_back(dd.axis(i));
    return Subspace::span(f, n, vs).dim();
  };
  std::vector<size_t> ranks;
  std::optional<size_t> adim;
  for (int k = 0; k <= window; ++k) {
    ranks.push_back(rank_of(k));
    size_t m = ranks.size();
    if (m >= 3 && ranks[m - 1] == ranks[m - 2] && ranks[m - 2] == ranks[m - 3]) {
      adim = ranks[m - 3];
      break;
    }
  }
  if (!adim) throw Error(ErrorKind::NoStabilization, "axis span still growing at window " + std::to_string(window));

  RelationWitness w;
  w.adim = *adim;
  const int d = static_cast<int>(*adim);
  const bool even_dim = d % 2 == 0;
  const int k = even_dim ? d / 2 : (d - 1) / 2;
  w.k = k;
  // Families whose vanishing combinations are the flip-symmetric and
  // flip-antisymmetric relations of the four cases.
  std::vector<Vector> sym, anti;
  std::vector<std::map<int, int>> sym_terms, anti_terms;
  if (even_dim) {
    sym.push_back(dd.axis(0));
    sym_terms.push_back({{0, 1}});
    for (int i = 1; i <= k; ++i) {
      sym.push_back(dd.axis(i) + dd.axis(-i));
      sym_terms.push_back({{i, 1}, {-i, 1}});
      anti.push_back(dd.axis(i) - dd.axis(-i));
      anti_terms.push_back({{i, 1}, {-i, -1}});
    }
  } else {
    for (int i = 0; i <= k; ++i) {
      sym.push_back(dd.axis(i + 1) + dd.axis(-i));
      sym_terms.push_back({{i + 1, 1}, {-i, 1}});
      anti.push_back(dd.axis(i + 1) - dd.axis(-i));
      anti_terms.push_back({{i + 1, 1}, {-i, -1}});
    }
  }
  auto relations = [&](const std::vector<Vector>& fam) {
    if (fam.empty()) return Subspace::zero(f, 0);
    return kernel(Matrix::from_columns(f, n, fam));
  };
  Subspace ks = relations(sym), ka = relations(anti);
  if (ks.dim() > 0 && ka.dim() > 0) {
    throw Error(ErrorKind::DataInconsistency, "both an even and an odd relation hold among the axes");
  }
  if (ks.dim() == 0 && ka.dim() == 0) {
    throw Error(ErrorKind::DataInconsistency, "no flip-symmetric relation among the axes of the minimal window");
  }
  w.even = ks.dim() > 0;
  const Subspace& kk = w.even ? ks : ka;
  if (kk.dim() > 1) throw Error(ErrorKind::DataInconsistency, "relation among the axes is not unique");
  Vector rel = kk.basis().front();
  const FieldElement& lead = rel[rel.size() - 1];
  if (lead.is_zero()) throw Error(ErrorKind::DataInconsistency, "relation does not involve the outermost axes");
  FieldElement inv = lead.inverse();
  for (size_t t = 0; t < rel.size(); ++t) w.alpha.push_back(rel[t] * inv);
  w.case_tag = even_dim ? (w.even ? 1 : 2) : (w.even ? 3 : 4);
  const auto& terms = w.even ? sym_terms : anti_terms;
  for (size_t t = 0; t < terms.size(); ++t)
    for (const auto& [idx, sign] : terms[t]) {
      FieldElement c = sign > 0 ? w.alpha[t] : -w.alpha[t];
      auto it = w.relation.find(idx);
      if (it == w.relation.end()) {
        w.relation.emplace(idx, c);
      } else {
        it->second += c;
      }
    }
  return w;
}

Vector p_vector(const Algebra& alg, const DihedralData& dd, int i, int j) {
  if (!dd.has(j) || !dd.has(i + j)) {
    throw Error(ErrorKind::WindowTooSmall, "p_{" + std::to_string(i) + "," + std::to_string(j) + "} needs a_" +
                                               std::to_string(j) + " and a_" + std::to_string(i + j));
  }
  const Vector& x = dd.axis(j);
  const Vector& y = dd.axis(i + j);
  return alg.multiply(x, y) - dd.eta * (x + y);
}

FieldElement lambda_coefficient(const AxisDecomposition& dec, const Vector& target) {
  std::vector<Vector> spanners{dec.axis};
  for (int i : {0, 2, 3})
    for (auto& v : dec.parts[i].basis()) spanners.push_back(std::move(v));
  auto c = solve_in_span(target, spanners);
  if (!c) throw Error(ErrorKind::NotSemisimple, "target is outside the decomposition");
  return c->front();
}

}  // namespace axial
