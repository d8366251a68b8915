#include "axial/poly.hpp"

#include <algorithm>
#include <sstream>

#include "axial/errors.hpp"

namespace axial {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

QPoly::QPoly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(const mpq_class& c, unsigned degree) {
  if (c == 0) return QPoly();
  std::vector<mpq_class> v(degree + 1, mpq_class(0));
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly r = *this;
  mpq_class inv = 1 / lead();
  for (auto& c : r.c_) c *= inv;
  return r;
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class QPoly::primitive_scale() const {
  if (is_zero()) return 1;
  mpz_class l = 1, g = 0;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : c_) {
    mpz_class num = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class s(l, g);
  s.canonicalize();
  return s;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpq_class& c = c_[k];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (k == 0 || !unit) out << mag.get_str();
    if (k > 0) {
      if (!unit) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<mpq_class> q(da - db + 1, mpq_class(0));
  mpq_class inv = 1 / b.lead();
  for (int k = da; k >= db; --k) {
    if (rem[k] == 0) continue;
    mpq_class f = rem[k] * inv;
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

QPoly operator%(const QPoly& a, const QPoly& b) { return divmod(a, b).second; }

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  QPoly r0 = m, r1 = a % m;
  QPoly s0, s1(mpq_class(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorKind::DivisionByZero, "element is not invertible modulo the minimal polynomial");
  return (s0 * (1 / r0.lead())) % m;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<mpq_class> rational_roots(const QPoly& p) {
  std::vector<mpq_class> roots;
  if (p.is_zero()) return roots;
  QPoly q = p * p.primitive_scale();
  // Strip factors of the variable.
  size_t shift = 0;
  while (q.coeffs()[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    q = QPoly(std::vector<mpq_class>(q.coeffs().begin() + shift, q.coeffs().end()));
  }
  if (q.degree() < 1) return roots;
  mpz_class c0 = q.coeffs().front().get_num();
  mpz_class cn = q.lead().get_num();
  for (const auto& d : positive_divisors(c0)) {
    for (const auto& e : positive_divisors(cn)) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * d, e);
        cand.canonicalize();
        if (q.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) {
          roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace axial
