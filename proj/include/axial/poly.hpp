#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace axial {

// Univariate polynomial over Q, coefficients in ascending degree order.
// The coefficient vector never carries trailing zeros, so the zero
// polynomial is the empty vector.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<mpq_class> coeffs);
  explicit QPoly(const mpq_class& c);

  static QPoly monomial(const mpq_class& c, unsigned degree);
  static QPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int k) const;
  const mpq_class& lead() const { return c_.back(); }
  mpq_class constant() const { return coeff(0); }

  QPoly monic() const;
  mpq_class eval(const mpq_class& x) const;

  // Multiplies through by a positive rational so every coefficient is an
  // integer and their gcd is 1.  Returns the scale used.
  mpq_class primitive_scale() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const mpq_class& s);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // Renders in the scalar grammar using the given variable name.
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly operator%(const QPoly& a, const QPoly& b);
// Monic gcd (zero when both inputs are zero).
QPoly gcd(QPoly a, QPoly b);
// Returns s with s*a == gcd(a, m) modulo m.
QPoly inverse_mod(const QPoly& a, const QPoly& m);
// Rational roots of p (p nonzero).  Used for irreducibility of small degree.
std::vector<mpq_class> rational_roots(const QPoly& p);

}  // namespace axial
