#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>

#include "axial/poly.hpp"

namespace axial {

enum class FieldKind { Rationals, PrimeField, NumberField, RationalFunctions };

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

// One of Q, GF(p), Q[t]/(m(t)) or Q(t).  Constructed only through the
// factory functions, which validate the invariants (p odd prime, m monic
// irreducible of degree 2 or 3).
class FieldDescriptor {
 public:
  static FieldPtr rationals();
  static FieldPtr prime(const mpz_class& p);
  static FieldPtr number_field(const QPoly& minpoly, const std::string& variable = "eta");
  static FieldPtr rational_functions(const std::string& variable = "eta");

  FieldKind kind() const { return kind_; }
  const mpz_class& p() const { return p_; }
  const QPoly& minpoly() const { return minpoly_; }
  const std::string& variable() const { return variable_; }
  bool has_variable() const {
    return kind_ == FieldKind::NumberField || kind_ == FieldKind::RationalFunctions;
  }

  // Short CLI spelling: q, gf:<p>, nf:<c0,c1,...>, qeta.
  std::string spec() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b);
  friend bool operator!=(const FieldDescriptor& a, const FieldDescriptor& b) { return !(a == b); }

 private:
  FieldDescriptor() = default;
  FieldKind kind_ = FieldKind::Rationals;
  mpz_class p_ = 0;
  QPoly minpoly_;
  std::string variable_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);
mpz_class characteristic(const FieldDescriptor& f);

// An immutable scalar in canonical form.  The payload is a pair of
// polynomials: for Q and GF(p) both are constants (the denominator is 1 and
// a GF(p) residue lies in [0,p)); for a number field the numerator has degree
// below deg m; for Q(t) the fraction is reduced with a monic denominator.
class FieldElement {
 public:
  FieldElement() = default;

  static FieldElement zero(FieldPtr f);
  static FieldElement one(FieldPtr f);
  static FieldElement from_integer(FieldPtr f, const mpz_class& n);
  static FieldElement from_rational(FieldPtr f, const mpq_class& q);
  static FieldElement generator(FieldPtr f);
  // Canonicalizes an arbitrary payload; den must be nonzero.
  static FieldElement from_payload(FieldPtr f, QPoly num, QPoly den);

  const FieldPtr& field() const { return f_; }
  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // Valid for Q and GF(p).
  mpq_class rational() const { return num_.constant(); }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(unsigned e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  // Text in the scalar grammar; parse_scalar(to_string()) gives back *this.
  std::string to_string() const;

 private:
  FieldElement(FieldPtr f, QPoly num, QPoly den) : f_(std::move(f)), num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  FieldPtr f_;
  QPoly num_;
  QPoly den_;
};

// Substitutes the variable of a Q(t) element by value, a scalar of target.
FieldElement specialize(const FieldElement& x, const FieldPtr& target, const FieldElement& value);

}  // namespace axial
