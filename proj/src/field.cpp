#include "axial/field.hpp"

#include <sstream>

#include "axial/errors.hpp"

namespace axial {

FieldPtr FieldDescriptor::rationals() {
  static const FieldPtr q = [] {
    std::shared_ptr<FieldDescriptor> f(new FieldDescriptor());
    f->kind_ = FieldKind::Rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr FieldDescriptor::prime(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw Error(ErrorKind::InvalidField, p.get_str() + " is not a prime");
  }
  if (p == 2) throw Error(ErrorKind::InvalidField, "characteristic 2 is not supported");
  std::shared_ptr<FieldDescriptor> f(new FieldDescriptor());
  f->kind_ = FieldKind::PrimeField;
  f->p_ = p;
  return f;
}

FieldPtr FieldDescriptor::number_field(const QPoly& minpoly, const std::string& variable) {
  if (minpoly.degree() < 2) throw Error(ErrorKind::InvalidField, "minimal polynomial must have degree at least 2");
  if (minpoly.lead() != 1) throw Error(ErrorKind::InvalidField, "minimal polynomial must be monic");
  if (minpoly.degree() > 3) {
    throw Error(ErrorKind::InvalidField, "irreducibility can only be certified up to degree 3");
  }
  if (!rational_roots(minpoly).empty()) {
    throw Error(ErrorKind::InvalidField, "minimal polynomial " + minpoly.to_string(variable) + " has a rational root");
  }
  std::shared_ptr<FieldDescriptor> f(new FieldDescriptor());
  f->kind_ = FieldKind::NumberField;
  f->minpoly_ = minpoly;
  f->variable_ = variable;
  return f;
}

FieldPtr FieldDescriptor::rational_functions(const std::string& variable) {
  std::shared_ptr<FieldDescriptor> f(new FieldDescriptor());
  f->kind_ = FieldKind::RationalFunctions;
  f->variable_ = variable;
  return f;
}

std::string FieldDescriptor::spec() const {
  switch (kind_) {
    case FieldKind::Rationals: return "q";
    case FieldKind::PrimeField: return "gf:" + p_.get_str();
    case FieldKind::RationalFunctions: return "qeta";
    case FieldKind::NumberField: {
      std::ostringstream out;
      out << "nf:";
      for (int k = 0; k <= minpoly_.degree(); ++k) {
        if (k) out << ",";
        out << minpoly_.coeff(k).get_str();
      }
      return out.str();
    }
  }
  return "?";
}

bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case FieldKind::Rationals: return true;
    case FieldKind::PrimeField: return a.p_ == b.p_;
    case FieldKind::NumberField: return a.minpoly_ == b.minpoly_ && a.variable_ == b.variable_;
    case FieldKind::RationalFunctions: return a.variable_ == b.variable_;
  }
  return false;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

mpz_class characteristic(const FieldDescriptor& f) {
  return f.kind() == FieldKind::PrimeField ? f.p() : mpz_class(0);
}

namespace {

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) {
    throw Error(ErrorKind::DescriptorMismatch, "operands live in different fields");
  }
}

mpz_class mod_p(const mpz_class& n, const mpz_class& p) {
  mpz_class r = n % p;
  if (r < 0) r += p;
  return r;
}

}  // namespace

void FieldElement::canonicalize() {
  switch (f_->kind()) {
    case FieldKind::Rationals:
      den_ = QPoly(mpq_class(1));
      break;
    case FieldKind::PrimeField: {
      mpq_class q = num_.constant();
      mpz_class d = mod_p(q.get_den(), f_->p());
      if (d == 0) throw Error(ErrorKind::DivisionByZero, "denominator divisible by " + f_->p().get_str());
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), f_->p().get_mpz_t());
      num_ = QPoly(mpq_class(mod_p(q.get_num() * inv, f_->p())));
      den_ = QPoly(mpq_class(1));
      break;
    }
    case FieldKind::NumberField:
      num_ = num_ % f_->minpoly();
      den_ = QPoly(mpq_class(1));
      break;
    case FieldKind::RationalFunctions: {
      if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
      if (num_.is_zero()) {
        den_ = QPoly(mpq_class(1));
        break;
      }
      QPoly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
      mpq_class lc = den_.lead();
      if (lc != 1) {
        mpq_class inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
      }
      break;
    }
  }
}

FieldElement FieldElement::from_payload(FieldPtr f, QPoly num, QPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (f->kind() != FieldKind::RationalFunctions) {
    if (!den.is_constant()) throw Error(ErrorKind::InvalidInput, "nonconstant denominator outside Q(t)");
    mpq_class d = den.constant();
    if (f->kind() != FieldKind::NumberField && !num.is_constant()) {
      throw Error(ErrorKind::InvalidInput, "nonconstant payload in a prime or rational field");
    }
    if (f->kind() == FieldKind::PrimeField) {
      // Reduce numerator and denominator separately so that 1/p style
      // payloads raise DivisionByZero rather than silently vanishing.
      FieldElement n = from_rational(f, num.constant());
      FieldElement dd = from_rational(f, d);
      return n / dd;
    }
    num *= 1 / d;
    den = QPoly(mpq_class(1));
  }
  FieldElement e(std::move(f), std::move(num), std::move(den));
  e.canonicalize();
  return e;
}

FieldElement FieldElement::zero(FieldPtr f) { return FieldElement(std::move(f), QPoly(), QPoly(mpq_class(1))); }

FieldElement FieldElement::one(FieldPtr f) {
  return FieldElement(std::move(f), QPoly(mpq_class(1)), QPoly(mpq_class(1)));
}

FieldElement FieldElement::from_integer(FieldPtr f, const mpz_class& n) {
  FieldElement e(std::move(f), QPoly(mpq_class(n)), QPoly(mpq_class(1)));
  e.canonicalize();
  return e;
}

FieldElement FieldElement::from_rational(FieldPtr f, const mpq_class& q) {
  FieldElement e(std::move(f), QPoly(q), QPoly(mpq_class(1)));
  e.canonicalize();
  return e;
}

FieldElement FieldElement::generator(FieldPtr f) {
  if (!f->has_variable()) throw Error(ErrorKind::UnknownSymbol, "field " + f->spec() + " has no variable");
  FieldElement e(std::move(f), QPoly::variable(), QPoly(mpq_class(1)));
  e.canonicalize();
  return e;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.num_ = -num_;
  if (f_->kind() == FieldKind::PrimeField) r.canonicalize();
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  switch (f_->kind()) {
    case FieldKind::Rationals:
      return FieldElement(f_, QPoly(mpq_class(1 / num_.constant())), den_);
    case FieldKind::PrimeField: {
      mpz_class inv;
      mpz_class r = num_.constant().get_num();
      mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), f_->p().get_mpz_t());
      return FieldElement(f_, QPoly(mpq_class(inv)), den_);
    }
    case FieldKind::NumberField:
      return FieldElement(f_, inverse_mod(num_, f_->minpoly()), den_);
    case FieldKind::RationalFunctions: {
      FieldElement r(f_, den_, num_);
      r.canonicalize();
      return r;
    }
  }
  return *this;
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = one(f_);
  FieldElement base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const FieldPtr& f = a.f_;
  if (f->kind() == FieldKind::RationalFunctions) {
    FieldElement r = a.den_ == b.den_ ? FieldElement(f, a.num_ + b.num_, a.den_)
                                      : FieldElement(f, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    r.canonicalize();
    return r;
  }
  FieldElement r(f, a.num_ + b.num_, a.den_);
  if (f->kind() == FieldKind::PrimeField) r.canonicalize();
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const FieldPtr& f = a.f_;
  if (a.is_zero() || b.is_zero()) return FieldElement::zero(f);
  switch (f->kind()) {
    case FieldKind::Rationals:
      return FieldElement(f, QPoly(mpq_class(a.num_.constant() * b.num_.constant())), a.den_);
    case FieldKind::PrimeField: {
      FieldElement r(f, QPoly(mpq_class(a.num_.constant() * b.num_.constant())), a.den_);
      r.canonicalize();
      return r;
    }
    case FieldKind::NumberField:
      return FieldElement(f, (a.num_ * b.num_) % f->minpoly(), a.den_);
    case FieldKind::RationalFunctions: {
      // Cross-cancel first so the product is already reduced.
      QPoly g1 = gcd(a.num_, b.den_);
      QPoly g2 = gcd(b.num_, a.den_);
      QPoly an = g1.degree() > 0 ? divmod(a.num_, g1).first : a.num_;
      QPoly bd = g1.degree() > 0 ? divmod(b.den_, g1).first : b.den_;
      QPoly bn = g2.degree() > 0 ? divmod(b.num_, g2).first : b.num_;
      QPoly ad = g2.degree() > 0 ? divmod(a.den_, g2).first : a.den_;
      FieldElement r(f, an * bn, ad * bd);
      mpq_class lc = r.den_.lead();
      if (lc != 1) {
        r.num_ *= 1 / lc;
        r.den_ *= 1 / lc;
      }
      return r;
    }
  }
  return a;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string FieldElement::to_string() const {
  switch (f_->kind()) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return num_.constant().get_str();
    case FieldKind::NumberField:
      return num_.to_string(f_->variable());
    case FieldKind::RationalFunctions:
      if (den_.is_one()) return num_.to_string(f_->variable());
      return "(" + num_.to_string(f_->variable()) + ")/(" + den_.to_string(f_->variable()) + ")";
  }
  return "?";
}

FieldElement specialize(const FieldElement& x, const FieldPtr& target, const FieldElement& value) {
  if (x.field()->kind() != FieldKind::RationalFunctions) {
    throw Error(ErrorKind::DescriptorMismatch, "specialize expects an element of Q(t)");
  }
  if (!same_field(value.field(), target)) {
    throw Error(ErrorKind::DescriptorMismatch, "specialization value does not lie in the target field");
  }
  // Scale numerator and denominator by one common factor so that every
  // coefficient is an integer with no common divisor; this keeps the
  // evaluation meaningful in positive characteristic.
  std::vector<mpq_class> all = x.numerator().coeffs();
  all.insert(all.end(), x.denominator().coeffs().begin(), x.denominator().coeffs().end());
  mpq_class scale = QPoly(all).primitive_scale();
  QPoly n = x.numerator() * scale;
  QPoly d = x.denominator() * scale;
  auto eval = [&](const QPoly& poly) {
    FieldElement acc = FieldElement::zero(target);
    for (int k = poly.degree(); k >= 0; --k) {
      acc = acc * value + FieldElement::from_integer(target, poly.coeff(k).get_num());
    }
    return acc;
  };
  FieldElement dv = eval(d);
  if (dv.is_zero()) {
    throw Error(ErrorKind::DenominatorVanishes, x.to_string() + " at " + value.to_string());
  }
  return eval(n) / dv;
}

}  // namespace axial
