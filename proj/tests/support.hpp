#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "axial/catalog.hpp"
#include "axial/errors.hpp"
#include "axial/scalar_parser.hpp"

namespace testing_support {

using namespace axial;

inline FieldPtr qeta() { return parse_field_spec("qeta"); }
inline FieldPtr q() { return FieldDescriptor::rationals(); }

inline FieldElement el(const std::string& text, const FieldPtr& f) { return parse_scalar(text, f); }

inline Instance entry(const std::string& name, const std::string& field = "", const std::string& eta = "") {
  InstanceRequest r;
  if (!field.empty()) r.field = field;
  if (!eta.empty()) r.eta = eta;
  return instantiate_entry(find_entry(name), r);
}

// Instance of an entry's table with its constraints dropped, for probing
// parameters outside the admissible set.
inline Instance unconstrained(const std::string& name, const std::string& field, const std::string& eta = "") {
  Presentation p = find_entry(name).presentation;
  p.constraints = ConstraintText{};
  InstanceRequest r;
  r.field = field;
  if (!eta.empty()) r.eta = eta;
  return instantiate(p, r);
}

inline Vector vec(const std::string& text, const Instance& inst) { return parse_vector(text, *inst.algebra); }

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  throw std::logic_error("no error raised");
}

}  // namespace testing_support
