#include "axial/presentation.hpp"

#include <cctype>
#include <set>

#include "axial/errors.hpp"
#include "axial/scalar_parser.hpp"
#include "json.hpp"

namespace axial {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::string need_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + " must be a string");
  return j.get<std::string>();
}

VectorText vector_from_json(const json& j, const std::string& where) {
  VectorText v;
  if (j.is_string()) {
    // A bare label; general literals are accepted through parse_vector.
    v.emplace_back(j.get<std::string>(), "1");
    return v;
  }
  if (!j.is_object()) bad(where + " must be a label or an object of label: scalar");
  for (auto it = j.begin(); it != j.end(); ++it) v.emplace_back(it.key(), need_string(it.value(), where + "." + it.key()));
  return v;
}

json vector_to_json(const VectorText& v) {
  json o = json::object();
  for (const auto& [label, scalar] : v) o[label] = scalar;
  return o;
}

std::vector<std::pair<std::string, VectorText>> images_from_json(const json& j, const std::string& where) {
  std::vector<std::pair<std::string, VectorText>> out;
  if (!j.is_object()) bad(where + " must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), vector_from_json(it.value(), where));
  return out;
}

json field_to_json(const FieldDescriptor& f) {
  json o = json::object();
  switch (f.kind()) {
    case FieldKind::Rationals: o["kind"] = "rationals"; break;
    case FieldKind::PrimeField:
      o["kind"] = "prime";
      o["p"] = f.p().get_str();
      break;
    case FieldKind::NumberField: {
      o["kind"] = "number_field";
      json m = json::array();
      for (int k = 0; k <= f.minpoly().degree(); ++k) m.push_back(f.minpoly().coeff(k).get_str());
      o["minpoly"] = m;
      o["variable"] = f.variable();
      break;
    }
    case FieldKind::RationalFunctions:
      o["kind"] = "rational_functions";
      o["variable"] = f.variable();
      break;
  }
  return o;
}

QPoly poly_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where + " must be a nonempty array of coefficient strings");
  std::vector<mpq_class> c;
  for (const auto& x : j) {
    std::string s = need_string(x, where);
    try {
      c.emplace_back(s);
    } catch (const std::invalid_argument&) {
      bad(where + ": '" + s + "' is not a rational number");
    }
  }
  return QPoly(c);
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("field must be an object with a kind");
  std::string kind = need_string(j["kind"], "field.kind");
  std::string var = j.contains("variable") ? need_string(j["variable"], "field.variable") : "eta";
  if (kind == "rationals") return FieldDescriptor::rationals();
  if (kind == "prime") {
    if (!j.contains("p")) bad("prime field needs p");
    const json& p = j["p"];
    std::string s = p.is_number_integer() ? std::to_string(p.get<long long>()) : need_string(p, "field.p");
    try {
      return FieldDescriptor::prime(mpz_class(s));
    } catch (const std::invalid_argument&) {
      bad("field.p is not an integer");
    }
  }
  if (kind == "number_field") {
    if (!j.contains("minpoly")) bad("number field needs minpoly");
    return FieldDescriptor::number_field(poly_from_json(j["minpoly"], "field.minpoly"), var);
  }
  if (kind == "rational_functions") return FieldDescriptor::rational_functions(var);
  bad("unknown field kind '" + kind + "'");
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
  if (spec == "q") return FieldDescriptor::rationals();
  if (spec == "qeta") return FieldDescriptor::rational_functions("eta");
  try {
    if (spec.rfind("gf:", 0) == 0) return FieldDescriptor::prime(mpz_class(spec.substr(3)));
    if (spec.rfind("nf:", 0) == 0) {
      std::vector<mpq_class> c;
      std::string rest = spec.substr(3);
      size_t start = 0;
      while (start <= rest.size()) {
        size_t comma = rest.find(',', start);
        std::string tok = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        c.emplace_back(tok);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return FieldDescriptor::number_field(QPoly(c), "eta");
    }
  } catch (const std::invalid_argument&) {
    bad("malformed field '" + spec + "'");
  }
  bad("unknown field '" + spec + "' (expected q, gf:<p>, qeta or nf:<c0,c1,...>)");
}

Presentation presentation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed algebra file: ") + e.what());
  }
  if (!j.is_object()) bad("algebra file must be an object");
  Presentation p;
  p.name = j.contains("name") ? need_string(j["name"], "name") : "file";
  if (!j.contains("field")) bad("algebra file needs a field block");
  p.field = field_from_json(j["field"]);
  if (j.contains("eta")) p.eta = need_string(j["eta"], "eta");
  if (!j.contains("basis") || !j["basis"].is_array()) bad("algebra file needs a basis array");
  std::set<std::string> labels;
  for (const auto& b : j["basis"]) {
    std::string l = need_string(b, "basis entry");
    if (!labels.insert(l).second) bad("duplicate basis label '" + l + "'");
    p.basis.push_back(l);
  }
  auto declared = [&](const std::string& l, const std::string& where) {
    if (!labels.count(l)) bad(where + " refers to undeclared label '" + l + "'");
  };
  std::set<std::pair<std::string, std::string>> pairs;
  if (j.contains("products")) {
    if (!j["products"].is_array()) bad("products must be an array");
    for (const auto& e : j["products"]) {
      if (!e.is_object() || !e.contains("left") || !e.contains("right") || !e.contains("value")) {
        bad("each product needs left, right and value");
      }
      ProductText pt{need_string(e["left"], "product.left"), need_string(e["right"], "product.right"),
                     vector_from_json(e["value"], "product.value")};
      declared(pt.left, "product");
      declared(pt.right, "product");
      for (const auto& [l, s] : pt.value) declared(l, "product value");
      auto key = std::minmax(pt.left, pt.right);
      if (!pairs.insert(key).second) bad("duplicate product " + pt.left + "*" + pt.right);
      p.products.push_back(std::move(pt));
    }
  }
  if (j.contains("dihedral")) {
    const json& d = j["dihedral"];
    DihedralText dt;
    if (!d.contains("axes") || !d["axes"].is_array()) bad("dihedral block needs an axes array");
    for (const auto& a : d["axes"]) {
      dt.axes.push_back(vector_from_json(a, "dihedral.axes"));
      for (const auto& [l, s] : dt.axes.back()) declared(l, "dihedral axis");
    }
    if (!d.contains("window") || !d["window"].is_array() || d["window"].size() != 2) bad("dihedral.window must be [lo, hi]");
    dt.lo = d["window"][0].get<int>();
    dt.hi = d["window"][1].get<int>();
    if (dt.hi - dt.lo + 1 != static_cast<int>(dt.axes.size())) bad("dihedral.window does not match the axes array");
    if (dt.lo > 0 || dt.hi < 0) bad("dihedral.window must contain 0");
    for (const char* key : {"shift_images", "flip_images"}) {
      if (!d.contains(key)) bad(std::string("dihedral block needs ") + key);
      auto imgs = images_from_json(d[key], key);
      for (const auto& [l, v] : imgs) {
        declared(l, key);
        for (const auto& [m, s] : v) declared(m, key);
      }
      (std::string(key) == "shift_images" ? dt.shift_images : dt.flip_images) = std::move(imgs);
    }
    p.dihedral = std::move(dt);
  }
  if (j.contains("constraints")) {
    const json& c = j["constraints"];
    if (!c.is_object()) bad("constraints must be an object");
    if (c.contains("nonzero"))
      for (const auto& x : c["nonzero"]) p.constraints.nonzero.push_back(need_string(x, "constraints.nonzero"));
    if (c.contains("exclude_eta"))
      for (const auto& x : c["exclude_eta"]) p.constraints.exclude_eta.push_back(need_string(x, "constraints.exclude_eta"));
    if (c.contains("characteristic")) {
      const json& ch = c["characteristic"];
      if (ch.is_number_integer()) {
        p.constraints.characteristic = mpz_class(std::to_string(ch.get<long long>()));
      } else {
        p.constraints.characteristic = mpz_class(need_string(ch, "constraints.characteristic"));
      }
    }
    if (c.contains("eta")) p.constraints.eta = need_string(c["eta"], "constraints.eta");
    if (c.contains("minpoly")) p.constraints.minpoly = poly_from_json(c["minpoly"], "constraints.minpoly");
  }
  if (j.contains("expected")) {
    const json& e = j["expected"];
    ExpectedRelation er;
    er.adim = e.at("adim").get<size_t>();
    er.even = need_string(e.at("relation"), "expected.relation") == "even";
    er.case_tag = e.at("case").get<int>();
    for (const auto& a : e.at("alpha")) er.alpha.push_back(need_string(a, "expected.alpha"));
    p.expected = std::move(er);
  }
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  json j = json::object();
  j["name"] = p.name;
  j["field"] = field_to_json(*p.field);
  if (p.eta) j["eta"] = *p.eta;
  j["basis"] = p.basis;
  json prods = json::array();
  for (const auto& pt : p.products) {
    json e = json::object();
    e["left"] = pt.left;
    e["right"] = pt.right;
    e["value"] = vector_to_json(pt.value);
    prods.push_back(e);
  }
  j["products"] = prods;
  if (p.dihedral) {
    const auto& d = *p.dihedral;
    json dj = json::object();
    json axes = json::array();
    for (const auto& a : d.axes) {
      if (a.size() == 1 && a[0].second == "1") {
        axes.push_back(a[0].first);
      } else {
        axes.push_back(vector_to_json(a));
      }
    }
    dj["axes"] = axes;
    dj["window"] = {d.lo, d.hi};
    json sh = json::object(), fl = json::object();
    for (const auto& [l, v] : d.shift_images) sh[l] = vector_to_json(v);
    for (const auto& [l, v] : d.flip_images) fl[l] = vector_to_json(v);
    dj["shift_images"] = sh;
    dj["flip_images"] = fl;
    j["dihedral"] = dj;
  }
  json c = json::object();
  const auto& ct = p.constraints;
  if (!ct.nonzero.empty()) c["nonzero"] = ct.nonzero;
  if (ct.characteristic) c["characteristic"] = ct.characteristic->get_str();
  if (!ct.exclude_eta.empty()) c["exclude_eta"] = ct.exclude_eta;
  if (ct.eta) c["eta"] = *ct.eta;
  if (ct.minpoly) {
    json m = json::array();
    for (int k = 0; k <= ct.minpoly->degree(); ++k) m.push_back(ct.minpoly->coeff(k).get_str());
    c["minpoly"] = m;
  }
  if (!c.empty()) j["constraints"] = c;
  if (p.expected) {
    json e = json::object();
    e["adim"] = p.expected->adim;
    e["relation"] = p.expected->even ? "even" : "odd";
    e["case"] = p.expected->case_tag;
    e["alpha"] = p.expected->alpha;
    j["expected"] = e;
  }
  return j.dump(2) + "\n";
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

Vector parse_vector(const std::string& text, const Algebra& alg) {
  const FieldPtr& f = alg.field();
  Vector out = alg.zero_vector();
  // Split into signed terms at top-level '+' and '-'.
  std::vector<std::pair<bool, std::string>> terms;
  int depth = 0;
  bool negative = false;
  std::string cur;
  auto flush = [&](size_t at) {
    std::string t = trim(cur);
    if (t.empty()) throw Error(ErrorKind::SyntaxError, "empty term at offset " + std::to_string(at) + " in \"" + text + "\"");
    terms.emplace_back(negative, t);
    cur.clear();
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw Error(ErrorKind::SyntaxError, "unbalanced ')' in \"" + text + "\"");
    bool prev_is_op = trim(cur).empty() || trim(cur).back() == '*' || trim(cur).back() == '/' || trim(cur).back() == '^';
    if (depth == 0 && (c == '+' || c == '-') && !prev_is_op) {
      flush(i);
      negative = (c == '-');
      continue;
    }
    if (depth == 0 && (c == '+' || c == '-') && trim(cur).empty()) {
      if (c == '-') negative = !negative;
      continue;
    }
    cur += c;
  }
  if (depth != 0) throw Error(ErrorKind::SyntaxError, "unbalanced '(' in \"" + text + "\"");
  flush(text.size());
  for (const auto& [neg, term] : terms) {
    // The label is the trailing identifier after the last top-level '*'.
    size_t star = std::string::npos;
    int d = 0;
    for (size_t i = 0; i < term.size(); ++i) {
      if (term[i] == '(') ++d;
      if (term[i] == ')') --d;
      if (d == 0 && term[i] == '*') star = i;
    }
    std::string label = trim(star == std::string::npos ? term : term.substr(star + 1));
    auto idx = alg.index_of(label);
    if (!idx) throw Error(ErrorKind::SyntaxError, "'" + label + "' is not a basis label in \"" + text + "\"");
    FieldElement coeff = star == std::string::npos ? FieldElement::one(f) : parse_scalar(term.substr(0, star), f);
    out[*idx] += neg ? -coeff : coeff;
  }
  return out;
}

FieldElement convert_scalar(const std::string& text, const FieldPtr& source, const FieldPtr& target,
                            const FieldElement& eta) {
  FieldElement x = parse_scalar(text, source);
  if (same_field(source, target)) return x;
  if (source->kind() == FieldKind::RationalFunctions) return specialize(x, target, eta);
  if (source->kind() == FieldKind::Rationals) {
    try {
      return FieldElement::from_rational(target, x.rational());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DivisionByZero) throw Error(ErrorKind::DenominatorVanishes, text + " over " + target->spec());
      throw;
    }
  }
  throw Error(ErrorKind::ConstraintViolation,
              "data written over " + source->spec() + " cannot be instantiated over " + target->spec());
}

Instance instantiate(const Presentation& p, const InstanceRequest& req) {
  const FieldPtr& src = p.field;
  FieldPtr tgt = req.field ? parse_field_spec(*req.field) : src;
  const auto& c = p.constraints;
  auto violate = [&](const std::string& what) { throw Error(ErrorKind::ConstraintViolation, p.name + ": " + what); };

  if (c.characteristic && characteristic(*tgt) != *c.characteristic) {
    violate("requires characteristic " + c.characteristic->get_str() + ", got " + characteristic(*tgt).get_str());
  }
  if (c.minpoly) {
    if (tgt->kind() == FieldKind::RationalFunctions) {
      violate("a generic parameter is not allowed; eta must satisfy " + c.minpoly->to_string("eta"));
    }
    if (tgt->kind() == FieldKind::NumberField && tgt->minpoly() != *c.minpoly) {
      violate("minimal polynomial must be " + c.minpoly->to_string("eta"));
    }
  }
  if (src->kind() == FieldKind::PrimeField && !same_field(src, tgt)) {
    violate("data written over " + src->spec() + " cannot be instantiated over " + tgt->spec());
  }

  FieldElement eta;
  if (req.eta) {
    eta = parse_scalar(*req.eta, tgt);
  } else if (tgt->has_variable()) {
    eta = FieldElement::generator(tgt);
  } else if (p.eta) {
    eta = parse_scalar(*p.eta, tgt);
  } else {
    violate("an explicit --eta value is required over " + tgt->spec());
  }
  if (c.eta && eta != parse_scalar(*c.eta, tgt)) violate("eta is fixed to " + *c.eta);
  for (const auto& e : c.exclude_eta) {
    FieldElement v;
    try {
      v = parse_scalar(e, tgt);
    } catch (const Error&) {
      continue;  // the excluded value does not exist in this field
    }
    if (eta == v) violate("eta = " + e + " is excluded");
  }
  for (const auto& nz : c.nonzero) {
    FieldElement v;
    try {
      v = convert_scalar(nz, src, tgt, eta);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DenominatorVanishes) violate(nz + " is undefined");
      throw;
    }
    if (v.is_zero()) violate(nz + " must be nonzero");
  }

  std::map<std::string, size_t> index;
  for (size_t i = 0; i < p.basis.size(); ++i) index[p.basis[i]] = i;
  const size_t n = p.basis.size();
  auto to_vector = [&](const VectorText& vt) {
    Vector v(tgt, n);
    for (const auto& [label, s] : vt) {
      auto it = index.find(label);
      if (it == index.end()) throw Error(ErrorKind::InvalidInput, "undeclared label '" + label + "'");
      v[it->second] += convert_scalar(s, src, tgt, eta);
    }
    return v;
  };

  Algebra::Table table;
  for (const auto& pt : p.products) {
    auto l = index.find(pt.left), r = index.find(pt.right);
    if (l == index.end() || r == index.end()) throw Error(ErrorKind::InvalidInput, "undeclared label in product");
    auto key = std::minmax(l->second, r->second);
    if (table.count(key)) throw Error(ErrorKind::InvalidInput, "duplicate product " + pt.left + "*" + pt.right);
    table.emplace(key, to_vector(pt.value));
  }
  Instance inst;
  inst.algebra = std::make_shared<const Algebra>(tgt, p.basis, table);
  inst.eta = eta;
  if (p.expected)
    for (const auto& a : p.expected->alpha) inst.expected_alpha.push_back(convert_scalar(a, src, tgt, eta));

  if (p.dihedral) {
    const auto& d = *p.dihedral;
    const AlgebraPtr& alg = inst.algebra;
    std::map<int, Vector> declared;
    for (size_t t = 0; t < d.axes.size(); ++t) declared[d.lo + static_cast<int>(t)] = to_vector(d.axes[t]);
    auto build = [&](const std::vector<std::pair<std::string, VectorText>>& images,
                     const std::string& what) -> std::optional<Matrix> {
      std::vector<std::pair<Vector, Vector>> pairs;
      std::set<size_t> covered;
      for (const auto& [label, img] : images) {
        size_t i = index.at(label);
        covered.insert(i);
        pairs.emplace_back(alg->basis_vector(i), to_vector(img));
      }
      ExtendResult ext = extend_from_generators(alg, pairs, alg);
      if (ext.status == ExtendStatus::Ok) return ext.map->matrix;
      inst.seed_notes.push_back(what + " seed does not extend to a homomorphism (" +
                                extend_status_name(ext.status) + ": " + ext.detail + ")");
      if (covered.size() != n) return std::nullopt;
      Matrix m(tgt, n, n);
      for (const auto& [src_v, img] : pairs) {
        size_t col = 0;
        while (src_v[col].is_zero()) ++col;
        for (size_t r = 0; r < n; ++r) m(r, col) = img[r];
      }
      return m;
    };
    auto f1 = build(d.shift_images, "shift");
    auto tau = build(d.flip_images, "flip");
    if (f1 && tau) {
      int window = req.window ? *req.window : static_cast<int>(n) + 2;
      inst.dihedral = make_dihedral(*alg, declared, *f1, *tau, eta, window);
    }
  }
  return inst;
}

}  // namespace axial
