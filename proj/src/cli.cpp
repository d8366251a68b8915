#include "axial/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "axial/catalog.hpp"
#include "axial/errors.hpp"

namespace axial {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInput = 2;

struct Source {
  Presentation pres;
  std::optional<std::string> default_field;
};

Source load_source(const std::string& s) {
  for (const auto& e : catalog_entries())
    if (e.name == s) return {e.presentation, e.default_field};
  if (!std::filesystem::is_regular_file(s)) {
    throw Error(ErrorKind::UnknownEntry, "'" + s + "' is neither a catalog entry nor a readable file");
  }
  std::ifstream in(s);
  std::stringstream buf;
  buf << in.rdbuf();
  return {presentation_from_json(buf.str()), std::nullopt};
}

Instance load_instance(const Source& src, InstanceRequest req) {
  if (!req.field && src.default_field) req.field = src.default_field;
  return instantiate(src.pres, req);
}

VectorText vector_text(const Vector& v, const Algebra& alg) {
  VectorText t;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) t.emplace_back(alg.labels()[i], v[i].to_string());
  return t;
}

// Presentation of alg / s, with the induced shift and flip when s is stable
// under both.
Presentation quotient_presentation(const Instance& inst, const Subspace& s, const std::string& name,
                                   std::vector<std::string>& warnings) {
  const Algebra& alg = *inst.algebra;
  Quotient q = quotient(inst.algebra, s);
  const Algebra& qa = *q.algebra;
  Presentation p;
  p.name = name;
  p.field = qa.field();
  if (!p.field->has_variable()) p.eta = inst.eta.to_string();
  p.basis = qa.labels();
  for (size_t i = 0; i < qa.dim(); ++i)
    for (size_t j = i; j < qa.dim(); ++j)
      if (const Vector* v = qa.product(i, j)) p.products.push_back({p.basis[i], p.basis[j], vector_text(*v, qa)});
  if (inst.dihedral) {
    const DihedralData& dd = *inst.dihedral;
    bool stable = true;
    for (const auto& v : s.basis())
      stable = stable && contains_vector(s, dd.f1.apply(v)) && contains_vector(s, dd.tau0.apply(v));
    if (!stable) {
      warnings.push_back("the ideal is not stable under the shift and flip; no dihedral block written");
      return p;
    }
    const Matrix& P = q.projection.matrix;
    DihedralText d;
    d.lo = dd.declared.begin()->first;
    d.hi = dd.declared.rbegin()->first;
    for (const auto& [i, v] : dd.declared) d.axes.push_back(vector_text(P.apply(v), qa));
    for (size_t r = 0; r < q.representatives.size(); ++r) {
      Vector e = alg.basis_vector(q.representatives[r]);
      d.shift_images.emplace_back(p.basis[r], vector_text(P.apply(dd.f1.apply(e)), qa));
      d.flip_images.emplace_back(p.basis[r], vector_text(P.apply(dd.tau0.apply(e)), qa));
    }
    p.dihedral = std::move(d);
  }
  return p;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  f << text;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

std::string join_texts(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s;
}

void print_list(std::ostream& out) {
  out << "entries:\n";
  for (const auto& e : catalog_entries()) {
    const Presentation& p = e.presentation;
    out << "  " << e.name << "  dim " << e.dim << "  field " << e.default_field;
    if (p.eta) out << "  eta " << *p.eta;
    if (p.expected) {
      out << "  adim " << p.expected->adim << " " << (p.expected->even ? "even" : "odd") << " case "
          << p.expected->case_tag;
    }
    out << "\n    " << e.title << "\n";
    const auto& c = p.constraints;
    std::vector<std::string> cs;
    if (!c.exclude_eta.empty()) cs.push_back("eta not in {" + join_texts(c.exclude_eta) + "}");
    for (const auto& nz : c.nonzero) cs.push_back(nz + " != 0");
    if (c.eta) cs.push_back("eta = " + *c.eta);
    if (c.minpoly) cs.push_back(c.minpoly->to_string("eta") + " = 0");
    if (c.characteristic) cs.push_back("characteristic " + c.characteristic->get_str());
    if (!cs.empty()) out << "    constraints: " << join_texts(cs) << "\n";
    for (const auto& n : e.notes) out << "    note: " << n << "\n";
  }
  out << "stubs (tables not encoded):\n";
  for (const auto& s : catalog_stubs()) out << "  " << s.name << "  " << s.note << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verifier for dihedral axial decomposition algebras of Majorana type (eta,eta)", "axdec"};
  app.require_subcommand(1);

  std::string source, field, eta, checks = "all";
  bool as_json = false;
  int window = 0;
  auto* verify = app.add_subcommand("verify", "Verify a catalog entry or algebra file");
  verify->add_option("source", source, "Catalog name or file path")->required();
  verify->add_option("--field", field, "q | gf:<p> | qeta | nf:<c0,c1,...>");
  verify->add_option("--eta", eta, "Eigenvalue as a scalar literal over the field");
  verify->add_flag("--json", as_json, "Machine-readable report");
  verify->add_option("--check", checks, "fusion,dihedral,relations,identities or all");
  verify->add_option("--window", window, "Axis window half-width")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "Catalog operations");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List entries and stubs");
  std::string emit_name, output;
  auto* emit = catalog->add_subcommand("emit", "Write an entry as an algebra file");
  emit->add_option("name", emit_name)->required();
  emit->add_option("-o,--output", output, "Output path (default stdout)");
  unsigned workers = 0;
  auto* claims = catalog->add_subcommand("claims", "Verify every entry and discharge the quotient claims");
  claims->add_flag("--json", as_json, "Machine-readable report");
  claims->add_option("--workers", workers, "Worker threads (default: hardware concurrency)");

  std::string src_a, src_b, map_text, field_a, eta_a, field_b, eta_b;
  auto* isom = app.add_subcommand("isom", "Extend a generator correspondence to an isomorphism");
  isom->add_option("a", src_a, "Source algebra")->required();
  isom->add_option("b", src_b, "Target algebra")->required();
  isom->add_option("map", map_text, "Correspondence 'x -> y, ...' of vector literals")->required();
  isom->add_option("--a-field", field_a);
  isom->add_option("--a-eta", eta_a);
  isom->add_option("--b-field", field_b);
  isom->add_option("--b-eta", eta_b);

  std::string q_source;
  std::vector<std::string> q_vectors;
  auto* quot = app.add_subcommand("quotient", "Quotient by the ideal spanned by vector literals");
  quot->add_option("source", q_source)->required();
  quot->add_option("vectors", q_vectors, "Vector literals spanning the ideal")->required();
  quot->add_option("--field", field);
  quot->add_option("--eta", eta);
  quot->add_option("-o,--output", output);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInput;
  }

  auto request = [&](const std::string& f, const std::string& e) {
    InstanceRequest r;
    if (!f.empty()) r.field = f;
    if (!e.empty()) r.eta = e;
    if (window > 0) r.window = window;
    return r;
  };

  try {
    if (*verify) {
      VerifyOptions opts = parse_check_list(checks);
      if (window > 0) opts.window = window;
      Source src = load_source(source);
      Instance inst = load_instance(src, request(field, eta));
      VerifyReport r = verify_instance(src.pres.name, inst, src.pres.expected, opts);
      out << (as_json ? report_json(r) : report_text(r));
      return r.passed() ? kPass : kFail;
    }
    if (*list) {
      print_list(out);
      return kPass;
    }
    if (*emit) {
      write_output(presentation_to_json(export_presentation(find_entry(emit_name))), output, out);
      return kPass;
    }
    if (*claims) {
      ClaimsReport r = check_claims(workers);
      out << (as_json ? claims_json(r) : claims_text(r));
      return r.passed() ? kPass : kFail;
    }
    if (*isom) {
      Instance a = load_instance(load_source(src_a), request(field_a, eta_a));
      Instance b = load_instance(load_source(src_b), request(field_b, eta_b));
      std::vector<std::pair<Vector, Vector>> pairs;
      for (const auto& item : split_list(map_text, ',')) {
        auto arrow = item.find("->");
        if (arrow == std::string::npos) throw Error(ErrorKind::SyntaxError, "expected 'x -> y' in '" + item + "'");
        pairs.emplace_back(parse_vector(item.substr(0, arrow), *a.algebra), parse_vector(item.substr(arrow + 2), *b.algebra));
      }
      if (!same_field(a.algebra->field(), b.algebra->field())) {
        out << "not isomorphic: fields " << a.algebra->field()->spec() << " and " << b.algebra->field()->spec()
            << " differ\n";
        return kFail;
      }
      if (a.algebra->dim() != b.algebra->dim()) {
        out << "not isomorphic: dimensions " << a.algebra->dim() << " and " << b.algebra->dim() << "\n";
        return kFail;
      }
      ExtendResult ext = extend_from_generators(a.algebra, pairs, b.algebra);
      if (ext.status != ExtendStatus::Ok) {
        out << "not isomorphic: " << extend_status_name(ext.status) << ": " << ext.detail << "\n";
        return kFail;
      }
      if (!inverse(ext.map->matrix)) {
        out << "not isomorphic: the homomorphism is not bijective\n";
        return kFail;
      }
      out << "isomorphism:\n";
      for (size_t i = 0; i < a.algebra->dim(); ++i) {
        VectorText t = vector_text(ext.map->matrix.column(i), *b.algebra);
        std::string img;
        for (const auto& [l, c] : t) img += (img.empty() ? "" : " + ") + ("(" + c + ")*" + l);
        out << "  " << a.algebra->labels()[i] << " -> " << (img.empty() ? "0" : img) << "\n";
      }
      return kPass;
    }
    if (*quot) {
      Source src = load_source(q_source);
      Instance inst = load_instance(src, request(field, eta));
      std::vector<Vector> vs;
      for (const auto& t : q_vectors) vs.push_back(parse_vector(t, *inst.algebra));
      Subspace s = Subspace::span(inst.algebra->field(), inst.algebra->dim(), vs);
      if (!is_ideal(*inst.algebra, s)) {
        err << error_name(ErrorKind::NotAnIdeal) << ": the span of the given vectors is not an ideal\n";
        return kFail;
      }
      std::vector<std::string> warnings;
      Presentation p = quotient_presentation(inst, s, src.pres.name + "/I", warnings);
      for (const auto& w : warnings) err << "warning: " << w << "\n";
      write_output(presentation_to_json(p), output, out);
      return kPass;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

}  // namespace axial
