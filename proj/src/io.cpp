#include "isodisc/io.hpp"

#include "isodisc/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace isodisc {

namespace {

Rat rat_from(const Json& j, const char* what) {
  if (!j.is_string()) throw FormatError(std::string(what) + ": expected a rational string");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Index index_from(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw FormatError(std::string(key) + ": expected a count");
  return static_cast<Index>(v.get<long long>());
}

Json vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

QVector vector_from(const Json& j, Index len, const char* what) {
  if (!j.is_array() || (len >= 0 && static_cast<Index>(j.size()) != len)) {
    throw FormatError(std::string(what) + ": wrong vector length");
  }
  QVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rat_from(j[i], what);
  return v;
}

// Row-major list of rows.
Json matrix_to_json(const QMatrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r).transpose()));
  return out;
}

QMatrix matrix_from(const Json& j, Index rows, Index cols, const std::string& what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) throw FormatError(what + ": wrong row count");
  QMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) m.row(r) = vector_from(j[static_cast<std::size_t>(r)], cols, what.c_str()).transpose();
  return m;
}

}  // namespace

Json poly_to_json(const MVPoly& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.nvars()) throw FormatError("poly_to_json: variable name count does not match");
  Json terms = Json::array();
  for (const Term& t : p.terms()) {
    Json exps = Json::array();
    for (std::size_t i = 0; i < p.nvars(); ++i) exps.push_back(t.mono[i]);
    terms.push_back(Json::array({t.coef.str(), exps}));
  }
  return Json{{"vars", vars}, {"terms", terms}};
}

MVPoly poly_from_json(const Json& j, std::vector<std::string>* vars) {
  const Json& jv = field(j, "vars");
  if (!jv.is_array()) throw FormatError("vars: expected a list");
  std::vector<std::string> names;
  for (const Json& n : jv) {
    if (!n.is_string()) throw FormatError("vars: expected strings");
    names.push_back(n.get<std::string>());
  }
  if (names.size() > kMaxVars) throw FormatError("too many variables");
  const Json& jt = field(j, "terms");
  if (!jt.is_array()) throw FormatError("terms: expected a list");
  std::vector<Term> terms;
  for (const Json& t : jt) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array() || t[1].size() != names.size()) {
      throw FormatError("terms: each term is [coefficient, exponents] with one exponent per variable");
    }
    std::vector<unsigned> exps;
    for (const Json& e : t[1]) {
      if (!e.is_number_unsigned() || e.get<unsigned>() > 255) throw FormatError("terms: bad exponent");
      exps.push_back(e.get<unsigned>());
    }
    terms.push_back(Term{Monomial::from_exponents(exps), rat_from(t[0], "coefficient")});
  }
  MVPoly p = MVPoly::from_terms(names.size(), terms);
  if (p.size() != terms.size()) throw FormatError("terms: duplicate monomials or zero coefficients");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (!(p.terms()[k].mono == terms[k].mono)) throw FormatError("terms: not in graded-lex order");
  }
  if (vars) *vars = std::move(names);
  return p;
}

Json action_to_json(const LinearAction& action) {
  Json gens = Json::array();
  for (const QMatrix& g : action.generators) gens.push_back(matrix_to_json(g));
  Json out{{"name", action.name},
           {"d", action.d},
           {"p", action.p},
           {"generators", gens},
           {"inner_g", matrix_to_json(action.inner_g)},
           {"inner_V", matrix_to_json(action.inner_V)},
           {"var_names", action.var_names}};
  if (action.cartan) {
    Json basis = Json::array();
    for (const QVector& b : action.cartan->basis) basis.push_back(vector_to_json(b));
    Json roots = Json::array();
    for (const Root& r : action.cartan->roots) {
      roots.push_back(Json{{"functional", vector_to_json(r.functional)}, {"multiplicity", r.multiplicity}});
    }
    out["cartan"] = Json{{"basis", basis}, {"roots", roots}, {"diagram", action.cartan->diagram}};
  }
  if (action.complex_structure) out["complex_structure"] = matrix_to_json(*action.complex_structure);
  return out;
}

LinearAction action_from_json(const Json& j) {
  LinearAction a;
  const Json& name = field(j, "name");
  if (!name.is_string()) throw FormatError("name: expected a string");
  a.name = name.get<std::string>();
  a.d = index_from(j, "d");
  a.p = index_from(j, "p");
  if (a.d > static_cast<Index>(kMaxVars)) throw FormatError("d exceeds the variable limit");
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || static_cast<Index>(gens.size()) != a.p) throw FormatError("generators: expected p matrices");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    a.generators.push_back(matrix_from(gens[k], a.d, a.d, "generator " + std::to_string(k)));
  }
  a.inner_g = matrix_from(field(j, "inner_g"), a.p, a.p, "inner_g");
  a.inner_V = matrix_from(field(j, "inner_V"), a.d, a.d, "inner_V");
  if (j.contains("var_names")) {
    for (const Json& n : j.at("var_names")) {
      if (!n.is_string()) throw FormatError("var_names: expected strings");
      a.var_names.push_back(n.get<std::string>());
    }
  } else {
    a.var_names = default_names(static_cast<std::size_t>(a.d));
  }
  if (j.contains("cartan")) {
    const Json& jc = j.at("cartan");
    CartanData cd;
    const Json& basis = field(jc, "basis");
    if (!basis.is_array()) throw FormatError("cartan.basis: expected a list");
    for (const Json& b : basis) cd.basis.push_back(vector_from(b, a.d, "cartan.basis"));
    cd.r = static_cast<Index>(cd.basis.size());
    const Json& roots = field(jc, "roots");
    if (!roots.is_array()) throw FormatError("cartan.roots: expected a list");
    for (const Json& r : roots) {
      const Json& mult = field(r, "multiplicity");
      if (!mult.is_number_integer()) throw FormatError("cartan.roots: multiplicity must be an integer");
      cd.roots.push_back(Root{vector_from(field(r, "functional"), cd.r, "cartan.roots"), mult.get<int>()});
    }
    const Json& diagram = field(jc, "diagram");
    if (!diagram.is_string()) throw FormatError("cartan.diagram: expected a string");
    cd.diagram = diagram.get<std::string>();
    a.cartan = std::move(cd);
  }
  if (j.contains("complex_structure")) a.complex_structure = matrix_from(j.at("complex_structure"), a.d, a.d, "complex_structure");
  validate(a);
  if (a.cartan) {
    auto key = [](const std::vector<Root>& roots) {
      std::vector<std::pair<std::vector<std::string>, int>> out;
      for (const Root& r : roots) {
        std::vector<std::string> f;
        for (Index k = 0; k < r.functional.size(); ++k) f.push_back(r.functional(k).str());
        out.emplace_back(std::move(f), r.multiplicity);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (key(a.cartan->roots) != key(derive_roots(a, a.cartan->basis))) {
      throw ActionError("cartan roots do not match the roots read off the generators");
    }
  }
  return a;
}

Json certificate_to_json(const SosCertificate& cert) {
  const std::vector<std::string> vars =
      cert.var_names.empty() && !cert.squares.empty() ? default_names(cert.squares.front().poly.nvars()) : cert.var_names;
  Json squares = Json::array();
  for (const WeightedSquare& s : cert.squares) {
    squares.push_back(Json{{"weight", s.weight.str()}, {"poly", poly_to_json(s.poly, vars)}});
  }
  return Json{{"case", cert.case_label},
              {"n", cert.n},
              {"constant", cert.constant.str()},
              {"squares", squares},
              {"component", Json{{"dim", cert.component_dim}, {"casimir_eigenvalue", cert.casimir_eigenvalue.str()}}},
              {"verified", cert.verified},
              {"vars", vars}};
}

SosCertificate certificate_from_json(const Json& j) {
  SosCertificate c;
  const Json& label = field(j, "case");
  if (!label.is_string()) throw FormatError("case: expected a string");
  c.case_label = label.get<std::string>();
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) throw FormatError("n: expected an integer");
  c.n = n.get<int>();
  c.constant = rat_from(field(j, "constant"), "constant");
  const Json& vars = field(j, "vars");
  if (!vars.is_array()) throw FormatError("vars: expected a list");
  for (const Json& v : vars) {
    if (!v.is_string()) throw FormatError("vars: expected strings");
    c.var_names.push_back(v.get<std::string>());
  }
  const Json& squares = field(j, "squares");
  if (!squares.is_array()) throw FormatError("squares: expected a list");
  for (const Json& s : squares) {
    std::vector<std::string> sv;
    MVPoly p = poly_from_json(field(s, "poly"), &sv);
    if (sv != c.var_names) throw FormatError("squares: variable names differ from the certificate");
    c.squares.push_back(WeightedSquare{rat_from(field(s, "weight"), "weight"), std::move(p)});
  }
  const Json& comp = field(j, "component");
  c.component_dim = index_from(comp, "dim");
  c.casimir_eigenvalue = rat_from(field(comp, "casimir_eigenvalue"), "casimir_eigenvalue");
  const Json& verified = field(j, "verified");
  if (!verified.is_boolean()) throw FormatError("verified: expected a boolean");
  c.verified = verified.get<bool>();
  return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace isodisc
