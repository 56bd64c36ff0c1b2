// isodisc command-line front end. Report lines start with "RESULT:".
#include "isodisc/catalog.hpp"
#include "isodisc/discriminant.hpp"
#include "isodisc/equivariant.hpp"
#include "isodisc/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace isodisc;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kRefused = 3;

struct Target {
  std::string case_label;
  int n = 0;
  std::string action_file;
};

struct Globals {
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultWedgeCap;
};

void add_target(CLI::App* cmd, Target& t) {
  cmd->add_option("--case", t.case_label, "catalog case");
  cmd->add_option("--n", t.n, "matrix size for sized cases");
  cmd->add_option("--action", t.action_file, "action file instead of a catalog case");
}

LinearAction load_target(const Target& t, const Globals& g) {
  if (!t.action_file.empty()) return action_from_json(parse_document(read_file(t.action_file)));
  if (t.case_label.empty()) throw std::invalid_argument("one of --case or --action is required");
  const CaseId id = parse_case(t.case_label);
  if (case_has_size(id) && t.n < 1) throw std::invalid_argument("--n is required for " + t.case_label);
  return build_case(id, t.n, g.cap);
}

std::string label_of(const Target& t, const LinearAction& a) { return t.case_label.empty() ? a.name : t.case_label; }

void result(const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream os;
  os << "RESULT:";
  for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
  std::cout << os.str() << '\n';
}

MVPoly compute_delta(const LinearAction& a, const Globals& g, const std::string& method, Index m) {
  if (method == "minors") return discriminant_minors(a, m, g.cap);
  if (method == "charpoly") return discriminant_charcoeff(a, m);
  throw std::invalid_argument("unknown method " + method);
}

// Minors when the metrics allow and the cap holds, otherwise charpoly.
MVPoly default_delta(const LinearAction& a, const Globals& g, Index m) {
  if (is_diagonal(a.inner_V) && is_diagonal(a.inner_g)) {
    try {
      return discriminant_minors(a, m, g.cap);
    } catch (const CapExceeded&) {
    }
  }
  return discriminant_charcoeff(a, m);
}

int cmd_catalog(const Globals& g) {
  for (CaseId id : all_cases()) {
    std::vector<int> sizes = case_has_size(id) ? std::vector<int>{2, 3, 4} : std::vector<int>{0};
    for (int n : sizes) {
      const LinearAction a = build_case(id, n, g.cap);
      result({{"case", case_label(id)},
              {"n", std::to_string(n)},
              {"d", std::to_string(a.d)},
              {"p", std::to_string(a.p)},
              {"m", std::to_string(orbit_dim(a, g.seed))},
              {"polar", a.polar() ? "true" : "false"},
              {"diagram", a.cartan ? a.cartan->diagram : "-"}});
    }
  }
  return kOk;
}

int cmd_discriminant(const Target& t, const Globals& g, const std::string& method, const std::string& out) {
  const LinearAction a = load_target(t, g);
  const Index m = orbit_dim(a, g.seed);
  const MVPoly delta = method.empty() ? default_delta(a, g, m) : compute_delta(a, g, method, m);
  if (!out.empty()) write_file(out, dump(poly_to_json(delta, a.var_names)));
  result({{"case", label_of(t, a)},
          {"n", std::to_string(t.n)},
          {"m", std::to_string(m)},
          {"degree", std::to_string(2 * m)},
          {"terms", std::to_string(delta.size())},
          {"method", method.empty() ? "auto" : method}});
  return kOk;
}

int cmd_verify_roots(const Target& t, const Globals& g) {
  const LinearAction a = load_target(t, g);
  if (!a.cartan) throw NotPolar(a.name + " has no cartan data");
  const MVPoly delta = default_delta(a, g, orbit_dim(a, g.seed));
  const std::optional<Rat> c = equal_mod_constant(restrict_cartan(delta, *a.cartan), root_product(*a.cartan));
  const bool ok = c && c->sign() > 0;
  result({{"case", label_of(t, a)},
          {"n", std::to_string(t.n)},
          {"roots", std::to_string(a.cartan->roots.size())},
          {"constant", c ? c->str() : "none"},
          {"verified", ok ? "true" : "false"}});
  return ok ? kOk : kFalse;
}

int cmd_sos(const Target& t, const Globals& g, const std::string& out) {
  const LinearAction a = load_target(t, g);
  SearchOptions opts;
  opts.seed = g.seed;
  opts.cap = g.cap;
  opts.case_label = label_of(t, a);
  opts.n = t.n;
  const SosCertificate cert = sos_search(a, opts);
  if (!out.empty()) write_file(out, dump(certificate_to_json(cert)));
  result({{"case", cert.case_label},
          {"n", std::to_string(cert.n)},
          {"squares", std::to_string(cert.squares.size())},
          {"constant", cert.constant.str()},
          {"component_dim", std::to_string(cert.component_dim)},
          {"casimir_eigenvalue", cert.casimir_eigenvalue.str()},
          {"verified", cert.verified ? "true" : "false"}});
  return cert.verified ? kOk : kFalse;
}

int cmd_verify_cert(const Target& t, const Globals& g, const std::string& path) {
  SosCertificate cert = certificate_from_json(parse_document(read_file(path)));
  Target target = t;
  if (target.case_label.empty() && target.action_file.empty()) {
    target.case_label = cert.case_label;
    target.n = cert.n;
  }
  const LinearAction a = load_target(target, g);
  if (cert.var_names.size() != static_cast<std::size_t>(a.d)) throw FormatError("certificate has the wrong number of variables");
  const MVPoly delta = default_delta(a, g, orbit_dim(a, g.seed));
  const bool ok = verify_certificate(cert, delta);
  result({{"case", label_of(target, a)},
          {"n", std::to_string(target.n)},
          {"squares", std::to_string(cert.squares.size())},
          {"constant", cert.constant.str()},
          {"verified", ok ? "true" : "false"}});
  return ok ? kOk : kFalse;
}

int cmd_phi_astar(const Target& t, const Globals& g) {
  const LinearAction a = load_target(t, g);
  const bool zero = check_phi_astar_zero(a, g.seed);
  result({{"case", label_of(t, a)}, {"n", std::to_string(t.n)}, {"phi_astar_zero", zero ? "true" : "false"}});
  return zero ? kOk : kFalse;
}

int cmd_kostant(const Target& t, const Globals& g) {
  const LinearAction a = load_target(t, g);
  const KostantReport rep = kostant_check(a, g.seed);
  const bool ok = rep.max_eigenvalue == Rat(static_cast<long>(rep.r));
  result({{"case", label_of(t, a)},
          {"n", std::to_string(t.n)},
          {"r", std::to_string(rep.r)},
          {"max_eigenvalue", rep.max_eigenvalue.str()},
          {"top_dim", std::to_string(rep.top_dim)},
          {"ker_a", std::to_string(rep.kernel_a)},
          {"casimir", rep.status},
          {"verified", ok ? "true" : "false"}});
  return ok ? kOk : kFalse;
}

int cmd_oracle_compare(const Target& t, const Globals& g) {
  const LinearAction a = load_target(t, g);
  const Index m = orbit_dim(a, g.seed);
  const bool equal = discriminant_minors(a, m, g.cap) == discriminant_charcoeff(a, m);
  std::cout << (equal ? "EQUAL" : "DIFFERENT") << '\n';
  result({{"case", label_of(t, a)}, {"n", std::to_string(t.n)}, {"m", std::to_string(m)}, {"equal", equal ? "true" : "false"}});
  return equal ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discriminants of polar representations as weighted sums of squares"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--cap", g.cap, "maximal wedge-space dimension")->capture_default_str();

  Target t;
  std::string method, out, cert_path;
  auto* catalog = app.add_subcommand("catalog", "list catalog cases and dimensions");
  auto* disc = app.add_subcommand("discriminant", "compute delta and write it as a polynomial file");
  add_target(disc, t);
  disc->add_option("--method", method, "minors or charpoly")->check(CLI::IsMember({"minors", "charpoly"}));
  disc->add_option("--out", out, "output polynomial file");
  auto* roots = app.add_subcommand("verify-roots", "compare delta on the Cartan subspace with the root product");
  add_target(roots, t);
  auto* sos = app.add_subcommand("sos", "search a weighted sum-of-squares certificate");
  add_target(sos, t);
  sos->add_option("--out", out, "output certificate file");
  auto* vcert = app.add_subcommand("verify-cert", "verify a certificate file symbolically");
  add_target(vcert, t);
  vcert->add_option("--cert", cert_path, "certificate file")->required();
  auto* pa = app.add_subcommand("phi-astar", "check that Phi kills the image of A*");
  add_target(pa, t);
  auto* kos = app.add_subcommand("kostant", "maximal normalized Casimir eigenvalue on Lambda^r V");
  add_target(kos, t);
  auto* oc = app.add_subcommand("oracle-compare", "minors route against characteristic coefficients");
  add_target(oc, t);

  // Global flags may also follow the subcommand.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*catalog) return cmd_catalog(g);
    if (*disc) return cmd_discriminant(t, g, method, out);
    if (*roots) return cmd_verify_roots(t, g);
    if (*sos) return cmd_sos(t, g, out);
    if (*vcert) return cmd_verify_cert(t, g, cert_path);
    if (*pa) return cmd_phi_astar(t, g);
    if (*kos) return cmd_kostant(t, g);
    if (*oc) return cmd_oracle_compare(t, g);
  } catch (const CapExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const SpectrumError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const NoComponentFound& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ActionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
