// pte: command-line front end for the exact multigrade-solution toolkit.
//
// Exit codes: 0 success/verified, 1 verification failure, 2 usage error,
// 3 domain error.  All entries are read and written as exact decimal strings;
// no floating point is involved anywhere.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pte/elliptic.hpp"
#include "pte/errors.hpp"
#include "pte/families.hpp"
#include "pte/fermat.hpp"
#include "pte/poly.hpp"
#include "pte/search.hpp"
#include "pte/shift.hpp"
#include "pte/solution.hpp"

namespace {

using nlohmann::json;

// Read the whole input: a named file when --in was given, stdin otherwise.
std::string slurp_input(const std::string& in_path) {
  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in)
      pte::fail(pte::ErrorCode::ParseError, "cannot open input file '" + in_path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

pte::MultigradeSolution read_solution(const std::string& in_path) {
  return pte::parse_solution(slurp_input(in_path));
}

void print_solution(const pte::MultigradeSolution& sol, bool as_json) {
  std::cout << (as_json ? pte::format_json(sol) : pte::format_text(sol)) << "\n";
}

// "m1=1,m2=-3/2" -> {m1: 1, m2: -3/2}
std::map<std::string, pte::Rat> parse_params(const std::string& raw) {
  std::map<std::string, pte::Rat> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      pte::fail(pte::ErrorCode::ParseError,
                "parameter '" + item + "' is not of the form name=value");
    out[item.substr(0, eq)] = pte::parse_rat(item.substr(eq + 1));
  }
  return out;
}

std::vector<pte::Rat> parse_rat_list(const std::string& raw) {
  std::vector<pte::Rat> out;
  std::istringstream in(raw);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(pte::parse_rat(item));
  return out;
}

const char* symmetry_name(pte::SymmetryClass c) {
  switch (c) {
    case pte::SymmetryClass::SymmetricOdd: return "SymmetricOdd";
    case pte::SymmetryClass::SymmetricEven: return "SymmetricEven";
    case pte::SymmetryClass::Nonsymmetric: return "Nonsymmetric";
  }
  return "Nonsymmetric";
}

const char* ascent_name(pte::AscentKind k) {
  switch (k) {
    case pte::AscentKind::Tangent: return "tangent";
    case pte::AscentKind::Secant: return "secant";
    case pte::AscentKind::GloballySquare: return "globally-square";
  }
  return "tangent";
}

int run_verify(const std::string& in_path, int cap, bool has_cap, bool as_json) {
  pte::MultigradeSolution sol = read_solution(in_path);
  pte::VerifyReport report =
      has_cap ? pte::verify_degree(sol, cap) : pte::verify_degree(sol);
  bool verified = report.max_degree >= sol.degree;

  if (as_json) {
    json doc;
    doc["degree"] = sol.degree;
    doc["per_exponent"] = json::array();
    for (const auto& [r, holds] : report.per_exponent)
      doc["per_exponent"].push_back({{"r", r}, {"holds", holds}});
    doc["max_degree"] = report.max_degree;
    doc["verified"] = verified;
    std::cout << doc.dump() << "\n";
  } else {
    for (const auto& [r, holds] : report.per_exponent)
      std::cout << "r=" << r << " " << (holds ? "equal" : "differs") << "\n";
    std::cout << "max_degree=" << report.max_degree << "\n";
    std::cout << "verified=" << (verified ? "yes" : "no") << "\n";
  }
  return verified ? 0 : 1;
}

int run_prove(const std::string& id_name, bool as_json) {
  pte::FamilyId id = pte::parse_family_id(id_name);
  pte::IdentityReport report = pte::verify_identity_family(id);
  if (as_json) {
    json doc;
    doc["family"] = pte::family_name(report.id);
    doc["degree"] = report.degree;
    doc["exponents_proved"] = report.exponents_proved;
    doc["products_checked"] = report.products_checked;
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << pte::family_name(report.id)
              << ": power sums agree identically for r = 1.." << report.degree
              << "\n";
    if (report.products_checked)
      std::cout << pte::family_name(report.id)
                << ": side products agree identically\n";
  }
  return 0;
}

int run_fermat(const std::string& coeffs_raw, const std::string& start_raw,
               int steps, bool as_json) {
  std::vector<pte::Rat> cs = parse_rat_list(coeffs_raw);
  if (cs.size() != 5)
    pte::fail(pte::ErrorCode::ParseError, "--coeffs needs exactly five values");
  pte::QuarticForm f{cs[0], cs[1], cs[2], cs[3], cs[4]};
  pte::Rat t = pte::parse_rat(start_raw);
  for (int i = 0; i < steps; ++i) {
    pte::AscentResult res = pte::fermat_ascent(f, t);
    if (as_json) {
      json doc;
      doc["t"] = pte::to_string(res.t);
      doc["kind"] = ascent_name(res.kind);
      std::cout << doc.dump() << "\n";
    } else {
      std::cout << pte::to_string(res.t) << " " << ascent_name(res.kind) << "\n";
    }
    t = res.t;
  }
  return 0;
}

int run_ec(int multiple, bool deg7, bool as_json) {
  pte::EllipticCurve curve = pte::deg5_curve();
  pte::ECPoint pt = pte::scalar_mul(curve, multiple, pte::deg5_generator());
  pte::QuarticPoint qp = pte::weierstrass_to_quartic(pt);
  pte::MultigradeSolution sol =
      deg7 ? pte::point_to_deg7(qp) : pte::point_to_deg5(qp);
  print_solution(sol, as_json);
  return 0;
}

int run_search(int k, int s, long long bound, int jobs) {
  pte::SearchOptions opts;
  opts.jobs = jobs;
  for (const auto& sol : pte::brute_force_ideal(k, s, bound, opts))
    std::cout << pte::format_json(sol) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and verification of ideal multigrade solutions"};
  app.require_subcommand(1);

  std::string in_path;
  bool as_json = false;
  int cap = 0;
  std::string family_id, params_raw, coeffs_raw, start_raw;
  std::vector<long long> shifts;
  int steps = 1, multiple = 1, k = 0, s = 0, jobs = 1;
  long long bound = 0;
  bool want_deg5 = false, want_deg7 = false;

  auto* c_verify = app.add_subcommand("verify", "check the power-sum system of a solution");
  c_verify->add_option("--in", in_path, "read the solution from a file instead of stdin");
  auto* cap_opt = c_verify->add_option("--cap", cap, "highest exponent to test (default: degree+2)");
  c_verify->add_flag("--json", as_json, "emit JSON");

  auto* c_reduce = app.add_subcommand("reduce", "print the canonical reduced form");
  c_reduce->add_option("--in", in_path, "read the solution from a file instead of stdin");
  c_reduce->add_flag("--json", as_json, "emit JSON");

  auto* c_classify = app.add_subcommand("classify", "report the symmetry class");
  c_classify->add_option("--in", in_path, "read the solution from a file instead of stdin");
  c_classify->add_flag("--json", as_json, "emit JSON");

  auto* c_shift = app.add_subcommand("shift", "raise the degree by translation steps");
  c_shift->set_help_flag("--help", "print help");  // frees -h/--h for the step value
  c_shift->add_option("--h", shifts, "translation step; repeat to chain")->required();
  c_shift->add_option("--in", in_path, "read the solution from a file instead of stdin");
  c_shift->add_flag("--json", as_json, "emit JSON");

  auto* c_family = app.add_subcommand("family", "evaluate a parametric family");
  c_family->add_option("id", family_id, "family id (see 'pte prove --help')")->required();
  c_family->add_option("--params", params_raw, "comma-separated name=value list")->required();
  c_family->add_flag("--json", as_json, "emit JSON");

  auto* c_prove = app.add_subcommand(
      "prove", "prove a family identity symbolically; ids: Deg4SixTerm, Deg4A, "
               "Deg4B, Deg5Sym1, Deg5Sym2, Deg5Nonsym, Deg6, Deg7, EqProdDeg4, "
               "EqProdDeg5");
  c_prove->add_option("id", family_id, "family id")->required();
  c_prove->add_flag("--json", as_json, "emit JSON");

  auto* c_ec = app.add_subcommand("ec", "run the elliptic-curve generator");
  c_ec->add_option("--multiple", multiple, "which multiple of the generator to use")->required();
  auto* f5 = c_ec->add_flag("--deg5", want_deg5, "emit the degree-5 solution (default)");
  c_ec->add_flag("--deg7", want_deg7, "emit the degree-7 solution")->excludes(f5);
  c_ec->add_flag("--json", as_json, "emit JSON");

  auto* c_fermat = app.add_subcommand("fermat", "ascend a quartic's square values");
  c_fermat->add_option("--coeffs", coeffs_raw, "c0,c1,c2,c3,c4 of the quartic")->required();
  c_fermat->add_option("--start", start_raw, "rational t with f(t) a nonzero square")->required();
  c_fermat->add_option("--steps", steps, "number of ascent steps (default 1)")
      ->check(CLI::PositiveNumber);
  c_fermat->add_flag("--json", as_json, "emit JSON");

  auto* c_search = app.add_subcommand("search", "brute-force ideal solutions in a box");
  c_search->add_option("--k", k, "degree")->required();
  c_search->add_option("--s", s, "entries per side")->required();
  c_search->add_option("--bound", bound, "absolute bound on the entries")->required();
  c_search->add_option("--jobs", jobs, "worker threads (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_verify->parsed())
      return run_verify(in_path, cap, cap_opt->count() > 0, as_json);
    if (c_reduce->parsed()) {
      print_solution(pte::reduce(read_solution(in_path)), as_json);
      return 0;
    }
    if (c_classify->parsed()) {
      const char* name = symmetry_name(pte::classify_symmetry(read_solution(in_path)));
      if (as_json)
        std::cout << json{{"symmetry", name}}.dump() << "\n";
      else
        std::cout << name << "\n";
      return 0;
    }
    if (c_shift->parsed()) {
      std::vector<pte::Int> hs(shifts.begin(), shifts.end());
      print_solution(pte::shift_chain(read_solution(in_path), hs), as_json);
      return 0;
    }
    if (c_family->parsed()) {
      pte::FamilyId id = pte::parse_family_id(family_id);
      print_solution(pte::generate_family(id, parse_params(params_raw)), as_json);
      return 0;
    }
    if (c_prove->parsed()) return run_prove(family_id, as_json);
    if (c_ec->parsed()) return run_ec(multiple, want_deg7, as_json);
    if (c_fermat->parsed()) return run_fermat(coeffs_raw, start_raw, steps, as_json);
    if (c_search->parsed()) return run_search(k, s, bound, jobs);
  } catch (const pte::Error& e) {
    std::cerr << "pte: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "pte: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
