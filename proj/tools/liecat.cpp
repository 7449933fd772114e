// liecat command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liecat/category.hpp"
#include "liecat/endomorphism.hpp"
#include "liecat/error.hpp"
#include "liecat/io.hpp"
#include "liecat/parse.hpp"
#include "liecat/verifier.hpp"

namespace {

using nlohmann::json;
using namespace liecat;

struct Common {
  std::string field = "q";
  std::string gens = "2";
  std::size_t max_degree = 6;
  std::string format = "text";
};

void add_common(CLI::App* app, Common& c, bool with_gens = true) {
  app->add_option("--field", c.field, "q or q-sqrt:<d>")->capture_default_str();
  if (with_gens) app->add_option("--gens", c.gens, "generator count or comma-separated names")->capture_default_str();
  app->add_option("--max-degree", c.max_degree, "degree cap of the basis table")->capture_default_str();
  app->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(item);
  }
  return out;
}

/// "3" gives default names, "x,y,z" gives those names.
std::vector<std::string> generator_names(const std::string& spec) {
  if (!spec.empty() && spec.find_first_not_of("0123456789") == std::string::npos) {
    const auto n = std::stoul(spec);
    if (n == 0) throw Error(ErrorCode::ConfigInvalid, "at least one generator is required");
    return BasisTable::default_names(n);
  }
  return split_names(spec);
}

TablePtr table_for(const std::string& gens, std::size_t cap) { return generate_basis(generator_names(gens), cap); }

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- basis

int cmd_basis(const Common& c) {
  auto t = table_for(c.gens, c.max_degree);
  if (c.format == "json") {
    print(basis_json(*t));
    return 0;
  }
  for (std::size_t d = 1; d <= t->cap(); ++d) {
    std::cout << "degree " << d << " (dim " << t->degree(d).size() << ")\n";
    for (const auto& hw : t->degree(d)) std::cout << "  " << t->spelling(hw.index) << "  " << t->bracketing(hw.index) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- eval

int cmd_eval(const Common& c, const std::string& expr) {
  auto t = table_for(c.gens, c.max_degree);
  const Field field = Field::parse(c.field);
  const LiePoly p = parse_expr(expr, t, field);
  if (c.format == "json") {
    print({{"expr", format_expr(p)}, {"degree", degree(p)}, {"terms", terms_json(p)}});
  } else {
    std::cout << format_expr(p) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- endo

struct EndoArgs {
  std::string map;
  std::string with;
  std::string expr;
  std::string a;
  std::string sigma = "id";
};

void print_endo(const Common& c, const Endo& phi) {
  if (c.format == "json") {
    print(assignment_json(phi.images(), phi.table()));
  } else {
    std::cout << format_assignment(phi.images(), phi.table()) << "\n";
  }
}

int cmd_endo(const std::string& action, const Common& c, const EndoArgs& e) {
  auto t = table_for(c.gens, c.max_degree);
  const Field field = Field::parse(c.field);
  const Endo phi(t, parse_assignment(e.map, t, t, field));
  if (action == "apply") {
    if (e.expr.empty()) throw CLI::ValidationError("--expr", "endo apply needs --expr");
    const LiePoly p = phi(parse_expr(e.expr, t, field));
    if (c.format == "json") {
      print({{"expr", format_expr(p)}, {"terms", terms_json(p)}});
    } else {
      std::cout << format_expr(p) << "\n";
    }
  } else if (action == "compose") {
    if (e.with.empty()) throw CLI::ValidationError("--with", "endo compose needs --with");
    print_endo(c, compose(phi, Endo(t, parse_assignment(e.with, t, t, field))));
  } else if (action == "conjugate") {
    if (e.sigma != "id") {
      if (e.sigma != "conj") throw CLI::ValidationError("--sigma", "expected id or conj");
      const SemiMorphism s = make_sigma_F(FieldAut::conjugation(field), t, field);
      print_endo(c, semi_conjugate(s, phi));
    } else {
      if (e.a.empty()) throw CLI::ValidationError("--a", "endo conjugate needs --a or --sigma conj");
      print_endo(c, inner_conjugate(parse_scalar(e.a, field), phi));
    }
  } else if (action == "classify") {
    json out = {{"constant", is_constant(phi)}, {"linear", is_linear(phi)},       {"scalar", is_scalar(phi)},
                {"diagonal", is_diagonal(phi)}, {"permutation", is_permutation(phi)}, {"triangular", is_triangular(phi)},
                {"degree", degree(phi)}};
    if (c.format == "json") {
      print(out);
    } else {
      for (const auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << "\n";
    }
  } else if (action == "automorphism") {
    std::optional<Endo> witness;
    if (!e.with.empty()) witness = Endo(t, parse_assignment(e.with, t, t, field));
    const AutomorphismCheck res = check_automorphism(phi, witness);
    if (c.format == "json") {
      json out = {{"verdict", to_string(res.verdict)}, {"reason", res.reason}};
      if (res.inverse) out["inverse"] = assignment_json(res.inverse->images(), t);
      print(out);
    } else {
      std::cout << to_string(res.verdict) << ": " << res.reason << "\n";
      if (res.inverse) std::cout << "inverse: " << format_assignment(res.inverse->images(), t) << "\n";
    }
  } else if (action == "matrix") {
    const MatrixN m = to_matrix(phi);
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
      rows.push_back(row);
    }
    if (c.format == "json") {
      print({{"matrix", rows}, {"determinant", determinant(m).to_string()}});
    } else {
      for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j].get<std::string>();
        std::cout << "\n";
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------- duality

struct DualityArgs {
  std::string src_gens = "1";
  std::string tgt_gens = "2";
  std::string h_gens = "u,v";
  std::string map;
  std::string map2;
  std::size_t budget = 4;
  std::size_t max_points = 200;
};

int cmd_duality(const std::string& action, const Common& c, const DualityArgs& d) {
  const Field field = Field::parse(c.field);
  const FObject Y(table_for(d.src_gens, 1));
  const FObject X(table_for(d.tgt_gens, c.max_degree));
  const Morphism s1(Y, X, parse_assignment(d.map, Y.table(), X.table(), field));
  std::vector<Morphism> ms = {s1};
  if (action == "separate") {
    if (d.map2.empty()) throw CLI::ValidationError("--map2", "duality separate needs --map2");
    ms.emplace_back(Y, X, parse_assignment(d.map2, Y.table(), X.table(), field));
  }
  auto h = h_table_for(ms, generator_names(d.h_gens), d.budget);
  json out;
  std::string text;
  if (action == "check") {
    const DualityCheck res = check_duality(s1, h, d.budget, d.max_points);
    out = {{"verdict", res.ok() ? "commutes" : "fails"},
           {"points", res.points},
           {"square_failures", res.square_failures},
           {"decomposition_failures", res.decomposition_failures},
           {"budget_degree", d.budget}};
    text = std::string(res.ok() ? "commutes" : "fails") + " at " + std::to_string(res.points) + " points";
  } else {
    const SeparationResult res = find_separating_point(ms[0], ms[1], h, d.budget);
    out = {{"verdict", res.found() ? "separated" : "NotFound"},
           {"points_tried", res.points_tried},
           {"budget_degree", res.budget_degree}};
    if (res.found()) {
      out["witness"] = point_json(*res.witness);
      const Point p1 = tilde_map(ms[0], *res.witness), p2 = tilde_map(ms[1], *res.witness);
      out["images"] = {{"s1", assignment_json(p1.images, Y.table())}, {"s2", assignment_json(p2.images, Y.table())}};
      text = "separated by " + format_assignment(res.witness->images, X.table());
    } else {
      text = "NotFound after " + std::to_string(res.points_tried) + " points (budget degree " +
             std::to_string(res.budget_degree) + ")";
    }
  }
  if (c.format == "json") {
    print(out);
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> gens;
  std::optional<std::string> field;
  std::string report;
  std::string format = "json";
  unsigned jobs = 0;
};

int cmd_verify(const std::string& which, const VerifyArgs& v) {
  SuiteConfig cfg;
  cfg.seed = v.seed;
  cfg.cases = v.cases;
  cfg.max_degree = v.max_degree;
  cfg.n_gens = v.gens;
  if (v.field) cfg.field = Field::parse(*v.field);
  std::vector<Report> reports;
  if (which == "all") {
    reports = run_all(cfg, v.jobs);
  } else {
    reports.push_back(run_suite(which, cfg));
  }
  bool all_pass = true;
  json full = json::array();
  json summary = json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass();
    full.push_back(to_json(r));
    json line = {{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed}, {"failed", r.failed},
                 {"verdict", r.error ? "ERROR" : (r.pass() ? "PASS" : "FAIL")}};
    if (r.error) line["error"] = *r.error;
    summary.push_back(line);
  }
  if (!v.report.empty()) {
    std::ofstream out(v.report, std::ios::binary);
    if (!out) throw Error(ErrorCode::ConfigInvalid, "cannot write report to '" + v.report + "'");
    out << full.dump(2) << "\n";
  }
  if (v.format == "json") {
    print({{"seed", v.seed}, {"suites", summary}, {"verdict", all_pass ? "PASS" : "FAIL"}});
  } else {
    for (const auto& s : summary)
      std::cout << s["verdict"].get<std::string>() << " " << s["suite"].get<std::string>() << " ("
                << s["passed"].get<std::size_t>() << "/" << s["cases"].get<std::size_t>() << ")\n";
  }
  for (const auto& r : reports)
    if (r.error) std::cerr << "error: " << r.suite << ": " << *r.error << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in free Lie algebras and their endomorphism semigroups"};
  app.require_subcommand(1);

  Common common;

  auto* basis = app.add_subcommand("basis", "list the Lyndon basis up to a degree");
  add_common(basis, common);

  std::string expr;
  auto* eval = app.add_subcommand("eval", "normalize a Lie expression");
  eval->add_option("expr", expr, "expression such as \"[x,[x,y]] - 2*[y,x]\"")->required();
  add_common(eval, common);

  EndoArgs endo_args;
  std::string endo_action;
  auto* endo = app.add_subcommand("endo", "endomorphisms given by generator images");
  endo->add_option("action", endo_action, "apply|compose|conjugate|classify|automorphism|matrix")
      ->required()
      ->check(CLI::IsMember({"apply", "compose", "conjugate", "classify", "automorphism", "matrix"}));
  endo->add_option("--map", endo_args.map, "\"x=>[x,y]; y=>y\"")->required();
  endo->add_option("--with", endo_args.with, "second map (compose: applied first; automorphism: inverse witness)");
  endo->add_option("--expr", endo_args.expr, "element to apply the map to");
  endo->add_option("--a", endo_args.a, "scalar for conjugation by x -> a x");
  endo->add_option("--sigma", endo_args.sigma, "id or conj (conjugate by the coefficient automorphism)")
      ->capture_default_str();
  add_common(endo, common);

  DualityArgs dual_args;
  std::string dual_action;
  auto* dual = app.add_subcommand("duality", "points of free algebras and morphism separation");
  dual->add_option("action", dual_action, "check|separate")->required()->check(CLI::IsMember({"check", "separate"}));
  dual->add_option("--src-gens", dual_args.src_gens, "generators of the source F(Y)")->capture_default_str();
  dual->add_option("--tgt-gens", dual_args.tgt_gens, "generators of the target F(X)")->capture_default_str();
  dual->add_option("--h-gens", dual_args.h_gens, "generators of H")->capture_default_str();
  dual->add_option("--map", dual_args.map, "s: \"y=>[x1,x2]\"")->required();
  dual->add_option("--map2", dual_args.map2, "second morphism for separate");
  dual->add_option("--budget-degree", dual_args.budget, "highest degree of candidate point images")
      ->capture_default_str();
  dual->add_option("--max-points", dual_args.max_points, "points evaluated by check")->capture_default_str();
  add_common(dual, common, false);

  VerifyArgs verify_args;
  std::string which;
  auto* verify = app.add_subcommand("verify", "run seeded property suites");
  verify->add_option("suite", which, "all or one suite name")->required();
  verify->add_option("--seed", verify_args.seed)->capture_default_str();
  verify->add_option("--cases", verify_args.cases, "cases per suite (default: per suite)");
  verify->add_option("--max-degree", verify_args.max_degree, "degree bound (default: per suite)");
  verify->add_option("--gens", verify_args.gens, "single rank to sample (default: per suite)");
  verify->add_option("--field", verify_args.field, "q or q-sqrt:<d> (default: per suite)");
  verify->add_option("--report", verify_args.report, "write full JSON reports here");
  verify->add_option("--format", verify_args.format, "json or text")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify->add_option("--jobs", verify_args.jobs, "suites run concurrently (0: one per core)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*basis) return cmd_basis(common);
    if (*eval) return cmd_eval(common, expr);
    if (*endo) return cmd_endo(endo_action, common, endo_args);
    if (*dual) return cmd_duality(dual_action, common, dual_args);
    if (*verify) return cmd_verify(which, verify_args);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
