// Acceptance checks; one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "liecat/category.hpp"
#include "liecat/endomorphism.hpp"
#include "liecat/hall_basis.hpp"
#include "liecat/lie_poly.hpp"
#include "liecat/verifier.hpp"

using namespace liecat;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond) {
    o.ok = false;
    o.note += (o.note.empty() ? "" : "; ") + what;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string describe(const Report& r) {
  std::ostringstream s;
  s << r.suite << " " << r.passed << "/" << r.cases;
  if (r.error) s << " error=" << *r.error;
  if (!r.failures.empty()) s << " first failure: " << r.failures[0].anchor;
  return s.str();
}

Outcome basis_dimensions() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<std::size_t, std::vector<std::size_t>>> expected = {
      {2, {2, 1, 2, 3, 6, 9}}, {3, {3, 3, 8, 18}}, {1, {1, 0, 0, 0, 0, 0, 0, 0}}};
  for (const auto& [n, dims] : expected) {
    auto t = generate_basis(n, dims.size());
    for (std::size_t d = 1; d <= dims.size(); ++d) {
      require(o, t->degree(d).size() == dims[d - 1], "n=" + std::to_string(n) + " d=" + std::to_string(d));
      require(o, witt_dimension(n, d) == dims[d - 1], "witt n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  }
  const Report r = run_suite("basis_dims", {});
  require(o, r.pass(), describe(r));
  const double secs = seconds_since(t0);
  require(o, secs < 5.0, "runtime " + std::to_string(secs) + " s");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

Outcome bracket_laws() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = run_suite("jacobi", {});
  require(o, r.pass(), describe(r));
  require(o, r.cases == 1000, "cases " + std::to_string(r.cases));
  require(o, r.config["gens"] == nlohmann::json::array({2, 3}), "ranks");
  require(o, r.config["max_degree"] == 5, "degree bound");
  const double secs = seconds_since(t0);
  require(o, secs < 30.0, "runtime " + std::to_string(secs) + " s");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(secs).substr(0, 5) + " s";
  return o;
}

std::size_t pairs_within(std::size_t n, std::size_t cap) {
  // Ordered pairs of basis words with degree sum <= cap, counted from the Witt numbers.
  std::size_t total = 0;
  for (std::size_t a = 1; a < cap; ++a)
    for (std::size_t b = 1; a + b <= cap; ++b) total += witt_dimension(n, a) * witt_dimension(n, b);
  return total;
}

Outcome envelope_equivalence() {
  Outcome o;
  const Report r = run_suite("envelope", {});
  require(o, r.pass(), describe(r));
  const std::size_t expected = pairs_within(2, 6) + pairs_within(3, 5);
  require(o, r.cases == expected, "cases " + std::to_string(r.cases) + " != " + std::to_string(expected));
  o.note = std::to_string(r.cases) + " pairs";
  return o;
}

Outcome structure_constants() {
  Outcome o;
  std::size_t seen = 0;
  for (auto [n, cap] : {std::pair<std::size_t, std::size_t>{2, 6}, {3, 5}}) {
    auto t = generate_basis(n, cap);
    for (const auto& u : t->words())
      for (const auto& v : t->words()) {
        if (u.degree() + v.degree() > cap) continue;
        const LiePoly uv = normalize_bracket(u, v, t);
        for (const auto& [k, c] : uv.terms()) {
          ++seen;
          require(o, in_prime_subfield(c) && c.rational_part().get_den() == 1,
                  t->bracketing(u.index) + "," + t->bracketing(v.index));
        }
      }
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(seen) + " constants";
  return o;
}

Outcome suite_with_cases(const char* suite, std::size_t cases) {
  Outcome o;
  const Report r = run_suite(suite, {});
  require(o, r.pass(), describe(r));
  require(o, r.cases >= cases, "cases " + std::to_string(r.cases));
  if (o.ok) o.note = std::to_string(r.cases) + " cases";
  return o;
}

Outcome matrix_iso() {
  Outcome o = suite_with_cases("matrix_iso", 200);
  const Report r = run_suite("matrix_iso", {});
  require(o, r.config["gens"] == nlohmann::json::array({2, 3, 4}), "ranks");
  return o;
}

Outcome tau_law() {
  Outcome o;
  const Report r = run_suite("tau_scaling", {});
  require(o, r.pass(), describe(r));
  require(o, r.config["max_degree"] == 5, "degree bound");
  // Independent filter expectation: n=2 selects [x,y] only; n=3 selects [x,y] only.
  for (const auto& f : r.details["eigenvalue_filter"]) require(o, f["selected"] == "[x,y]", f.dump());
  o.note = std::to_string(r.cases) + " cases";
  return o;
}

Outcome fhat_law() {
  Outcome o;
  const Report r = run_suite("fhat", {});
  require(o, r.pass(), describe(r));
  require(o, r.details["random_endomorphisms"] == 100, "random endomorphisms " + r.details["random_endomorphisms"].dump());
  require(o, r.details["witnesses"].size() == 2, "witnesses");
  // Direct witnesses.
  auto t3 = generate_basis(3, 4);
  const LiePoly x = LiePoly::generator(t3, 0), y = LiePoly::generator(t3, 1), z = LiePoly::generator(t3, 2);
  auto t2 = generate_basis(2, 4);
  const LiePoly u = LiePoly::generator(t2, 0), v = LiePoly::generator(t2, 1);
  for (const Scalar& a : {Scalar(2), Scalar(3), Scalar(-1), Scalar(Rational(1, 2))}) {
    require(o, inner_conjugate(a, Endo(t3, {x + bracket(y, z), y, z}))(x) == x + a * bracket(y, z), "x+a[y,z]");
    require(o, inner_conjugate(a, Endo(t2, {bracket(u, v), v}))(u) == a * bracket(u, v), "a[x,y]");
  }
  o.note = std::to_string(r.cases) + " cases";
  return o;
}

Outcome semi_auto() {
  Outcome o;
  const Report r = run_suite("semi", {});
  require(o, r.pass(), describe(r));
  require(o, r.cases == 500, "cases " + std::to_string(r.cases));
  require(o, r.config["field"] == "q-sqrt:2", "field");
  o.note = std::to_string(r.cases) + " pairs over q-sqrt:2";
  return o;
}

Outcome diagonal_twist_law() {
  Outcome o;
  const Report r = run_suite("diagonal", {});
  require(o, r.pass(), describe(r));
  require(o, r.details["random_pairs"] == 100, "random pairs " + r.details["random_pairs"].dump());
  o.note = std::to_string(r.cases) + " cases";
  return o;
}

Outcome rank_facts() {
  Outcome o;
  const Report r = run_suite("rank2", {});
  require(o, r.pass(), describe(r));
  for (std::size_t cap = 2; cap <= 8; ++cap) {
    auto t = generate_basis(2, cap);
    const LiePoly x = LiePoly::generator(t, 0), y = LiePoly::generator(t, 1);
    const auto res = check_automorphism(Endo(t, {x + bracket(x, y), y}));
    require(o, res.verdict != Verdict::Yes, "cap " + std::to_string(cap));
  }
  auto t1 = generate_basis(1, 8);
  for (std::size_t d = 2; d <= 8; ++d) require(o, t1->degree(d).empty(), "F(x) degree " + std::to_string(d));
  return o;
}

Outcome duality() {
  Outcome o;
  const Report r = run_suite("duality", {});
  require(o, r.pass(), describe(r));
  const auto& sep = r.details["separation"];
  require(o, sep["attempted"] == 100 && sep["separated"] == 100, "separation " + sep.dump());
  require(o, sep["budget_degree"] == 4, "budget");
  require(o, r.details["rank1_counterexample"]["found"] == false, "rank-1 counterexample separated");
  require(o, r.cases == 200 + 100 + 1, "cases " + std::to_string(r.cases));
  o.note += (o.note.empty() ? "" : "; ") + std::string("max points tried ") + sep["max_points_tried"].dump();
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome full_verify() {
  Outcome o;
  const std::string cli = LIECAT_CLI;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string a = (dir / "liecat_acceptance_a.json").string(), b = (dir / "liecat_acceptance_b.json").string();
  double worst = 0;
  for (const auto& path : {a, b}) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string cmd = "\"" + cli + "\" verify all --seed 7 --report \"" + path + "\" > /dev/null";
    const int status = std::system(cmd.c_str());
    worst = std::max(worst, seconds_since(t0));
    require(o, status == 0, "exit status " + std::to_string(status));
  }
  require(o, worst < 60.0, "runtime " + std::to_string(worst) + " s");
  const std::string ra = slurp(a), rb = slurp(b);
  require(o, !ra.empty() && ra == rb, "reports differ");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(worst).substr(0, 5) + " s, " + std::to_string(ra.size()) +
            " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"basis dimensions", basis_dimensions},
      {"bracket laws", bracket_laws},
      {"envelope oracle", envelope_equivalence},
      {"structure constants in the prime subfield", structure_constants},
      {"matrix isomorphism", matrix_iso},
      {"constant calculus", [] { return suite_with_cases("constants", 200); }},
      {"tau multidegree law", tau_law},
      {"f_a conjugation law", fhat_law},
      {"semi-automorphism", semi_auto},
      {"determinant twist", diagonal_twist_law},
      {"rank one and two facts", rank_facts},
      {"duality", duality},
      {"full verify run", full_verify},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.note.empty()) std::cout << " (" << o.note << ")";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
