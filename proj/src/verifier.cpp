#include "liecat/verifier.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "liecat/category.hpp"
#include "liecat/endomorphism.hpp"
#include "liecat/error.hpp"
#include "liecat/io.hpp"
#include "liecat/lie_poly.hpp"
#include "liecat/nc_poly.hpp"
#include "liecat/parse.hpp"

namespace liecat {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxStoredFailures = 50;

const char* const kSampling =
    "coefficients uniform in {-3,...,3}\\{0} (over q-sqrt:d: a+b*w with a, b uniform in {-3,...,3}, not both 0); "
    "term degree uniform over the degrees allowed, basis word uniform within its degree; 1 to 3 terms per "
    "polynomial; matrices have entries uniform in {-3,...,3}; std::mt19937_64 seeded from the seed and the "
    "suite name";

std::uint64_t mix_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

struct Resolved {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> ranks;
  Field field;
};

class Sampler {
 public:
  Sampler(std::uint64_t seed, Field field) : rng_(seed), field_(field) {}

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  long in_range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1))); }

  long small_nonzero() {
    long v = in_range(-3, 2);
    return v >= 0 ? v + 1 : v;
  }

  Scalar coeff() {
    if (!field_.is_quadratic()) return Scalar(small_nonzero());
    for (;;) {
      long a = in_range(-3, 3);
      long b = in_range(-3, 3);
      if (a != 0 || b != 0) return Scalar(Rational(a), Rational(b), field_.d);
    }
  }

  Scalar rational_coeff() { return Scalar(small_nonzero()); }

  std::size_t word_of_degree(const BasisTable& t, std::size_t d) {
    auto words = t.degree(d);
    return words[below(words.size())].index;
  }

  /// Random polynomial with terms of degree in [1, max_degree].
  LiePoly poly(const TablePtr& t, std::size_t max_degree, bool rational_only = false) {
    std::vector<std::size_t> degrees;
    for (std::size_t d = 1; d <= std::min(max_degree, t->cap()); ++d)
      if (!t->degree(d).empty()) degrees.push_back(d);
    LiePoly p(t);
    const std::size_t terms = 1 + below(3);
    for (std::size_t i = 0; i < terms; ++i) {
      const std::size_t d = degrees[below(degrees.size())];
      p.add_term(word_of_degree(*t, d), rational_only ? rational_coeff() : coeff());
    }
    return p;
  }

  LiePoly nonzero_poly(const TablePtr& t, std::size_t max_degree, bool rational_only = false) {
    for (;;) {
      LiePoly p = poly(t, max_degree, rational_only);
      if (!p.is_zero()) return p;
    }
  }

  Endo endo(const TablePtr& t, std::size_t max_degree, bool rational_only = false) {
    std::vector<LiePoly> images;
    for (std::size_t g = 0; g < t->generator_count(); ++g) images.push_back(poly(t, max_degree, rational_only));
    return Endo(t, std::move(images));
  }

  MatrixN matrix(std::size_t n) {
    MatrixN m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = Scalar(in_range(-3, 3));
    return m;
  }

  MatrixN invertible_matrix(std::size_t n) {
    for (;;) {
      MatrixN m = matrix(n);
      if (!determinant(m).is_zero()) return m;
    }
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

  /// Degree budgets e_1..e_k >= 1 with sum <= total.
  std::vector<std::size_t> budgets(std::size_t k, std::size_t total) {
    std::vector<std::size_t> e(k, 1);
    std::size_t spare = total - k;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t extra = below(spare + 1);
      e[i] += extra;
      spare -= extra;
    }
    return e;
  }

 private:
  std::mt19937_64 rng_;
  Field field_;
};

/// Accumulates case outcomes into a report.
class Recorder {
 public:
  explicit Recorder(Report& r, std::size_t limit) : report_(r), limit_(limit) {}

  bool more() const { return report_.cases < limit_; }

  void allow(std::size_t extra) { limit_ = extra > SIZE_MAX - limit_ ? SIZE_MAX : limit_ + extra; }

  void begin() { current_ok_ = true; }

  void end() {
    ++report_.cases;
    if (current_ok_) {
      ++report_.passed;
    } else {
      ++report_.failed;
    }
  }

  void check(const char* anchor, const json& inputs, bool ok, const std::string& lhs, const std::string& rhs) {
    if (ok) return;
    current_ok_ = false;
    if (report_.failures.size() < kMaxStoredFailures)
      report_.failures.push_back({report_.cases, anchor, inputs, lhs, rhs});
  }

  void equal(const char* anchor, const json& inputs, const LiePoly& lhs, const LiePoly& rhs) {
    const bool ok = lhs == rhs;
    check(anchor, inputs, ok, ok ? "" : format_expr(lhs), ok ? "" : format_expr(rhs));
  }

  void equal(const char* anchor, const json& inputs, const Endo& lhs, const Endo& rhs) {
    const bool ok = lhs == rhs;
    check(anchor, inputs, ok, ok ? "" : format_assignment(lhs.images(), lhs.table()),
          ok ? "" : format_assignment(rhs.images(), rhs.table()));
  }

  /// One-check case.
  template <typename T>
  void single(const char* anchor, const json& inputs, const T& lhs, const T& rhs) {
    begin();
    equal(anchor, inputs, lhs, rhs);
    end();
  }

 private:
  Report& report_;
  std::size_t limit_;
  bool current_ok_ = true;
};

json endo_json(const Endo& phi) { return assignment_json(phi.images(), phi.table()); }

json matrix_json(const MatrixN& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string matrix_string(const MatrixN& m) { return matrix_json(m).dump(); }

/// Index-cycled rank for case i.
std::size_t rank_for(const Resolved& c, std::size_t i) { return c.ranks[i % c.ranks.size()]; }

/// Table cache so that structure constants are shared between cases.
class Tables {
 public:
  TablePtr get(std::size_t n, std::size_t cap) {
    auto& t = cache_[{n, cap}];
    if (!t) t = generate_basis(n, cap);
    return t;
  }
  TablePtr get(const std::vector<std::string>& names, std::size_t cap) {
    auto& t = named_[{names, cap}];
    if (!t) t = generate_basis(names, cap);
    return t;
  }

 private:
  std::map<std::pair<std::size_t, std::size_t>, TablePtr> cache_;
  std::map<std::pair<std::vector<std::string>, std::size_t>, TablePtr> named_;
};

// ---------------------------------------------------------------- suites

void suite_basis_dims(const Resolved& c, Sampler&, Recorder& rec, json& details) {
  json table = json::array();
  for (std::size_t n : c.ranks) {
    auto t = generate_basis(n, c.max_degree);
    json dims = json::array();
    for (std::size_t d = 1; d <= c.max_degree && rec.more(); ++d) {
      const std::uint64_t expected = witt_dimension(n, d);
      const std::size_t got = t->degree(d).size();
      dims.push_back(got);
      rec.begin();
      rec.check("dim L_d = (1/d) sum_{e|d} mu(e) n^(d/e)", {{"n", n}, {"degree", d}}, got == expected,
                std::to_string(got), std::to_string(expected));
      rec.end();
    }
    table.push_back({{"n", n}, {"dimensions", std::move(dims)}});
  }
  details["dimension_table"] = std::move(table);
}

void suite_jacobi(const Resolved& c, Sampler& s, Recorder& rec, json&) {
  Tables tables;
  for (std::size_t i = 0; rec.more(); ++i) {
    auto t = tables.get(rank_for(c, i), c.max_degree);
    auto e = s.budgets(3, c.max_degree);
    LiePoly p = s.poly(t, e[0]), q = s.poly(t, e[1]), r = s.poly(t, e[2]);
    const Scalar lambda = s.coeff();
    json in = {{"n", t->generator_count()}, {"p", format_expr(p)}, {"q", format_expr(q)}, {"r", format_expr(r)}};
    rec.begin();
    rec.equal("[p,q] = -[q,p]", in, bracket(p, q), -bracket(q, p));
    rec.equal("[p,p] = 0", in, bracket(p, p), LiePoly(t));
    LiePoly jac = bracket(p, bracket(q, r)) + bracket(q, bracket(r, p)) + bracket(r, bracket(p, q));
    rec.equal("[p,[q,r]] + [q,[r,p]] + [r,[p,q]] = 0", in, jac, LiePoly(t));
    json in2 = in;
    in2["lambda"] = lambda.to_string();
    rec.equal("[p + l q, r] = [p,r] + l [q,r]", in2, bracket(p + lambda * q, r), bracket(p, r) + lambda * bracket(q, r));
    rec.end();
  }
}

void suite_envelope(const Resolved& c, Sampler&, Recorder& rec, json& details) {
  json sweep = json::array();
  for (std::size_t n : c.ranks) {
    const std::size_t cap = c.max_degree ? c.max_degree : (n <= 2 ? 6 : 5);
    auto t = generate_basis(n, cap);
    const bool over_q = !c.field.is_quadratic();
    std::size_t pairs = 0;
    for (const auto& u : t->words()) {
      for (const auto& v : t->words()) {
        if (u.degree() + v.degree() > cap) continue;
        if (!rec.more()) break;
        ++pairs;
        LiePoly uv = normalize_bracket(u, v, t);
        json in = {{"n", n}, {"u", t->bracketing(u.index)}, {"v", t->bracketing(v.index)}};
        rec.begin();
        const NcPoly lhs = to_associative(uv);
        const NcPoly rhs = commutator(to_associative(LiePoly::basis(t, u.index)), to_associative(LiePoly::basis(t, v.index)));
        rec.check("to_associative([u,v]) = UV - VU", in, lhs == rhs, lhs.to_string(t->generator_names()),
                  rhs.to_string(t->generator_names()));
        for (const auto& [k, coeff] : uv.terms()) {
          const bool prime = in_prime_subfield(coeff);
          const bool integral = !over_q || coeff.rational_part().get_den() == 1;
          rec.check("structure constants lie in the prime subfield (integers over q)", in, prime && integral,
                    coeff.to_string(), "integer");
        }
        rec.end();
      }
    }
    sweep.push_back({{"n", n}, {"max_total_degree", cap}, {"pairs", pairs}});
  }
  details["sweep"] = std::move(sweep);
}

void suite_constants(const Resolved& c, Sampler& s, Recorder& rec, json&) {
  Tables tables;
  for (std::size_t i = 0; rec.more(); ++i) {
    auto t = tables.get(rank_for(c, i), c.max_degree);
    const std::size_t n = t->generator_count();
    const std::size_t x = s.below(n);
    const LiePoly gx = LiePoly::generator(t, x);
    rec.begin();
    {
      LiePoly u = s.poly(t, c.max_degree);
      auto perm = s.permutation(n);
      std::vector<LiePoly> images;
      for (std::size_t g = 0; g < n; ++g) images.push_back(LiePoly::generator(t, perm[g]));
      Endo g(t, images);
      rec.equal("c_u g = c_u", {{"u", format_expr(u)}, {"g", endo_json(g)}}, compose(family::constant(t, u), g),
                family::constant(t, u));
    }
    {
      LiePoly p = s.poly(t, c.max_degree);
      rec.equal("c_p c_x = c_p", {{"p", format_expr(p)}, {"x", t->generator_names()[x]}},
                compose(family::constant(t, p), family::constant(t, gx)), family::constant(t, p));
    }
    {
      Endo phi = s.endo(t, c.max_degree);
      rec.equal("phi c_x = c_{phi(x)}", {{"phi", endo_json(phi)}, {"x", t->generator_names()[x]}},
                compose(phi, family::constant(t, gx)), family::constant(t, phi(gx)));
    }
    if (n >= 2) {
      const std::size_t y = (x + 1 + s.below(n - 1)) % n;
      Endo phi = s.endo(t, c.max_degree);
      std::vector<LiePoly> images = phi.images();
      const LiePoly p1 = s.poly(t, c.max_degree), p2 = s.poly(t, c.max_degree);
      images[x] = p1;
      images[y] = p2;
      Endo psi(t, images);
      rec.equal("c_{p1+p2} = phi c_{x+y}",
                {{"phi", endo_json(psi)}, {"x", t->generator_names()[x]}, {"y", t->generator_names()[y]}},
                family::constant(t, p1 + p2), compose(psi, family::constant(t, gx + LiePoly::generator(t, y))));
    }
    rec.end();
  }
}

void suite_tau_scaling(const Resolved& c, Sampler& s, Recorder& rec, json& details) {
  json filters = json::array();
  for (std::size_t n : c.ranks) {
    auto t = generate_basis(n, c.max_degree);
    // The two a_i = 2 patterns: all twos, and twos on the first two generators only.
    std::vector<std::vector<Scalar>> proof_points = {std::vector<Scalar>(n, Scalar(2)), std::vector<Scalar>(n, Scalar(1))};
    proof_points[1][0] = Scalar(2);
    if (n >= 2) proof_points[1][1] = Scalar(2);
    std::vector<std::vector<Scalar>> points = proof_points;
    for (int extra = 0; extra < 3; ++extra) {
      std::vector<Scalar> a;
      for (std::size_t g = 0; g < n; ++g) a.push_back(s.rational_coeff());
      points.push_back(a);
    }
    auto coords = [](const std::vector<Scalar>& a) {
      json out = json::array();
      for (const auto& v : a) out.push_back(v.to_string());
      return out;
    };
    for (const auto& a : points) {
      Endo tau = family::diagonal(t, a);
      for (const auto& u : t->words()) {
        if (!rec.more()) break;
        const auto l = occurrences(u, n);
        Scalar factor(1);
        for (std::size_t g = 0; g < n; ++g) factor *= pow(a[g], static_cast<long>(l[g]));
        const LiePoly lu = LiePoly::basis(t, u.index);
        rec.single("tau_a(u) = (prod a_i^{l_i(u)}) u", json{{"a", coords(a)}, {"u", t->bracketing(u.index)}},
                   tau(lu), factor * lu);
      }
    }
    if (!rec.more() || n < 2) continue;
    std::set<std::size_t> selected, expected;
    for (const auto& u : t->words()) {
      const LiePoly lu = LiePoly::basis(t, u.index);
      bool eigen = true;
      for (const auto& a : proof_points) eigen = eigen && family::diagonal(t, a)(lu) == a[0] * a[1] * lu;
      if (eigen) selected.insert(u.index);
      auto l = occurrences(u, n);
      std::vector<std::size_t> target(n, 0);
      target[0] = target[1] = 1;
      if (l == target) expected.insert(u.index);
    }
    auto names = [&](const std::set<std::size_t>& ids) {
      std::string out;
      for (auto id : ids) out += (out.empty() ? "" : " ") + t->bracketing(id);
      return out;
    };
    rec.begin();
    rec.check("tau_a(f) = a_1 a_2 f at the sample points iff f has multidegree (1,1,0,...)", {{"n", n}},
              selected == expected, names(selected), names(expected));
    rec.end();
    filters.push_back({{"n", n}, {"selected", names(selected)}});
  }
  details["eigenvalue_filter"] = std::move(filters);
}

void suite_fhat(const Resolved& c, Sampler& s, Recorder& rec, json& details) {
  const std::vector<Scalar> as = {Scalar(2), Scalar(3), Scalar(-1), Scalar(Rational(1, 2))};
  Tables tables;
  auto fhat_triple = [](const Scalar& a, const Endo& phi) {
    return compose(family::scalar(phi.table(), a), compose(phi, family::scalar(phi.table(), a.inverse())));
  };
  auto closed_form = [](const Scalar& a, const Endo& phi) {
    std::vector<LiePoly> images;
    for (const auto& img : phi.images()) images.push_back(bar_transform(img, a));
    return Endo(phi.table(), images);
  };
  // Fixed witnesses first; they come on top of the random cases.
  json witnesses = json::array();
  if (c.cases > 0)
    rec.allow(static_cast<std::size_t>(
        std::count_if(c.ranks.begin(), c.ranks.end(), [](std::size_t n) { return n == 2 || n == 3; })));
  for (std::size_t n : c.ranks) {
    if (n == 3 && rec.more()) {
      auto t = tables.get(3, std::max<std::size_t>(c.max_degree, 2));
      const LiePoly x = LiePoly::generator(t, 0), y = LiePoly::generator(t, 1), z = LiePoly::generator(t, 2);
      Endo phi(t, {x + bracket(y, z), y, z});
      rec.begin();
      for (const auto& a : as) {
        Endo expected(t, {x + a * bracket(y, z), y, z});
        rec.equal("f_a phi f_a^{-1}: x+[y,z] -> x+a[y,z]", {{"a", a.to_string()}}, fhat_triple(a, phi), expected);
      }
      rec.end();
      witnesses.push_back("x=>x+[y,z]");
    }
    if (n == 2 && rec.more()) {
      auto t = tables.get(2, std::max<std::size_t>(c.max_degree, 2));
      const LiePoly x = LiePoly::generator(t, 0), y = LiePoly::generator(t, 1);
      Endo phi(t, {bracket(x, y), y});
      rec.begin();
      for (const auto& a : as) {
        Endo expected(t, {a * bracket(x, y), y});
        rec.equal("f_a phi f_a^{-1}: [x,y] -> a[x,y]", {{"a", a.to_string()}}, fhat_triple(a, phi), expected);
      }
      rec.end();
      witnesses.push_back("x=>[x,y]; y=>y");
    }
  }
  details["witnesses"] = std::move(witnesses);
  std::size_t sampled = 0;
  for (std::size_t i = 0; rec.more(); ++i, ++sampled) {
    auto t = tables.get(rank_for(c, i), c.max_degree);
    Endo phi = s.endo(t, c.max_degree);
    Endo lin = from_matrix(t, s.matrix(t->generator_count()));
    rec.begin();
    for (const auto& a : as) {
      json in = {{"phi", endo_json(phi)}, {"a", a.to_string()}};
      const Endo triple = fhat_triple(a, phi);
      rec.equal("f_a phi f_a^{-1} (x) = p_1 + a p_2 + ... + a^{s-1} p_s", in, triple, closed_form(a, phi));
      rec.equal("inner_conjugate agrees with the composite", in, inner_conjugate(a, phi), triple);
      rec.equal("f_a fixes linear endomorphisms", {{"phi", endo_json(lin)}, {"a", a.to_string()}}, fhat_triple(a, lin),
                lin);
    }
    rec.end();
  }
  details["random_endomorphisms"] = sampled;
}

void suite_scalar_center(const Resolved& c, Sampler& s, Recorder& rec, json& details) {
  Tables tables;
  bool witness_checked = false;
  if (c.cases > 0) rec.allow(1);
  for (std::size_t n : c.ranks) {
    if (n < 2 || !rec.more() || witness_checked) continue;
    auto t = tables.get(n, std::max<std::size_t>(c.max_degree, 2));
    std::vector<LiePoly> images;
    for (std::size_t g = 0; g < n; ++g) images.push_back(LiePoly::generator(t, g));
    images[0] = bracket(images[0], images[1]);
    Endo phi(t, images);
    Endo f2 = family::scalar(t, Scalar(2));
    rec.begin();
    const Endo l = compose(f2, phi), r = compose(phi, f2);
    rec.check("f_a does not commute with the nonlinear x -> [x,y]", {{"phi", endo_json(phi)}, {"a", "2"}}, l != r,
              format_assignment(l.images(), t), format_assignment(r.images(), t));
    rec.end();
    witness_checked = true;
    details["noncommuting_witness"] = format_assignment(phi.images(), t);
  }
  for (std::size_t i = 0; rec.more(); ++i) {
    auto t = tables.get(rank_for(c, i), c.max_degree);
    Endo phi = from_matrix(t, s.matrix(t->generator_count()));
    Scalar a = s.coeff();
    Endo fa = family::scalar(t, a);
    rec.single("f_a commutes with all linear endomorphisms", json{{"phi", endo_json(phi)}, {"a", a.to_string()}},
               compose(fa, phi), compose(phi, fa));
  }
}

void suite_semi(const Resolved& c, Sampler& s, Recorder& rec, json& details) {
  Tables tables;
  const FieldAut sigma = c.field.is_quadratic() ? FieldAut::conjugation(c.field) : FieldAut::identity();
  details["sigma"] = sigma.to_string();
  for (std::size_t i = 0; rec.more(); ++i) {
    auto t = tables.get(rank_for(c, i), c.max_degree);
    const SemiMorphism sf = make_sigma_F(sigma, t, c.field);
    auto e = s.budgets(2, c.max_degree);
    LiePoly p = s.poly(t, e[0]), q = s.poly(t, e[1]);
    const Scalar lambda = s.coeff();
    json in = {{"p", format_expr(p)}, {"q", format_expr(q)}, {"lambda", lambda.to_string()}};
    rec.begin();
    rec.equal("sigma_F(p+q) = sigma_F(p) + sigma_F(q)", in, sf(p + q), sf(p) + sf(q));
    rec.equal("sigma_F([p,q]) = [sigma_F(p), sigma_F(q)]", in, sf(bracket(p, q)), bracket(sf(p), sf(q)));
    rec.equal("sigma_F(l p) = sigma(l) sigma_F(p)", in, sf(lambda * p), apply_sigma(sigma, lambda) * sf(p));
    Endo rational = s.endo(t, c.max_degree, true);
    rec.equal("s phi s^{-1} = phi for rational phi", {{"phi", endo_json(rational)}}, semi_conjugate(sf, rational),
              rational);
    Endo phi = s.endo(t, c.max_degree);
    std::vector<LiePoly> conj;
    for (const auto& img : phi.images()) conj.push_back(map_coefficients(img, [&](const Scalar& v) { return apply_sigma(sigma, v); }));
    rec.equal("s phi s^{-1} conjugates the coefficients of phi", {{"phi", endo_json(phi)}}, semi_conjugate(sf, phi),
              Endo(t, conj));
    rec.end();
  }
}

void suite_diagonal(const Resolved& c, Sampler& s, Recorder& rec, json& details) {
  Tables tables;
  if (c.cases > 0) rec.allow(c.ranks.size());
  for (std::size_t n : c.ranks) {
    if (!rec.more()) break;
    auto t = tables.get(n, c.max_degree);
    rec.begin();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        Endo g = family::swap(t, x, y);
        rec.equal("g_xy^2 = e", {{"x", t->generator_names()[x]}, {"y", t->generator_names()[y]}}, compose(g, g),
                  Endo::identity(t));
      }
    }
    rec.end();
  }
  for (std::size_t i = 0; rec.more(); ++i) {
    auto t = tables.get(rank_for(c, i), c.max_degree);
    const std::size_t n = t->generator_count();
    const DetPower h{s.in_range(-2, 2)};
    const MatrixN m1 = s.invertible_matrix(n), m2 = s.invertible_matrix(n);
    const Endo g1 = from_matrix(t, m1), g2 = from_matrix(t, m2);
    json in = {{"k", h.k}, {"g1", matrix_json(m1)}, {"g2", matrix_json(m2)}};
    rec.begin();
    const Endo tw1 = diagonal_twist(h, g1);
    const Scalar h1 = pow(determinant(m1), h.k);
    for (std::size_t g = 0; g < n; ++g) {
      const LiePoly x = LiePoly::generator(t, g);
      rec.equal("h~(g)(x) = h(g) g(x)", in, tw1(x), h1 * g1(x));
    }
    rec.equal("h~(g1 g2) = h~(g1) h~(g2)", in, diagonal_twist(h, compose(g1, g2)),
              compose(tw1, diagonal_twist(h, g2)));
    if (n >= 2) {
      const std::size_t x = s.below(n);
      const std::size_t y = (x + 1 + s.below(n - 1)) % n;
      const Scalar m = s.rational_coeff();
      const Endo cx = family::constant(t, LiePoly::generator(t, x));
      rec.equal("g_my c_x = c_x", {{"m", m.to_string()}, {"x", t->generator_names()[x]}, {"y", t->generator_names()[y]}},
                compose(family::stretch(t, y, m), cx), cx);
    }
    rec.end();
    details["random_pairs"] = i + 1;
  }
}

void suite_rank2(const Resolved& c, Sampler&, Recorder& rec, json& details) {
  auto t1 = generate_basis(1, c.max_degree);
  for (std::size_t d = 2; d <= c.max_degree && rec.more(); ++d) {
    rec.begin();
    rec.check("F(x) has no words of degree >= 2", {{"degree", d}}, t1->degree(d).empty() && witt_dimension(1, d) == 0,
              std::to_string(t1->degree(d).size()), "0");
    rec.end();
  }
  if (rec.more()) {
    const LiePoly x = LiePoly::generator(t1, 0);
    rec.single("[x,x] = 0 in F(x)", json::object(), bracket(x, x), LiePoly(t1));
  }
  json verdicts = json::object();
  for (std::size_t cap = 2; cap <= c.max_degree && rec.more(); ++cap) {
    auto t = generate_basis(2, cap);
    const LiePoly x = LiePoly::generator(t, 0), y = LiePoly::generator(t, 1);
    Endo phi(t, {x + bracket(x, y), y});
    const AutomorphismCheck res = check_automorphism(phi);
    verdicts[std::to_string(cap)] = to_string(res.verdict);
    rec.begin();
    rec.check("x -> x+[x,y], y -> y is not an automorphism", {{"cap", cap}}, res.verdict != Verdict::Yes,
              to_string(res.verdict), "no or inconclusive");
    rec.end();
  }
  details["automorphism_verdicts"] = std::move(verdicts);
}

void suite_duality(const Resolved& c, Sampler& s, Recorder& rec, json& details) {
  Tables tables;
  const FObject f0(generate_basis(std::vector<std::string>{"x0"}, 1));
  const std::vector<std::string> h_names = {"h1", "h2"};
  auto random_morphism = [&](const FObject& src, const FObject& dst, std::size_t deg) {
    std::vector<LiePoly> images;
    for (std::size_t j = 0; j < src.rank(); ++j) images.push_back(s.poly(dst.table(), deg));
    return Morphism(src, dst, images);
  };
  // Square and contravariance: s1: F(Y) -> F(X), s2: F(Z) -> F(Y), nu: F(X) -> H.
  // `cases` counts the square cases; half as many separation pairs follow.
  const std::size_t square_cases = c.cases;
  const std::size_t separation_cases = c.cases / 2;
  rec.allow(separation_cases + (c.cases > 0 ? 1 : 0));
  auto h = tables.get(h_names, 8);
  for (std::size_t i = 0; i < square_cases && rec.more(); ++i) {
    const FObject X(tables.get(1 + s.below(3), 4)), Y(tables.get(1 + s.below(3), 2)), Z(tables.get(1 + s.below(3), 1));
    const Morphism s1 = random_morphism(Y, X, 2), s2 = random_morphism(Z, Y, 2);
    std::vector<LiePoly> tuple;
    for (std::size_t g = 0; g < X.rank(); ++g) tuple.push_back(s.poly(h, 2));
    const Point nu = alpha_inv(tuple, X, h);
    json in = {{"s1", assignment_json(s1.images, Y.table())},
               {"s2", assignment_json(s2.images, Z.table())},
               {"nu", point_json(nu)}};
    rec.begin();
    const Point t1 = tilde_map(s1, nu);
    auto tuple_string = [](const std::vector<LiePoly>& v) {
      std::string out;
      for (const auto& p : v) out += (out.empty() ? "(" : ", ") + format_expr(p);
      return out + ")";
    };
    const auto via_poly = poly_map(s1, alpha(nu));
    const auto via_tilde = alpha(t1);
    rec.check("alpha(s~(nu)) = s^alpha(alpha(nu))", in, via_poly == via_tilde, tuple_string(via_tilde),
              tuple_string(via_poly));
    std::vector<NcPoly> env_images;
    for (const auto& p : alpha(nu)) env_images.push_back(to_associative(p));
    for (std::size_t j = 0; j < Y.rank(); ++j) {
      const NcPoly lhs = to_associative(t1.images[j]);
      const NcPoly rhs = substitute(to_associative(s1.images[j]), env_images);
      rec.check("s~(nu)(y) = nu(s(y)) in the enveloping algebra", in, lhs == rhs, lhs.to_string(h->generator_names()),
                rhs.to_string(h->generator_names()));
    }
    const Morphism s12 = compose(s1, s2);
    const Point lhs = tilde_map(s12, nu), rhs = tilde_map(s2, t1);
    rec.check("(s1 s2)~ = s2~ s1~", in, lhs == rhs, tuple_string(lhs.images), tuple_string(rhs.images));
    const FObject x0(tables.get(2, 1));
    const Decomposition d = component_decompose(s1, x0, f0);
    rec.check("s^alpha = (pi s_1^alpha, ..., pi s_m^alpha)", in, projection_identity_holds(s1, d, alpha(nu)),
              "projection identity fails", "holds");
    rec.end();
  }
  // Separation of distinct morphisms at budget degree 4.
  const std::size_t budget = 4;
  std::size_t separated = 0, attempted = 0, max_tried = 0;
  std::map<std::size_t, TablePtr> h_by_degree;
  for (std::size_t i = 0; i < separation_cases && rec.more(); ++i) {
    const FObject X(tables.get(1 + s.below(3), c.max_degree)), Y(tables.get(1 + s.below(3), 1));
    Morphism s1 = random_morphism(Y, X, c.max_degree), s2 = random_morphism(Y, X, c.max_degree);
    while (s1 == s2) s2 = random_morphism(Y, X, c.max_degree);
    std::size_t deg = 1;
    for (const auto& m : {s1, s2})
      for (const auto& p : m.images) deg = std::max(deg, degree(p));
    auto& hs = h_by_degree[deg];
    if (!hs) hs = generate_basis(h_names, deg * budget);
    json in = {{"s1", assignment_json(s1.images, Y.table())}, {"s2", assignment_json(s2.images, Y.table())}};
    ++attempted;
    const SeparationResult res = find_separating_point(s1, s2, hs, budget);
    max_tried = std::max(max_tried, res.points_tried);
    rec.begin();
    bool ok = res.found();
    if (ok) {
      ok = tilde_map(s1, *res.witness) != tilde_map(s2, *res.witness);
      ++separated;
    }
    rec.check("s1 != s2 implies s1~ != s2~", in, ok, res.found() ? "witness does not separate" : "NotFound",
              "separating point");
    rec.end();
  }
  details["separation"] = {{"attempted", attempted}, {"separated", separated}, {"budget_degree", budget},
                           {"max_points_tried", max_tried}};
  // Rank-1 target: [x1,x2] and 0 cannot be separated through F(x0).
  if (rec.more() && c.cases > 0) {
    const FObject X(tables.get(std::vector<std::string>{"x1", "x2"}, 2)), Y(tables.get(std::vector<std::string>{"y"}, 1));
    const LiePoly x1 = X.generator(0), x2 = X.generator(1);
    const Morphism s1(Y, X, {bracket(x1, x2)}), s2(Y, X, {LiePoly(X.table())});
    auto h0 = generate_basis(std::vector<std::string>{"x0"}, 2 * budget);
    const SeparationResult res = find_separating_point(s1, s2, h0, budget);
    rec.begin();
    rec.check("no point into F(x0) separates [x1,x2] from 0", json{{"h", "F(x0)"}}, !res.found(),
              res.found() ? "separated" : "NotFound", "NotFound");
    rec.end();
    details["rank1_counterexample"] = {{"found", res.found()}, {"points_tried", res.points_tried}};
  }
}

void suite_matrix_iso(const Resolved& c, Sampler& s, Recorder& rec, json&) {
  Tables tables;
  for (std::size_t i = 0; rec.more(); ++i) {
    auto t = tables.get(rank_for(c, i), 1);
    const std::size_t n = t->generator_count();
    const MatrixN a = s.matrix(n), b = s.matrix(n);
    const Endo phi = from_matrix(t, a), psi = from_matrix(t, b);
    json in = {{"phi", matrix_json(a)}, {"psi", matrix_json(b)}};
    rec.begin();
    const MatrixN lhs = to_matrix(compose(phi, psi));
    const MatrixN rhs = a * b;
    rec.check("M(phi psi) = M(phi) M(psi)", in, exactly_equal(lhs, rhs), matrix_string(lhs), matrix_string(rhs));
    const MatrixN back = to_matrix(phi);
    rec.check("M(from_matrix(A)) = A", in, exactly_equal(back, a), matrix_string(back), matrix_string(a));
    const Scalar k = s.rational_coeff();
    const MatrixN fk = to_matrix(family::scalar(t, k));
    MatrixN kid = MatrixN::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) * k;
    rec.check("M(f_a) = a I", {{"a", k.to_string()}}, exactly_equal(fk, kid), matrix_string(fk), matrix_string(kid));
    rec.end();
  }
}

// ---------------------------------------------------------------- registry

struct SuiteDef {
  std::string name;
  std::function<void(const Resolved&, Sampler&, Recorder&, json&)> run;
  std::size_t default_cases;  // 0: exhaustive
  std::size_t default_degree;
  std::size_t min_degree;
  std::vector<std::size_t> default_ranks;
  std::optional<Field> default_field;
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"basis_dims", suite_basis_dims, 0, 6, 1, {1, 2, 3}, std::nullopt},
      {"jacobi", suite_jacobi, 1000, 5, 3, {2, 3}, std::nullopt},
      {"envelope", suite_envelope, 0, 0, 2, {2, 3}, std::nullopt},
      {"constants", suite_constants, 200, 4, 1, {2, 3}, std::nullopt},
      {"tau_scaling", suite_tau_scaling, 0, 5, 1, {2, 3}, std::nullopt},
      {"fhat", suite_fhat, 100, 4, 1, {2, 3}, std::nullopt},
      {"scalar_center", suite_scalar_center, 100, 2, 2, {2, 3}, std::nullopt},
      {"semi", suite_semi, 500, 4, 2, {2, 3}, Field::quadratic(2)},
      {"diagonal", suite_diagonal, 100, 1, 1, {2, 3}, std::nullopt},
      {"rank2", suite_rank2, 0, 8, 2, {1, 2}, std::nullopt},
      {"duality", suite_duality, 200, 3, 1, {1, 2, 3}, std::nullopt},
      {"matrix_iso", suite_matrix_iso, 200, 1, 1, {2, 3, 4}, std::nullopt},
  };
  return defs;
}

Resolved resolve(const SuiteDef& def, const SuiteConfig& cfg) {
  Resolved r;
  r.seed = cfg.seed;
  r.cases = cfg.cases ? *cfg.cases : (def.default_cases ? def.default_cases : SIZE_MAX);
  r.max_degree = cfg.max_degree ? *cfg.max_degree : def.default_degree;
  if (cfg.max_degree && *cfg.max_degree < def.min_degree)
    throw Error(ErrorCode::ConfigInvalid,
                def.name + " needs max-degree >= " + std::to_string(def.min_degree));
  if (cfg.n_gens) {
    if (*cfg.n_gens == 0 || *cfg.n_gens > kDefaultMaxRank)
      throw Error(ErrorCode::ConfigInvalid, "gens must be between 1 and " + std::to_string(kDefaultMaxRank));
    r.ranks = {*cfg.n_gens};
  } else {
    r.ranks = def.default_ranks;
  }
  r.field = cfg.field ? *cfg.field : def.default_field.value_or(Field::rationals());
  return r;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return d;
  throw Error(ErrorCode::UnknownSuite, "'" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
  }();
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  const SuiteDef& def = find_suite(name);
  const Resolved r = resolve(def, config);
  Report report;
  report.suite = name;
  report.sampling = kSampling;
  report.config = {{"seed", r.seed},
                   {"cases", r.cases == SIZE_MAX ? json("exhaustive") : json(r.cases)},
                   {"max_degree", r.max_degree == 0 ? json("per rank") : json(r.max_degree)},
                   {"gens", r.ranks},
                   {"field", r.field.to_string()}};
  Sampler sampler(mix_seed(r.seed, name), r.field);
  Recorder rec(report, r.cases);
  def.run(r, sampler, rec, report.details);
  return report;
}

std::vector<Report> run_all(const SuiteConfig& config, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto& names = suite_names();
  std::vector<Report> reports(names.size());
  auto run_one = [&](std::size_t i) {
    try {
      reports[i] = run_suite(names[i], config);
    } catch (const Error& e) {
      reports[i] = Report{};
      reports[i].suite = names[i];
      reports[i].sampling = kSampling;
      reports[i].error = e.what();
    }
  };
  for (std::size_t start = 0; start < names.size(); start += jobs) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = start; i < std::min(names.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_one, i));
    for (auto& f : batch) f.get();
  }
  return reports;
}

json to_json(const Report& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"case", f.case_index}, {"anchor", f.anchor}, {"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  json out = {{"suite", r.suite},
              {"config", r.config},
              {"sampling", r.sampling},
              {"cases", r.cases},
              {"passed", r.passed},
              {"failed", r.failed},
              {"failures", std::move(failures)},
              {"details", r.details},
              {"verdict", r.error ? "ERROR" : (r.failed == 0 ? "PASS" : "FAIL")}};
  if (r.error) out["error"] = *r.error;
  return out;
}

}  // namespace liecat
