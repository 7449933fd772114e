#include "liecat/category.hpp"

#include <algorithm>
#include <numeric>

namespace liecat {

namespace {

void require_in(const LiePoly& p, const TablePtr& table, const char* what) {
  if (p.table() && p.table() != table) throw Error(ErrorCode::ContextMismatch, what);
}

std::vector<LiePoly> adopt_all(std::vector<LiePoly> polys, const TablePtr& table, const char* what) {
  for (auto& p : polys) {
    require_in(p, table, what);
    if (!p.table()) p = LiePoly(table);
  }
  return polys;
}

// All index tuples of length n over `degrees.size()` candidates, ordered by
// total degree and then lexicographically.
std::vector<std::vector<std::size_t>> ordered_tuples(const std::vector<std::size_t>& degrees, std::size_t n) {
  std::vector<std::vector<std::size_t>> tuples;
  const std::size_t c = degrees.size();
  if (c == 0) return tuples;
  std::vector<std::size_t> current(n, 0);
  for (;;) {
    tuples.push_back(current);
    bool advanced = false;
    for (std::size_t pos = n; pos > 0 && !advanced; --pos) {
      if (++current[pos - 1] < c) advanced = true;
      else current[pos - 1] = 0;
    }
    if (!advanced) break;
  }
  auto total = [&](const std::vector<std::size_t>& t) {
    std::size_t s = 0;
    for (auto i : t) s += degrees[i];
    return s;
  };
  std::stable_sort(tuples.begin(), tuples.end(),
                   [&](const auto& a, const auto& b) { return total(a) < total(b); });
  return tuples;
}

std::vector<LiePoly> tuple_of(const std::vector<std::size_t>& idx, const std::vector<LiePoly>& candidates) {
  std::vector<LiePoly> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(candidates[i]);
  return out;
}

}  // namespace

FObject::FObject(TablePtr table, std::size_t max_rank) : table_(std::move(table)) {
  if (!table_) throw Error(ErrorCode::ContextMismatch, "object without a basis table");
  if (table_->generator_count() > max_rank) {
    throw Error(ErrorCode::CapacityExceeded, "object rank " + std::to_string(table_->generator_count()) +
                                                 " exceeds the maximum " + std::to_string(max_rank));
  }
}

Morphism::Morphism(FObject src, FObject tgt, std::vector<LiePoly> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
  if (images.size() != source.rank()) {
    throw Error(ErrorCode::ShapeMismatch, "morphism needs " + std::to_string(source.rank()) + " images");
  }
  images = adopt_all(std::move(images), target.table(), "morphism image outside the target");
}

Morphism Morphism::identity(const FObject& object) {
  std::vector<LiePoly> images;
  for (std::size_t i = 0; i < object.rank(); ++i) images.push_back(object.generator(i));
  return Morphism(object, object, std::move(images));
}

LiePoly Morphism::operator()(const LiePoly& p) const {
  require_in(p, source.table(), "argument outside the source");
  return evaluate(p, images, target.table());
}

bool operator==(const Morphism& a, const Morphism& b) {
  return a.source == b.source && a.target == b.target && a.images == b.images;
}

Morphism compose(const Morphism& s1, const Morphism& s2) {
  if (!(s2.target == s1.source)) throw Error(ErrorCode::ShapeMismatch, "morphisms are not composable");
  std::vector<LiePoly> images;
  for (const auto& img : s2.images) images.push_back(s1(img));
  return Morphism(s2.source, s1.target, std::move(images));
}

LiePoly Point::operator()(const LiePoly& p) const {
  require_in(p, domain.table(), "argument outside the point's domain");
  return evaluate(p, images, h);
}

Point tilde_map(const Morphism& s, const Point& nu) {
  if (!(s.target == nu.domain)) throw Error(ErrorCode::ShapeMismatch, "point domain is not the morphism target");
  std::vector<LiePoly> images;
  for (const auto& w : s.images) images.push_back(nu(w));
  return Point{s.source, nu.h, std::move(images)};
}

std::vector<LiePoly> alpha(const Point& nu) { return nu.images; }

Point alpha_inv(std::span<const LiePoly> tuple, const FObject& domain, const TablePtr& h) {
  if (tuple.size() != domain.rank()) {
    throw Error(ErrorCode::ShapeMismatch, "tuple length " + std::to_string(tuple.size()) + " for rank " +
                                              std::to_string(domain.rank()));
  }
  return Point{domain, h, adopt_all({tuple.begin(), tuple.end()}, h, "tuple entry outside H")};
}

std::vector<LiePoly> poly_map(const Morphism& s, std::span<const LiePoly> a) {
  if (a.size() != s.target.rank()) throw Error(ErrorCode::ShapeMismatch, "tuple length does not match the target rank");
  TablePtr h;
  for (const auto& v : a)
    if (v.table()) h = v.table();
  if (!h) {
    // Every coordinate is zero; so is every component.
    return std::vector<LiePoly>(s.images.size());
  }
  std::vector<LiePoly> out;
  for (const auto& w : s.images) out.push_back(evaluate(w, a, h));
  return out;
}

Morphism nu0(const FObject& x0_object, const FObject& f0) {
  if (f0.rank() != 1) throw Error(ErrorCode::ShapeMismatch, "nu_0 targets the rank-1 algebra");
  return Morphism(x0_object, f0, std::vector<LiePoly>(x0_object.rank(), f0.generator(0)));
}

Morphism nu_a(const FObject& f0, const FObject& target, const LiePoly& w) {
  if (f0.rank() != 1) throw Error(ErrorCode::ShapeMismatch, "nu_a starts at the rank-1 algebra");
  return Morphism(f0, target, {w});
}

Decomposition component_decompose(const Morphism& s, const FObject& x0_object, const FObject& f0) {
  Decomposition d;
  const Morphism collapse = nu0(x0_object, f0);
  for (const auto& w : s.images) d.components.push_back(compose(nu_a(f0, s.target, w), collapse));
  return d;
}

LiePoly project_first(std::span<const LiePoly> tuple) {
  if (tuple.empty()) throw Error(ErrorCode::ShapeMismatch, "projection of an empty tuple");
  return tuple.front();
}

bool projection_identity_holds(const Morphism& s, const Decomposition& d, std::span<const LiePoly> a) {
  if (d.components.size() != s.images.size()) return false;
  const std::vector<LiePoly> lhs = poly_map(s, a);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != project_first(poly_map(d.components[i], a))) return false;
  }
  return true;
}

std::vector<LiePoly> witness_candidates(const TablePtr& h, std::size_t budget_degree) {
  std::vector<LiePoly> out;
  const std::size_t top = std::min(budget_degree, h->cap());
  for (std::size_t d = 1; d <= top; ++d)
    for (const auto& hw : h->degree(d)) out.push_back(LiePoly::basis(h, hw.index));
  if (h->generator_count() >= 2) {
    LiePoly rung = bracket(LiePoly::generator(h, 0), LiePoly::generator(h, 1));
    for (std::size_t d = 2; d <= top; ++d) {
      if (std::find(out.begin(), out.end(), rung) == out.end()) out.push_back(rung);
      if (d + 1 > top) break;
      rung = bracket(LiePoly::generator(h, 0), rung);
    }
  }
  return out;
}

TablePtr h_table_for(std::span<const Morphism> morphisms, std::vector<std::string> h_names,
                     std::size_t budget_degree) {
  std::size_t deg = 1;
  for (const auto& s : morphisms)
    for (const auto& w : s.images) deg = std::max(deg, degree(w));
  return generate_basis(std::move(h_names), deg * std::max<std::size_t>(budget_degree, 1));
}

SeparationResult find_separating_point(const Morphism& s1, const Morphism& s2, const TablePtr& h,
                                       std::size_t budget_degree) {
  if (!(s1.source == s2.source) || !(s1.target == s2.target)) {
    throw Error(ErrorCode::PreconditionFailed, "morphisms must share source and target");
  }
  if (s1 == s2) throw Error(ErrorCode::PreconditionFailed, "morphisms are equal; nothing to separate");

  std::vector<LiePoly> differences;
  for (std::size_t i = 0; i < s1.images.size(); ++i) differences.push_back(s1.images[i] - s2.images[i]);

  const std::vector<LiePoly> candidates = witness_candidates(h, budget_degree);
  std::vector<std::size_t> degrees;
  for (const auto& c : candidates) degrees.push_back(degree(c));

  SeparationResult result;
  result.budget_degree = budget_degree;
  for (const auto& idx : ordered_tuples(degrees, s1.target.rank())) {
    ++result.points_tried;
    const std::vector<LiePoly> tuple = tuple_of(idx, candidates);
    // nu∘s1 != nu∘s2 exactly when nu(s1(y) - s2(y)) != 0 for some y.
    bool separates = false;
    for (const auto& diff : differences) {
      if (!evaluate(diff, tuple, h).is_zero()) {
        separates = true;
        break;
      }
    }
    if (separates) {
      result.witness = Point{s1.target, h, tuple};
      return result;
    }
  }
  return result;
}

AutomorphismCheck basis_candidate_check(const FObject& object, std::span<const LiePoly> candidates) {
  if (candidates.size() != object.rank()) {
    throw Error(ErrorCode::ShapeMismatch, "need exactly one candidate per generator");
  }
  return check_automorphism(Endo(object.table(), {candidates.begin(), candidates.end()}));
}

DualityCheck check_duality(const Morphism& s, const TablePtr& h, std::size_t budget_degree, std::size_t max_points) {
  DualityCheck report;
  const std::vector<LiePoly> candidates = witness_candidates(h, budget_degree);
  std::vector<std::size_t> degrees;
  for (const auto& c : candidates) degrees.push_back(degree(c));

  const FObject x0_object(h);
  const FObject f0(generate_basis(std::vector<std::string>{"x0"}, 1));
  const Decomposition dec = component_decompose(s, x0_object, f0);

  for (const auto& idx : ordered_tuples(degrees, s.target.rank())) {
    if (report.points >= max_points) break;
    ++report.points;
    const std::vector<LiePoly> a = tuple_of(idx, candidates);
    const std::vector<LiePoly> direct = poly_map(s, a);
    const std::vector<LiePoly> via_points = alpha(tilde_map(s, alpha_inv(a, s.target, h)));
    bool square = direct == via_points;
    // Independent route through the associative envelope.
    std::vector<NcPoly> env;
    for (const auto& v : a) env.push_back(to_associative(v));
    for (std::size_t i = 0; square && i < direct.size(); ++i)
      square = to_associative(direct[i]) == substitute(to_associative(s.images[i]), env);
    if (!square) ++report.square_failures;
    if (!projection_identity_holds(s, dec, a)) ++report.decomposition_failures;
  }
  return report;
}

}  // namespace liecat
