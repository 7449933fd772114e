#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecat/endomorphism.hpp"
#include "liecat/lie_poly.hpp"

namespace liecat {

/// Default bound on object rank.
inline constexpr std::size_t kDefaultMaxRank = 4;

/// A free Lie algebra F(X) truncated at its table's cap.
class FObject {
 public:
  explicit FObject(TablePtr table, std::size_t max_rank = kDefaultMaxRank);

  const TablePtr& table() const { return table_; }
  std::size_t rank() const { return table_->generator_count(); }
  LiePoly generator(std::size_t i) const { return LiePoly::generator(table_, i); }

  friend bool operator==(const FObject& a, const FObject& b) { return a.table_ == b.table_; }

 private:
  TablePtr table_;
};

/// s: F(Y) -> F(X), stored as the images s(y_i) in F(X).
struct Morphism {
  FObject source;
  FObject target;
  std::vector<LiePoly> images;

  Morphism(FObject source, FObject target, std::vector<LiePoly> images);
  static Morphism identity(const FObject& object);

  LiePoly operator()(const LiePoly& p) const;
  friend bool operator==(const Morphism& a, const Morphism& b);
};

/// s1∘s2 (s2 first). ShapeMismatch unless target(s2) == source(s1).
Morphism compose(const Morphism& s1, const Morphism& s2);

/// A homomorphism nu: F(X) -> H given by the images of the generators of X.
struct Point {
  FObject domain;
  TablePtr h;
  std::vector<LiePoly> images;

  LiePoly operator()(const LiePoly& p) const;
  friend bool operator==(const Point& a, const Point& b) { return a.images == b.images; }
};

/// s~(nu) = nu∘s, a point of F(source(s)).
Point tilde_map(const Morphism& s, const Point& nu);

/// alpha_X(nu) = (nu(x_1), ..., nu(x_n)).
std::vector<LiePoly> alpha(const Point& nu);
Point alpha_inv(std::span<const LiePoly> tuple, const FObject& domain, const TablePtr& h);

/// s^alpha(a) = (w_1(a), ..., w_m(a)) with w_i = s(y_i).
std::vector<LiePoly> poly_map(const Morphism& s, std::span<const LiePoly> a);

/// nu_0: F(X0) -> F0 sending every generator to x0.
Morphism nu0(const FObject& x0_object, const FObject& f0);
/// nu_w: F0 -> F(X) sending x0 to w.
Morphism nu_a(const FObject& f0, const FObject& target, const LiePoly& w);

/// s = (s_1, ..., s_m) with s_i = nu_{w_i}∘nu_0 : F(X0) -> F(X).
struct Decomposition {
  std::vector<Morphism> components;
};

Decomposition component_decompose(const Morphism& s, const FObject& x0_object, const FObject& f0);

/// pi(b_1, ..., b_k) = b_1.
LiePoly project_first(std::span<const LiePoly> tuple);

/// s^alpha(a) == (pi s_1^alpha(a), ..., pi s_m^alpha(a)).
bool projection_identity_holds(const Morphism& s, const Decomposition& d, std::span<const LiePoly> a);

/// Candidate generator images in H: every basis word of degree <= budget,
/// in basis order, followed by the chain [x,y], [x,[x,y]], ... of degree
/// <= budget when H has two or more generators (already basis words for
/// the Lyndon basis, so only new elements are appended).
std::vector<LiePoly> witness_candidates(const TablePtr& h, std::size_t budget_degree);

struct SeparationResult {
  std::optional<Point> witness;
  std::size_t points_tried = 0;
  std::size_t budget_degree = 0;

  bool found() const { return witness.has_value(); }
};

/// Searches points nu: F(X) -> H built from witness_candidates, ordered by
/// total degree then lexicographically, for nu∘s1 != nu∘s2. `h` must have
/// cap >= max(deg s_i(y)) * budget_degree. PreconditionFailed when s1 == s2
/// or the shapes differ.
SeparationResult find_separating_point(const Morphism& s1, const Morphism& s2, const TablePtr& h,
                                       std::size_t budget_degree);

/// Table for H large enough to evaluate `s` at every candidate point.
TablePtr h_table_for(std::span<const Morphism> morphisms, std::vector<std::string> h_names,
                     std::size_t budget_degree);

/// Endomorphism x_i -> S_i checked with check_automorphism; Yes means S is a
/// free generating set of F(X).
AutomorphismCheck basis_candidate_check(const FObject& object, std::span<const LiePoly> candidates);

struct DualityCheck {
  std::size_t points = 0;
  std::size_t square_failures = 0;
  std::size_t decomposition_failures = 0;
  bool ok() const { return square_failures == 0 && decomposition_failures == 0; }
};

/// Evaluates the alpha square and the projection decomposition of `s` at
/// the first `max_points` candidate points.
DualityCheck check_duality(const Morphism& s, const TablePtr& h, std::size_t budget_degree, std::size_t max_points);

}  // namespace liecat
