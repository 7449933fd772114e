#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "liecat/hall_basis.hpp"
#include "liecat/nc_poly.hpp"
#include "liecat/scalar.hpp"

namespace liecat {

/// A Lie polynomial: finite combination of basis words of one BasisTable.
/// Zero coefficients are never stored; the empty map is zero. A
/// default-constructed value is a context-free zero that adopts the table of
/// whatever it is combined with.
class LiePoly {
 public:
  using Terms = std::map<std::size_t, Scalar>;

  LiePoly() = default;
  explicit LiePoly(TablePtr table) : table_(std::move(table)) {}

  static LiePoly generator(const TablePtr& table, std::size_t g);
  static LiePoly basis(const TablePtr& table, std::size_t index, const Scalar& coeff = Scalar(1));

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Scalar coefficient(std::size_t index) const;

  /// Adds c to the coefficient of basis word `index`, dropping it if it cancels.
  void add_term(std::size_t index, const Scalar& c);

  LiePoly& operator+=(const LiePoly& o);
  LiePoly& operator-=(const LiePoly& o);
  LiePoly& operator*=(const Scalar& c);

  friend LiePoly operator+(LiePoly a, const LiePoly& b) { return a += b; }
  friend LiePoly operator-(LiePoly a, const LiePoly& b) { return a -= b; }
  friend LiePoly operator*(LiePoly a, const Scalar& c) { return a *= c; }
  friend LiePoly operator*(const Scalar& c, LiePoly a) { return a *= c; }
  LiePoly operator-() const;

  /// Throws ContextMismatch when both sides are nonzero over different tables.
  friend bool operator==(const LiePoly& a, const LiePoly& b);
  friend bool operator!=(const LiePoly& a, const LiePoly& b) { return !(a == b); }

 private:
  void adopt(const LiePoly& o);

  TablePtr table_;
  Terms terms_;
};

/// Coordinates of [u, v] for two basis words.
LiePoly normalize_bracket(const HallWord& u, const HallWord& v, const TablePtr& table);

/// Bilinear bracket; DegreeOverflow when a contributing pair exceeds the cap.
LiePoly bracket(const LiePoly& p, const LiePoly& q);

/// Bracket that discards every contribution above `max_degree` instead of
/// failing. Only the graded inverse search uses it.
LiePoly bracket_truncated(const LiePoly& p, const LiePoly& q, std::size_t max_degree);

/// Keeps the terms of degree <= max_degree.
LiePoly truncate(const LiePoly& p, std::size_t max_degree);

/// Maximum term degree; 0 for the zero polynomial.
std::size_t degree(const LiePoly& p);

/// Generators occurring in some basis word of p (empty for zero).
std::set<std::size_t> support(const LiePoly& p);

/// Letter counts l_x(u) of one basis word, indexed by generator.
std::vector<std::size_t> occurrences(const HallWord& u, std::size_t n_gens);

struct Measures {
  std::size_t degree = 0;
  std::set<std::size_t> support;
  /// One entry per term, in canonical order: basis index -> letter counts.
  std::map<std::size_t, std::vector<std::size_t>> occurrences;
};

Measures poly_measures(const LiePoly& p);

/// Entry i - 1 is the degree-i component; the list ends at degree(p).
std::vector<LiePoly> homogeneous_components(const LiePoly& p);

/// Scales the degree-i component by a^(i-1). ZeroScale for a == 0.
LiePoly bar_transform(const LiePoly& p, const Scalar& a);

/// Applies f to every coefficient, dropping coefficients that become zero.
template <typename F>
LiePoly map_coefficients(const LiePoly& p, F&& f) {
  LiePoly out(p.table());
  for (const auto& [k, c] : p.terms()) out.add_term(k, f(c));
  return out;
}

/// Image under the Lie homomorphism sending generator g to images[g]. All
/// images share one target table; `target` is used when p is zero or
/// `images` is empty-valued.
LiePoly evaluate(const LiePoly& p, std::span<const LiePoly> images, const TablePtr& target);

/// Same substitution with every bracket truncated at `max_degree`.
LiePoly evaluate_truncated(const LiePoly& p, std::span<const LiePoly> images, const TablePtr& target,
                           std::size_t max_degree);

/// Commutator embedding into the free associative algebra; injective.
NcPoly to_associative(const LiePoly& p);

}  // namespace liecat
