#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "liecat/hall_basis.hpp"
#include "liecat/scalar.hpp"

namespace liecat {

/// Element of the free associative algebra on the same generators: a map from
/// words to nonzero coefficients. Used as an independent oracle for the Lie
/// layer through the commutator embedding [u,v] -> uv - vu.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  NcPoly() = default;
  static NcPoly letter(std::uint8_t g);
  static NcPoly monomial(Word w, Scalar c = Scalar(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Word& w, const Scalar& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

  /// Renders with generator names, e.g. "xxy - 2*xyx + yxx".
  std::string to_string(std::span<const std::string> names) const;

 private:
  Terms terms_;
};

inline NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

/// Associative substitution: each letter g is replaced by images[g].
NcPoly substitute(const NcPoly& p, std::span<const NcPoly> images);

}  // namespace liecat
