#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "liecat/error.hpp"

namespace liecat {

using Rational = mpq_class;

/// The coefficient field: Q when `d == 0`, otherwise Q(sqrt(d)) for a
/// squarefree integer d other than 0 and 1.
struct Field {
  std::int64_t d = 0;

  static Field rationals() { return {}; }
  static Field quadratic(std::int64_t d);

  bool is_quadratic() const { return d != 0; }
  friend bool operator==(const Field&, const Field&) = default;

  /// "q" or "q-sqrt:<d>"
  std::string to_string() const;
  static Field parse(std::string_view spec);
};

/// Exact element a + b*sqrt(d). Rational-kind scalars have d == 0 and embed
/// into every quadratic field; two quadratic scalars must share d.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
  Scalar(Rational a, Rational b, std::int64_t d);

  static Scalar sqrt_d(std::int64_t d) { return Scalar(Rational(0), Rational(1), d); }

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  std::int64_t d() const { return d_; }
  bool is_quadratic_kind() const { return d_ != 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  Scalar inverse() const;

  /// Exact comparison; throws FieldMismatch for quadratic scalars over different d.
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  /// "p", "p/q" or "(p/q)+(r/s)*w"
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

  std::size_t hash() const;

 private:
  std::int64_t joint_d(const Scalar& o) const;

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 0;
};

Scalar pow(const Scalar& x, long exponent);

/// Field automorphism of Q(sqrt(d)): identity, or conjugation sqrt(d) -> -sqrt(d).
class FieldAut {
 public:
  enum class Kind { Identity, Conjugation };

  static FieldAut identity() { return FieldAut(Kind::Identity, 0); }
  /// Throws FieldMismatch when `field` is Q.
  static FieldAut conjugation(const Field& field);

  Kind kind() const { return kind_; }
  std::int64_t d() const { return d_; }
  bool is_identity() const { return kind_ == Kind::Identity; }
  /// Both automorphisms are involutions.
  FieldAut inverse() const { return *this; }
  std::string to_string() const;

  friend bool operator==(const FieldAut&, const FieldAut&) = default;

 private:
  FieldAut(Kind k, std::int64_t d) : kind_(k), d_(d) {}
  Kind kind_;
  std::int64_t d_;
};

Scalar apply_sigma(const FieldAut& sigma, const Scalar& x);

bool in_prime_subfield(const Scalar& x);

}  // namespace liecat

template <>
struct std::hash<liecat::Scalar> {
  std::size_t operator()(const liecat::Scalar& s) const { return s.hash(); }
};
