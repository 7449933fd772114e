#include "liecat/scalar.hpp"

#include <charconv>
#include <cstdlib>

namespace liecat {

namespace {

bool is_squarefree(std::int64_t d) {
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-d) : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

Field Field::quadratic(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw Error(ErrorCode::ConfigInvalid,
                "field parameter d=" + std::to_string(d) + " must be a squarefree integer other than 0 and 1");
  }
  return Field{d};
}

std::string Field::to_string() const { return d == 0 ? "q" : "q-sqrt:" + std::to_string(d); }

Field Field::parse(std::string_view spec) {
  if (spec == "q") return rationals();
  constexpr std::string_view prefix = "q-sqrt:";
  if (spec.substr(0, prefix.size()) == prefix) {
    auto digits = spec.substr(prefix.size());
    std::int64_t d = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return quadratic(d);
  }
  throw Error(ErrorCode::ConfigInvalid, "unknown field spec '" + std::string(spec) + "' (expected q or q-sqrt:<d>)");
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (d_ == 0 && sgn(b_) != 0) throw Error(ErrorCode::FieldMismatch, "irrational part over Q");
}

std::int64_t Scalar::joint_d(const Scalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error(ErrorCode::FieldMismatch,
              "Q(sqrt(" + std::to_string(d_) + ")) vs Q(sqrt(" + std::to_string(o.d_) + "))");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = joint_d(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = joint_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const std::int64_t d = joint_d(o);
  if (d == 0) {
    a_ *= o.a_;
  } else {
    Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = d;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  joint_d(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  if (sgn(b_) == 0) {
    Scalar r = *this;
    r.a_ = 1 / a_;
    return r;
  }
  // (a + b w)^-1 = (a - b w) / (a^2 - d b^2); the norm is nonzero for squarefree d != 1.
  Rational norm = a_ * a_ - Rational(d_) * b_ * b_;
  return Scalar(a_ / norm, -b_ / norm, d_);
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.d_ != 0 && y.d_ != 0 && x.d_ != y.d_ && (sgn(x.b_) != 0 || sgn(y.b_) != 0)) {
    throw Error(ErrorCode::FieldMismatch, "comparing scalars of different quadratic fields");
  }
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string Scalar::to_string() const {
  if (sgn(b_) == 0) return rational_text(a_);
  return "(" + rational_text(a_) + ")+(" + rational_text(b_) + ")*w";
}

std::size_t Scalar::hash() const {
  std::hash<std::string> h;
  return h(a_.get_str()) * 31 + h(b_.get_str());
}

Scalar pow(const Scalar& x, long exponent) {
  if (exponent < 0) return pow(x.inverse(), -exponent);
  Scalar result(1);
  Scalar base = x;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldAut FieldAut::conjugation(const Field& field) {
  if (!field.is_quadratic()) throw Error(ErrorCode::FieldMismatch, "conjugation requires a quadratic field");
  return FieldAut(Kind::Conjugation, field.d);
}

std::string FieldAut::to_string() const {
  return kind_ == Kind::Identity ? "identity" : "conjugation(q-sqrt:" + std::to_string(d_) + ")";
}

Scalar apply_sigma(const FieldAut& sigma, const Scalar& x) {
  if (sigma.is_identity() || !x.is_quadratic_kind()) return x;
  if (x.d() != sigma.d()) throw Error(ErrorCode::FieldMismatch, "automorphism and scalar live in different fields");
  return Scalar(x.rational_part(), -x.irrational_part(), x.d());
}

bool in_prime_subfield(const Scalar& x) { return sgn(x.irrational_part()) == 0; }

}  // namespace liecat
