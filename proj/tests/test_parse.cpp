#include <doctest.h>

#include <functional>

#include "liecat/error.hpp"
#include "liecat/parse.hpp"
#include "support.hpp"

using namespace liecat;

namespace {
ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalError;
}
}  // namespace

TEST_CASE("parse and normalize") {
  auto t = generate_basis(2, 4);
  const Field q = Field::rationals();
  CHECK(parse_expr("[x,y]", t, q) == LiePoly::basis(t, 2));
  CHECK(parse_expr("[y,x] + [x,y]", t, q).is_zero());
  CHECK(format_expr(parse_expr("[y,x]+[x,y]", t, q)) == "0");
  CHECK(format_expr(parse_expr("2*[x,[x,y]] - [x,[x,y]]", t, q)) == "[x,[x,y]]");
  CHECK(format_expr(parse_expr("-x + 3/2*[x,y]", t, q)) == "-x + 3/2*[x,y]");
  CHECK(format_expr(parse_expr("(1/2)*([x,y] + x)", t, q)) == "1/2*x + 1/2*[x,y]");
  CHECK(format_expr(parse_expr("[[x,y],x]", t, q)) == "-[x,[x,y]]");
  CHECK(parse_expr("0", t, q).is_zero());
}

TEST_CASE("quadratic coefficients") {
  auto t = generate_basis(2, 3);
  const Field k = Field::quadratic(2);
  const LiePoly p = parse_expr("((1)+(2)*w)*[x,y] - (w)*x", t, k);
  CHECK(p.coefficient(2) == Scalar(Rational(1), Rational(2), 2));
  CHECK(p.coefficient(0) == -Scalar::sqrt_d(2));
  CHECK(parse_expr(format_expr(p), t, k) == p);
  CHECK(code_of([&] { parse_expr("(w)*x", t, Field::rationals()); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("errors") {
  auto t = generate_basis(2, 3);
  const Field q = Field::rationals();
  CHECK(code_of([&] { parse_expr("[x,u]", t, q); }) == ErrorCode::UnknownGenerator);
  CHECK(code_of([&] { parse_expr("[x,y", t, q); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expr("x +", t, q); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expr("3", t, q); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_expr("[x,[x,[x,y]]]", t, q); }) == ErrorCode::DegreeOverflow);
  try {
    parse_expr("x + ]", t, q);
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("assignments") {
  auto t = generate_basis(2, 3);
  const Field q = Field::rationals();
  auto images = parse_assignment("x=>[x,y]; y=>y", t, t, q);
  REQUIRE(images.size() == 2);
  CHECK(format_expr(images[0]) == "[x,y]");
  CHECK(format_assignment(images, t) == "x=>[x,y]; y=>y");
  images = parse_assignment("y=>2*x", t, t, q);
  CHECK(format_assignment(images, t) == "x=>x; y=>2*x");
  CHECK(code_of([&] { parse_assignment("x=>y; x=>x", t, t, q); }) == ErrorCode::BadSpec);
  CHECK(code_of([&] { parse_assignment("u=>y", t, t, q); }) == ErrorCode::UnknownGenerator);
  auto other = generate_basis(std::vector<std::string>{"a", "b"}, 1);
  CHECK(code_of([&] { parse_assignment("a=>x", other, t, q); }) == ErrorCode::BadSpec);
}

TEST_CASE("round trip on random polynomials") {
  for (std::int64_t d : {0, 3}) {
    testing::Gen g(41 + static_cast<std::uint64_t>(d), d);
    const Field f = d ? Field::quadratic(d) : Field::rationals();
    for (std::size_t n : {2u, 3u, 4u}) {
      auto t = generate_basis(n, 4);
      for (int i = 0; i < 100; ++i) {
        const LiePoly p = g.poly(t, 4, 4);
        CHECK(parse_expr(format_expr(p), t, f) == p);
      }
    }
  }
}
