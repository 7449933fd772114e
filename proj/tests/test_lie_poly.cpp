#include <doctest.h>

#include "liecat/error.hpp"
#include "liecat/lie_poly.hpp"
#include "liecat/parse.hpp"
#include "support.hpp"

using namespace liecat;

namespace {
struct XYZ {
  TablePtr t = generate_basis(3, 5);
  LiePoly x = LiePoly::generator(t, 0), y = LiePoly::generator(t, 1), z = LiePoly::generator(t, 2);
};
}  // namespace

TEST_CASE("linear operations") {
  XYZ a;
  CHECK((a.x - a.x).is_zero());
  CHECK(format_expr(Scalar(2) * (a.x + bracket(a.x, a.y))) == "2*x + 2*[x,y]");
  CHECK(a.x + a.y - a.y == a.x);
  CHECK(LiePoly() + a.x == a.x);
}

TEST_CASE("brackets of elements") {
  XYZ a;
  CHECK(format_expr(bracket(a.x, a.y)) == "[x,y]");
  CHECK(bracket(a.x + a.y, a.x + a.y).is_zero());
  CHECK(bracket(bracket(a.x, a.y), a.x) == -bracket(a.x, bracket(a.x, a.y)));
  CHECK(format_expr(bracket(bracket(a.x, a.y), a.x)) == "-[x,[x,y]]");
}

TEST_CASE("measures") {
  XYZ a;
  const LiePoly xxy = bracket(a.x, bracket(a.x, a.y));
  Measures m = poly_measures(xxy);
  CHECK(m.degree == 3);
  CHECK(m.support == std::set<std::size_t>{0, 1});
  CHECK(m.occurrences.begin()->second == std::vector<std::size_t>{2, 1, 0});
  m = poly_measures(a.x + bracket(a.y, a.z));
  CHECK(m.degree == 2);
  CHECK(m.support == std::set<std::size_t>{0, 1, 2});
  m = poly_measures(LiePoly(a.t));
  CHECK(m.degree == 0);
  CHECK(m.support.empty());
}

TEST_CASE("homogeneous components") {
  XYZ a;
  auto comps = homogeneous_components(a.x + bracket(a.x, a.y));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == a.x);
  CHECK(comps[1] == bracket(a.x, a.y));
  comps = homogeneous_components(bracket(a.x, a.y));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].is_zero());
  CHECK(homogeneous_components(LiePoly(a.t)).empty());
}

TEST_CASE("bar transform") {
  XYZ a;
  const Scalar s(Rational(7, 5));
  CHECK(bar_transform(a.x + bracket(a.y, a.z), s) == a.x + s * bracket(a.y, a.z));
  CHECK(bar_transform(bracket(a.x, a.y), s) == s * bracket(a.x, a.y));
  CHECK(bar_transform(a.x + bracket(a.x, a.y), Scalar(1)) == a.x + bracket(a.x, a.y));
  CHECK_THROWS_AS(bar_transform(a.x, Scalar(0)), Error);
  const LiePoly p = a.x + bracket(a.x, a.y) + bracket(a.z, bracket(a.x, a.y));
  CHECK(bar_transform(p, Scalar(2)) == a.x + Scalar(2) * bracket(a.x, a.y) + Scalar(4) * bracket(a.z, bracket(a.x, a.y)));
}

TEST_CASE("associative envelope") {
  auto t = generate_basis(2, 4);
  const LiePoly x = LiePoly::generator(t, 0), y = LiePoly::generator(t, 1);
  const std::vector<std::string> names = {"x", "y"};
  CHECK(to_associative(bracket(x, y)).to_string(names) == "xy - yx");
  CHECK(to_associative(bracket(x, bracket(x, y))).to_string(names) == "xxy - 2*xyx + yxx");
  CHECK(to_associative(x).to_string(names) == "x");
}

TEST_CASE("context mismatch") {
  auto t1 = generate_basis(2, 3);
  auto t2 = generate_basis(2, 3);
  CHECK_THROWS_AS((void)(LiePoly::generator(t1, 0) == LiePoly::generator(t2, 0)), Error);
  CHECK_THROWS_AS(LiePoly::generator(t1, 0) + LiePoly::generator(t2, 0), Error);
}

TEST_CASE("degree overflow") {
  auto t = generate_basis(2, 3);
  const LiePoly x = LiePoly::generator(t, 0), y = LiePoly::generator(t, 1);
  try {
    (void)bracket(bracket(x, y), bracket(x, y) + x);
    // [xy, xy] cancels but [xy, x] stays within the cap.
  } catch (const Error&) {
    FAIL("unexpected overflow");
  }
  CHECK_THROWS_AS(bracket(bracket(x, y), bracket(x, bracket(x, y))), Error);
}

TEST_CASE("random bracket laws") {
  for (std::int64_t d : {0, 2}) {
    testing::Gen g(17 + static_cast<std::uint64_t>(d), d);
    for (std::size_t n : {2u, 3u}) {
      auto t = generate_basis(n, 6);
      for (int i = 0; i < 60; ++i) {
        const LiePoly p = g.poly(t, 2), q = g.poly(t, 2), r = g.poly(t, 2);
        const Scalar l = g.scalar();
        CHECK(bracket(p, q) == -bracket(q, p));
        CHECK(bracket(p, p).is_zero());
        CHECK(bracket(p + l * q, r) == bracket(p, r) + l * bracket(q, r));
        CHECK((bracket(p, bracket(q, r)) + bracket(q, bracket(r, p)) + bracket(r, bracket(p, q))).is_zero());
        CHECK(to_associative(bracket(p, q)) == commutator(to_associative(p), to_associative(q)));
        CHECK(to_associative(p + l * q) == to_associative(p) + l * to_associative(q));
      }
    }
  }
}

TEST_CASE("bar transform composes multiplicatively") {
  testing::Gen g(3);
  auto t = generate_basis(3, 5);
  for (int i = 0; i < 100; ++i) {
    const LiePoly p = g.poly(t, 5, 4), q = g.poly(t, 5, 4);
    const Scalar a = g.scalar(), b = g.scalar();
    CHECK(bar_transform(bar_transform(p, a), b) == bar_transform(p, a * b));
    CHECK(bar_transform(p + q, a) == bar_transform(p, a) + bar_transform(q, a));
    CHECK(degree(bar_transform(p, a)) == degree(p));
  }
}

TEST_CASE("evaluation is a homomorphism") {
  testing::Gen g(23);
  auto src = generate_basis(3, 3);
  auto dst = generate_basis(2, 6);
  for (int i = 0; i < 50; ++i) {
    std::vector<LiePoly> images = {g.poly(dst, 2), g.poly(dst, 2), g.poly(dst, 2)};
    const LiePoly p = g.poly(src, 1), q = g.poly(src, 2);
    CHECK(evaluate(bracket(p, q), images, dst) == bracket(evaluate(p, images, dst), evaluate(q, images, dst)));
    std::vector<NcPoly> env;
    for (const auto& im : images) env.push_back(to_associative(im));
    CHECK(to_associative(evaluate(q, images, dst)) == substitute(to_associative(q), env));
  }
}
