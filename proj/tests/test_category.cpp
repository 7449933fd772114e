#include <doctest.h>

#include "liecat/category.hpp"
#include "liecat/error.hpp"
#include "liecat/parse.hpp"
#include "support.hpp"

using namespace liecat;

namespace {
const Field kQ = Field::rationals();

struct Setup {
  FObject Y{generate_basis(std::vector<std::string>{"y"}, 1)};
  FObject X{generate_basis(std::vector<std::string>{"x1", "x2"}, 4)};
  TablePtr H = generate_basis(std::vector<std::string>{"x", "y"}, 8);
  Morphism morph(const char* text, const FObject& src, const FObject& dst) const {
    return Morphism(src, dst, parse_assignment(text, src.table(), dst.table(), kQ));
  }
  Point point(const char* text) const { return alpha_inv(parse_assignment(text, X.table(), H, kQ), X, H); }
};

Morphism random_morphism(testing::Gen& g, const FObject& src, const FObject& dst, std::size_t deg) {
  std::vector<LiePoly> images;
  for (std::size_t i = 0; i < src.rank(); ++i) images.push_back(g.poly(dst.table(), deg));
  return Morphism(src, dst, images);
}
}  // namespace

TEST_CASE("points and tilde maps") {
  Setup s;
  const Morphism m = s.morph("y=>[x1,x2]", s.Y, s.X);
  const Point nu = s.point("x1=>x; x2=>y");
  CHECK(format_expr(tilde_map(m, nu).images[0]) == "[x,y]");
  CHECK(tilde_map(Morphism::identity(s.X), nu) == nu);
  CHECK(alpha_inv(alpha(nu), s.X, s.H) == nu);
  CHECK(format_expr(poly_map(m, alpha(nu))[0]) == "[x,y]");
  const auto a = alpha(nu);
  CHECK(poly_map(Morphism::identity(s.X), a) == a);
}

TEST_CASE("rank one points are evaluations") {
  Setup s;
  const FObject one(generate_basis(std::vector<std::string>{"t"}, 3));
  const LiePoly w = parse_expr("[x,[x,y]]", s.H, kQ);
  const Point nu = alpha_inv(std::vector<LiePoly>{w}, one, s.H);
  CHECK(alpha(nu) == std::vector<LiePoly>{w});
  CHECK(nu(one.generator(0)) == w);
}

TEST_CASE("component decomposition") {
  Setup s;
  const FObject f0(generate_basis(std::vector<std::string>{"x0"}, 1));
  const FObject x0(generate_basis(std::vector<std::string>{"a", "b"}, 1));
  const Morphism m = s.morph("y=>[x1,x2]+x1", s.Y, s.X);
  const Decomposition d = component_decompose(m, x0, f0);
  REQUIRE(d.components.size() == 1);
  for (std::size_t i = 0; i < 2; ++i) CHECK(d.components[0].images[i] == m.images[0]);
  const Point nu = s.point("x1=>x; x2=>[x,y]");
  CHECK(project_first(poly_map(d.components[0], alpha(nu))) == poly_map(m, alpha(nu))[0]);
  // Identity: coordinate constants.
  const Decomposition e = component_decompose(Morphism::identity(s.X), x0, f0);
  REQUIRE(e.components.size() == 2);
  CHECK(e.components[1].images[0] == s.X.generator(1));
  // nu_0 composed with the swap of X0 is nu_0.
  const Morphism swap_x0(x0, x0, {x0.generator(1), x0.generator(0)});
  CHECK(compose(nu0(x0, f0), swap_x0) == nu0(x0, f0));
  CHECK(nu_a(f0, f0, f0.generator(0)) == Morphism::identity(f0));
}

TEST_CASE("separation") {
  Setup s;
  const FObject X(generate_basis(std::vector<std::string>{"x1", "x2"}, 2));
  const auto h = generate_basis(std::vector<std::string>{"x", "y"}, 8);
  auto sep = find_separating_point(s.morph("y=>x1", s.Y, X), s.morph("y=>x2", s.Y, X), h, 4);
  REQUIRE(sep.found());
  CHECK(format_assignment(sep.witness->images, X.table()) == "x1=>x; x2=>y");
  sep = find_separating_point(s.morph("y=>[x1,x2]", s.Y, X), s.morph("y=>2*[x1,x2]", s.Y, X), h, 4);
  REQUIRE(sep.found());
  CHECK(tilde_map(s.morph("y=>[x1,x2]", s.Y, X), *sep.witness) != tilde_map(s.morph("y=>2*[x1,x2]", s.Y, X), *sep.witness));
  CHECK_THROWS_AS(find_separating_point(s.morph("y=>x1", s.Y, X), s.morph("y=>x1", s.Y, X), h, 4), Error);
}

TEST_CASE("rank one target cannot separate") {
  const FObject Y(generate_basis(std::vector<std::string>{"y"}, 1));
  const FObject X(generate_basis(std::vector<std::string>{"x1", "x2"}, 2));
  const auto h0 = generate_basis(std::vector<std::string>{"x0"}, 8);
  const Morphism s1(Y, X, {bracket(X.generator(0), X.generator(1))});
  const Morphism s2(Y, X, {LiePoly(X.table())});
  const auto res = find_separating_point(s1, s2, h0, 4);
  CHECK_FALSE(res.found());
  CHECK(res.budget_degree == 4);
  CHECK(res.points_tried >= 1);
}

TEST_CASE("randomized duality laws") {
  testing::Gen g(31);
  const auto h = generate_basis(std::vector<std::string>{"u", "v"}, 8);
  const FObject f0(generate_basis(std::vector<std::string>{"x0"}, 1));
  const FObject x0(generate_basis(std::vector<std::string>{"a", "b"}, 1));
  for (int i = 0; i < 40; ++i) {
    const FObject X(generate_basis(1 + static_cast<std::size_t>(g.range(0, 2)), 4));
    const FObject Y(generate_basis(1 + static_cast<std::size_t>(g.range(0, 2)), 2));
    const FObject Z(generate_basis(1 + static_cast<std::size_t>(g.range(0, 2)), 1));
    const Morphism s1 = random_morphism(g, Y, X, 2), s2 = random_morphism(g, Z, Y, 2);
    std::vector<LiePoly> a;
    for (std::size_t k = 0; k < X.rank(); ++k) a.push_back(g.poly(h, 2));
    const Point nu = alpha_inv(a, X, h);
    CHECK(alpha(tilde_map(s1, nu)) == poly_map(s1, a));
    CHECK(tilde_map(compose(s1, s2), nu) == tilde_map(s2, tilde_map(s1, nu)));
    CHECK(projection_identity_holds(s1, component_decompose(s1, x0, f0), a));
    const DualityCheck dc = check_duality(s1, h, 2, 10);
    CHECK(dc.ok());
    CHECK(dc.points > 0);
  }
}

TEST_CASE("randomized separation") {
  testing::Gen g(37);
  const FObject Y(generate_basis(2, 1));
  const FObject X(generate_basis(3, 3));
  for (int i = 0; i < 10; ++i) {
    Morphism s1 = random_morphism(g, Y, X, 3), s2 = random_morphism(g, Y, X, 3);
    if (s1 == s2) continue;
    std::vector<Morphism> both = {s1, s2};
    const auto h = h_table_for(both, {"u", "v"}, 4);
    const auto res = find_separating_point(s1, s2, h, 4);
    REQUIRE(res.found());
    CHECK(tilde_map(s1, *res.witness) != tilde_map(s2, *res.witness));
  }
}

TEST_CASE("basis candidates") {
  const FObject X(generate_basis(2, 4));
  CHECK(basis_candidate_check(X, std::vector<LiePoly>{X.generator(1), X.generator(0)}).verdict == Verdict::Yes);
  CHECK(basis_candidate_check(X, std::vector<LiePoly>{X.generator(0), X.generator(0)}).verdict == Verdict::No);
  CHECK(basis_candidate_check(X, std::vector<LiePoly>{X.generator(0) + bracket(X.generator(0), X.generator(1)),
                                                      X.generator(1)})
            .verdict != Verdict::Yes);
}

TEST_CASE("shape errors") {
  Setup s;
  CHECK_THROWS_AS(Morphism(s.Y, s.X, {}), Error);
  const Morphism m = s.morph("y=>x1", s.Y, s.X);
  CHECK_THROWS_AS(compose(m, m), Error);
  CHECK_THROWS_AS(FObject(generate_basis(5, 1)), Error);
}
