#include "liecat/endomorphism.hpp"

namespace liecat {

namespace {

bool degree_at_most_one(const LiePoly& p) { return degree(p) <= 1; }

// Removes the a*x_g part of p and returns a.
Scalar split_generator(LiePoly& p, std::size_t g) {
  Scalar a = p.coefficient(g);
  p.add_term(g, -a);
  return a;
}

}  // namespace

Endo::Endo(TablePtr table, std::vector<LiePoly> images) : table_(std::move(table)), images_(std::move(images)) {
  if (!table_) throw Error(ErrorCode::ContextMismatch, "endomorphism without a basis table");
  if (images_.size() != table_->generator_count()) {
    throw Error(ErrorCode::ShapeMismatch, "endomorphism needs " + std::to_string(table_->generator_count()) +
                                              " images, got " + std::to_string(images_.size()));
  }
  for (auto& img : images_) {
    if (img.table() && img.table() != table_) throw Error(ErrorCode::ContextMismatch, "image from another table");
    if (!img.table()) img = LiePoly(table_);
  }
}

Endo Endo::identity(const TablePtr& table) {
  std::vector<LiePoly> images;
  for (std::size_t g = 0; g < table->generator_count(); ++g) images.push_back(LiePoly::generator(table, g));
  return Endo(table, std::move(images));
}

LiePoly Endo::operator()(const LiePoly& p) const { return apply(*this, p); }

LiePoly apply(const Endo& phi, const LiePoly& p) {
  if (p.table() && p.table() != phi.table()) throw Error(ErrorCode::ContextMismatch, "polynomial from another table");
  return evaluate(p, phi.images(), phi.table());
}

Endo compose(const Endo& phi, const Endo& psi) {
  if (phi.table() != psi.table()) throw Error(ErrorCode::ContextMismatch, "composing endomorphisms of different tables");
  std::vector<LiePoly> images;
  images.reserve(psi.rank());
  for (const auto& img : psi.images()) images.push_back(apply(phi, img));
  return Endo(phi.table(), std::move(images));
}

std::size_t degree(const Endo& phi) {
  std::size_t d = 0;
  for (const auto& img : phi.images()) d = std::max(d, degree(img));
  return d;
}

bool is_constant(const Endo& phi) {
  for (const auto& img : phi.images())
    if (img != phi.image(0)) return false;
  return true;
}

bool is_linear(const Endo& phi) {
  for (const auto& img : phi.images())
    if (!degree_at_most_one(img)) return false;
  return true;
}

bool is_diagonal(const Endo& phi) {
  for (std::size_t g = 0; g < phi.rank(); ++g) {
    LiePoly rest = phi.image(g);
    split_generator(rest, g);
    if (!rest.is_zero()) return false;
  }
  return true;
}

bool is_scalar(const Endo& phi) {
  if (!is_diagonal(phi)) return false;
  for (std::size_t g = 0; g < phi.rank(); ++g)
    if (phi.image(g).coefficient(g) != phi.image(0).coefficient(0)) return false;
  return true;
}

bool is_permutation(const Endo& phi) {
  std::vector<bool> hit(phi.rank(), false);
  for (const auto& img : phi.images()) {
    if (img.term_count() != 1) return false;
    const auto& [k, c] = *img.terms().begin();
    if (k >= phi.rank() || c != Scalar(1) || hit[k]) return false;
    hit[k] = true;
  }
  return true;
}

bool is_triangular(const Endo& phi) {
  for (std::size_t g = 0; g < phi.rank(); ++g) {
    LiePoly tail = phi.image(g);
    if (split_generator(tail, g).is_zero()) return false;
    for (auto letter : support(tail))
      if (letter >= g) return false;
  }
  return true;
}

namespace family {

Endo constant(const TablePtr& table, const LiePoly& p) {
  return Endo(table, std::vector<LiePoly>(table->generator_count(), p));
}

Endo scalar(const TablePtr& table, const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroScale, "scalar automorphism with a = 0");
  std::vector<Scalar> diag(table->generator_count(), a);
  return diagonal(table, diag);
}

Endo diagonal(const TablePtr& table, std::span<const Scalar> a) {
  if (a.size() != table->generator_count()) throw Error(ErrorCode::BadSpec, "one diagonal entry per generator");
  std::vector<LiePoly> images;
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (a[g].is_zero()) throw Error(ErrorCode::ZeroScale, "diagonal entry " + std::to_string(g) + " is zero");
    images.push_back(LiePoly::basis(table, g, a[g]));
  }
  return Endo(table, std::move(images));
}

Endo swap(const TablePtr& table, std::size_t x, std::size_t y) {
  if (x >= table->generator_count() || y >= table->generator_count() || x == y) {
    throw Error(ErrorCode::BadSpec, "swap needs two distinct generators");
  }
  Endo id = Endo::identity(table);
  std::vector<LiePoly> images = id.images();
  std::swap(images[x], images[y]);
  return Endo(table, std::move(images));
}

Endo stretch(const TablePtr& table, std::size_t y, const Scalar& m) {
  if (y >= table->generator_count()) throw Error(ErrorCode::BadSpec, "stretch of an unknown generator");
  if (m.is_zero()) throw Error(ErrorCode::ZeroScale, "stretch with m = 0");
  std::vector<LiePoly> images = Endo::identity(table).images();
  images[y] *= m;
  return Endo(table, std::move(images));
}

Endo shear(const TablePtr& table, std::size_t y, const Scalar& m, std::size_t x) {
  if (y >= table->generator_count() || x >= table->generator_count() || x == y) {
    throw Error(ErrorCode::BadSpec, "shear needs two distinct generators");
  }
  if (m.is_zero()) throw Error(ErrorCode::ZeroScale, "shear with m = 0");
  std::vector<LiePoly> images = Endo::identity(table).images();
  images[y] = m * images[y] + LiePoly::generator(table, x);
  return Endo(table, std::move(images));
}

Endo triangular(const TablePtr& table, const TriangularSpec& spec) {
  const std::size_t n = table->generator_count();
  if (spec.diagonal.size() != n || spec.tails.size() != n) {
    throw Error(ErrorCode::BadSpec, "triangular spec needs one diagonal entry and one tail per generator");
  }
  std::vector<LiePoly> images;
  for (std::size_t g = 0; g < n; ++g) {
    if (spec.diagonal[g].is_zero()) throw Error(ErrorCode::ZeroScale, "triangular diagonal entry is zero");
    for (auto letter : support(spec.tails[g])) {
      if (letter >= g) {
        throw Error(ErrorCode::BadSpec, "tail of generator " + std::to_string(g) + " uses a later generator");
      }
    }
    images.push_back(LiePoly::basis(table, g, spec.diagonal[g]) + spec.tails[g]);
  }
  return Endo(table, std::move(images));
}

Endo linear(const TablePtr& table, const MatrixN& m) { return from_matrix(table, m); }

}  // namespace family

MatrixN linear_part(const Endo& phi) {
  const auto n = static_cast<Eigen::Index>(phi.rank());
  MatrixN m = MatrixN::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col)
    for (Eigen::Index row = 0; row < n; ++row)
      m(row, col) = phi.image(static_cast<std::size_t>(col)).coefficient(static_cast<std::size_t>(row));
  return m;
}

MatrixN to_matrix(const Endo& phi) {
  if (!is_linear(phi)) throw Error(ErrorCode::NotLinear, "endomorphism has nonlinear images");
  return linear_part(phi);
}

Endo from_matrix(const TablePtr& table, const MatrixN& m) {
  const auto n = static_cast<Eigen::Index>(table->generator_count());
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::ShapeMismatch, "matrix size must match the rank");
  std::vector<LiePoly> images;
  for (Eigen::Index col = 0; col < n; ++col) {
    LiePoly img(table);
    for (Eigen::Index row = 0; row < n; ++row) img.add_term(static_cast<std::size_t>(row), m(row, col));
    images.push_back(std::move(img));
  }
  return Endo(table, std::move(images));
}

Endo inner_conjugate(const Scalar& a, const Endo& phi) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroScale, "inner conjugation by f_0");
  const TablePtr& table = phi.table();
  Endo composed = compose(family::scalar(table, a), compose(phi, family::scalar(table, a.inverse())));
  for (std::size_t g = 0; g < phi.rank(); ++g) {
    if (composed.image(g) != bar_transform(phi.image(g), a)) {
      throw Error(ErrorCode::InternalError, "f_a phi f_a^-1 disagrees with the graded closed form");
    }
  }
  return composed;
}

LiePoly sigma_F(const FieldAut& sigma, const LiePoly& p) {
  return map_coefficients(p, [&](const Scalar& c) { return apply_sigma(sigma, c); });
}

LiePoly SemiMorphism::operator()(const LiePoly& p) const { return apply(base, sigma_F(sigma, p)); }

SemiMorphism make_sigma_F(const FieldAut& sigma, const TablePtr& table, const Field& field) {
  if (!sigma.is_identity() && sigma.d() != field.d) {
    throw Error(ErrorCode::FieldMismatch, "automorphism " + sigma.to_string() + " over field " + field.to_string());
  }
  return SemiMorphism{sigma, Endo::identity(table)};
}

SemiMorphism inverse(const SemiMorphism& s) {
  const FieldAut sigma_inv = s.sigma.inverse();
  const Endo id = Endo::identity(s.base.table());
  if (s.base == id) return SemiMorphism{sigma_inv, id};
  AutomorphismCheck check = check_automorphism(s.base);
  if (check.verdict != Verdict::Yes) throw Error(ErrorCode::NotInvertible, "base map: " + check.reason);
  // s^-1 = sigma_F^-1 base^-1 = (sigma_F^-1 base^-1 sigma_F) sigma_F^-1, and the
  // bracketed factor sends x to sigma_F^-1(base^-1(x)).
  std::vector<LiePoly> images;
  for (const auto& img : check.inverse->images()) images.push_back(sigma_F(sigma_inv, img));
  return SemiMorphism{sigma_inv, Endo(s.base.table(), std::move(images))};
}

Endo semi_conjugate(const SemiMorphism& s, const Endo& phi) {
  if (s.base.table() != phi.table()) throw Error(ErrorCode::ContextMismatch, "semimorphism from another table");
  const SemiMorphism s_inv = inverse(s);
  std::vector<LiePoly> images;
  for (std::size_t g = 0; g < phi.rank(); ++g) {
    const LiePoly x = LiePoly::generator(phi.table(), g);
    images.push_back(s(apply(phi, s_inv(x))));
  }
  return Endo(phi.table(), std::move(images));
}

Scalar DetPower::operator()(const Endo& g) const {
  const Scalar det = determinant(to_matrix(g));
  if (det.is_zero()) throw Error(ErrorCode::Singular, "character of a singular linear map");
  return pow(det, k);
}

Endo diagonal_twist(const DetPower& h, const Endo& g) {
  const Scalar factor = h(g);
  std::vector<LiePoly> images;
  for (const auto& img : g.images()) images.push_back(factor * img);
  return Endo(g.table(), std::move(images));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

bool is_two_sided_inverse(const Endo& phi, const Endo& psi) {
  const Endo id = Endo::identity(phi.table());
  try {
    return compose(phi, psi) == id && compose(psi, phi) == id;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegreeOverflow) return false;
    throw;
  }
}

}  // namespace

AutomorphismCheck check_automorphism(const Endo& phi, const std::optional<Endo>& witness) {
  const TablePtr& table = phi.table();
  if (witness && is_two_sided_inverse(phi, *witness)) return {Verdict::Yes, witness, "supplied witness is a two-sided inverse"};

  const MatrixN lin = linear_part(phi);
  const std::optional<MatrixN> lin_inv = inverse(lin);
  if (!lin_inv) {
    return {Verdict::No, std::nullopt, "linear part is singular (determinant 0), so phi is not surjective"};
  }
  const Endo lin_inv_endo = from_matrix(table, *lin_inv);
  if (is_linear(phi)) return {Verdict::Yes, lin_inv_endo, "invertible matrix"};

  const std::size_t witness_degree = table->cap() / degree(phi);
  if (witness_degree < 2) {
    return {Verdict::Inconclusive, std::nullopt, "cap too small to search for a nonlinear inverse"};
  }

  // Graded inverse: q_g agrees with the true inverse up to one more degree per pass.
  std::vector<LiePoly> q = lin_inv_endo.images();
  for (std::size_t pass = 1; pass < witness_degree; ++pass) {
    for (std::size_t g = 0; g < q.size(); ++g) {
      LiePoly residual = LiePoly::generator(table, g) -
                         evaluate_truncated(q[g], phi.images(), table, witness_degree);
      q[g] += apply(lin_inv_endo, residual);
    }
  }
  Endo candidate(table, std::move(q));
  if (is_two_sided_inverse(phi, candidate)) return {Verdict::Yes, candidate, "graded inverse verified exactly"};
  return {Verdict::Inconclusive, std::nullopt,
          "no polynomial inverse of degree <= " + std::to_string(witness_degree) + " within cap " +
              std::to_string(table->cap())};
}

}  // namespace liecat
