#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecat/lie_poly.hpp"
#include "liecat/matrix.hpp"
#include "liecat/scalar.hpp"

namespace liecat {

/// Endomorphism of a free Lie algebra, given by the images of the generators.
///
/// Composition follows function notation: compose(phi, psi) applies psi
/// first, so compose(phi, constant(x)) == constant(phi(x)) and
/// to_matrix(compose(phi, psi)) == to_matrix(phi) * to_matrix(psi).
class Endo {
 public:
  Endo(TablePtr table, std::vector<LiePoly> images);

  static Endo identity(const TablePtr& table);

  const TablePtr& table() const { return table_; }
  std::size_t rank() const { return images_.size(); }
  const LiePoly& image(std::size_t g) const { return images_.at(g); }
  const std::vector<LiePoly>& images() const { return images_; }

  LiePoly operator()(const LiePoly& p) const;

  friend bool operator==(const Endo& a, const Endo& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Endo& a, const Endo& b) { return !(a == b); }

 private:
  TablePtr table_;
  std::vector<LiePoly> images_;
};

/// The Lie homomorphism extending the assignment, applied to p.
LiePoly apply(const Endo& phi, const LiePoly& p);

/// (phi∘psi)(x) = phi(psi(x)).
Endo compose(const Endo& phi, const Endo& psi);

/// Maximum image degree (0 when every image is zero).
std::size_t degree(const Endo& phi);

bool is_constant(const Endo& phi);
bool is_linear(const Endo& phi);
/// x -> a x for one common a.
bool is_scalar(const Endo& phi);
/// x_i -> a_i x_i.
bool is_diagonal(const Endo& phi);
/// Permutes the generators.
bool is_permutation(const Endo& phi);
/// x_i -> a_i x_i + f_i(x_1..x_{i-1}) with every a_i nonzero.
bool is_triangular(const Endo& phi);

/// Named endomorphism families. Generators are addressed by index.
namespace family {

/// c_p: every generator goes to p.
Endo constant(const TablePtr& table, const LiePoly& p);
/// f_a: x -> a x.
Endo scalar(const TablePtr& table, const Scalar& a);
/// tau: x_i -> a_i x_i.
Endo diagonal(const TablePtr& table, std::span<const Scalar> a);
/// g_xy: exchanges x and y, fixes the rest.
Endo swap(const TablePtr& table, std::size_t x, std::size_t y);
/// g_my: y -> m y, fixes the rest.
Endo stretch(const TablePtr& table, std::size_t y, const Scalar& m);
/// g'_my: y -> m y + x, fixes the rest.
Endo shear(const TablePtr& table, std::size_t y, const Scalar& m, std::size_t x);

struct TriangularSpec {
  std::vector<Scalar> diagonal;
  /// tails[i] may only involve generators with index < i; zero polynomials allowed.
  std::vector<LiePoly> tails;
};
/// x_i -> a_i x_i + f_i(x_1..x_{i-1}).
Endo triangular(const TablePtr& table, const TriangularSpec& spec);

Endo linear(const TablePtr& table, const MatrixN& m);

}  // namespace family

/// Column i holds the coordinates of phi(x_i). NotLinear unless is_linear(phi).
MatrixN to_matrix(const Endo& phi);
Endo from_matrix(const TablePtr& table, const MatrixN& m);

/// Matrix of the degree-1 parts of the images.
MatrixN linear_part(const Endo& phi);

/// f_a phi f_a^{-1}. Computed by composing the three maps and checked against
/// the closed form x -> bar_transform(phi(x), a); a disagreement is an InternalError.
Endo inner_conjugate(const Scalar& a, const Endo& phi);

/// Coefficient-wise sigma on the basis presentation.
LiePoly sigma_F(const FieldAut& sigma, const LiePoly& p);

/// Semilinear map p -> base(sigma_F(p)); it satisfies s(l p) = sigma(l) s(p).
struct SemiMorphism {
  FieldAut sigma;
  Endo base;

  LiePoly operator()(const LiePoly& p) const;
};

/// (sigma, sigma_F). FieldMismatch when sigma does not belong to `field`.
SemiMorphism make_sigma_F(const FieldAut& sigma, const TablePtr& table, const Field& field);

/// The inverse semimorphism; NotInvertible unless the base is an automorphism
/// with a computable inverse.
SemiMorphism inverse(const SemiMorphism& s);

/// s phi s^{-1}, evaluated as an explicit composite on each generator.
Endo semi_conjugate(const SemiMorphism& s, const Endo& phi);

/// Character h(g) = det(g)^k on the linear automorphisms.
struct DetPower {
  long k = 0;
  Scalar operator()(const Endo& g) const;
};

/// x -> h(g) g(x). NotLinear for nonlinear g; Singular for non-invertible g.
Endo diagonal_twist(const DetPower& h, const Endo& g);

enum class Verdict { Yes, No, Inconclusive };
std::string to_string(Verdict v);

struct AutomorphismCheck {
  Verdict verdict = Verdict::Inconclusive;
  /// Set on Yes: a two-sided inverse.
  std::optional<Endo> inverse;
  std::string reason;
};

/// Decides invertibility within the table's cap. Yes requires an explicit
/// two-sided inverse (the supplied witness, the inverse matrix, or a graded
/// inverse constructed degree by degree). No is certified by a singular linear
/// part. Everything else is Inconclusive.
AutomorphismCheck check_automorphism(const Endo& phi, const std::optional<Endo>& witness = std::nullopt);

}  // namespace liecat
