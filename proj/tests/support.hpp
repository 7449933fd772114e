#pragma once

#include <random>
#include <vector>

#include "liecat/endomorphism.hpp"
#include "liecat/lie_poly.hpp"

namespace testing {

/// Small seeded generator of scalars and polynomials for property tests.
struct Gen {
  std::mt19937_64 rng;
  std::int64_t d = 0;

  explicit Gen(std::uint64_t seed, std::int64_t d = 0) : rng(seed), d(d) {}

  long range(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

  liecat::Scalar scalar(bool nonzero = true) {
    for (;;) {
      liecat::Scalar s = d ? liecat::Scalar(liecat::Rational(range(-4, 4), range(1, 3)), liecat::Rational(range(-3, 3)), d)
                           : liecat::Scalar(liecat::Rational(range(-5, 5), range(1, 4)));
      if (!nonzero || !s.is_zero()) return s;
    }
  }

  liecat::LiePoly poly(const liecat::TablePtr& t, std::size_t max_degree, std::size_t terms = 3) {
    liecat::LiePoly p(t);
    const std::size_t top = std::min(max_degree, t->cap());
    for (std::size_t i = 0; i < terms; ++i) {
      auto words = t->degree(static_cast<std::size_t>(range(1, static_cast<long>(top))));
      if (words.empty()) continue;
      p.add_term(words[rng() % words.size()].index, scalar());
    }
    return p;
  }

  liecat::Endo endo(const liecat::TablePtr& t, std::size_t max_degree) {
    std::vector<liecat::LiePoly> images;
    for (std::size_t g = 0; g < t->generator_count(); ++g) images.push_back(poly(t, max_degree));
    return liecat::Endo(t, images);
  }

  liecat::MatrixN matrix(std::size_t n) {
    liecat::MatrixN m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = liecat::Scalar(range(-3, 3));
    return m;
  }
};

}  // namespace testing
