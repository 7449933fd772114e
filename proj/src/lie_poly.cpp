#include "liecat/lie_poly.hpp"

#include <algorithm>
#include <optional>

namespace liecat {

namespace {

void require_same_table(const TablePtr& a, const TablePtr& b) {
  if (a && b && a != b) throw Error(ErrorCode::ContextMismatch, "Lie polynomials from different basis tables");
}

const TablePtr& common_table(const LiePoly& p, const LiePoly& q) {
  require_same_table(p.table(), q.table());
  return p.table() ? p.table() : q.table();
}

// Collects coefficients per unordered pair {i < j}: alpha_i beta_j - alpha_j beta_i.
// Diagonal and cancelling pairs never reach the structure-constant table.
std::map<std::pair<std::size_t, std::size_t>, Scalar> pair_coefficients(const LiePoly& p, const LiePoly& q) {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> pairs;
  for (const auto& [i, a] : p.terms()) {
    for (const auto& [j, b] : q.terms()) {
      if (i == j) continue;
      const auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
      const Scalar c = i < j ? a * b : -(a * b);
      auto [it, inserted] = pairs.try_emplace(key, c);
      if (!inserted) it->second += c;
    }
  }
  return pairs;
}

LiePoly bracket_impl(const LiePoly& p, const LiePoly& q, std::optional<std::size_t> max_degree) {
  const TablePtr& table = common_table(p, q);
  LiePoly out(table);
  if (p.is_zero() || q.is_zero()) return out;
  for (const auto& [key, c] : pair_coefficients(p, q)) {
    if (c.is_zero()) continue;
    const std::size_t deg = table->word(key.first).degree() + table->word(key.second).degree();
    if (max_degree && deg > *max_degree) continue;
    for (const auto& [k, n] : table->bracket(key.first, key.second)) out.add_term(k, c * Scalar(n));
  }
  return out;
}

LiePoly evaluate_impl(const LiePoly& p, std::span<const LiePoly> images, const TablePtr& target,
                      std::optional<std::size_t> max_degree) {
  LiePoly out(target);
  if (p.is_zero()) return out;
  const TablePtr& source = p.table();
  if (images.size() != source->generator_count()) {
    throw Error(ErrorCode::ShapeMismatch, "substitution needs " + std::to_string(source->generator_count()) +
                                              " images, got " + std::to_string(images.size()));
  }
  for (const auto& img : images) require_same_table(img.table(), target);

  std::map<std::size_t, LiePoly> cache;
  auto image_of = [&](auto& self, std::size_t index) -> const LiePoly& {
    if (auto it = cache.find(index); it != cache.end()) return it->second;
    const HallWord& hw = source->word(index);
    LiePoly value(target);
    if (hw.is_letter()) {
      value += images[hw.word[0]];
    } else {
      const LiePoly left = self(self, *hw.left);
      const LiePoly& right = self(self, *hw.right);
      value = max_degree ? bracket_truncated(left, right, *max_degree) : bracket(left, right);
    }
    return cache.emplace(index, std::move(value)).first->second;
  };
  for (const auto& [k, c] : p.terms()) out += c * image_of(image_of, k);
  return max_degree ? truncate(out, *max_degree) : out;
}

}  // namespace

LiePoly LiePoly::generator(const TablePtr& table, std::size_t g) {
  if (g >= table->generator_count()) throw Error(ErrorCode::UnknownGenerator, "generator index out of range");
  return basis(table, g);
}

LiePoly LiePoly::basis(const TablePtr& table, std::size_t index, const Scalar& coeff) {
  LiePoly p(table);
  if (index >= table->size()) throw Error(ErrorCode::ContextMismatch, "basis index out of range");
  p.add_term(index, coeff);
  return p;
}

Scalar LiePoly::coefficient(std::size_t index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LiePoly::add_term(std::size_t index, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(index, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LiePoly::adopt(const LiePoly& o) {
  require_same_table(table_, o.table_);
  if (!table_) table_ = o.table_;
}

LiePoly& LiePoly::operator+=(const LiePoly& o) {
  adopt(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LiePoly& LiePoly::operator-=(const LiePoly& o) {
  adopt(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LiePoly& LiePoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LiePoly LiePoly::operator-() const {
  LiePoly r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const LiePoly& a, const LiePoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  require_same_table(a.table_, b.table_);
  return a.terms_ == b.terms_;
}

LiePoly normalize_bracket(const HallWord& u, const HallWord& v, const TablePtr& table) {
  LiePoly out(table);
  for (const auto& [k, n] : table->bracket(u.index, v.index)) out.add_term(k, Scalar(n));
  return out;
}

LiePoly bracket(const LiePoly& p, const LiePoly& q) { return bracket_impl(p, q, std::nullopt); }

LiePoly bracket_truncated(const LiePoly& p, const LiePoly& q, std::size_t max_degree) {
  return bracket_impl(p, q, max_degree);
}

LiePoly truncate(const LiePoly& p, std::size_t max_degree) {
  LiePoly out(p.table());
  for (const auto& [k, c] : p.terms())
    if (p.table()->word(k).degree() <= max_degree) out.add_term(k, c);
  return out;
}

std::size_t degree(const LiePoly& p) {
  if (p.is_zero()) return 0;
  // Indices are degree-major, so the last term has maximal degree.
  return p.table()->word(p.terms().rbegin()->first).degree();
}

std::set<std::size_t> support(const LiePoly& p) {
  std::set<std::size_t> s;
  for (const auto& [k, c] : p.terms())
    for (auto g : p.table()->word(k).word) s.insert(g);
  return s;
}

std::vector<std::size_t> occurrences(const HallWord& u, std::size_t n_gens) {
  std::vector<std::size_t> counts(n_gens, 0);
  for (auto g : u.word) ++counts.at(g);
  return counts;
}

Measures poly_measures(const LiePoly& p) {
  Measures m;
  m.degree = degree(p);
  m.support = support(p);
  for (const auto& [k, c] : p.terms())
    m.occurrences.emplace(k, occurrences(p.table()->word(k), p.table()->generator_count()));
  return m;
}

std::vector<LiePoly> homogeneous_components(const LiePoly& p) {
  std::vector<LiePoly> parts(degree(p), LiePoly(p.table()));
  for (const auto& [k, c] : p.terms()) parts[p.table()->word(k).degree() - 1].add_term(k, c);
  return parts;
}

LiePoly bar_transform(const LiePoly& p, const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroScale, "bar transform with a = 0");
  LiePoly out(p.table());
  for (const auto& [k, c] : p.terms()) {
    const long deg = static_cast<long>(p.table()->word(k).degree());
    out.add_term(k, c * pow(a, deg - 1));
  }
  return out;
}

LiePoly evaluate(const LiePoly& p, std::span<const LiePoly> images, const TablePtr& target) {
  return evaluate_impl(p, images, target, std::nullopt);
}

LiePoly evaluate_truncated(const LiePoly& p, std::span<const LiePoly> images, const TablePtr& target,
                           std::size_t max_degree) {
  return evaluate_impl(p, images, target, max_degree);
}

NcPoly to_associative(const LiePoly& p) {
  NcPoly out;
  if (p.is_zero()) return out;
  const TablePtr& table = p.table();
  std::map<std::size_t, NcPoly> cache;
  auto image_of = [&](auto& self, std::size_t index) -> NcPoly {
    if (auto it = cache.find(index); it != cache.end()) return it->second;
    const HallWord& hw = table->word(index);
    NcPoly value = hw.is_letter() ? NcPoly::letter(hw.word[0])
                                  : commutator(self(self, *hw.left), self(self, *hw.right));
    cache.emplace(index, value);
    return value;
  };
  for (const auto& [k, c] : p.terms()) out += c * image_of(image_of, k);
  return out;
}

}  // namespace liecat
