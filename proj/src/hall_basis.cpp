#include "liecat/hall_basis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>

namespace liecat {

namespace {

std::string key_of(const Word& w) { return std::string(w.begin(), w.end()); }

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint64_t>(j);
}

int mobius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

void add_scaled(std::map<std::size_t, Rational>& acc, const StructureConstants& v, const Rational& factor) {
  for (const auto& [k, c] : v) {
    auto [it, inserted] = acc.try_emplace(k, 0);
    it->second += factor * c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

// Lyndon words of length <= cap over {0..n-1} in lexicographic order (Duval).
std::vector<Word> lyndon_words(std::size_t n, std::size_t cap) {
  std::vector<Word> out;
  Word w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t len = w.size();
    while (w.size() < cap) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == n - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

}  // namespace

std::size_t default_table_limit() {
  if (const char* env = std::getenv("LIECAT_MAX_TABLE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 200000;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t r = 1; r < w.size(); ++r) {
    // Compare w against its rotation starting at r.
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto a = w[k];
      const auto b = w[(r + k) % w.size()];
      if (a < b) break;
      if (a > b) return false;
      if (k + 1 == w.size()) return false;  // equal rotation: periodic word
    }
  }
  return true;
}

std::uint64_t witt_dimension(std::uint64_t n, std::uint64_t d) {
  if (n == 0 || d == 0) return 0;
  mpz_class sum = 0;
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), n, d / e);
    sum += mu * term;
  }
  sum /= static_cast<unsigned long>(d);
  if (!sum.fits_ulong_p()) throw Error(ErrorCode::CapacityExceeded, "Witt dimension does not fit in 64 bits");
  return sum.get_ui();
}

std::vector<std::string> BasisTable::default_names(std::size_t n) {
  static const char* short_names[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(n <= 3 ? short_names[i] : "x" + std::to_string(i + 1));
  return names;
}

BasisTable::BasisTable(std::vector<std::string> generator_names, std::size_t cap, std::size_t max_words)
    : names_(std::move(generator_names)), cap_(cap) {
  const std::size_t n = names_.size();
  if (n == 0 || cap == 0) throw Error(ErrorCode::ConfigInvalid, "basis needs at least one generator and cap >= 1");
  if (n > 255) throw Error(ErrorCode::CapacityExceeded, "at most 255 generators are supported");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    const bool ident = !name.empty() && (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                       std::all_of(name.begin(), name.end(), [](char c) {
                         return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
                       });
    if (!ident) throw Error(ErrorCode::ConfigInvalid, "generator name '" + name + "' is not an identifier");
    if (!seen.insert(name).second) throw Error(ErrorCode::ConfigInvalid, "duplicate generator '" + name + "'");
  }

  std::uint64_t total = 0;
  for (std::size_t d = 1; d <= cap; ++d) {
    total += witt_dimension(n, d);
    if (total > max_words) {
      throw Error(ErrorCode::CapacityExceeded, "basis with " + std::to_string(n) + " generators up to degree " +
                                                   std::to_string(cap) + " exceeds " + std::to_string(max_words) +
                                                   " words");
    }
  }

  auto raw = lyndon_words(n, cap);
  std::stable_sort(raw.begin(), raw.end(), [](const Word& a, const Word& b) { return a.size() < b.size(); });

  words_.reserve(raw.size());
  degree_offsets_.assign(cap + 2, 0);
  for (auto& w : raw) {
    HallWord hw;
    hw.index = words_.size();
    hw.word = std::move(w);
    lookup_.emplace(key_of(hw.word), hw.index);
    words_.push_back(std::move(hw));
  }
  for (std::size_t d = 0; d <= cap + 1; ++d) {
    degree_offsets_[d] = static_cast<std::size_t>(
        std::lower_bound(words_.begin(), words_.end(), d,
                         [](const HallWord& h, std::size_t deg) { return h.degree() < deg; }) -
        words_.begin());
  }

  // Standard factorization: the right factor is the longest proper Lyndon suffix.
  for (auto& hw : words_) {
    if (hw.is_letter()) continue;
    for (std::size_t split = 1; split < hw.word.size(); ++split) {
      Word suffix(hw.word.begin() + static_cast<std::ptrdiff_t>(split), hw.word.end());
      auto it = lookup_.find(key_of(suffix));
      if (it == lookup_.end()) continue;
      Word prefix(hw.word.begin(), hw.word.begin() + static_cast<std::ptrdiff_t>(split));
      hw.left = lookup_.at(key_of(prefix));
      hw.right = it->second;
      break;
    }
  }
}

std::span<const HallWord> BasisTable::degree(std::size_t d) const {
  if (d == 0 || d > cap_) return {};
  return std::span<const HallWord>(words_).subspan(degree_offsets_[d], degree_offsets_[d + 1] - degree_offsets_[d]);
}

std::optional<std::size_t> BasisTable::find(const Word& w) const {
  auto it = lookup_.find(key_of(w));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BasisTable::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string BasisTable::bracketing(std::size_t index) const {
  const HallWord& hw = word(index);
  if (hw.is_letter()) return names_[hw.word[0]];
  return "[" + bracketing(*hw.left) + "," + bracketing(*hw.right) + "]";
}

std::string BasisTable::spelling(std::size_t index) const {
  std::string s;
  for (auto letter : word(index).word) s += names_[letter];
  return s;
}

const StructureConstants& BasisTable::bracket(std::size_t i, std::size_t j) const {
  if (i >= words_.size() || j >= words_.size()) throw Error(ErrorCode::ContextMismatch, "basis index out of range");
  const std::size_t deg = words_[i].degree() + words_[j].degree();
  if (deg > cap_) {
    throw Error(ErrorCode::DegreeOverflow,
                "bracket of degree " + std::to_string(deg) + " exceeds cap " + std::to_string(cap_));
  }
  const auto key = pair_key(i, j);
  {
    std::lock_guard lock(memo_mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Computed outside the lock: the rewrite recurses into other pairs.
  StructureConstants value = compute_bracket(i, j);
  std::lock_guard lock(memo_mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

std::size_t BasisTable::memo_size() const {
  std::lock_guard lock(memo_mutex_);
  return memo_.size();
}

StructureConstants BasisTable::compute_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const HallWord& u = words_[i];
  const HallWord& v = words_[j];
  if (v.word < u.word) {
    StructureConstants flipped = bracket(j, i);
    for (auto& [k, c] : flipped) c = -c;
    return flipped;
  }
  // Now u < v, so uv is Lyndon. Its standard factorization is (u, v) exactly
  // when u is a letter or the right factor of u is >= v.
  if (u.is_letter() || !(words_[*u.right].word < v.word)) {
    Word uv = u.word;
    uv.insert(uv.end(), v.word.begin(), v.word.end());
    auto idx = find(uv);
    if (!idx) throw Error(ErrorCode::InternalError, "Lyndon concatenation missing from table");
    return {{*idx, Rational(1)}};
  }
  // [[u1,u2],v] = [u1,[u2,v]] - [u2,[u1,v]]
  const std::size_t u1 = *u.left;
  const std::size_t u2 = *u.right;
  std::map<std::size_t, Rational> acc;
  for (const auto& [k, c] : StructureConstants(bracket(u2, j))) add_scaled(acc, bracket(u1, k), c);
  for (const auto& [k, c] : StructureConstants(bracket(u1, j))) add_scaled(acc, bracket(u2, k), -c);
  return {acc.begin(), acc.end()};
}

TablePtr generate_basis(std::size_t n_gens, std::size_t cap, std::size_t max_words) {
  if (n_gens == 0) throw Error(ErrorCode::ConfigInvalid, "at least one generator is required");
  return std::make_shared<const BasisTable>(BasisTable::default_names(n_gens), cap, max_words);
}

TablePtr generate_basis(std::vector<std::string> names, std::size_t cap, std::size_t max_words) {
  return std::make_shared<const BasisTable>(std::move(names), cap, max_words);
}

}  // namespace liecat
