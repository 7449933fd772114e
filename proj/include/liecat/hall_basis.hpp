#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liecat/scalar.hpp"

namespace liecat {

/// Sequence of generator indices; ordered lexicographically with a proper
/// prefix smaller than its extensions.
using Word = std::vector<std::uint8_t>;

/// One element of the Lyndon basis. Letters have no children; every other
/// word is the bracket [left, right] of its standard factorization, where
/// `right` is the longest proper Lyndon suffix.
struct HallWord {
  Word word;
  std::size_t index = 0;
  std::optional<std::size_t> left;
  std::optional<std::size_t> right;

  std::size_t degree() const { return word.size(); }
  bool is_letter() const { return word.size() == 1; }
};

/// Sparse coordinate vector over the basis with rational entries, sorted by index.
using StructureConstants = std::vector<std::pair<std::size_t, Rational>>;

/// Maximum number of basis words a table may hold; LIECAT_MAX_TABLE overrides.
std::size_t default_table_limit();

/// The Lyndon basis of the free Lie algebra on an ordered generator set, for
/// all degrees up to `cap`, in degree-major then lexicographic order.
///
/// The table is immutable apart from the structure-constant memo, which is
/// guarded internally so a shared table can be queried from several threads.
class BasisTable {
 public:
  BasisTable(std::vector<std::string> generator_names, std::size_t cap,
             std::size_t max_words = default_table_limit());

  BasisTable(const BasisTable&) = delete;
  BasisTable& operator=(const BasisTable&) = delete;

  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  std::size_t cap() const { return cap_; }
  std::size_t size() const { return words_.size(); }

  const HallWord& word(std::size_t index) const { return words_.at(index); }
  std::span<const HallWord> words() const { return words_; }
  /// Basis words of exactly degree `d` (empty for d == 0 or d > cap).
  std::span<const HallWord> degree(std::size_t d) const;
  std::optional<std::size_t> find(const Word& w) const;
  std::optional<std::size_t> generator_index(std::string_view name) const;

  /// Nested bracket rendering with generator names, e.g. "[x,[x,y]]".
  std::string bracketing(std::size_t index) const;
  /// The Lyndon word spelled with generator names, e.g. "xxy".
  std::string spelling(std::size_t index) const;

  /// Coordinates of [word(i), word(j)] in the basis. Throws DegreeOverflow
  /// when the degrees sum past the cap.
  const StructureConstants& bracket(std::size_t i, std::size_t j) const;

  /// Number of memoized basis-pair brackets (including intermediate ones).
  std::size_t memo_size() const;

  static std::vector<std::string> default_names(std::size_t n);

 private:
  StructureConstants compute_bracket(std::size_t i, std::size_t j) const;

  std::vector<std::string> names_;
  std::size_t cap_;
  std::vector<HallWord> words_;
  std::vector<std::size_t> degree_offsets_;
  std::unordered_map<std::string, std::size_t> lookup_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<std::uint64_t, StructureConstants> memo_;
};

using TablePtr = std::shared_ptr<const BasisTable>;

/// Builds the table for `n_gens` generators with default names (x, y, z for
/// up to three generators, x1..xn otherwise).
TablePtr generate_basis(std::size_t n_gens, std::size_t cap, std::size_t max_words = default_table_limit());
TablePtr generate_basis(std::vector<std::string> names, std::size_t cap,
                        std::size_t max_words = default_table_limit());

/// Dimension of the degree-d component of the free Lie algebra on n
/// generators by the necklace formula (1/d) * sum_{e|d} mu(e) n^(d/e).
/// Independent of the enumeration in BasisTable.
std::uint64_t witt_dimension(std::uint64_t n, std::uint64_t d);

bool is_lyndon(const Word& w);

}  // namespace liecat
