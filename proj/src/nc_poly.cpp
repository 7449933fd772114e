#include "liecat/nc_poly.hpp"

namespace liecat {

NcPoly NcPoly::letter(std::uint8_t g) { return monomial(Word{g}); }

NcPoly NcPoly::monomial(Word w, Scalar c) {
  NcPoly p;
  p.add_term(w, c);
  return p;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

std::string NcPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string word;
    for (auto g : w) word += names[g];
    const bool negative = !c.is_quadratic_kind() && sgn(c.rational_part()) < 0;
    const Scalar mag = negative ? -c : c;
    if (!first) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (mag != Scalar(1)) out += (mag.is_quadratic_kind() ? "(" + mag.to_string() + ")" : mag.to_string()) + "*";
    out += word;
    first = false;
  }
  return out;
}

NcPoly substitute(const NcPoly& p, std::span<const NcPoly> images) {
  NcPoly out;
  for (const auto& [w, c] : p.terms()) {
    NcPoly prod = NcPoly::monomial(Word{}, c);
    for (auto g : w) prod = prod * images[g];
    out += prod;
  }
  return out;
}

}  // namespace liecat
