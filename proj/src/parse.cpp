#include "liecat/parse.hpp"

#include <cctype>
#include <optional>

namespace liecat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const TablePtr& table, const Field& field)
      : text_(text), table_(table), field_(field) {}

  LiePoly parse_all() {
    LiePoly p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  Scalar parse_scalar_all() {
    Scalar s = scalar_expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "' in scalar");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // p or p/q
  Rational number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    Rational value(std::string(text_.substr(start, pos_ - start)));
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      const std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class den(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) fail("zero denominator");
      value /= den;
    }
    value.canonicalize();
    return value;
  }

  Scalar scalar_expr() {
    Scalar acc(0);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    acc = scalar_term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += scalar_term();
      else if (accept('-')) acc -= scalar_term();
      else return acc;
    }
  }

  Scalar scalar_term() {
    Scalar acc = scalar_factor();
    for (;;) {
      if (accept('*')) {
        acc *= scalar_factor();
      } else if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Scalar divisor = scalar_factor();
        if (divisor.is_zero()) throw SyntaxError(at, "division by zero");
        acc /= divisor;
      } else {
        return acc;
      }
    }
  }

  Scalar scalar_factor() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -scalar_factor();
    }
    if (c == '(') {
      ++pos_;
      Scalar s = scalar_expr();
      expect(')');
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(number());
    if (c == 'w') {
      const std::size_t at = pos_;
      if (identifier() != "w") {
        pos_ = at;
        fail("expected a scalar");
      }
      if (!field_.is_quadratic()) {
        pos_ = at;
        if (table_ && table_->generator_index("w")) fail("expected a scalar");
        throw Error(ErrorCode::FieldMismatch, "'w' denotes sqrt(d) and needs a quadratic field");
      }
      return Scalar::sqrt_d(field_.d);
    }
    fail("expected a scalar");
  }

  LiePoly expr() {
    LiePoly acc(table_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    LiePoly first = term();
    acc += negate ? -first : first;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  // A parenthesised scalar followed by '*'; restores the position otherwise.
  std::optional<Scalar> try_paren_coefficient() {
    const std::size_t saved = pos_;
    try {
      expect('(');
      Scalar s = scalar_expr();
      expect(')');
      expect('*');
      return s;
    } catch (const SyntaxError&) {
      pos_ = saved;
      return std::nullopt;
    }
  }

  LiePoly term() {
    if (at_digit()) {
      const std::size_t at = pos_;
      Rational c = number();
      if (accept('*')) return Scalar(c) * atom();
      if (sgn(c) == 0) return LiePoly(table_);
      pos_ = at;
      fail("a nonzero constant is not a Lie polynomial");
    }
    if (peek() == '(') {
      if (auto c = try_paren_coefficient()) return *c * atom();
    }
    return atom();
  }

  LiePoly atom() {
    const char c = peek();
    if (c == '[') {
      ++pos_;
      LiePoly left = expr();
      expect(',');
      LiePoly right = expr();
      expect(']');
      return bracket(left, right);
    }
    if (c == '(') {
      ++pos_;
      LiePoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = pos_;
      const std::string name = identifier();
      auto g = table_->generator_index(name);
      if (!g) {
        throw Error(ErrorCode::UnknownGenerator, "'" + name + "' at position " + std::to_string(at));
      }
      return LiePoly::generator(table_, *g);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const TablePtr& table_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

LiePoly parse_expr(std::string_view text, const TablePtr& table, const Field& field) {
  return Parser(text, table, field).parse_all();
}

Scalar parse_scalar(std::string_view text, const Field& field) {
  static const TablePtr none;
  return Parser(text, none, field).parse_scalar_all();
}

std::vector<LiePoly> parse_assignment(std::string_view text, const TablePtr& source, const TablePtr& target,
                                      const Field& field) {
  const std::size_t n = source->generator_count();
  std::vector<std::optional<LiePoly>> images(n);
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find(';', offset);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view entry = text.substr(offset, end - offset);
    if (entry.find_first_not_of(" \t\n") != std::string_view::npos) {
      const std::size_t arrow = entry.find("=>");
      if (arrow == std::string_view::npos) throw SyntaxError(offset, "expected 'generator=>expression'");
      std::string key(entry.substr(0, arrow));
      key.erase(0, key.find_first_not_of(" \t\n"));
      key.erase(key.find_last_not_of(" \t\n") + 1);
      auto g = source->generator_index(key);
      if (!g) throw Error(ErrorCode::UnknownGenerator, "'" + key + "' in assignment");
      if (images[*g]) throw Error(ErrorCode::BadSpec, "generator '" + key + "' assigned twice");
      const std::size_t value_at = offset + arrow + 2;
      try {
        images[*g] = parse_expr(entry.substr(arrow + 2), target, field);
      } catch (const SyntaxError& e) {
        throw SyntaxError(value_at + e.position(), "in image of '" + key + "'");
      }
    }
    offset = end + 1;
  }
  std::vector<LiePoly> out;
  for (std::size_t g = 0; g < n; ++g) {
    if (images[g]) {
      out.push_back(*images[g]);
    } else if (source == target) {
      out.push_back(LiePoly::generator(target, g));
    } else {
      throw Error(ErrorCode::BadSpec, "no image given for '" + source->generator_names()[g] + "'");
    }
  }
  return out;
}

std::string format_assignment(std::span<const LiePoly> images, const TablePtr& source) {
  std::string out;
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (g) out += "; ";
    out += source->generator_names().at(g) + "=>" + format_expr(images[g]);
  }
  return out;
}

std::string format_expr(const LiePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    const std::string word = p.table()->bracketing(k);
    if (c.is_quadratic_kind() && sgn(c.irrational_part()) != 0) {
      if (!first) out += " + ";
      out += "(" + c.to_string() + ")*" + word;
    } else {
      const Rational& q = c.rational_part();
      const bool negative = sgn(q) < 0;
      const Rational mag = negative ? Rational(-q) : q;
      if (first) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      if (mag != 1) out += mag.get_str() + "*";
      out += word;
    }
    first = false;
  }
  return out;
}

}  // namespace liecat
