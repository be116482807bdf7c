#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "seminorm_lab/functional.hpp"
#include "seminorm_lab/index_rule.hpp"
#include "seminorm_lab/linear_map.hpp"
#include "seminorm_lab/sparse_seq.hpp"
#include "seminorm_lab/subspace.hpp"

namespace seminorm_lab {

/// Parse failure with the offset (in characters) where it was detected.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace grammar_detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  bool eat(std::string_view lit) {
    skip_ws();
    if (text_.substr(pos_).starts_with(lit)) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!eat(lit)) fail("expected '" + std::string(lit) + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  /// Signed integer or fraction literal, e.g. "7", "-3/4".
  Rational rational_literal() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ == digits) fail("expected rational literal");
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && is_digit(text_[pos_ + 1])) {
      ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  Index index_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected index");
    Index value = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      value = value * 10 + (text_[i] - '0');
      if (value > 1'000'000) fail("index out of range");
    }
    if (value < 1) fail("index must be >= 1");
    return value;
  }

  std::size_t save() const { return pos_; }
  void restore(std::size_t p) { pos_ = p; }
  bool raw_boundary() const {
    if (pos_ == text_.size()) return true;
    const char c = text_[pos_];
    return c == ' ' || c == ',' || c == ';' || c == ']' || c == ')' || c == '}' || c == ':';
  }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline SparseSeq parse_seq(Cursor& c) {
  c.skip_ws();
  if (c.peek() == '0') {
    const std::size_t mark = c.save();
    c.eat("0");
    if (c.raw_boundary()) return SparseSeq();
    c.restore(mark);
  }
  std::map<Index, Rational> accum;
  int sign = +1;
  if (c.eat("-"))
    sign = -1;
  else
    c.eat("+");
  for (;;) {
    Rational coeff(1);
    if (c.peek() != 'e') {
      coeff = c.rational_literal();
      c.eat("*");  // coefficient and basis vector may be juxtaposed
    }
    c.expect("e");
    const Index idx = c.index_literal();
    accum[idx] += Rational(sign) * coeff;
    if (c.eat("+"))
      sign = +1;
    else if (c.eat("-"))
      sign = -1;
    else
      break;
  }
  std::vector<std::pair<Index, Rational>> entries;
  for (const auto& [i, v] : accum)
    if (v != 0) entries.emplace_back(i, v);
  return SparseSeq::from_pairs(entries);
}

inline IndexRule parse_rule(Cursor& c) {
  if (c.eat("2^-i")) return IndexRule::pow_half();
  if (c.eat("1/n")) return IndexRule::reciprocal();
  if (c.eat("table{")) {
    std::map<Index, Rational> values;
    for (;;) {
      if (c.eat("default=")) {
        const Rational fallback = c.rational_literal();
        c.expect("}");
        return IndexRule::table(std::move(values), fallback);
      }
      const Index i = c.index_literal();
      c.expect("->");
      const Rational v = c.rational_literal();
      if (!values.emplace(i, v).second) c.fail("duplicate table index");
      c.expect(";");
    }
  }
  return IndexRule::constant(c.rational_literal());
}

inline LinearMap parse_map(Cursor& c) {
  if (c.eat("identity")) return LinearMap::identity();
  if (c.eat("shiftl")) return LinearMap::shift_left();
  if (c.eat("shiftr")) return LinearMap::shift_right();
  if (c.eat("truncate")) return LinearMap::truncate_first();
  if (c.eat("diag:")) return LinearMap::diagonal(parse_rule(c));
  if (c.eat("table{")) {
    std::map<Index, SparseSeq> images;
    for (;;) {
      const Index i = c.index_literal();
      c.expect("->");
      SparseSeq img = parse_seq(c);
      if (!images.emplace(i, std::move(img)).second) c.fail("duplicate table index");
      if (c.eat("}")) return LinearMap::finite_table(std::move(images));
      c.expect(";");
    }
  }
  if (c.eat("compose(")) {
    LinearMap outer = parse_map(c);
    c.expect(",");
    LinearMap inner = parse_map(c);
    c.expect(")");
    return LinearMap::compose(std::move(outer), std::move(inner));
  }
  if (c.eat("summap(")) {
    LinearMap left = parse_map(c);
    c.expect(",");
    LinearMap right = parse_map(c);
    c.expect(")");
    return LinearMap::sum(std::move(left), std::move(right));
  }
  if (c.eat("F(f=")) {
    LinearMap f = parse_map(c);
    c.expect(")");
    return LinearMap::first_entry_preserving(std::move(f));
  }
  c.fail("expected linear map");
}

inline Functional parse_functional(Cursor& c) {
  if (c.eat("linf")) return Functional::linf();
  if (c.eat("l1")) return Functional::l1();
  if (c.eat("weighted:")) return Functional::weighted_l1(parse_rule(c));
  if (c.eat("rescaled:")) {
    IndexRule rule = parse_rule(c);
    std::set<Index> excluded;
    if (c.eat(":exclude=")) {
      do {
        excluded.insert(c.index_literal());
      } while (c.eat(","));
    }
    return Functional::rescaled_l1(std::move(rule), std::move(excluded));
  }
  if (c.eat("coord:")) return Functional::coordinate_abs(c.index_literal());
  if (c.eat("sum(")) {
    Functional left = parse_functional(c);
    c.expect(",");
    Functional right = parse_functional(c);
    c.expect(")");
    return Functional::sum(std::move(left), std::move(right));
  }
  if (c.eat("pullback:")) {
    Functional inner = parse_functional(c);
    c.expect(":");
    LinearMap map = parse_map(c);
    return Functional::pullback(std::move(inner), std::move(map));
  }
  if (c.eat("quotient:")) {
    Functional ambient = parse_functional(c);
    c.expect(":basis=[");
    std::vector<SparseSeq> basis;
    do {
      basis.push_back(parse_seq(c));
    } while (c.eat(","));
    c.expect("]");
    return Functional::quotient(std::move(ambient), Subspace(std::move(basis)));
  }
  c.fail("expected functional");
}

}  // namespace grammar_detail

inline SparseSeq parse_seq(std::string_view text) {
  grammar_detail::Cursor c(text);
  SparseSeq s = grammar_detail::parse_seq(c);
  if (!c.at_end()) c.fail("trailing input after sequence");
  return s;
}

inline IndexRule parse_rule(std::string_view text) {
  grammar_detail::Cursor c(text);
  IndexRule r = grammar_detail::parse_rule(c);
  if (!c.at_end()) c.fail("trailing input after rule");
  return r;
}

inline LinearMap parse_map(std::string_view text) {
  grammar_detail::Cursor c(text);
  LinearMap m = grammar_detail::parse_map(c);
  if (!c.at_end()) c.fail("trailing input after map");
  return m;
}

inline Functional parse_functional(std::string_view text) {
  grammar_detail::Cursor c(text);
  Functional f = grammar_detail::parse_functional(c);
  if (!c.at_end()) c.fail("trailing input after functional");
  return f;
}

inline std::string format_seq(const SparseSeq& x) { return to_term_string(x); }

inline std::string format_rule(const IndexRule& r) {
  switch (r.kind()) {
    case IndexRule::Kind::pow_half:
      return "2^-i";
    case IndexRule::Kind::reciprocal:
      return "1/n";
    case IndexRule::Kind::constant:
      return format_rational(r.constant_value());
    case IndexRule::Kind::table: {
      std::string out = "table{";
      for (const auto& [i, v] : r.table_values())
        out += std::to_string(i) + "->" + format_rational(v) + ";";
      out += "default=" + format_rational(r.constant_value()) + "}";
      return out;
    }
  }
  throw std::logic_error("format_rule: unknown kind");
}

inline std::string format_map(const LinearMap& m) {
  using Kind = LinearMap::Kind;
  if (m.kind() == Kind::sum) {
    // canonical first-entry-preserving composites print as F(f=...)
    const LinearMap* f = nullptr;
    if (LinearMap::matches_first_entry_preserving(m, &f) &&
        m == LinearMap::first_entry_preserving(*f))
      return "F(f=" + format_map(*f) + ")";
  }
  switch (m.kind()) {
    case Kind::identity:
      return "identity";
    case Kind::shift_left:
      return "shiftl";
    case Kind::shift_right:
      return "shiftr";
    case Kind::truncate_first:
      return "truncate";
    case Kind::diagonal:
      return "diag:" + format_rule(m.rule());
    case Kind::finite_table: {
      std::string out = "table{";
      bool first = true;
      for (const auto& [i, img] : m.images()) {
        if (!first) out += ";";
        first = false;
        out += std::to_string(i) + "->" + to_term_string(img);
      }
      return out + "}";
    }
    case Kind::compose:
      return "compose(" + format_map(m.outer()) + "," + format_map(m.inner()) + ")";
    case Kind::sum:
      return "summap(" + format_map(m.left()) + "," + format_map(m.right()) + ")";
  }
  throw std::logic_error("format_map: unknown kind");
}

inline std::string format_functional(const Functional& f) {
  using Kind = Functional::Kind;
  switch (f.kind()) {
    case Kind::l1:
      return "l1";
    case Kind::linf:
      return "linf";
    case Kind::weighted_l1:
      return "weighted:" + format_rule(f.rule());
    case Kind::rescaled_l1: {
      std::string out = "rescaled:" + format_rule(f.rule());
      if (!f.excluded().empty()) {
        out += ":exclude=";
        bool first = true;
        for (Index i : f.excluded()) {
          if (!first) out += ",";
          first = false;
          out += std::to_string(i);
        }
      }
      return out;
    }
    case Kind::coordinate_abs:
      return "coord:" + std::to_string(f.coord_index());
    case Kind::sum:
      return "sum(" + format_functional(f.left()) + "," + format_functional(f.right()) + ")";
    case Kind::pullback:
      return "pullback:" + format_functional(f.inner()) + ":" + format_map(f.map());
    case Kind::quotient: {
      std::string out = "quotient:" + format_functional(f.ambient()) + ":basis=[";
      bool first = true;
      for (const SparseSeq& v : f.subspace().basis()) {
        if (!first) out += ",";
        first = false;
        out += to_term_string(v);
      }
      return out + "]";
    }
  }
  throw std::logic_error("format_functional: unknown kind");
}

}  // namespace seminorm_lab
