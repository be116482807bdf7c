#pragma once

#include <map>
#include <stdexcept>

#include "seminorm_lab/rational.hpp"

namespace seminorm_lab {

/**
 * A closed-form map from indices to rationals, evaluable at any index
 * without stored infinite data. The supported forms are i -> 2^-i,
 * i -> 1/i, constants, and finite tables with a constant fallback.
 */
class IndexRule {
 public:
  enum class Kind { pow_half, reciprocal, constant, table };

  static IndexRule pow_half() { return IndexRule(Kind::pow_half); }
  static IndexRule reciprocal() { return IndexRule(Kind::reciprocal); }

  static IndexRule constant(Rational value) {
    IndexRule r(Kind::constant);
    r.constant_ = std::move(value);
    return r;
  }

  static IndexRule table(std::map<Index, Rational> values, Rational fallback) {
    for (const auto& [i, v] : values)
      if (i < 1) throw std::invalid_argument("index rule: table index must be >= 1");
    IndexRule r(Kind::table);
    r.table_ = std::move(values);
    r.constant_ = std::move(fallback);
    return r;
  }

  Kind kind() const { return kind_; }
  const Rational& constant_value() const { return constant_; }
  const std::map<Index, Rational>& table_values() const { return table_; }

  Rational at(Index i) const {
    if (i < 1) throw std::invalid_argument("index rule: index must be >= 1");
    switch (kind_) {
      case Kind::pow_half:
        return pow2(-static_cast<long>(i));
      case Kind::reciprocal:
        return Rational(1, i);
      case Kind::constant:
        return constant_;
      case Kind::table: {
        auto it = table_.find(i);
        return it == table_.end() ? constant_ : it->second;
      }
    }
    throw std::logic_error("index rule: bad kind");
  }

  bool strictly_positive() const {
    switch (kind_) {
      case Kind::pow_half:
      case Kind::reciprocal:
        return true;
      case Kind::constant:
        return constant_ > 0;
      case Kind::table: {
        if (constant_ <= 0) return false;
        for (const auto& [i, v] : table_)
          if (v <= 0) return false;
        return true;
      }
    }
    return false;
  }

  bool never_zero() const {
    switch (kind_) {
      case Kind::pow_half:
      case Kind::reciprocal:
        return true;
      case Kind::constant:
        return constant_ != 0;
      case Kind::table: {
        if (constant_ == 0) return false;
        for (const auto& [i, v] : table_)
          if (v == 0) return false;
        return true;
      }
    }
    return false;
  }

  friend bool operator==(const IndexRule& a, const IndexRule& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::pow_half:
      case Kind::reciprocal:
        return true;
      case Kind::constant:
        return a.constant_ == b.constant_;
      case Kind::table:
        return a.constant_ == b.constant_ && a.table_ == b.table_;
    }
    return false;
  }

 private:
  explicit IndexRule(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational constant_{0};
  std::map<Index, Rational> table_;
};

}  // namespace seminorm_lab
