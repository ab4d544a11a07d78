#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "nashres/rational.hpp"

namespace nashres {

/// Order of a series or polynomial: an exact value, a censored lower bound coming
/// from truncation, or infinity for an exact zero.
class ExtOrder {
 public:
  enum class Kind { Exact, AtLeast, Infinite };

  static ExtOrder exact(std::uint64_t n) { return ExtOrder(Kind::Exact, n); }
  static ExtOrder at_least(std::uint64_t n) { return ExtOrder(Kind::AtLeast, n); }
  static ExtOrder infinite() { return ExtOrder(Kind::Infinite, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_exact() const noexcept { return kind_ == Kind::Exact; }
  bool is_censored() const noexcept { return kind_ == Kind::AtLeast; }
  bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }

  /// The exact value or the censoring bound. Throws for Infinite.
  std::uint64_t value() const;
  /// The exact value; throws PrecisionError when censored.
  std::uint64_t require_exact(const std::string& context) const;

  std::string to_string() const;

  friend bool operator==(const ExtOrder&, const ExtOrder&) = default;

 private:
  ExtOrder(Kind k, std::uint64_t v) : kind_(k), value_(v) {}
  Kind kind_;
  std::uint64_t value_;
};

std::ostream& operator<<(std::ostream& os, const ExtOrder& o);

/// A rational order value or +infinity (order of a Rees algebra, elimination order).
class RationalOrder {
 public:
  RationalOrder() = default;  // infinite
  explicit RationalOrder(Rational q) : value_(std::move(q)) {}
  static RationalOrder infinite() { return RationalOrder(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& value() const;

  std::string to_string() const;           // "3/2", "1" or "inf"
  std::string fraction_string() const;     // "3/2", "1/1" or "inf"

  friend bool operator==(const RationalOrder& a, const RationalOrder& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const RationalOrder& a, const RationalOrder& b) {
    if (b.is_infinite()) return !a.is_infinite();
    if (a.is_infinite()) return false;
    return *a.value_ < *b.value_;
  }

 private:
  std::optional<Rational> value_;
};

inline RationalOrder min(const RationalOrder& a, const RationalOrder& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const RationalOrder& o);

}  // namespace nashres
