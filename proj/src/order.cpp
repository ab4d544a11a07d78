#include "nashres/order.hpp"

#include "nashres/error.hpp"

namespace nashres {

std::uint64_t ExtOrder::value() const {
  if (kind_ == Kind::Infinite) throw std::logic_error("infinite order has no finite value");
  return value_;
}

std::uint64_t ExtOrder::require_exact(const std::string& context) const {
  switch (kind_) {
    case Kind::Exact:
      return value_;
    case Kind::AtLeast:
      throw PrecisionError(context + ": order censored at " + std::to_string(value_));
    case Kind::Infinite:
      break;
  }
  throw ValidationError(context + ": order is infinite");
}

std::string ExtOrder::to_string() const {
  switch (kind_) {
    case Kind::Exact:
      return std::to_string(value_);
    case Kind::AtLeast:
      return ">=" + std::to_string(value_);
    case Kind::Infinite:
      break;
  }
  return "inf";
}

std::ostream& operator<<(std::ostream& os, const ExtOrder& o) { return os << o.to_string(); }

const Rational& RationalOrder::value() const {
  if (!value_) throw std::logic_error("infinite rational order has no value");
  return *value_;
}

std::string RationalOrder::to_string() const { return value_ ? value_->get_str() : "inf"; }

std::string RationalOrder::fraction_string() const {
  return value_ ? nashres::fraction_string(*value_) : "inf";
}

std::ostream& operator<<(std::ostream& os, const RationalOrder& o) { return os << o.to_string(); }

}  // namespace nashres
