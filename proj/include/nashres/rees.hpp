#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashres/order.hpp"
#include "nashres/poly.hpp"

namespace nashres {

/// f W^weight.
struct ReesGenerator {
  MultiPoly f;
  std::uint32_t weight = 1;

  std::string to_string() const;
  friend bool operator==(const ReesGenerator&, const ReesGenerator&) = default;
};

/// A Rees algebra given by finitely many weighted generators over a fixed
/// ambient variable list. Generators are stored scaled to be monic (first term
/// in canonical order has coefficient 1), so duplicates up to a nonzero scalar
/// collapse; zero generators are dropped. Insertion order is kept.
class ReesAlgebra {
 public:
  ReesAlgebra() = default;
  explicit ReesAlgebra(std::vector<std::string> ambient_vars);
  ReesAlgebra(std::vector<std::string> ambient_vars, const std::vector<ReesGenerator>& gens);

  const std::vector<std::string>& ambient_vars() const noexcept { return vars_; }
  const std::vector<ReesGenerator>& generators() const noexcept { return gens_; }
  bool diff_closed() const noexcept { return diff_closed_; }
  bool empty() const noexcept { return gens_.empty(); }
  std::size_t size() const noexcept { return gens_.size(); }

  /// Adds f W^weight unless it is zero or already present. Returns true if added.
  bool add(const MultiPoly& f, std::uint32_t weight);
  bool contains(const MultiPoly& f, std::uint32_t weight) const;

  /// Same algebra over a larger variable list.
  ReesAlgebra with_variables(const std::vector<std::string>& vars) const;

  /// Generators that do not involve any of the given variables.
  ReesAlgebra without_variables(const std::vector<std::string>& vars) const;

  /// Equal generator sets, ignoring insertion order.
  bool same_generators(const ReesAlgebra& o) const;

  std::string to_string() const;

 private:
  friend ReesAlgebra diff_closure(const ReesAlgebra& g);
  std::vector<std::string> vars_;
  std::vector<ReesGenerator> gens_;
  bool diff_closed_ = false;
};

ReesAlgebra odot(const ReesAlgebra& a, const ReesAlgebra& b);

/// Closure under first partial derivatives (weight dropping by one), together
/// with the Tschirnhausen reduction: a generator f W^n that is, up to a
/// constant, monic of degree n in some variable v with no v^(n-1) term
/// contributes v W and each nonzero coefficient B_i W^(n-i).
ReesAlgebra diff_closure(const ReesAlgebra& g);

/// min over generators of ord_p(f)/weight; infinite for the empty algebra.
RationalOrder algebra_order_at(const ReesAlgebra& g, const Point& p);
RationalOrder algebra_order_at_origin(const ReesAlgebra& g);

/// Indices of the generators attaining algebra_order_at(g, p).
std::vector<std::size_t> minimizing_generators(const ReesAlgebra& g, const Point& p);

bool sing_contains(const ReesAlgebra& g, const Point& p);

/// t^a W^l over K[[t]]; a may be censored.
struct OneDimGenerator {
  ExtOrder a = ExtOrder::exact(0);
  std::uint32_t l = 1;
  friend bool operator==(const OneDimGenerator&, const OneDimGenerator&) = default;
};

struct OneDimAlgebra {
  std::vector<OneDimGenerator> generators;

  static OneDimAlgebra from_pairs(const std::vector<std::pair<std::uint64_t, std::uint32_t>>& pairs);
  std::string to_string() const;
  friend bool operator==(const OneDimAlgebra&, const OneDimAlgebra&) = default;
};

/// The order min a_j/l_j with the witness index, certified against censoring:
/// the minimizing entry must be exact and every censored bound n with weight l
/// must satisfy n/l > min. Infinite when there are no generators.
struct TrustedMin {
  RationalOrder value;
  std::optional<std::size_t> witness;
};
TrustedMin onedim_order(const OneDimAlgebra& a, const std::string& context);

/// One point blow-up: (a, l) -> (a - l, l).
OneDimAlgebra onedim_transform(const OneDimAlgebra& a);

/// Number of transforms until the order drops below one.
std::uint64_t onedim_resolution_steps(const OneDimAlgebra& a);

}  // namespace nashres
