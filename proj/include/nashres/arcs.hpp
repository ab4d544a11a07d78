#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nashres/presentation.hpp"
#include "nashres/rees.hpp"
#include "nashres/series.hpp"

namespace nashres {

/// A K[[t]]-point through the origin: one series per ambient variable.
class Arc {
 public:
  Arc() = default;
  /// Throws ValidationError if some coordinate has order 0 or every
  /// coordinate is the exact zero series.
  explicit Arc(std::map<std::string, PowerSeries> coords);

  const std::map<std::string, PowerSeries>& coords() const noexcept { return coords_; }
  const PowerSeries& at(const std::string& var) const;
  bool has(const std::string& var) const { return coords_.count(var) > 0; }
  std::vector<std::string> variables() const;
  /// Minimum coordinate precision; nullopt when every coordinate is exact.
  std::optional<std::size_t> precision() const;

  Arc restricted(const std::vector<std::string>& vars) const;
  std::string to_string() const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  std::map<std::string, PowerSeries> coords_;
};

std::uint64_t arc_order(const Arc& a);
Arc reparametrize_arc(const Arc& a, std::size_t e);

/// x~_i = x_i + shift_i(z).
Arc to_normalized_frame(const LocalPresentation& p, const Arc& a);
Arc to_original_frame(const LocalPresentation& p, const Arc& normalized);

struct Certificate {
  enum class Kind { ExactZero, ZeroToPrecision };
  std::string var;
  Kind kind = Kind::ExactZero;
  std::size_t precision = 0;

  std::string to_string() const;
};

struct ValidatedArc {
  Arc arc;         // original coordinates
  Arc normalized;  // Tschirnhausen coordinates
  LocalPresentation presentation;
  std::vector<Certificate> certificates;
  bool in_max_mult = false;
};

ValidatedArc validate_arc(const Arc& a, const LocalPresentation& p);

/// Base projection (index nullopt) or the factor through hypersurface i, in
/// original coordinates.
Arc project_arc(const ValidatedArc& a, std::optional<std::size_t> hypersurface);

/// Orders of the images of the generators; exact zeros are dropped.
OneDimAlgebra image_of_algebra(const Arc& a, const ReesAlgebra& g);

struct ArcImage {
  OneDimAlgebra algebra;
  std::vector<std::size_t> source;  // generator index for each entry
};
ArcImage image_of_algebra_indexed(const Arc& a, const ReesAlgebra& g);

struct ContactResult {
  RationalOrder r;
  Rational r_bar;
  std::uint64_t rho = 0;
  Rational rho_bar;
  std::uint64_t arc_order = 0;
  std::string witness;
};

ContactResult contact_order(const ValidatedArc& a);
/// r from the elimination generators alone, evaluated on the base projection.
RationalOrder contact_order_without_x(const ValidatedArc& a);

/// Per-hypersurface contact orders r_i, each on the single-hypersurface
/// presentation with the factored arc. Empty where the factored arc lies in
/// that hypersurface's Max mult.
std::vector<std::optional<ContactResult>> contact_orders_per_hypersurface(const ValidatedArc& a);

/// min over generators of ord_t(phi(g))/weight on an arbitrary base arc.
RationalOrder base_image_order(const Arc& base, const ReesAlgebra& g);

}  // namespace nashres
