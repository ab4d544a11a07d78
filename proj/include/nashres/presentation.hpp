#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nashres/poly.hpp"
#include "nashres/rees.hpp"

namespace nashres {

/// f = x^b + sum_{i<=b-2} B_i x^i with B_i in the base variables.
///
/// `shift` records the change of coordinates that produced this form from the
/// input polynomial: the normalized coordinate is x~ = x + shift(z).
struct TschirnhausenHypersurface {
  std::string var;
  std::uint32_t b = 2;
  std::vector<MultiPoly> coeffs;  // B_0 .. B_{b-2}
  std::vector<std::string> base_vars;
  MultiPoly shift;
  MultiPoly original;

  /// Variables of the normalized polynomial: var followed by the base.
  std::vector<std::string> ambient_vars() const;
  /// The normalized polynomial x^b + sum B_i x^i.
  MultiPoly polynomial() const;
  std::string to_string() const { return polynomial().to_string(); }
};

/// Completes the b-th power in `var` and checks that the result is centered at
/// the origin. When base_vars is empty every other variable of f is a base
/// variable.
TschirnhausenHypersurface tschirnhausen_normalize(const MultiPoly& f, const std::string& var,
                                                  std::vector<std::string> base_vars = {});

ReesAlgebra elimination_algebra(const TschirnhausenHypersurface& h);
RationalOrder elimination_order(const TschirnhausenHypersurface& h);
/// Diff closure of f W^b in the normalized coordinates.
ReesAlgebra hypersurface_ambient_algebra(const TschirnhausenHypersurface& h);

std::uint64_t hypersurface_multiplicity_at(const TschirnhausenHypersurface& h, const Point& p);

/// Separated-variable system: one Tschirnhausen hypersurface per distinguished
/// variable, all over the same base.
class LocalPresentation {
 public:
  struct Input {
    std::string var;
    std::uint32_t b;
    MultiPoly f;
  };

  LocalPresentation(std::size_t d, std::vector<std::string> base_vars, const std::vector<Input>& hyps);

  /// The conventional base for dimension d: z when d = 1, else z1..zd.
  static std::vector<std::string> default_base(std::size_t d);

  std::size_t d() const noexcept { return d_; }
  const std::vector<std::string>& base_vars() const noexcept { return base_; }
  const std::vector<TschirnhausenHypersurface>& hypersurfaces() const noexcept { return hyps_; }
  /// Distinguished variables followed by the base, in canonical order.
  const std::vector<std::string>& ambient_vars() const noexcept { return ambient_; }
  std::vector<std::string> distinguished_vars() const;

  std::string to_string() const;

 private:
  std::size_t d_;
  std::vector<std::string> base_;
  std::vector<TschirnhausenHypersurface> hyps_;
  std::vector<std::string> ambient_;
};

RationalOrder presentation_elimination_order(const LocalPresentation& p);
std::vector<ReesAlgebra> elimination_algebras(const LocalPresentation& p);
/// The diff-closed algebra of the whole presentation over all ambient variables.
ReesAlgebra presentation_ambient_algebra(const LocalPresentation& p);

/// p is given in the presentation's ambient_vars() order, in original coordinates.
bool max_mult_contains(const LocalPresentation& p, const Point& pt);

}  // namespace nashres
