#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nashres/arcs.hpp"
#include "nashres/presentation.hpp"
#include "nashres/rees.hpp"
#include "nashres/series.hpp"

namespace nashres {

/// z_j = u_j t^alpha on the base.
struct DiagonalArc {
  std::vector<std::string> base_vars;
  std::vector<Rational> units;
  std::uint32_t alpha = 1;

  std::map<std::string, PowerSeries> series() const;
  Arc arc() const { return Arc(series()); }
};

DiagonalArc build_diagonal_arc(const std::vector<std::string>& base_vars, const std::vector<Rational>& u,
                               std::uint32_t alpha);

/// For each elimination algebra: the image order quotient on the diagonal arc
/// against alpha times the algebra's order at the origin.
struct GenericityCertificate {
  struct Entry {
    RationalOrder image;
    RationalOrder expected;
    std::string witness;
    bool holds = false;
  };
  std::vector<Entry> entries;
  bool holds() const;
};

GenericityCertificate diagonal_genericity(const DiagonalArc& a, const std::vector<ReesAlgebra>& elim);

/// in_0(p)(u) != 0 for every generator p attaining the minimum of every algebra.
bool units_admissible(const std::vector<ReesAlgebra>& elim, const std::vector<Rational>& u);

/// Visits the admissible integer tuples of [-bound, bound]^d with no zero entry
/// in order of max-norm, then lexicographically. Stops when visit returns true.
void enumerate_generic_units(const std::vector<ReesAlgebra>& elim, std::size_t d, std::uint32_t bound,
                             const std::function<bool(const std::vector<Rational>&)>& visit);

/// The first admissible tuple; throws ValidationError when none is within bound.
std::vector<Rational> find_generic_units(const std::vector<ReesAlgebra>& elim, std::size_t d,
                                         std::uint32_t bound);

/// A branch x~(t) of one hypersurface over the base arc reparametrized by t -> t^e.
struct PuiseuxLift {
  std::size_t e = 1;
  PowerSeries root;
  ExtOrder residual = ExtOrder::infinite();
};

/// Newton-Puiseux on F(x) = x^b + sum B_i(base) x^i. The root is returned to
/// O(t^precision) in the final parameter, or exactly when the branch is a
/// polynomial.
PuiseuxLift puiseux_lift(const TschirnhausenHypersurface& h, const std::map<std::string, PowerSeries>& base,
                         std::size_t precision);
PuiseuxLift puiseux_lift(const TschirnhausenHypersurface& h, const DiagonalArc& base, std::size_t precision);

struct PresentationLift {
  ValidatedArc arc;
  std::size_t e = 1;
  std::vector<std::size_t> ramifications;
};

/// Lifts every hypersurface over the same base and assembles the validated
/// arc over the common reparametrization.
PresentationLift lift_to_presentation(const LocalPresentation& p, const std::map<std::string, PowerSeries>& base,
                                      std::size_t precision);
PresentationLift lift_to_presentation(const LocalPresentation& p, const DiagonalArc& base,
                                      std::size_t precision);

struct GenericArc {
  DiagonalArc base;
  PresentationLift lift;
  GenericityCertificate certificate;
  std::size_t tuples_tried = 0;
};

/// Unit search plus lifting; tuples whose branches leave the rationals are
/// skipped in favour of the next admissible tuple.
GenericArc construct_generic_arc(const LocalPresentation& p, std::uint32_t alpha, std::uint32_t bound,
                                 std::size_t precision);

struct GenericityReport {
  bool generic = false;
  Rational r_bar;
  RationalOrder elimination_order;
  std::string witness;
  std::uint64_t arc_order = 0;
  std::uint64_t base_order = 0;
  bool order_identity = false;  // arc order equals the order of the base projection
  bool tau_guard = true;        // x realizing the arc order forces elimination order 1
};

GenericityReport verify_genericity(const ValidatedArc& a, const LocalPresentation& p);

}  // namespace nashres
