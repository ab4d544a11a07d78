#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashres/arcs.hpp"
#include "nashres/poly.hpp"
#include "nashres/presentation.hpp"

namespace nashres {

/// Chart of the directed blow-up sequence in which t is the exceptional
/// parameter. g lives in the ambient variables plus t and vanishes on the
/// lifted arc; the current center is always the origin.
struct NashState {
  MultiPoly g;
  std::map<std::string, PowerSeries> arc;
  std::uint64_t step = 0;
};

struct NashStepRecord {
  std::uint64_t step = 0;
  Point center;
  std::uint64_t multiplicity = 0;
  std::string equation;
};

struct NashSequence {
  std::vector<std::uint64_t> multiplicities;
  std::uint64_t rho = 0;
  std::vector<Point> centers;
  std::vector<std::string> variables;
  std::uint64_t precision_consumed = 0;
  std::vector<NashStepRecord> trace;
};

struct NashOptions {
  bool check_residual = false;
  bool record_trace = false;
};

/// Initial state for a hypersurface f through the origin and an arc covering
/// its variables.
NashState nash_initial_state(const MultiPoly& f, const Arc& a);

/// One blow-up at the origin followed by recentering at the lifted point.
/// Returns the new state and the center used.
NashState nash_step(const NashState& s, Point* center = nullptr);

std::uint64_t nash_multiplicity(const NashState& s);

/// Nash multiplicity sequence of f along the arc up to the first drop.
NashSequence nash_sequence(const MultiPoly& f, const Arc& a, const NashOptions& opt = {});

/// Runs on the normalized equation of one hypersurface with the factored arc.
NashSequence nash_sequence_hypersurface(const ValidatedArc& a, std::size_t index,
                                        const NashOptions& opt = {});

struct PresentationNash {
  std::uint64_t rho = 0;
  /// Empty where the factored arc stays inside that hypersurface's Max mult.
  std::vector<std::optional<NashSequence>> per_hypersurface;
};

PresentationNash nash_sequence_presentation(const ValidatedArc& a, const NashOptions& opt = {});

}  // namespace nashres
