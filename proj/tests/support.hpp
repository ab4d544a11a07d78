#pragma once

#include <map>
#include <string>

#include <doctest.h>

#include "nashres/arcs.hpp"
#include "nashres/io.hpp"
#include "nashres/parse.hpp"
#include "nashres/presentation.hpp"

namespace testing {

inline nashres::MultiPoly P(const std::string& s) { return nashres::parse_poly(s); }

inline nashres::Rational Q(long n, long d = 1) { return nashres::make_rational(n, d); }

inline nashres::PowerSeries S(const std::string& s, std::optional<std::size_t> prec = std::nullopt) {
  return nashres::PowerSeries::from_poly(P(s), prec);
}

inline nashres::Arc make_arc(const std::map<std::string, std::string>& coords,
                             std::optional<std::size_t> prec = std::nullopt) {
  std::map<std::string, nashres::PowerSeries> m;
  for (const auto& [v, s] : coords) m.emplace(v, S(s, prec));
  return nashres::Arc(std::move(m));
}

inline nashres::LocalPresentation hypersurface(const std::string& f, std::size_t d = 1,
                                               const std::string& var = "x") {
  return nashres::LocalPresentation(d, {}, {{var, 0, P(f)}});
}

inline nashres::LocalPresentation cusp() { return hypersurface("x^2 - z^3"); }
inline nashres::LocalPresentation umbrella() { return hypersurface("x^2 - z1^2*z2", 2); }
inline nashres::LocalPresentation two_hypersurfaces() {
  return nashres::LocalPresentation(2, {}, {{"x1", 2, P("x1^2 - z1^3")}, {"x2", 2, P("x2^2 - z1*z2^2")}});
}

inline nashres::RationalOrder RO(long n, long d = 1) { return nashres::RationalOrder(Q(n, d)); }

}  // namespace testing
