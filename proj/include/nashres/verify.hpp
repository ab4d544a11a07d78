#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashres/arcs.hpp"
#include "nashres/generic_arc.hpp"
#include "nashres/presentation.hpp"

namespace nashres {

struct VerifyOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  std::size_t precision = 64;
  std::uint32_t search_bound = 8;
  std::uint32_t alpha = 1;
};

struct SampleRecord {
  std::size_t index = 0;
  std::string kind;
  std::string recipe;
  Arc arc;
  ContactResult contact;
  RationalOrder without_x;
  std::uint64_t onedim_rho = 0;
  std::uint64_t nash_rho = 0;
  RationalOrder min_r_i;
  std::uint64_t min_rho_i = 0;
};

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct VerifyResult {
  RationalOrder elimination_order;
  DiagonalArc generic_base;
  Arc generic_arc;
  std::size_t generic_e = 1;
  std::size_t tuples_tried = 0;
  GenericityCertificate certificate;
  GenericityReport genericity;
  ContactResult generic_contact;
  std::size_t rho_bar_reparam = 1;
  ContactResult reparam_contact;
  std::vector<SampleRecord> samples;
  std::vector<CheckRecord> checks;
  std::size_t resamples = 0;

  bool passed() const;
};

/// Builds a generic arc, samples `trials` further arcs on the presentation
/// (the generic arc is sample 0) and checks the order identities on each.
VerifyResult verify_presentation(const LocalPresentation& p, const VerifyOptions& opt);

}  // namespace nashres
