#ifndef EDIS_ANALYSIS_HPP_
#define EDIS_ANALYSIS_HPP_

#include <optional>
#include <string>

#include "edis/semigroup.hpp"

namespace edis {

//! The structural summary emitted by `edis analyze`. The flag set is checked
//! for internal consistency (a group is E-disjunctive; a semilattice of
//! order >= 2 is not).
struct AnalysisReport {
  std::string input;
  int         order            = 0;
  int         idempotent_count = 0;
  bool        is_group         = false;
  bool        is_semilattice   = false;
  bool        has_identity     = false;
  bool        has_zero         = false;
  bool        e_disjunctive    = false;
  bool        e_unitary        = false;
  int         quotient_order   = 0;
  // the congruence-module report for the syntactic congruence
  std::vector<int> kernel;
  std::vector<int> trace;  // class ids over idempotents, in element order
  std::optional<bool> reconstruction_verified;
};

AnalysisReport analyze(FiniteInverseSemigroup const& s,
                       std::string const& input_descriptor,
                       bool with_reconstruction = false);

std::string report_to_json(AnalysisReport const& r);
std::string report_to_text(AnalysisReport const& r);

}  // namespace edis
#endif  // EDIS_ANALYSIS_HPP_
