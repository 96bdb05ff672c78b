#ifndef EDIS_ENUMERATION_HPP_
#define EDIS_ENUMERATION_HPP_

#include <cstdint>
#include <vector>

#include "edis/semigroup.hpp"

namespace edis {

//! All inverse semigroups of order n up to isomorphism, as canonical flat
//! tables in increasing order. n <= 6.
//!
//! Generation seeds on the semilattice of idempotents: semilattice tables
//! are enumerated first (up to isomorphism), then extended by an involution
//! and domain/range data over the non-idempotents, with the remaining cells
//! filled by backtracking under incremental associativity; duplicates are
//! removed by canonical form.
std::vector<std::vector<int>> enumerate_inverse_semigroups(int n,
                                                            int jobs = 1);

//! All semilattice tables of order m up to isomorphism.
std::vector<std::vector<int>> enumerate_semilattices(int m);

//! Independent cross-check: backtracking over all n^(n^2) tables with early
//! associativity cutoff, filtered by the inverse axioms. n <= 5.
std::vector<std::vector<int>> enumerate_inverse_semigroups_brute(int n);

struct CensusRow {
  int           order;
  std::int64_t  total;
  std::int64_t  e_unitary_non_semilattice;
  std::int64_t  e_disjunctive;
  std::int64_t  e_disjunctive_monoids;
};
CensusRow classify_order(int n, int jobs = 1);

struct MonogenicCensus {
  std::int64_t max_size;
  std::int64_t total;
  std::int64_t e_disjunctive;
  double       proportion;
};
//! Counts monogenic inverse monoids S_{n,k} (n >= 1) of size <= m and the
//! E-disjunctive ones (n > k or n = 1); pure arithmetic.
MonogenicCensus monogenic_census(std::int64_t m);

}  // namespace edis
#endif  // EDIS_ENUMERATION_HPP_
