#ifndef EDIS_CONGRUENCE_HPP_
#define EDIS_CONGRUENCE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "edis/partition.hpp"
#include "edis/semigroup.hpp"

namespace edis {

//! Least congruence containing the given pairs (union-find saturation).
Partition congruence_closure(FiniteInverseSemigroup const& s,
                             std::vector<std::pair<int, int>> const& pairs);

//! Least right congruence containing the given pairs.
Partition
right_congruence_closure(FiniteInverseSemigroup const& s,
                         std::vector<std::pair<int, int>> const& pairs);

bool is_congruence(FiniteInverseSemigroup const& s, Partition const& rho);

//! Quotient semigroup and the class map; throws NotACongruenceError.
struct QuotientResult {
  FiniteInverseSemigroup semigroup;
  std::vector<int>       hom;  // element -> class id
};
QuotientResult quotient(FiniteInverseSemigroup const& s, Partition const& rho);

//! No class mixes idempotents and non-idempotents. rho need only be an
//! equivalence (useful for right congruences too).
bool is_idempotent_pure(FiniteInverseSemigroup const& s, Partition const& rho);

struct KernelTrace {
  std::vector<int> kernel;  // union of classes containing an idempotent
  Partition        trace;   // restriction to E(S), indexed by idempotent rank
  std::vector<int> idempotents;  // trace index -> element index
};
KernelTrace kernel_trace(FiniteInverseSemigroup const& s, Partition const& rho);

//! Per-element idempotency bit-matrix over S^1 x S^1, one word-aligned row
//! per element; equal rows give the syntactic congruence directly.
class SyntacticData {
 public:
  explicit SyntacticData(FiniteInverseSemigroup const& s);

  //! bit (alpha, beta) of element x: alpha x beta not idempotent. Index n
  //! denotes the formal identity of S^1.
  bool bit(int x, int alpha, int beta) const {
    std::size_t i = static_cast<std::size_t>(alpha) * (order_ + 1) + beta;
    return (words_[x * row_words_ + (i >> 6)] >> (i & 63)) & 1;
  }
  Partition const& congruence() const { return congruence_; }

  //! x below y in the syntactic preorder: every 1-bit of x is a 1-bit of y.
  bool preorder_leq(int x, int y) const;

 private:
  int                        order_;
  std::size_t                row_words_;
  std::vector<std::uint64_t> words_;
  Partition                  congruence_;
};

//! Largest idempotent-pure congruence (equality of syntactic readouts).
Partition syntactic_congruence(FiniteInverseSemigroup const& s);

bool is_E_disjunctive(FiniteInverseSemigroup const& s);
bool is_E_unitary(FiniteInverseSemigroup const& s);

//! Quotient by the syntactic congruence; the result is E-disjunctive and the
//! hom is idempotent-pure.
QuotientResult max_E_disjunctive_quotient(FiniteInverseSemigroup const& s);

//! The relation s preceq t as a boolean matrix (row-major, order x order).
//! A preorder on any input; equals the natural partial order when the input
//! is E-disjunctive.
std::vector<char> syntactic_preorder(FiniteInverseSemigroup const& s);

//! Syntactic readout of an idempotent e: bits over ((S \ E) u {1})^2,
//! bit = 1 iff alpha e beta is not idempotent.
struct Readout {
  int               owner;
  std::vector<int>  axis;  // non-idempotents then the formal identity marker -1
  std::vector<char> bits;  // axis.size() x axis.size(), row-major
  bool operator==(Readout const& other) const { return bits == other.bits; }
};
Readout readout(FiniteInverseSemigroup const& s, int e);

//! N(S) = { u u^-1 : u not idempotent }.
std::vector<int> n_set(FiniteInverseSemigroup const& s);

//! phi_S(f) = down-set of f inside N(S); f must be idempotent.
std::vector<int> phi_S(FiniteInverseSemigroup const& s, int f);

//! {(a, b) : a b^-1 and a^-1 b idempotent} as a boolean matrix.
std::vector<char> compatibility_relation(FiniteInverseSemigroup const& s);

//! Every congruence of s, generated by joining closures of pair sets of
//! size <= 2. Intended for small orders.
std::vector<Partition> all_congruences(FiniteInverseSemigroup const& s);

}  // namespace edis
#endif  // EDIS_CONGRUENCE_HPP_
