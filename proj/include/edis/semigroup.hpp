#ifndef EDIS_SEMIGROUP_HPP_
#define EDIS_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "edis/partial_perm.hpp"
#include "edis/partition.hpp"

namespace edis {

//! A finite inverse semigroup on elements {0, ..., order - 1}.
//!
//! The multiplication table is the single source of truth; inverses and the
//! idempotent mask are caches populated on construction. Instances are
//! immutable after construction and safe to share across threads. The empty
//! semigroup (order 0) is a legal value.
class FiniteInverseSemigroup {
 public:
  FiniteInverseSemigroup() = default;

  int order() const { return order_; }
  int product(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  bool is_idempotent(int a) const { return idem_[a] != 0; }

  std::vector<int> const& table() const { return table_; }
  std::vector<int> const& inverses() const { return inv_; }

  //! Indices of all idempotents, increasing.
  std::vector<int> idempotents() const;
  int              num_idempotents() const;

  //! s <= t in the natural partial order, decided as s == (s s^-1) t.
  bool natural_leq(int s, int t) const;

  //! Product of a word of element indices; the word must be non-empty.
  int word(std::vector<int> const& letters) const;

  bool is_semilattice() const;  // every element idempotent; empty counts
  bool is_group() const;        // exactly one idempotent; empty is not a group
  std::optional<int> identity_element() const;
  std::optional<int> zero_element() const;
  bool has_identity() const { return identity_element().has_value(); }
  bool has_zero() const { return zero_element().has_value(); }

  std::vector<std::string> const& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  std::string label(int i) const;

  //! Table text format: first line n, then n rows of n 0-based indices.
  std::string to_table_string() const;

  friend FiniteInverseSemigroup
  semigroup_from_table(std::vector<std::vector<int>> const& table);
  friend FiniteInverseSemigroup
  semigroup_from_flat_table(int order, std::vector<int> table);

 private:
  int                      order_ = 0;
  std::vector<int>         table_;  // row-major
  std::vector<int>         inv_;
  std::vector<char>        idem_;
  std::vector<std::string> labels_;
};

//! Validates associativity and the inverse-semigroup axioms (unique inverses,
//! commuting idempotents) and returns the semigroup with caches populated.
//! Throws NotAssociativeError or NotInverseError with a witness.
FiniteInverseSemigroup
semigroup_from_table(std::vector<std::vector<int>> const& table);
FiniteInverseSemigroup semigroup_from_flat_table(int order,
                                                 std::vector<int> table);

FiniteInverseSemigroup parse_table(std::string const& text);

//! The inverse subsemigroup of I_deg generated by gens and their inverses,
//! with the partial perm realizing each element. Empty gens give order 0.
struct ClosureResult {
  FiniteInverseSemigroup   semigroup;
  std::vector<PartialPerm> elements;
};
ClosureResult closure_of_partial_perms(std::vector<PartialPerm> const& gens);

//! Wrapper matching the operation name.
bool natural_leq(FiniteInverseSemigroup const& s, int a, int b);

//! Green's data and the chain-height function h (a minimal element has h = 1).
struct GreenData {
  Partition        r;
  Partition        l;
  Partition        d;
  std::vector<int> h;
};
GreenData green_data(FiniteInverseSemigroup const& s);

//! a <=_R b, i.e. a S^1 is contained in b S^1.
bool r_leq(FiniteInverseSemigroup const& s, int a, int b);
bool l_leq(FiniteInverseSemigroup const& s, int a, int b);

//! The Vagner-Preston representation by right translations; the closure of
//! the returned perms is isomorphic to the input.
std::vector<PartialPerm> vagner_preston(FiniteInverseSemigroup const& s);

}  // namespace edis
#endif  // EDIS_SEMIGROUP_HPP_
