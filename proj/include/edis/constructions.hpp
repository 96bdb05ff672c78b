#ifndef EDIS_CONSTRUCTIONS_HPP_
#define EDIS_CONSTRUCTIONS_HPP_

#include <string>
#include <vector>

#include "edis/partial_perm.hpp"
#include "edis/semigroup.hpp"

namespace edis {

FiniteInverseSemigroup direct_product(FiniteInverseSemigroup const& s1,
                                      FiniteInverseSemigroup const& s2);

//! Adjoins a fresh identity / zero as the last element index.
FiniteInverseSemigroup adjoin_identity(FiniteInverseSemigroup const& s);
FiniteInverseSemigroup adjoin_zero(FiniteInverseSemigroup const& s);

//! Disjoint union plus a fresh zero (last index); cross products are zero.
//! Every component must be non-empty.
FiniteInverseSemigroup
zero_direct_union(std::vector<FiniteInverseSemigroup> const& components);

//! An element (t, f) of S wr T: the partial perm t together with the
//! decoration f : dom(t) -> S (UNDEFINED outside the domain).
struct WreathElement {
  PartialPerm      t;
  std::vector<int> decorations;
};

struct WreathProductResult {
  FiniteInverseSemigroup     semigroup;
  std::vector<WreathElement> elements;
  FiniteInverseSemigroup     t;           // T as an abstract semigroup
  std::vector<PartialPerm>   t_elements;  // realization of T
  std::vector<int>           projection;  // wreath element -> index in t
};

//! S wr T for T a finite inverse subsemigroup of I_X given by its element
//! list (validated closed under product and inverse; TNotClosedError with a
//! witness otherwise). The projection is the surjective homomorphism
//! (t, f) -> t.
WreathProductResult wreath_product(FiniteInverseSemigroup const& s,
                                   std::vector<PartialPerm> const& t,
                                   std::size_t size_guard = 200000);

//! I_n as a table; n <= 7.
struct SymmetricInverseMonoidResult {
  FiniteInverseSemigroup   semigroup;
  std::vector<PartialPerm> elements;
};
SymmetricInverseMonoidResult symmetric_inverse_monoid(int n);

//! A block bijection: a partition of X x {0, 1} in which every part meets
//! both layers, stored as class labels over 2n points (first-occurrence
//! numbering, so equal bijections compare equal).
struct BlockBijection {
  int              n;
  std::vector<int> labels;  // size 2n; point x layer l at index l * n + x
  bool operator==(BlockBijection const& o) const { return labels == o.labels; }
  bool operator<(BlockBijection const& o) const { return labels < o.labels; }
};

//! I*_n via the Diag product; n <= 4.
struct DualSymmetricResult {
  FiniteInverseSemigroup      semigroup;
  std::vector<BlockBijection> elements;
};
DualSymmetricResult dual_symmetric_inverse_monoid(int n);

//! The monogenic inverse monoid S_{n,k}, realized as the closure of
//! [1..n] u (n+1 .. n+k) together with the identity; n = 0 is S_{1,k}.
struct MonogenicResult {
  FiniteInverseSemigroup semigroup;
  int                    generator;  // index of x
  int                    identity;   // index of the adjoined identity
  int                    n, k;
};
MonogenicResult monogenic(int n, int k, std::size_t size_guard = 100000);

//! One normal form of S_{n,k}: either x^-a x^b x^-b x^c with a, c <= b < n,
//! or x^n x^-n x^a with a < k.
struct MonogenicNormalForm {
  enum class Kind { chain, cycle };
  Kind kind;
  int  a, b, c;  // cycle forms use a only
  int  element;
};
std::vector<MonogenicNormalForm> monogenic_normal_forms(int n, int k);

//! Strong semilattice of groups: a semilattice Y, a group per element of Y,
//! and connecting homomorphisms psi[y][z] : G_y -> G_z for z <= y.
struct StrongSemilatticeSpec {
  FiniteInverseSemigroup                     semilattice;
  std::vector<FiniteInverseSemigroup>        groups;
  std::vector<std::vector<std::vector<int>>> maps;  // maps[y][z], empty if z !<= y
};

struct StrongSemilatticeResult {
  FiniteInverseSemigroup           semigroup;
  std::vector<std::pair<int, int>> elements;  // (y, g)
};
StrongSemilatticeResult
strong_semilattice_of_groups(StrongSemilatticeSpec const& spec);

//! The Clifford semigroup over the power set of kappa whose singleton groups
//! are C_2 and whose structure maps are constant; order 2^kappa + kappa and
//! attains the idempotent bound with equality.
FiniteInverseSemigroup clifford_extremal(int kappa);

//! The unique 11-element inverse semigroup with generators x, y satisfying
//! xy = xy^-1 = yx = yx^-1 = y^-1x^-1 = x^2 and yy^-1 = xx^-1, found by
//! bounded search over pairs of partial perms of degree <= 6 and cached
//! (in-process, plus on disk when EDIS_CACHE_DIR is set).
struct MinimalExampleResult {
  FiniteInverseSemigroup s;
  int                    x, y;  // generator indices; labels are set
};
MinimalExampleResult minimal_example_11();

}  // namespace edis
#endif  // EDIS_CONSTRUCTIONS_HPP_
