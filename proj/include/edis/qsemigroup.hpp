#ifndef EDIS_QSEMIGROUP_HPP_
#define EDIS_QSEMIGROUP_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edis/congruence.hpp"
#include "edis/semigroup.hpp"

namespace edis {

//! A finite poset as a reflexive/antisymmetric/transitive boolean matrix.
struct Poset {
  int               size = 0;
  std::vector<char> leq;  // row-major

  bool leq_at(int a, int b) const { return leq[a * size + b] != 0; }
  void validate() const;  // throws Error on a violated poset axiom
  std::optional<int> meet(int a, int b) const;
};

//! A preaction of T on the poset Y: a partial map (y, t) -> y'. The formal
//! identity of T^1 acts as the identity and is never stored.
struct Preaction {
  Poset                  y;
  FiniteInverseSemigroup t;
  std::vector<int>       map;  // y.size x t.order(), -1 where undefined

  bool defined(int yy, int tt) const { return map[yy * t.order() + tt] >= 0; }
  int  at(int yy, int tt) const { return map[yy * t.order() + tt]; }
};

struct PreactionViolation {
  int         condition;  // 1..8; 6..8 are the derived conditions
  std::string detail;
};

//! Exhaustively checks the preaction conditions (1)-(5) and derived (6)-(8).
std::optional<PreactionViolation> validate_preaction(Preaction const& q);

//! The conjugation preaction of T = S / syntactic on Y = E(S):
//! q(e, t) = s^-1 e s for any s with s/rho <= t and e <= s s^-1.
struct ConjugationPreaction {
  Preaction        q;
  QuotientResult   quotient;     // T and the hom S -> T
  std::vector<int> idempotent;   // y index -> element of S
  std::vector<int> y_of_element; // element of S -> y index (or -1)
};
ConjugationPreaction conjugation_preaction(FiniteInverseSemigroup const& s);

//! A genuine action of T on a poset X containing Y as its first y_size
//! points, restricting to the source preaction on Y.
struct ExtendedAction {
  Poset                  x;
  int                    y_size = 0;
  FiniteInverseSemigroup t;
  std::vector<int>       action;  // x.size x t.order(), -1 where undefined

  bool defined(int xx, int tt) const {
    return action[xx * t.order() + tt] >= 0;
  }
  int at(int xx, int tt) const { return action[xx * t.order() + tt]; }
};

//! Builds X_q and the extended action, asserting the three conclusions of
//! the extension theorem. Throws PreactionInvalidError if q is invalid.
ExtendedAction extend_preaction(Preaction const& q);

//! Q(T, Y, X) for Y = the first y_size points of X: pairs (y, t) whose
//! restricted domain is the minimal one of y, with
//! (y1,t1)(y2,t2) = (((y1)t1 ^ y2)t1^-1, t1 t2).
struct QSemigroupResult {
  FiniteInverseSemigroup           semigroup;
  std::vector<std::pair<int, int>> carrier;  // (y, t)
  std::vector<int>                 carrier_index;  // y * |T| + t -> element or -1
};
QSemigroupResult q_semigroup(FiniteInverseSemigroup const& t, Poset const& x,
                             int y_size, std::vector<int> const& action);

//! Full reconstruction S = Q(T, E(S), X_q) with the isomorphism
//! s -> (s s^-1, s/rho), verified end to end.
struct ReconstructResult {
  QSemigroupResult q;
  std::vector<int> iso;  // S element -> Q element
  int              quotient_order = 0;
  int              x_size         = 0;
  bool             verified       = false;
};
ReconstructResult reconstruct(FiniteInverseSemigroup const& s);

}  // namespace edis
#endif  // EDIS_QSEMIGROUP_HPP_
