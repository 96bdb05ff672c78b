#ifndef EDIS_CANONICAL_HPP_
#define EDIS_CANONICAL_HPP_

#include <optional>
#include <vector>

#include "edis/semigroup.hpp"

namespace edis {

//! Lexicographically least relabelled table over all bijections compatible
//! with a structural colouring (idempotency, chain height, down-set size,
//! Green's class sizes, refined by products until stable). Relabelling any
//! semigroup by a bijection yields the same canonical table.
std::vector<int> canonical_table(FiniteInverseSemigroup const& s);

//! The relabelling realizing canonical_table: new = sigma[old].
struct CanonicalForm {
  std::vector<int> table;
  std::vector<int> relabel;
};
CanonicalForm canonical_form(FiniteInverseSemigroup const& s);

//! An isomorphism s1 -> s2 (as a vector over s1's elements), when one exists.
std::optional<std::vector<int>> is_isomorphic(FiniteInverseSemigroup const& s1,
                                              FiniteInverseSemigroup const& s2);

}  // namespace edis
#endif  // EDIS_CANONICAL_HPP_
