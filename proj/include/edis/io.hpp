#ifndef EDIS_IO_HPP_
#define EDIS_IO_HPP_

#include <string>

#include "edis/constructions.hpp"
#include "edis/graph_inverse.hpp"
#include "edis/semigroup.hpp"

namespace edis {

std::string read_file(std::string const& path);

//! {"vertices": n, "edges": [[s, r], ...]}
GraphSpec   parse_graph_json(std::string const& text);
std::string graph_to_json(GraphSpec const& graph);

//! {"semilattice": [[...]], "groups": [[[...]], ...],
//!  "maps": {"y,z": [images], ...}}
StrongSemilatticeSpec parse_ssg_json(std::string const& text);

//! Builder mini-language: name:arg,arg. Known names: monogenic:n,k,
//! symmetric:n, dual_symmetric:n, clifford:kappa, cyclic:n, minimal11,
//! ssg:path.json.
FiniteInverseSemigroup build_named(std::string const& spec);

FiniteInverseSemigroup cyclic_group(int n);

}  // namespace edis
#endif  // EDIS_IO_HPP_
