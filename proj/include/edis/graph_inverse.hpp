#ifndef EDIS_GRAPH_INVERSE_HPP_
#define EDIS_GRAPH_INVERSE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "edis/partition.hpp"
#include "edis/semigroup.hpp"

namespace edis {

//! A directed multigraph; parallel edges and isolated vertices are allowed.
struct GraphSpec {
  int                              vertices = 0;
  std::vector<std::pair<int, int>> edges;  // (source, range)

  int out_degree(int v) const;
  bool is_isolated(int v) const;
  //! A witness cycle as a vertex sequence, or nullopt when acyclic.
  std::optional<std::vector<int>> find_cycle() const;
};

//! A path: a base vertex plus a (possibly empty) edge-index sequence.
struct GisPath {
  int              source = 0;
  std::vector<int> edges;
};

//! A non-zero element p q^-1 of S(Gamma), or the zero.
struct GisElement {
  bool    zero = true;
  GisPath p, q;  // r(p) = r(q) when not zero
};

struct GisResult {
  FiniteInverseSemigroup  semigroup;
  std::vector<GisElement> elements;  // index 0 is the zero
  std::vector<GisPath>    paths;     // all paths, lexicographic by edge indices
  GraphSpec               graph;

  //! index of the vertex element v v^-1 (the length-0 pair at v)
  int vertex_element(int v) const;
  //! index of e e^-1 for an edge
  int edge_range_idempotent(int e) const;
};

//! Builds S(Gamma) for an acyclic graph; throws CyclicGraphError otherwise.
GisResult gis(GraphSpec const& graph);

//! A Wang pair (H, W); the cycle function is vacuous on acyclic graphs.
struct WangPair {
  std::vector<int> h;
  std::vector<int> w;
};

struct WangViolation {
  int         vertex;
  std::string condition;
};

//! Checks reachability-closure of H and the unique-out-edge condition for W
//! in Gamma minus H. Works for cyclic graphs too.
std::optional<WangViolation> validate_wang_pair(GraphSpec const& graph,
                                                WangPair const& pair);

//! The congruence on S(Gamma) generated by (H x {0}) and the pairs
//! (w, e e^-1) for the unique out-edge e of each w in W.
Partition wang_congruence(GisResult const& g, WangPair const& pair);

//! Combinatorial E-disjunctivity: no isolated vertices and every vertex has
//! out-degree 0 or >= 2. No semigroup is built; cyclic graphs are fine.
bool gis_is_E_disjunctive(GraphSpec const& graph);

//! DOT rendering annotated with the verdict and per-vertex out-degrees.
std::string gis_to_dot(GraphSpec const& graph);

}  // namespace edis
#endif  // EDIS_GRAPH_INVERSE_HPP_
