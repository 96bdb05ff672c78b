#include "edis/graph_inverse.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "edis/congruence.hpp"
#include "edis/errors.hpp"

namespace edis {

int GraphSpec::out_degree(int v) const {
  int d = 0;
  for (auto const& [s, r] : edges) {
    d += (s == v);
  }
  return d;
}

bool GraphSpec::is_isolated(int v) const {
  for (auto const& [s, r] : edges) {
    if (s == v || r == v) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<int>> GraphSpec::find_cycle() const {
  std::vector<std::vector<int>> adj(vertices);
  for (auto const& [s, r] : edges) {
    adj[s].push_back(r);
  }
  std::vector<int> colour(vertices, 0);  // 0 white, 1 on stack, 2 done
  std::vector<int> stack, parent_pos;
  for (int start = 0; start < vertices; ++start) {
    if (colour[start] != 0) {
      continue;
    }
    // iterative DFS keeping the active path
    std::vector<std::pair<int, std::size_t>> frames{{start, 0}};
    colour[start] = 1;
    stack         = {start};
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < adj[v].size()) {
        int w = adj[v][next++];
        if (colour[w] == 1) {
          // recover the cycle from the active path
          std::vector<int> cycle;
          auto it = std::find(stack.begin(), stack.end(), w);
          cycle.assign(it, stack.end());
          return cycle;
        }
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.push_back(w);
          frames.emplace_back(w, 0);
        }
      } else {
        colour[v] = 2;
        stack.pop_back();
        frames.pop_back();
      }
    }
  }
  return std::nullopt;
}

namespace {

int path_range(GraphSpec const& g, GisPath const& p) {
  return p.edges.empty() ? p.source : g.edges[p.edges.back()].second;
}

bool path_less(GisPath const& a, GisPath const& b) {
  if (a.edges != b.edges) {
    return a.edges < b.edges;
  }
  return a.source < b.source;
}

// a is a prefix of b (paths with the same source)
bool path_prefix(GisPath const& a, GisPath const& b) {
  if (a.source != b.source || a.edges.size() > b.edges.size()) {
    return false;
  }
  return std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

}  // namespace

int GisResult::vertex_element(int v) const {
  for (std::size_t i = 1; i < elements.size(); ++i) {
    auto const& e = elements[i];
    if (e.p.edges.empty() && e.q.edges.empty() && e.p.source == v
        && e.q.source == v) {
      return static_cast<int>(i);
    }
  }
  throw Error("gis: vertex element not found");
}

int GisResult::edge_range_idempotent(int e) const {
  for (std::size_t i = 1; i < elements.size(); ++i) {
    auto const& el = elements[i];
    if (el.p.edges.size() == 1 && el.p.edges[0] == e
        && el.q.edges.size() == 1 && el.q.edges[0] == e) {
      return static_cast<int>(i);
    }
  }
  throw Error("gis: edge idempotent not found");
}

GisResult gis(GraphSpec const& graph) {
  for (auto const& [s, r] : graph.edges) {
    if (s < 0 || s >= graph.vertices || r < 0 || r >= graph.vertices) {
      throw ParseError("gis: edge endpoint out of range");
    }
  }
  if (auto cycle = graph.find_cycle()) {
    throw CyclicGraphError(*cycle);
  }

  GisResult res;
  res.graph = graph;

  // all paths, grown by appending out-edges; finite because the graph is
  // acyclic
  for (int v = 0; v < graph.vertices; ++v) {
    res.paths.push_back({v, {}});
  }
  for (std::size_t i = 0; i < res.paths.size(); ++i) {
    GisPath const p   = res.paths[i];
    int           end = path_range(graph, p);
    for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
      if (graph.edges[e].first == end) {
        GisPath q = p;
        q.edges.push_back(e);
        res.paths.push_back(std::move(q));
      }
    }
    if (res.paths.size() > 2000000) {
      throw TooLargeError("gis: too many paths");
    }
  }
  std::sort(res.paths.begin(), res.paths.end(), path_less);

  // elements: zero, then pairs (p, q) with matching ranges
  res.elements.push_back(GisElement{});
  std::map<std::pair<int, int>, int> pair_index;  // (p idx, q idx) -> element
  for (int pi = 0; pi < static_cast<int>(res.paths.size()); ++pi) {
    for (int qi = 0; qi < static_cast<int>(res.paths.size()); ++qi) {
      if (path_range(graph, res.paths[pi]) == path_range(graph, res.paths[qi])) {
        pair_index.emplace(std::make_pair(pi, qi),
                           static_cast<int>(res.elements.size()));
        res.elements.push_back(
            GisElement{false, res.paths[pi], res.paths[qi]});
      }
    }
  }

  int n = static_cast<int>(res.elements.size());
  if (static_cast<std::size_t>(n) * n > 100000000ULL) {
    throw TooLargeError("gis: semigroup too large");
  }
  auto path_idx = [&](GisPath const& p) {
    auto it = std::lower_bound(res.paths.begin(), res.paths.end(), p,
                               path_less);
    return static_cast<int>(it - res.paths.begin());
  };

  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int a = 1; a < n; ++a) {
    auto const& ea = res.elements[a];
    for (int b = 1; b < n; ++b) {
      auto const& eb = res.elements[b];
      // (p1 q1^-1)(p2 q2^-1): compare q1 and p2
      GisPath const& q1 = ea.q;
      GisPath const& p2 = eb.p;
      if (path_prefix(q1, p2)) {
        // p2 = q1 u; result (p1 u, q2)
        GisPath pu = ea.p;
        pu.edges.insert(pu.edges.end(), p2.edges.begin() + q1.edges.size(),
                        p2.edges.end());
        table[a * n + b] = pair_index.at({path_idx(pu), path_idx(eb.q)});
      } else if (path_prefix(p2, q1)) {
        // q1 = p2 u; result (p1, q2 u)
        GisPath qu = eb.q;
        qu.edges.insert(qu.edges.end(), q1.edges.begin() + p2.edges.size(),
                        q1.edges.end());
        table[a * n + b] = pair_index.at({path_idx(ea.p), path_idx(qu)});
      }
    }
  }
  res.semigroup = semigroup_from_flat_table(n, std::move(table));
  return res;
}

std::optional<WangViolation> validate_wang_pair(GraphSpec const& graph,
                                                WangPair const& pair) {
  std::vector<char> in_h(graph.vertices, 0);
  for (int v : pair.h) {
    if (v < 0 || v >= graph.vertices) {
      return WangViolation{v, "H vertex out of range"};
    }
    in_h[v] = 1;
  }
  for (auto const& [s, r] : graph.edges) {
    if (in_h[s] && !in_h[r]) {
      return WangViolation{r, "H is not closed under reachability"};
    }
  }
  for (int v : pair.w) {
    if (v < 0 || v >= graph.vertices) {
      return WangViolation{v, "W vertex out of range"};
    }
    if (in_h[v]) {
      return WangViolation{v, "W meets H"};
    }
    int out = 0;
    for (auto const& [s, r] : graph.edges) {
      if (s == v && !in_h[r]) {
        ++out;
      }
    }
    if (out != 1) {
      return WangViolation{
          v, "W vertex has " + std::to_string(out)
                 + " out-edges in the complement of H (need exactly 1)"};
    }
  }
  return std::nullopt;
}

Partition wang_congruence(GisResult const& g, WangPair const& pair) {
  if (auto violation = validate_wang_pair(g.graph, pair)) {
    throw InvalidWangPairError("invalid Wang pair at vertex "
                                   + std::to_string(violation->vertex) + ": "
                                   + violation->condition,
                               violation->vertex);
  }
  std::vector<char> in_h(g.graph.vertices, 0);
  for (int v : pair.h) {
    in_h[v] = 1;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int v : pair.h) {
    pairs.emplace_back(g.vertex_element(v), 0);
  }
  for (int w : pair.w) {
    for (int e = 0; e < static_cast<int>(g.graph.edges.size()); ++e) {
      if (g.graph.edges[e].first == w && !in_h[g.graph.edges[e].second]) {
        pairs.emplace_back(g.vertex_element(w), g.edge_range_idempotent(e));
      }
    }
  }
  return congruence_closure(g.semigroup, pairs);
}

bool gis_is_E_disjunctive(GraphSpec const& graph) {
  for (int v = 0; v < graph.vertices; ++v) {
    if (graph.is_isolated(v)) {
      return false;
    }
    int d = graph.out_degree(v);
    if (d == 1) {
      return false;
    }
  }
  return true;
}

std::string gis_to_dot(GraphSpec const& graph) {
  std::ostringstream os;
  os << "digraph gamma {\n";
  os << "  label=\"E-disjunctive: "
     << (gis_is_E_disjunctive(graph) ? "true" : "false") << "\";\n";
  for (int v = 0; v < graph.vertices; ++v) {
    os << "  v" << v << " [label=\"v" << v << " (out=" << graph.out_degree(v)
       << ")\"];\n";
  }
  for (auto const& [s, r] : graph.edges) {
    os << "  v" << s << " -> v" << r << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace edis
