#include "edis/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "edis/errors.hpp"

namespace edis {

using nlohmann::json;

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GraphSpec parse_graph_json(std::string const& text) {
  GraphSpec g;
  try {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
      throw ParseError("graph json: need {\"vertices\": n, \"edges\": [...]}");
    }
    g.vertices = j.at("vertices").get<int>();
    if (g.vertices < 0) {
      throw ParseError("graph json: negative vertex count");
    }
    for (auto const& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw ParseError("graph json: each edge must be [source, range]");
      }
      int s = e[0].get<int>(), r = e[1].get<int>();
      if (s < 0 || s >= g.vertices || r < 0 || r >= g.vertices) {
        throw ParseError("graph json: edge endpoint out of range");
      }
      g.edges.emplace_back(s, r);
    }
  } catch (json::exception const& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  return g;
}

std::string graph_to_json(GraphSpec const& graph) {
  json j;
  j["vertices"] = graph.vertices;
  j["edges"]    = json::array();
  for (auto const& [s, r] : graph.edges) {
    j["edges"].push_back({s, r});
  }
  return j.dump();
}

StrongSemilatticeSpec parse_ssg_json(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("ssg json: ") + e.what());
  }
  StrongSemilatticeSpec spec;
  try {
    auto table       = j.at("semilattice").get<std::vector<std::vector<int>>>();
    spec.semilattice = semigroup_from_table(table);
    for (auto const& g : j.at("groups")) {
      spec.groups.push_back(
          semigroup_from_table(g.get<std::vector<std::vector<int>>>()));
    }
    int m = spec.semilattice.order();
    spec.maps.assign(m, std::vector<std::vector<int>>(m));
    for (auto const& [key, val] : j.at("maps").items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) {
        throw ParseError("ssg json: map keys look like \"y,z\"");
      }
      int y, z;
      try {
        y = std::stoi(key.substr(0, comma));
        z = std::stoi(key.substr(comma + 1));
      } catch (std::exception const&) {
        throw ParseError("ssg json: bad map key \"" + key + "\"");
      }
      if (y < 0 || y >= m || z < 0 || z >= m) {
        throw ParseError("ssg json: map key out of range");
      }
      spec.maps[y][z] = val.get<std::vector<int>>();
    }
  } catch (json::exception const& e) {
    throw ParseError(std::string("ssg json: ") + e.what());
  }
  return spec;
}

FiniteInverseSemigroup cyclic_group(int n) {
  if (n < 1) {
    throw ParseError("cyclic: order must be >= 1");
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a * n + b] = (a + b) % n;
    }
  }
  return semigroup_from_flat_table(n, std::move(table));
}

FiniteInverseSemigroup build_named(std::string const& spec) {
  std::string name = spec;
  std::string args;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    args = spec.substr(colon + 1);
  }
  auto ints = [&]() {
    std::vector<int>  out;
    std::stringstream ss(args);
    std::string       tok;
    while (std::getline(ss, tok, ',')) {
      try {
        out.push_back(std::stoi(tok));
      } catch (std::exception const&) {
        throw ParseError("builder: bad integer argument \"" + tok + "\"");
      }
    }
    return out;
  };
  if (name == "monogenic") {
    auto a = ints();
    if (a.size() != 2) {
      throw ParseError("builder: monogenic:n,k");
    }
    return monogenic(a[0], a[1]).semigroup;
  }
  if (name == "symmetric") {
    auto a = ints();
    if (a.size() != 1) {
      throw ParseError("builder: symmetric:n");
    }
    return symmetric_inverse_monoid(a[0]).semigroup;
  }
  if (name == "dual_symmetric") {
    auto a = ints();
    if (a.size() != 1) {
      throw ParseError("builder: dual_symmetric:n");
    }
    return dual_symmetric_inverse_monoid(a[0]).semigroup;
  }
  if (name == "clifford") {
    auto a = ints();
    if (a.size() != 1) {
      throw ParseError("builder: clifford:kappa");
    }
    return clifford_extremal(a[0]);
  }
  if (name == "cyclic") {
    auto a = ints();
    if (a.size() != 1) {
      throw ParseError("builder: cyclic:n");
    }
    return cyclic_group(a[0]);
  }
  if (name == "minimal11") {
    return minimal_example_11().s;
  }
  if (name == "ssg") {
    if (args.empty()) {
      throw ParseError("builder: ssg:path.json");
    }
    return strong_semilattice_of_groups(parse_ssg_json(read_file(args)))
        .semigroup;
  }
  throw ParseError("builder: unknown name \"" + name + "\"");
}

}  // namespace edis
