#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edis/analysis.hpp"
#include "edis/arith.hpp"
#include "edis/congruence.hpp"
#include "edis/enumeration.hpp"
#include "edis/errors.hpp"
#include "edis/graph_inverse.hpp"
#include "edis/io.hpp"
#include "edis/qsemigroup.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 ok / theorems verified, 1 input error, 2 violation report
constexpr int EXIT_INPUT_ERROR = 1;
constexpr int EXIT_VIOLATION   = 2;

edis::FiniteInverseSemigroup load_input(std::string const& file,
                                        std::string const& builder) {
  if (!builder.empty()) {
    return edis::build_named(builder);
  }
  if (file.empty()) {
    throw edis::ParseError("no input: give a table file or --builder");
  }
  return edis::parse_table(edis::read_file(file));
}

std::string describe(std::string const& file, std::string const& builder) {
  return builder.empty() ? file : builder;
}

int cmd_analyze(std::string const& file, std::string const& builder,
                bool as_json, bool with_reconstruction) {
  auto s = load_input(file, builder);
  auto r = edis::analyze(s, describe(file, builder), with_reconstruction);
  std::cout << (as_json ? edis::report_to_json(r) + "\n"
                        : edis::report_to_text(r));
  if (r.reconstruction_verified && !*r.reconstruction_verified) {
    return EXIT_VIOLATION;
  }
  return 0;
}

int cmd_census(int max_order, bool stretch6, int jobs, bool as_json) {
  int top = stretch6 ? std::max(max_order, 6) : max_order;
  std::vector<edis::CensusRow> rows;
  for (int n = 0; n <= top; ++n) {
    rows.push_back(edis::classify_order(n, jobs));
  }
  if (as_json) {
    json j = json::array();
    for (auto const& r : rows) {
      j.push_back({{"order", r.order},
                   {"inverse_semigroups", r.total},
                   {"e_unitary_non_semilattice", r.e_unitary_non_semilattice},
                   {"e_disjunctive", r.e_disjunctive},
                   {"e_disjunctive_monoids", r.e_disjunctive_monoids}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << " n | inverse semigroups | E-unitary (non-semilattice) |"
                 " E-disjunctive | E-disjunctive monoids\n";
    for (auto const& r : rows) {
      std::cout << std::setw(2) << r.order << " | " << std::setw(18) << r.total
                << " | " << std::setw(27) << r.e_unitary_non_semilattice
                << " | " << std::setw(13) << r.e_disjunctive << " | "
                << std::setw(21) << r.e_disjunctive_monoids << "\n";
    }
  }
  return 0;
}

int cmd_monogenic_census(std::int64_t max_size, bool as_json) {
  json series = json::array();
  for (std::int64_t m = 10; m <= max_size; m *= 10) {
    auto c = edis::monogenic_census(m);
    series.push_back({{"max_size", c.max_size},
                      {"total", c.total},
                      {"e_disjunctive", c.e_disjunctive},
                      {"proportion", c.proportion}});
  }
  if (max_size >= 2
      && (series.empty()
          || series.back()["max_size"].get<std::int64_t>() != max_size)) {
    auto c = edis::monogenic_census(max_size);
    series.push_back({{"max_size", c.max_size},
                      {"total", c.total},
                      {"e_disjunctive", c.e_disjunctive},
                      {"proportion", c.proportion}});
  }
  if (as_json) {
    std::cout << series.dump(2) << "\n";
  } else {
    std::cout << "max size | total | E-disjunctive | proportion\n";
    for (auto const& r : series) {
      std::cout << r["max_size"].get<std::int64_t>() << " | "
                << r["total"].get<std::int64_t>() << " | "
                << r["e_disjunctive"].get<std::int64_t>() << " | "
                << r["proportion"].get<double>() << "\n";
    }
  }
  return 0;
}

int cmd_reconstruct(std::string const& file, std::string const& builder,
                    bool as_json) {
  auto s     = load_input(file, builder);
  auto start = std::chrono::steady_clock::now();
  edis::ReconstructResult r;
  bool violated = false;
  std::string violation;
  try {
    r = edis::reconstruct(s);
  } catch (edis::Error const& e) {
    violated  = true;
    violation = e.what();
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  json j;
  j["order"]          = s.order();
  j["quotient_order"] = r.quotient_order;
  j["X_size"]         = r.x_size;
  j["iso_verified"]   = !violated && r.verified;
  j["elapsed_ms"]     = elapsed;
  if (violated) {
    j["violation"] = violation;
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order " << s.order() << ", quotient order "
              << r.quotient_order << ", |X| = " << r.x_size
              << ", isomorphism verified: "
              << (j["iso_verified"].get<bool>() ? "yes" : "no") << " ("
              << elapsed << " ms)\n";
    if (violated) {
      std::cout << "violation: " << violation << "\n";
    }
  }
  return j["iso_verified"].get<bool>() ? 0 : EXIT_VIOLATION;
}

int cmd_gis(std::string const& file, std::vector<int> const& wang_h,
            std::vector<int> const& wang_w, bool with_wang, bool as_dot,
            bool as_json) {
  edis::GraphSpec graph = edis::parse_graph_json(edis::read_file(file));
  if (as_dot) {
    std::cout << edis::gis_to_dot(graph);
    return 0;
  }
  json j;
  j["vertices"]         = graph.vertices;
  j["edges"]            = graph.edges.size();
  j["is_e_disjunctive"] = edis::gis_is_E_disjunctive(graph);
  bool cyclic           = graph.find_cycle().has_value();
  j["acyclic"]          = !cyclic;
  if (!cyclic) {
    edis::GisResult g = edis::gis(graph);
    j["order"]        = g.semigroup.order();
    if (with_wang) {
      edis::WangPair pair{wang_h, wang_w};
      edis::Partition rho = edis::wang_congruence(g, pair);
      j["wang"] = {{"classes", rho.num_classes()},
                   {"idempotent_pure",
                    edis::is_idempotent_pure(g.semigroup, rho)},
                   {"partition", rho.to_string()}};
    }
  } else if (with_wang) {
    throw edis::ParseError("gis: --wang needs an acyclic graph");
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "vertices: " << graph.vertices
              << ", edges: " << graph.edges.size() << "\n"
              << "E-disjunctive (combinatorial): "
              << (j["is_e_disjunctive"].get<bool>() ? "yes" : "no") << "\n";
    if (!cyclic) {
      std::cout << "S(Gamma) order: " << j["order"].get<int>() << "\n";
      if (with_wang) {
        std::cout << "Wang congruence classes: "
                  << j["wang"]["classes"].get<int>() << ", idempotent-pure: "
                  << (j["wang"]["idempotent_pure"].get<bool>() ? "yes" : "no")
                  << "\n";
      }
    } else {
      std::cout << "graph is cyclic; S(Gamma) is infinite\n";
    }
  }
  return 0;
}

int cmd_arith_mul(std::vector<std::int64_t> const& p, bool as_json) {
  auto x = edis::ArithElement::make(p[0], p[1], p[2], p[3]);
  auto y = edis::ArithElement::make(p[4], p[5], p[6], p[7]);
  auto z = edis::arith_mul(x, y);
  if (as_json) {
    json j;
    j["zero"] = z.zero;
    if (!z.zero) {
      j["a"] = z.a;
      j["b"] = z.b;
      j["c"] = z.c;
      j["d"] = z.d;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << x.to_string() << " * " << y.to_string() << " = "
              << z.to_string() << "\n";
  }
  return 0;
}

int cmd_arith_verify(std::int64_t max_param, std::int64_t truncate, int jobs,
                     bool as_json) {
  auto rep = edis::arith_verify(max_param, truncate, jobs);
  json j   = {{"max_param", rep.max_param},
              {"truncate", rep.truncate},
              {"pairs", rep.pairs},
              {"zero_products", rep.zero_products},
              {"mismatches", rep.mismatches},
              {"pass", rep.mismatches == 0}};
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "checked " << rep.pairs << " pairs (zero products: "
              << rep.zero_products << "), mismatches: " << rep.mismatches
              << " -> " << (rep.mismatches == 0 ? "pass" : "FAIL") << "\n";
  }
  return rep.mismatches == 0 ? 0 : EXIT_VIOLATION;
}

int cmd_arith_separate(std::int64_t bound, std::int64_t radius, bool as_json) {
  auto rep = edis::arith_readout_separation(bound, radius);
  if (as_json) {
    json j = {{"bound", rep.bound},
              {"pairs_checked", rep.pairs_checked},
              {"max_witness_e", rep.max_witness_e}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "separated " << rep.pairs_checked
              << " idempotent pairs; largest witness e = " << rep.max_witness_e
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edis: finite inverse semigroup computations --"
               " E-disjunctivity, congruences, constructions, census,"
               " Q-theorem reconstruction"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");
  std::uint64_t seed = 0;
  app.add_option("--seed", seed,
                 "seed for sampling subcommands (reserved; current"
                 " subcommands are deterministic)");
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);

  std::string file, builder;
  bool        with_reconstruction = false;
  auto* analyze = app.add_subcommand("analyze", "structural report");
  analyze->add_option("file", file, "multiplication table file");
  analyze->add_option("--builder", builder, "builder spec name:args");
  analyze->add_flag("--reconstruct", with_reconstruction,
                    "also run the Q-theorem reconstruction");

  int  max_order = 5;
  bool stretch6  = false;
  auto* census = app.add_subcommand("census",
                                    "inverse semigroup counts by order");
  census->add_option("--max-order", max_order, "largest order (<= 6)")
      ->check(CLI::Range(0, 6));
  census->add_flag("--stretch-6", stretch6, "include the order 6 row");

  std::int64_t max_size = 1000;
  auto* mono = app.add_subcommand("monogenic-census",
                                  "monogenic counts and the proportion trend");
  mono->add_option("--max-size", max_size, "largest size")
      ->check(CLI::PositiveNumber);

  std::string rfile, rbuilder;
  auto* rec = app.add_subcommand("reconstruct",
                                 "verify S = Q(T, E(S), X) end to end");
  rec->add_option("table", rfile, "multiplication table file");
  rec->add_option("--builder", rbuilder, "builder spec name:args");

  std::string      gfile;
  std::vector<int> wang_h, wang_w;
  bool             as_dot = false;
  auto* gis = app.add_subcommand("gis", "graph inverse semigroup analysis");
  gis->add_option("graph", gfile, "graph JSON file")->required();
  auto* wh = gis->add_option("--wang-h", wang_h,
                             "Wang pair H vertices (may be empty)");
  auto* ww = gis->add_option("--wang-w", wang_w,
                             "Wang pair W vertices (may be empty)");
  gis->add_flag("--dot", as_dot, "emit annotated DOT instead of a report");

  auto* arith = app.add_subcommand("arith", "arithmetic inverse monoid");
  arith->require_subcommand(1);
  std::vector<std::int64_t> mul_params;
  auto* amul = arith->add_subcommand("mul", "normal-form product");
  amul->add_option("params", mul_params, "a b c d e f g h")
      ->expected(8)
      ->required();
  std::int64_t max_param = 8, truncate = 10000;
  auto* averify = arith->add_subcommand(
      "verify", "closed form vs truncated composition");
  averify->add_option("--max-param", max_param, "largest parameter");
  averify->add_option("--truncate", truncate, "domain truncation");
  std::int64_t bound = 6, radius = 8000;
  auto* asep = arith->add_subcommand("separate",
                                     "readout separation of idempotents");
  asep->add_option("--bound", bound, "largest idempotent parameter");
  asep->add_option("--radius", radius, "witness search radius");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) {
      nested->fallthrough();
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      return cmd_analyze(file, builder, as_json, with_reconstruction);
    }
    if (app.got_subcommand(census)) {
      return cmd_census(max_order, stretch6, jobs, as_json);
    }
    if (app.got_subcommand(mono)) {
      return cmd_monogenic_census(max_size, as_json);
    }
    if (app.got_subcommand(rec)) {
      return cmd_reconstruct(rfile, rbuilder, as_json);
    }
    if (app.got_subcommand(gis)) {
      bool with_wang = wh->count() > 0 || ww->count() > 0;
      return cmd_gis(gfile, wang_h, wang_w, with_wang, as_dot, as_json);
    }
    if (app.got_subcommand(arith)) {
      if (arith->got_subcommand(amul)) {
        return cmd_arith_mul(mul_params, as_json);
      }
      if (arith->got_subcommand(averify)) {
        return cmd_arith_verify(max_param, truncate, jobs, as_json);
      }
      if (arith->got_subcommand(asep)) {
        return cmd_arith_separate(bound, radius, as_json);
      }
    }
  } catch (edis::ParseError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return EXIT_INPUT_ERROR;
  } catch (edis::Error const& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return EXIT_VIOLATION;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return EXIT_VIOLATION;
  }
  return 0;
}
