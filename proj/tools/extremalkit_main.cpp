// Command-line front end: weighted Turan numbers, multipartite hosts,
// brute-force oracles, max rectilinear crossing numbers, drawings, annealing,
// drawing verification, and the selftest suite.
//
// Exit codes: 0 success, 1 usage/malformed input, 2 infeasible or over a
// hard cap, 3 internal assertion failure.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extremalkit/anneal.hpp"
#include "extremalkit/drawings.hpp"
#include "extremalkit/errors.hpp"
#include "extremalkit/geometry.hpp"
#include "extremalkit/graph.hpp"
#include "extremalkit/io.hpp"
#include "extremalkit/multipartite.hpp"
#include "extremalkit/oracle.hpp"
#include "extremalkit/rat.hpp"
#include "extremalkit/selftest.hpp"
#include "extremalkit/svg.hpp"
#include "extremalkit/weighting.hpp"

using namespace exk;
using nlohmann::json;

namespace {

int g_exit = 0;  // set by subcommands that report rather than throw

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Rat> parse_rats(const std::string& text) {
  std::vector<Rat> out;
  for (const auto& tok : split_commas(text)) out.push_back(rat_from_string(tok));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split_commas(text)) {
    std::size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("not an integer: '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

std::string partition_text(const IndexPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += out.empty() ? "{" : " {";
    for (std::size_t i = 0; i < block.size(); ++i)
      out += (i ? "," : "") + std::to_string(block[i]);
    out += "}";
  }
  return out.empty() ? "{}" : out;
}

std::string edges_text(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out.empty() ? "(none)" : out;
}

void emit(const std::string& format, const json& machine, const std::vector<std::string>& lines) {
  if (format == "json") {
    std::cout << machine.dump(2) << '\n';
  } else {
    for (const auto& line : lines) std::cout << line << '\n';
  }
}

json drawing_report_json(const Drawing& d, std::int64_t crossings, std::size_t missed) {
  return json{{"crossings", crossings},
              {"missed", missed},
              {"thrackle_bound", thrackle_bound(d.graph)},
              {"drawing", drawing_to_json(d)}};
}

void write_outputs(const Drawing& d, const std::string& svg_path, const std::string& out_path) {
  if (!svg_path.empty()) save_text_file(svg_path, export_svg(d));
  if (!out_path.empty()) save_text_file(out_path, drawing_to_json(d).dump(2) + "\n");
}

void print_selftest_line(const selftest::CriterionResult& r) {
  std::printf("[%s] criterion %d: %s (%.1fs) -- %s\n", r.pass ? "PASS" : "FAIL", r.id,
              r.name.c_str(), r.seconds, r.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal graph quantities: weighted Turan numbers and "
               "maximum rectilinear crossing numbers of trees"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  // --- ex-min / ex-prod -----------------------------------------------------
  std::string weights_arg;
  int clique = 3;

  auto add_weighted = [&](CLI::App* sub) {
    sub->add_option("--weights", weights_arg, "comma-separated nonnegative rationals (p or p/q)")
        ->required();
    sub->add_option("--clique", clique, "forbidden clique order (>= 3)")->required();
    sub->fallthrough();
  };

  CLI::App* exmin = app.add_subcommand("ex-min", "ex(n, w_min, K_ell) via the closed form");
  add_weighted(exmin);
  exmin->callback([&] {
    VertexWeighting w(parse_rats(weights_arg));
    Rat value = ex_min(w, clique);
    emit(format, json{{"value", rat_to_json(value)}}, {rat_to_string(value)});
  });

  CLI::App* exprod = app.add_subcommand("ex-prod", "ex(n, w_prod, K_ell) via partition search");
  add_weighted(exprod);
  exprod->callback([&] {
    VertexWeighting w(parse_rats(weights_arg));
    ExProdResult r = ex_prod(w, clique);
    emit(format, json{{"value", rat_to_json(r.value)}, {"partition", partition_to_json(r.partition)}},
         {rat_to_string(r.value), "partition: " + partition_text(r.partition)});
  });

  // --- ex-multipartite --------------------------------------------------------
  std::string parts_arg;
  CLI::App* exmulti =
      app.add_subcommand("ex-multipartite", "ex(K_{k_1..k_r}, K_ell) via the merge reduction");
  exmulti->add_option("--parts", parts_arg, "comma-separated part sizes")->required();
  exmulti->add_option("--clique", clique, "forbidden clique order (>= 3)")->required();
  exmulti->fallthrough();
  exmulti->callback([&] {
    auto parts = parse_ints(parts_arg);
    HostSpec spec(std::vector<long long>(parts.begin(), parts.end()), clique);
    MultipartiteResult r = ex_multipartite(spec);
    emit(format,
         json{{"value", r.value.get_str()}, {"partition", partition_to_json(r.partition)}},
         {r.value.get_str(), "partition: " + partition_text(r.partition)});
  });

  // --- oracle (brute-force twins) --------------------------------------------
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference for each formula");
  oracle->require_subcommand(1);
  oracle->fallthrough();

  auto add_oracle_weighted = [&](const char* name, EdgeWeightKind kind, const char* help) {
    CLI::App* sub = oracle->add_subcommand(name, help);
    add_weighted(sub);
    sub->callback([&, kind] {
      VertexWeighting w(parse_rats(weights_arg));
      WeightedOracleResult r = max_weight_clique_free(w.size(), {kind, w}, clique);
      emit(format, json{{"value", rat_to_json(r.value)}, {"witness", graph_to_json(r.witness)}},
           {rat_to_string(r.value), "witness: " + edges_text(r.witness)});
    });
  };
  add_oracle_weighted("ex-min", EdgeWeightKind::Min, "exhaustive max of w_min over K_ell-free graphs");
  add_oracle_weighted("ex-prod", EdgeWeightKind::Product,
                      "exhaustive max of w_prod over K_ell-free graphs");

  CLI::App* omulti =
      oracle->add_subcommand("ex-multipartite", "exhaustive max K_ell-free subgraph of the host");
  omulti->add_option("--parts", parts_arg, "comma-separated part sizes")->required();
  omulti->add_option("--clique", clique, "forbidden clique order (>= 3)")->required();
  omulti->fallthrough();
  omulti->callback([&] {
    auto parts = parse_ints(parts_arg);
    EdgeOracleResult r = max_edges_clique_free_subgraph(build_complete_multipartite(parts), clique);
    emit(format, json{{"value", std::to_string(r.value)}, {"witness", graph_to_json(r.witness)}},
         {std::to_string(r.value), "witness: " + edges_text(r.witness)});
  });

  // --- maxcr ------------------------------------------------------------------
  std::string spider_arg, diam4_arg, tree_path;
  std::uint64_t seed = 0;
  CLI::App* maxcr = app.add_subcommand("maxcr", "maximum rectilinear crossing number of a tree");
  maxcr->add_option("--spider", spider_arg, "spider leg lengths, e.g. 2,2,2");
  maxcr->add_option("--diam4", diam4_arg, "diameter-4 child counts, e.g. 3,2,2,1");
  maxcr->add_option("--tree", tree_path, "tree JSON file (edges or descriptor shorthand)");
  maxcr->add_option("--seed", seed, "anneal seed for the bounds-only fallback");
  maxcr->fallthrough();
  maxcr->callback([&] {
    int given = !spider_arg.empty() + !diam4_arg.empty() + !tree_path.empty();
    if (given != 1)
      throw std::invalid_argument("maxcr needs exactly one of --spider, --diam4, --tree");
    if (!spider_arg.empty()) {
      std::int64_t value = maxcr_spider(SpiderDescriptor(parse_ints(spider_arg)));
      emit(format, json{{"value", value}}, {std::to_string(value)});
      return;
    }
    if (!diam4_arg.empty()) {
      std::int64_t value = maxcr_diam4(Diam4Descriptor(parse_ints(diam4_arg)));
      emit(format, json{{"value", value}}, {std::to_string(value)});
      return;
    }
    Tree t = tree_from_json(load_json_file(tree_path));
    MaxcrReport report = maxcr_tree(t, seed);
    const char* method = report.method == MaxcrReport::Method::Thrackle         ? "thrackle"
                         : report.method == MaxcrReport::Method::SpiderFormula  ? "spider-formula"
                         : report.method == MaxcrReport::Method::Diam4Formula   ? "diam4-formula"
                                                                                : "bounds-only";
    json machine{{"method", method}, {"lower", report.lower}, {"upper", report.upper}};
    std::vector<std::string> lines;
    if (report.exact) {
      machine["exact"] = *report.exact;
      lines = {std::to_string(*report.exact), std::string("method: ") + method};
    } else {
      machine["exact"] = nullptr;
      lines = {"lower = " + std::to_string(report.lower), "upper = " + std::to_string(report.upper),
               std::string("method: ") + method};
    }
    emit(format, machine, lines);
  });

  // --- draw -------------------------------------------------------------------
  std::string svg_path, out_path;
  CLI::App* draw = app.add_subcommand("draw", "constructive optimal diameter-4 drawing");
  draw->add_option("--diam4", diam4_arg, "diameter-4 child counts, e.g. 3,2,2,1")->required();
  draw->add_option("--svg", svg_path, "write an SVG rendering here");
  draw->add_option("--out", out_path, "write the drawing JSON here");
  draw->fallthrough();
  draw->callback([&] {
    Diam4Descriptor desc(parse_ints(diam4_arg));
    Drawing d = draw_diam4(desc);
    std::int64_t crossings = crossing_count(d);
    std::size_t missed = missed_nontrivial_crossings(d).size();
    write_outputs(d, svg_path, out_path);
    emit(format, drawing_report_json(d, crossings, missed),
         {"crossings = " + std::to_string(crossings), "missed = " + std::to_string(missed),
          "thrackle bound = " + std::to_string(thrackle_bound(d.graph))});
  });

  // --- anneal -----------------------------------------------------------------
  AnnealParams params;
  CLI::App* anneal = app.add_subcommand("anneal", "simulated-annealing crossing maximization");
  anneal->add_option("--tree", tree_path, "tree JSON file (edges or descriptor shorthand)")
      ->required();
  anneal->add_option("--seed", params.seed, "RNG seed")->capture_default_str();
  anneal->add_option("--iters", params.iterations, "proposals per restart")->capture_default_str();
  anneal->add_option("--restarts", params.restarts, "independent restarts")->capture_default_str();
  anneal->add_option("--grid", params.grid_half_width, "half-width of the placement grid")
      ->capture_default_str();
  anneal->add_option("--svg", svg_path, "write an SVG rendering here");
  anneal->add_option("--out", out_path, "write the drawing JSON here");
  anneal->fallthrough();
  anneal->callback([&] {
    Tree t = tree_from_json(load_json_file(tree_path));
    AnnealResult r = anneal_max_crossings(t, params);
    write_outputs(r.drawing, svg_path, out_path);
    emit(format,
         drawing_report_json(r.drawing, r.crossings,
                             missed_nontrivial_crossings(r.drawing).size()),
         {"crossings = " + std::to_string(r.crossings),
          "thrackle bound = " + std::to_string(thrackle_bound(t.graph()))});
  });

  // --- verify -----------------------------------------------------------------
  std::string drawing_path;
  CLI::App* verify = app.add_subcommand("verify", "legality and crossing report for a drawing");
  verify->add_option("--drawing", drawing_path, "drawing JSON file")->required();
  verify->fallthrough();
  verify->callback([&] {
    Drawing d = drawing_from_json(load_json_file(drawing_path));
    LegalityReport report = is_legal(d);
    if (!report.legal) {
      json machine{{"legal", false}, {"violations", json::array()}};
      std::vector<std::string> lines{"legal: no"};
      for (const auto& v : report.violations) {
        machine["violations"].push_back(v.describe());
        lines.push_back("violation: " + v.describe());
      }
      emit(format, machine, lines);
      g_exit = 2;
      return;
    }
    std::int64_t crossings = crossing_count(d);
    auto missed = missed_nontrivial_crossings(d);
    json machine{{"legal", true},
                 {"crossings", crossings},
                 {"missed", missed.size()},
                 {"missed_pairs", json::array()},
                 {"thrackle_bound", thrackle_bound(d.graph)}};
    std::vector<std::string> lines{"legal: yes", "crossings = " + std::to_string(crossings),
                                   "missed = " + std::to_string(missed.size()),
                                   "thrackle bound = " + std::to_string(thrackle_bound(d.graph))};
    for (const auto& [e, f] : missed) {
      machine["missed_pairs"].push_back({{e.first, e.second}, {f.first, f.second}});
      lines.push_back("  missed: " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                      " x " + std::to_string(f.first) + "-" + std::to_string(f.second));
    }
    emit(format, machine, lines);
  });

  // --- selftest ---------------------------------------------------------------
  std::string only_arg;
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest_cmd->add_option("--only", only_arg, "comma-separated criterion ids (default: all)");
  selftest_cmd->fallthrough();
  selftest_cmd->callback([&] {
    std::vector<int> only;
    if (!only_arg.empty()) only = parse_ints(only_arg);
    bool all_pass = true;
    if (format == "json") {
      json out = json::array();
      for (const auto& r : selftest::run(only)) {
        all_pass = all_pass && r.pass;
        out.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
      }
      std::cout << out.dump(2) << '\n';
    } else {
      selftest::run(only, [&](const selftest::CriterionResult& r) {
        all_pass = all_pass && r.pass;
        print_selftest_line(r);
      });
    }
    if (!all_pass) g_exit = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GridTooSmallError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IllegalDrawingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what()
              << "\n(run with --help for the input schemas)" << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return g_exit;
}
