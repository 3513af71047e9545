// bsshift: command-line front end.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed or a
// construction did not validate, 2 usage / parse / precondition error,
// 3 a resource budget was exhausted.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bsshift/coloring.hpp"
#include "bsshift/errors.hpp"
#include "bsshift/frozen.hpp"
#include "bsshift/io.hpp"
#include "bsshift/periodicity.hpp"

using namespace bsshift;

namespace {

  constexpr int kOk       = 0;
  constexpr int kFailed   = 1;
  constexpr int kUsage    = 2;
  constexpr int kResource = 3;

  struct Config {
    std::int64_t  N            = 2;
    std::size_t   max_vertices = kDefaultMaxVertices;
    std::uint64_t max_nodes    = CountOptions{}.max_nodes;
    std::size_t   max_states   = CountOptions{}.max_states;
    unsigned      threads      = 1;
    std::uint64_t seed         = 1;
    std::string   format       = "text";

    CountOptions count_options() const {
      return CountOptions{max_nodes, max_states, threads};
    }
  };

  std::string read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParameterError("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  // "rectangle", "ball" or "sheet" with size / sheet parameters.
  struct WindowArgs {
    std::string               kind = "rectangle";
    std::int64_t              size = 1;
    std::vector<std::int64_t> branches;
    std::int64_t              down  = 0;
    std::int64_t              up    = 0;
    std::int64_t              width = 0;

    void add_to(CLI::App* cmd) {
      cmd->add_option("--kind", kind, "rectangle | ball | sheet")
          ->check(CLI::IsMember({"rectangle", "ball", "sheet"}));
      cmd->add_option("-m,--size", size, "rectangle height or ball radius");
      cmd->add_option("--branches", branches, "sheet branch symbols");
      cmd->add_option("--down", down, "sheet rows below the identity");
      cmd->add_option("--up", up, "sheet rows above the identity");
      cmd->add_option("--width", width, "sheet half-width");
    }

    Window build(GroupParams const& P, std::size_t max_vertices) const {
      if (kind == "rectangle") {
        return rectangle(P, size, max_vertices);
      }
      if (kind == "ball") {
        return ball(P, size, max_vertices);
      }
      return sheet_window(P, branches, down, up, width, max_vertices);
    }
  };

  // "word:symbol,word:symbol,..."
  std::vector<std::pair<Element, Symbol>> parse_cells(std::string const& spec,
                                                      GroupParams const& P) {
    std::vector<std::pair<Element, Symbol>> cells;
    std::stringstream                       in(spec);
    std::string                             item;
    while (std::getline(in, item, ',')) {
      auto const colon = item.rfind(':');
      if (colon == std::string::npos) {
        throw ParseError("cell must be word:symbol, got \"" + item + "\"", 0);
      }
      int const sym = std::stoi(item.substr(colon + 1));
      if (sym < 0) {
        throw ParseError("negative symbol in \"" + item + "\"", colon + 1);
      }
      cells.emplace_back(parse_word(item.substr(0, colon), P), static_cast<Symbol>(sym));
    }
    return cells;
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int cmd_eval(Config const& cfg, std::string const& word) {
    GroupParams const P(cfg.N);
    Element const     g = parse_word(word, P);
    std::cout << emit_word(g) << ' ' << to_string(g) << '\n';
    return kOk;
  }

  int cmd_window(Config const& cfg, WindowArgs const& args) {
    GroupParams const P(cfg.N);
    Window const      w     = args.build(P, cfg.max_vertices);
    EdgeList const    edges = induced_edges(w);
    if (cfg.format == "json") {
      std::cout << to_json(w).dump() << '\n';
    } else if (cfg.format == "dot") {
      write_dot(std::cout, w, edges);
    } else {
      std::cout << w.kind().describe() << ": " << w.size() << " vertices, " << edges.size()
                << " edges, " << boundary_edge_count(w) << " boundary edges\n";
    }
    return kOk;
  }

  int cmd_count(Config const& cfg, std::size_t n, std::int64_t m, std::string const& method,
                bool sample) {
    GroupParams const P(cfg.N);
    auto const        w = std::make_shared<Window const>(rectangle(P, m, cfg.max_vertices));
    NNSFT const       X = gcs(n);
    CountResult const r = method == "backtracking"
                              ? count_colorings_backtracking(w, X, cfg.count_options())
                              : count_colorings_frontier(*w, X, cfg.count_options());
    std::cout << r.count;
    if (r.count > 0) {
      std::cout << ' ' << format_double(log_integer(r.count) / static_cast<double>(w->size()));
    }
    std::cout << '\n';
    if (sample) {
      std::mt19937_64 rng(cfg.seed);
      auto            p = sample_coloring(Pattern(w, n), X, rng);
      std::cout << "seed " << cfg.seed << '\n';
      std::cout << (p ? to_json(*p).dump() : std::string("none")) << '\n';
    }
    return kOk;
  }

  int cmd_entropy(Config const& cfg, std::size_t n, std::int64_t m_max) {
    auto const rows = entropy_table(GroupParams(cfg.N), n, m_max, cfg.count_options());
    write_entropy_csv(std::cout, rows, true);
    bool resource = false;
    bool failed   = false;
    for (auto const& row : rows) {
      if (!row.count) {
        resource = true;
        std::cerr << "m=" << row.m << ": " << row.error << '\n';
      } else if (!row.bounds_ok()) {
        failed = true;
      }
    }
    return failed ? kFailed : (resource ? kResource : kOk);
  }

  int cmd_gamma(Config const& cfg, std::int64_t m_max) {
    GroupParams const P(cfg.N);
    bool              ok = true;
    std::cout << "m,brute,closed,ratio\n";
    for (auto const& row : isoperimetric_ratio_table(P, m_max)) {
      Integer const brute(boundary_edge_count(rectangle(P, row.m, cfg.max_vertices)));
      ok = ok && brute == row.boundary;
      std::cout << row.m << ',' << brute << ',' << row.boundary << ',' << row.ratio << '\n';
    }
    return ok ? kOk : kFailed;
  }

  Formula formula_named(std::string const& name) {
    for (auto f : {Formula::frozen_mod1, Formula::frozen_mod2, Formula::frozen_mod2_scaled,
                   Formula::frozen_mod0, Formula::parity2}) {
      if (name == to_string(f)) {
        return f;
      }
    }
    throw ParameterError("unknown formula " + name);
  }

  int cmd_frozen(Config const& cfg, std::string const& window_name, std::string const& formula,
                 std::int64_t radius) {
    GroupParams const  P(cfg.N);
    ConfigOracle const x = formula.empty() ? frozen_config(P)
                                           : ConfigOracle::formula(formula_named(formula), P);
    NNSFT const        X = gcs(3);
    bool               ok = true;

    auto const bad = find_improper_edge(x, ball(P, radius, cfg.max_vertices), X);
    ok             = ok && !bad;
    if (cfg.format != "json") {
      std::cout << to_string(std::get<ConfigOracle::FormulaConfig>(x.description()).variant)
                << " proper on ball(" << radius << "): " << (bad ? "false" : "true");
      if (bad) {
        std::cout << " (" << to_string(*bad) << ")";
      }
      std::cout << '\n';
    }

    std::vector<Window> windows;
    if (window_name == "cells" || window_name == "edges") {
      Window const R3 = rectangle(P, 3, cfg.max_vertices);
      if (window_name == "cells") {
        for (auto const& g : R3.vertices()) {
          windows.emplace_back(P, std::vector<Element>{g}, WindowKind::custom("{" + emit_word(g) + "}"));
        }
      } else {
        for (auto const& e : induced_edges(R3)) {
          Element const& u = R3.vertex(e.from);
          Element const& v = R3.vertex(e.to);
          windows.emplace_back(P, std::vector<Element>{u, v},
                               WindowKind::custom("{" + emit_word(u) + ", " + emit_word(v) + "}"));
        }
      }
    } else if (window_name.size() > 1 && window_name[0] == 'R') {
      windows.push_back(rectangle(P, std::stoll(window_name.substr(1)), cfg.max_vertices));
    } else {
      throw ParameterError("--window must be R<m>, cells or edges");
    }

    for (auto const& F : windows) {
      FrozenVerdict const v = verify_frozen_window(x, F, X, cfg.count_options());
      ok                    = ok && v.unique;
      if (cfg.format == "json") {
        std::cout << to_json(v).dump() << '\n';
      } else {
        std::cout << v.window << " unique: " << (v.unique ? "true" : "false")
                  << " fillings: " << v.fillings << '\n';
      }
    }
    return ok ? kOk : kFailed;
  }

  int cmd_periodic(std::string const& path) {
    NNSFT const X = nnsft_from_json(parse_json(read_file(path)));
    auto const  w = find_periodic_monochromatic(X);
    if (!w) {
      std::cout << "none\n";
      return kOk;
    }
    std::cout << to_json(*w, X).dump() << '\n';
    return horizontal_ok(*w, X) && vertical_cycle_ok(*w, X) ? kOk : kFailed;
  }

  int cmd_glue(Config const& cfg, std::size_t n, std::string const& p_spec,
               std::string const& q_spec, std::int64_t radius) {
    GroupParams const P(cfg.N);
    auto const        w = std::make_shared<Window const>(ball(P, radius, cfg.max_vertices));
    NNSFT const       X = gcs(n);
    auto place = [&](std::string const& spec) {
      Pattern p(w, n);
      for (auto const& [g, s] : parse_cells(spec, P)) {
        if (!w->contains(g)) {
          throw PreconditionError(emit_word(g) + " is outside ball(" + std::to_string(radius) + ")");
        }
        p.assign(g, s);
      }
      return p;
    };
    Pattern const out = glue(place(p_spec), place(q_spec), X, w);
    std::cout << to_json(out).dump() << '\n';
    return locally_admissible(out, X) ? kOk : kFailed;
  }

  int cmd_extend(std::size_t n, std::string const& path) {
    Pattern const p   = pattern_from_json(parse_json(read_file(path)));
    NNSFT const   X   = gcs(n);
    Pattern const out = extend_rectangle(p, X);
    std::cout << to_json(out).dump() << '\n';
    return locally_admissible(out, X) ? kOk : kFailed;
  }

  int cmd_witness(Config const& cfg, std::int64_t m, bool printed_rule, std::uint64_t limit) {
    GroupParams const   P(cfg.N);
    WitnessFamily const family
        = cfg.N % 2 == 1 ? witness_family_odd(P, m)
                         : witness_family_even(P, m,
                                               printed_rule ? OddRowRule::even_two_odd_one
                                                            : OddRowRule::even_one_odd_two);
    Window const& w = family.base().window();
    std::cout << "window: " << w.kind().describe() << " (" << w.size() << " cells)\n";
    std::cout << "free cells: " << family.free_cells().size() << '\n';
    std::cout << "family size: " << family.size() << '\n';
    std::uint64_t const total = family.free_cells().size() < 64
                                    ? std::uint64_t(1) << family.free_cells().size()
                                    : std::numeric_limits<std::uint64_t>::max();
    std::uint64_t const checked = std::min(total, limit);
    NNSFT const         X       = gcs(3);
    for (std::uint64_t t = 0; t < checked; ++t) {
      if (!locally_admissible(family.member(t), X)) {
        std::cout << "member " << t << " not admissible\n";
        return kFailed;
      }
    }
    std::cout << "verified members: " << checked << (checked == total ? " (all)" : "") << '\n';
    return kOk;
  }

  int cmd_export(Config const& cfg, WindowArgs const& args, std::string const& formula) {
    GroupParams const P(cfg.N);
    auto const        w = std::make_shared<Window const>(args.build(P, cfg.max_vertices));
    if (!formula.empty()) {
      Pattern const p = restrict(ConfigOracle::formula(formula_named(formula), P), w);
      std::cout << to_json(p).dump() << '\n';
      return kOk;
    }
    if (cfg.format == "dot") {
      write_dot(std::cout, *w, induced_edges(*w));
    } else {
      std::cout << to_json(*w).dump() << '\n';
    }
    return kOk;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation on Baumslag-Solitar groups BS(1,N) and their colouring shifts"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("-N", cfg.N, "group parameter N >= 2");
  app.add_option("--max-vertices", cfg.max_vertices, "window size budget");
  app.add_option("--max-nodes", cfg.max_nodes, "backtracking node budget");
  app.add_option("--max-states", cfg.max_states, "frontier DP state budget");
  app.add_option("--threads", cfg.threads, "threads for counting")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomised output");
  app.add_option("--format", cfg.format, "text | json | dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  // -N is accepted after the subcommand too.
  app.fallthrough();

  std::string word;
  auto*       eval = app.add_subcommand("eval", "normal form of a word");
  eval->add_option("word", word, "letters a A b B, optional ^exponent")->required();

  WindowArgs window_args;
  auto*      window = app.add_subcommand("window", "window statistics, JSON or DOT");
  window_args.add_to(window);

  std::size_t  n = 3;
  std::int64_t m = 1;
  std::string  method = "dp";
  bool         sample = false;
  auto*        count  = app.add_subcommand("count", "proper colourings of a rectangle");
  count->add_option("-n", n, "number of colours")->required();
  count->add_option("-m", m, "rectangle height")->required();
  count->add_option("--method", method, "dp | backtracking")
      ->check(CLI::IsMember({"dp", "backtracking"}));
  count->add_flag("--sample", sample, "also print one random colouring (uses --seed)");

  std::int64_t m_max   = 4;
  auto*        entropy = app.add_subcommand("entropy", "entropy table as CSV");
  entropy->add_option("-n", n, "number of colours")->required();
  entropy->add_option("-m,--m-max", m_max, "largest rectangle height");

  auto* gamma = app.add_subcommand("gamma", "rectangle boundary sizes and ratios");
  gamma->add_option("-m,--m-max", m_max, "largest rectangle height");

  std::string  frozen_window = "R2";
  std::string  formula;
  std::int64_t radius = 8;
  auto*        frozen = app.add_subcommand("frozen", "frozen colouring checks");
  frozen->add_option("--window", frozen_window, "R<m>, cells (of R3) or edges (of R3)");
  frozen->add_option("--formula", formula, "formula variant (default from N mod 3)");
  frozen->add_option("--ball", radius, "ball radius for the properness check");

  std::string sft_path;
  auto*       periodic = app.add_subcommand("periodic", "strongly periodic monochromatic levels");
  periodic->add_option("--sft", sft_path, "NNSFT JSON file")->required();

  std::string p_spec;
  std::string q_spec;
  std::int64_t glue_radius = 4;
  auto*       glue_cmd    = app.add_subcommand("glue", "glue two patterns and complete");
  glue_cmd->add_option("-n", n, "number of colours")->required();
  glue_cmd->add_option("--p", p_spec, "cells word:symbol,...")->required();
  glue_cmd->add_option("--q", q_spec, "cells word:symbol,...")->required();
  glue_cmd->add_option("--radius", glue_radius, "ball radius of the target window");

  std::string pattern_path;
  auto*       extend = app.add_subcommand("extend", "extend a rectangle colouring one level");
  extend->add_option("-n", n, "number of colours")->required();
  extend->add_option("--pattern", pattern_path, "pattern JSON file")->required();

  bool          printed_rule = false;
  std::uint64_t limit        = 1 << 16;
  auto*         witness      = app.add_subcommand("witness", "positive-entropy witness family");
  witness->add_option("-m", m, "rectangle parameter")->required();
  witness->add_flag("--printed-rule", printed_rule,
                    "even N: even offsets 2, odd offsets 1 on odd rows");
  witness->add_option("--limit", limit, "largest number of members to verify");

  WindowArgs export_args;
  std::string export_formula;
  auto*       export_cmd = app.add_subcommand("export", "write a window or a formula pattern");
  export_args.add_to(export_cmd);
  export_cmd->add_option("--formula", export_formula, "restrict this formula to the window");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      return cmd_eval(cfg, word);
    }
    if (*window) {
      return cmd_window(cfg, window_args);
    }
    if (*count) {
      return cmd_count(cfg, n, m, method, sample);
    }
    if (*entropy) {
      return cmd_entropy(cfg, n, m_max);
    }
    if (*gamma) {
      return cmd_gamma(cfg, m_max);
    }
    if (*frozen) {
      return cmd_frozen(cfg, frozen_window, formula, radius);
    }
    if (*periodic) {
      return cmd_periodic(sft_path);
    }
    if (*glue_cmd) {
      return cmd_glue(cfg, n, p_spec, q_spec, glue_radius);
    }
    if (*extend) {
      return cmd_extend(n, pattern_path);
    }
    if (*witness) {
      return cmd_witness(cfg, m, printed_rule, limit);
    }
    if (*export_cmd) {
      return cmd_export(cfg, export_args, export_formula);
    }
  } catch (ResourceError const& e) {
    std::cerr << "resource: " << e.what() << '\n';
    return kResource;
  } catch (OverflowError const& e) {
    std::cerr << "overflow: " << e.what() << '\n';
    return kResource;
  } catch (ConstructionError const& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return kFailed;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: bad number: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
