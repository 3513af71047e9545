#include "bsshift/io.hpp"

#include <iomanip>
#include <regex>
#include <sstream>

#include "bsshift/errors.hpp"

namespace bsshift {

  namespace {

    json vertex_json(Element const& g) {
      return json::array({g.j, g.k.str(), g.i});
    }

    Integer integer_from(json const& j) {
      if (j.is_number_integer()) {
        return Integer(j.get<std::int64_t>());
      }
      std::string const s = j.get<std::string>();
      static std::regex const decimal("-?[0-9]+");
      if (!std::regex_match(s, decimal)) {
        throw ParseError("not a decimal integer: \"" + s + "\"", 0);
      }
      return Integer(s);
    }

    template <typename F>
    auto guarded(char const* what, F&& f) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw ParseError(std::string(what) + ": " + e.what(), 0);
      }
    }

    bool same_vertices(Window const& w, std::vector<Element> const& vertices) {
      return w.vertices() == vertices;
    }

  }  // namespace

  json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
  }

  json to_json(Window const& w) {
    json vertices = json::array();
    for (auto const& g : w.vertices()) {
      vertices.push_back(vertex_json(g));
    }
    return json{{"N", w.params().N()}, {"kind", w.kind().describe()}, {"vertices", vertices}};
  }

  json to_json(Pattern const& p) {
    json cells = json::array();
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (p[v]) {
        Element const& g = p.window().vertex(v);
        cells.push_back(json{{"j", g.j}, {"k", g.k.str()}, {"i", g.i}, {"sym", *p[v]}});
      }
    }
    return json{{"N", p.window().params().N()},
                {"alphabet", p.alphabet()},
                {"window", to_json(p.window())},
                {"cells", cells}};
  }

  json to_json(NNSFT const& X) {
    auto pairs = [&](Generator s) {
      json out = json::array();
      for (auto [from, to] : X.pairs(s)) {
        out.push_back(json::array({from, to}));
      }
      return out;
    };
    return json{{"n", X.alphabet()},
                {"allowed_a", pairs(Generator::a)},
                {"allowed_b", pairs(Generator::b)}};
  }

  json to_json(PeriodicWitness const& w, NNSFT const& X) {
    return json{{"levels", levels_string(w.levels)},
                {"horizontal_ok", horizontal_ok(w, X)},
                {"vertical_cycle_ok", vertical_cycle_ok(w, X)}};
  }

  json to_json(FrozenVerdict const& v) {
    json fillings = v.fillings <= Integer(std::numeric_limits<std::int64_t>::max())
                        ? json(v.fillings.convert_to<std::int64_t>())
                        : json(v.fillings.str());
    return json{{"window", v.window}, {"unique", v.unique}, {"fillings", fillings}};
  }

  std::shared_ptr<Window const> window_from_json(json const& j) {
    return guarded("window", [&] {
      GroupParams const    P(j.at("N").get<std::int64_t>());
      std::vector<Element> vertices;
      for (auto const& v : j.at("vertices")) {
        if (!v.is_array() || v.size() != 3) {
          throw ParseError("window vertex must be [j, k, i]", 0);
        }
        std::int64_t const vj = v[0].get<std::int64_t>();
        std::int64_t const vi = v[2].get<std::int64_t>();
        if (vj < 0 || vi < 0) {
          throw ParseError("window vertex needs j, i >= 0", 0);
        }
        vertices.push_back(normalize(vj, integer_from(v[1]), vi, P));
      }
      std::string const kind = j.value("kind", std::string("custom"));
      std::smatch       match;
      static std::regex const shaped("(rectangle|ball)\\(([0-9]+)\\)");
      if (std::regex_match(kind, match, shaped)) {
        std::int64_t const size = std::stoll(match[2]);
        Window             built = match[1] == "rectangle" ? rectangle(P, size) : ball(P, size);
        if (same_vertices(built, vertices)) {
          return std::make_shared<Window const>(std::move(built));
        }
      }
      return std::make_shared<Window const>(P, std::move(vertices), WindowKind::custom(kind));
    });
  }

  Pattern pattern_from_json(json const& j) {
    return guarded("pattern", [&] {
      auto const        w        = window_from_json(j.at("window"));
      std::size_t const alphabet = j.at("alphabet").get<std::size_t>();
      if (j.contains("N") && j.at("N").get<std::int64_t>() != w->params().N()) {
        throw ParseError("pattern N differs from its window's N", 0);
      }
      Pattern p(w, alphabet);
      for (auto const& cell : j.at("cells")) {
        Element const g = normalize(cell.at("j").get<std::int64_t>(), integer_from(cell.at("k")),
                                    cell.at("i").get<std::int64_t>(), w->params());
        auto const    sym = cell.at("sym").get<std::int64_t>();
        if (sym < 0 || static_cast<std::size_t>(sym) >= alphabet) {
          throw ParseError("cell symbol outside the alphabet", 0);
        }
        if (!w->contains(g)) {
          throw ParseError("cell " + emit_word(g) + " is not in the window", 0);
        }
        p.assign(g, static_cast<Symbol>(sym));
      }
      return p;
    });
  }

  NNSFT nnsft_from_json(json const& j) {
    return guarded("sft", [&] {
      std::size_t const n = j.at("n").get<std::size_t>();
      NNSFT             X(n);
      for (auto [key, s] : {std::pair{"allowed_a", Generator::a}, {"allowed_b", Generator::b}}) {
        for (auto const& pair : j.at(key)) {
          if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(std::string(key) + " entries must be [s, t]", 0);
          }
          auto const from = pair[0].get<std::int64_t>();
          auto const to   = pair[1].get<std::int64_t>();
          if (from < 0 || to < 0 || static_cast<std::size_t>(from) >= n
              || static_cast<std::size_t>(to) >= n) {
            throw ParseError(std::string(key) + " symbol outside the alphabet", 0);
          }
          X.allow(s, static_cast<Symbol>(from), static_cast<Symbol>(to));
        }
      }
      return X;
    });
  }

  std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(17) << x;
    return out.str();
  }

  void write_entropy_csv(std::ostream& out, std::vector<EntropyRow> const& rows, bool bounds) {
    out << "m,cells,count,estimate" << (bounds ? ",bounds" : "") << '\n';
    for (auto const& row : rows) {
      out << row.m << ',' << row.cells << ',';
      if (row.count) {
        out << *row.count << ',' << format_double(row.estimate);
      } else {
        out << ',';
      }
      if (bounds) {
        out << ',';
        if (!row.count) {
          out << "unavailable";
        } else if (row.bounds_ok()) {
          out << "ok";
        } else {
          std::string failed;
          if (!row.lower_ok) {
            failed += " lower";
          }
          if (!row.step_ok) {
            failed += " step";
          }
          if (!row.spanning_ok) {
            failed += " spanning";
          }
          out << "FAIL:" << failed;
        }
      }
      out << '\n';
    }
  }

  void write_dot(std::ostream& out, Window const& w, EdgeList const& edges) {
    out << "digraph \"" << w.kind().describe() << "\" {\n";
    for (std::size_t v = 0; v < w.size(); ++v) {
      out << "  v" << v << " [label=\"" << emit_word(w.vertex(v)) << "\"];\n";
    }
    for (auto const& e : edges) {
      out << "  v" << e.from << " -> v" << e.to << " [label=" << to_char(e.label) << "];\n";
    }
    out << "}\n";
  }

}  // namespace bsshift
