#include <algorithm>
#include <set>

#include "bsshift/coloring.hpp"
#include "bsshift/errors.hpp"

namespace bsshift {

  namespace {

    std::optional<Symbol> smallest_legal(Pattern const& p, NNSFT const& X,
                                         std::vector<Arc> const& arcs) {
      for (std::size_t c = 0; c < X.alphabet(); ++c) {
        auto const s  = static_cast<Symbol>(c);
        bool       ok = true;
        for (auto const& arc : arcs) {
          auto const& d = p[arc.other];
          if (d && !(arc.outgoing ? X.allowed(arc.label, s, *d) : X.allowed(arc.label, *d, s))) {
            ok = false;
            break;
          }
        }
        if (ok) {
          return s;
        }
      }
      return std::nullopt;
    }

    void require_admissible(Pattern const& p, NNSFT const& X, std::string const& what) {
      if (p.alphabet() > X.alphabet()) {
        throw PreconditionError(what + ": pattern alphabet exceeds the SFT alphabet");
      }
      if (auto v = find_violation(p, X)) {
        throw PreconditionError(what + ": input is not locally admissible, "
                                + describe_violation(p.window(), *v));
      }
    }

    void require_gcs(NNSFT const& X, std::size_t min_n, std::string const& what) {
      if (!is_gcs(X) || X.alphabet() < min_n) {
        throw PreconditionError(what + " requires the proper colouring SFT with n >= "
                                + std::to_string(min_n));
      }
    }

  }  // namespace

  Pattern extend_rectangle(Pattern const& p, NNSFT const& X) {
    require_gcs(X, 3, "extend_rectangle");
    auto const& kind = p.window().kind();
    if (kind.tag != WindowKind::Tag::rectangle) {
      throw PreconditionError("extend_rectangle needs a pattern on a rectangle");
    }
    if (!p.is_total()) {
      throw PreconditionError("extend_rectangle needs a total pattern");
    }
    require_admissible(p, X, "extend_rectangle");

    auto const&        P = p.window().params();
    std::int64_t const m = kind.size;
    auto const         w = std::make_shared<Window const>(rectangle(P, m + 1));
    Pattern            out(w, X.alphabet());
    for (std::size_t v = 0; v < p.size(); ++v) {
      out.assign(p.window().vertex(v), *p[v]);
    }
    auto const         adj   = adjacency(*w, induced_edges(*w));
    std::int64_t const width = static_cast<std::int64_t>(w->size()) / (m + 1);
    for (std::int64_t i = 0; i <= m; ++i) {
      for (std::int64_t k = 0; k < width; ++k) {
        auto const v = static_cast<std::size_t>(i * width + k);
        if (out[v]) {
          continue;
        }
        auto s = smallest_legal(out, X, adj[v]);
        if (!s) {
          throw ConstructionError("extend_rectangle found no symbol for "
                                  + emit_word(w->vertex(v)));
        }
        out.assign(v, *s);
      }
    }
    return out;
  }

  GreedyOutcome greedy_attempt(Pattern const& p, NNSFT const& X) {
    Window const& w   = p.window();
    auto const    adj = adjacency(w, induced_edges(w));
    GreedyOutcome result{p, std::nullopt, {}};
    Pattern&      out = result.pattern;

    std::vector<bool>        seen(w.size(), false);
    std::vector<std::size_t> layer;
    for (auto v : p.support()) {
      seen[v] = true;
      layer.push_back(v);
    }
    std::size_t next_unseen = 0;
    while (true) {
      std::vector<std::size_t> grown;
      for (auto v : layer) {
        for (auto const& arc : adj[v]) {
          if (!seen[arc.other]) {
            seen[arc.other] = true;
            grown.push_back(arc.other);
          }
        }
      }
      if (grown.empty()) {
        // Start a fresh component from its smallest cell.
        while (next_unseen < w.size() && seen[next_unseen]) {
          ++next_unseen;
        }
        if (next_unseen == w.size()) {
          break;
        }
        seen[next_unseen] = true;
        grown.push_back(next_unseen);
      }
      std::sort(grown.begin(), grown.end());
      for (auto v : grown) {
        auto s = smallest_legal(out, X, adj[v]);
        if (!s) {
          result.stuck = v;
          std::set<Symbol> used;
          for (auto const& arc : adj[v]) {
            if (out[arc.other]) {
              used.insert(*out[arc.other]);
            }
          }
          result.excluded.assign(used.begin(), used.end());
          return result;
        }
        out.assign(v, *s);
      }
      layer = std::move(grown);
    }
    return result;
  }

  Pattern greedy_complete(Pattern const& p, NNSFT const& X) {
    require_gcs(X, 5, "greedy_complete");
    require_admissible(p, X, "greedy_complete");
    auto outcome = greedy_attempt(p, X);
    if (outcome.stuck) {
      throw ConstructionError("greedy completion stuck at "
                              + emit_word(p.window().vertex(*outcome.stuck)));
    }
    return std::move(outcome.pattern);
  }

  Pattern glue(Pattern const& p, Pattern const& q, NNSFT const& X,
               std::shared_ptr<Window const> w) {
    require_gcs(X, 5, "glue");
    require_admissible(p, X, "glue");
    require_admissible(q, X, "glue");
    auto const& P = w->params();

    std::unordered_map<Element, std::size_t, ElementHash> q_cells;
    for (auto v : q.support()) {
      q_cells.emplace(q.window().vertex(v), v);
    }
    for (auto v : p.support()) {
      Element const& g = p.window().vertex(v);
      if (q_cells.contains(g)) {
        throw PreconditionError("glue: supports share the cell " + emit_word(g));
      }
      auto const  near = neighbors(g, P);
      char const* name[] = {"a", "a^-1", "b", "b^-1"};
      for (std::size_t s = 0; s < near.size(); ++s) {
        if (q_cells.contains(near[s])) {
          throw PreconditionError("glue: supports are adjacent along the edge " + emit_word(g)
                                  + " -" + name[s] + "-> " + emit_word(near[s]));
        }
      }
    }

    Pattern joined(w, X.alphabet());
    for (Pattern const* part : {&p, &q}) {
      for (auto v : part->support()) {
        Element const& g = part->window().vertex(v);
        if (!w->contains(g)) {
          throw PreconditionError("glue: window does not contain " + emit_word(g));
        }
        joined.assign(g, *(*part)[v]);
      }
    }
    return greedy_complete(joined, X);
  }

}  // namespace bsshift
