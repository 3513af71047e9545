#include "bsshift/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "bsshift/errors.hpp"

namespace bsshift {

  char const* to_string(CountMethod m) {
    return m == CountMethod::backtracking ? "backtracking" : "frontier_dp";
  }

  double log_integer(Integer const& x) {
    if (x <= 0) {
      throw ParameterError("log_integer requires a positive argument");
    }
    std::size_t const top = boost::multiprecision::msb(x);
    if (top < 900) {
      return std::log(x.convert_to<double>());
    }
    std::size_t const shift = top - 60;
    Integer const    head  = x >> shift;
    return std::log(head.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
  }

  ////////////////////////////////////////////////////////////////////////
  // Backtracking
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Backtracker {
     public:
      Backtracker(Window const& w, NNSFT const& X, std::vector<int> colour, std::uint64_t max_nodes)
          : _X(X),
            _adj(adjacency(w, induced_edges(w))),
            _colour(std::move(colour)),
            _stamp(w.size(), 0),
            _max_nodes(max_nodes) {}

      Integer run() {
        std::vector<std::uint32_t> open;
        for (std::uint32_t v = 0; v < _colour.size(); ++v) {
          if (_colour[v] < 0) {
            open.push_back(v);
          }
        }
        return solve(open, open);
      }

      std::uint64_t nodes() const noexcept {
        return _nodes;
      }

     private:
      bool legal(std::uint32_t v, int c) const {
        for (auto const& arc : _adj[v]) {
          int const d = _colour[arc.other];
          if (d < 0) {
            continue;
          }
          bool const ok = arc.outgoing ? _X.allowed(arc.label, c, d) : _X.allowed(arc.label, d, c);
          if (!ok) {
            return false;
          }
        }
        return true;
      }

      // Number of completions of the cells in `open` (all unassigned, sorted).
      // `seed` lists cells whose legal sets may have shrunk.
      Integer solve(std::vector<std::uint32_t> const& open, std::vector<std::uint32_t> seed) {
        if (++_nodes > _max_nodes) {
          throw ResourceError("backtracking exceeded the node budget of "
                              + std::to_string(_max_nodes));
        }
        int const                  n = static_cast<int>(_X.alphabet());
        std::vector<std::uint32_t> forced;
        auto                       undo = [&] {
          for (auto v : forced) {
            _colour[v] = -1;
          }
        };

        while (!seed.empty()) {
          std::uint32_t const v = seed.back();
          seed.pop_back();
          if (_colour[v] >= 0) {
            continue;
          }
          int choices = 0;
          int last    = -1;
          for (int c = 0; c < n && choices < 2; ++c) {
            if (legal(v, c)) {
              ++choices;
              last = c;
            }
          }
          if (choices == 0) {
            undo();
            return 0;
          }
          if (choices == 1) {
            _colour[v] = last;
            forced.push_back(v);
            for (auto const& arc : _adj[v]) {
              if (_colour[arc.other] < 0) {
                seed.push_back(arc.other);
              }
            }
          }
        }

        std::vector<std::uint32_t> rest;
        rest.reserve(open.size());
        for (auto v : open) {
          if (_colour[v] < 0) {
            rest.push_back(v);
          }
        }
        if (rest.empty()) {
          undo();
          return 1;
        }

        auto    parts = components(rest);
        Integer result;
        if (parts.size() > 1) {
          result = 1;
          for (auto const& part : parts) {
            Integer const r = solve(part, {});
            if (r == 0) {
              result = 0;
              break;
            }
            result *= r;
          }
        } else {
          std::uint32_t const        v = rest.front();
          std::vector<std::uint32_t> tail(rest.begin() + 1, rest.end());
          std::vector<std::uint32_t> touched;
          for (auto const& arc : _adj[v]) {
            if (_colour[arc.other] < 0) {
              touched.push_back(arc.other);
            }
          }
          for (int c = 0; c < n; ++c) {
            if (!legal(v, c)) {
              continue;
            }
            _colour[v] = c;
            result += solve(tail, touched);
            _colour[v] = -1;
          }
        }
        undo();
        return result;
      }

      // Connected components of the unassigned cells in `rest`, each sorted,
      // ordered by smallest member.
      std::vector<std::vector<std::uint32_t>> components(std::vector<std::uint32_t> const& rest) {
        ++_generation;
        std::uint32_t const mark_open = 2 * _generation;
        std::uint32_t const mark_done = 2 * _generation + 1;
        for (auto v : rest) {
          _stamp[v] = mark_open;
        }
        std::vector<std::vector<std::uint32_t>> parts;
        for (auto start : rest) {
          if (_stamp[start] != mark_open) {
            continue;
          }
          std::vector<std::uint32_t> part{start};
          _stamp[start] = mark_done;
          for (std::size_t head = 0; head < part.size(); ++head) {
            for (auto const& arc : _adj[part[head]]) {
              if (_stamp[arc.other] == mark_open) {
                _stamp[arc.other] = mark_done;
                part.push_back(arc.other);
              }
            }
          }
          std::sort(part.begin(), part.end());
          parts.push_back(std::move(part));
        }
        return parts;
      }

      NNSFT const&                  _X;
      std::vector<std::vector<Arc>> _adj;
      std::vector<int>              _colour;
      std::vector<std::uint32_t>    _stamp;
      std::uint32_t                 _generation = 0;
      std::uint64_t                 _max_nodes;
      std::uint64_t                 _nodes = 0;
    };

    void check_alphabets(Pattern const& p, NNSFT const& X) {
      if (p.alphabet() > X.alphabet()) {
        throw ParameterError("pattern alphabet exceeds the SFT alphabet");
      }
    }

  }  // namespace

  CountResult count_colorings_backtracking(Pattern const& fixed, NNSFT const& X,
                                           CountOptions const& options) {
    check_alphabets(fixed, X);
    if (find_violation(fixed, X)) {
      return CountResult{0, CountMethod::backtracking, {}};
    }
    return count_completions(fixed, X, options);
  }

  CountResult count_completions(Pattern const& fixed, NNSFT const& X,
                                CountOptions const& options) {
    check_alphabets(fixed, X);
    CountResult      result{0, CountMethod::backtracking, {}};
    std::vector<int> colour(fixed.size(), -1);
    for (std::size_t v = 0; v < fixed.size(); ++v) {
      if (fixed[v]) {
        colour[v] = *fixed[v];
      }
    }
    Backtracker search(fixed.window(), X, std::move(colour), options.max_nodes);
    result.count       = search.run();
    result.stats.nodes = search.nodes();
    return result;
  }

  CountResult count_colorings_backtracking(std::shared_ptr<Window const> w, NNSFT const& X,
                                           CountOptions const& options) {
    return count_colorings_backtracking(Pattern(std::move(w), X.alphabet()), X, options);
  }

  ////////////////////////////////////////////////////////////////////////
  // Frontier DP
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Check {
      int       slot;
      Generator label;
      bool      outgoing;  // new cell -label-> frontier cell
    };

    struct Step {
      std::uint32_t      vertex;
      int                slot = -1;  // -1 when the cell is never needed again
      std::vector<Check> checks;
      std::vector<int>   release;
    };

    struct Plan {
      std::vector<Step> steps;
      std::size_t       width = 0;
    };

    Plan make_plan(Window const& w, std::vector<std::uint32_t> const& order) {
      std::size_t const n = w.size();
      if (order.size() != n) {
        throw PreconditionError("scan order must list every vertex once");
      }
      std::vector<std::size_t> pos(n, n);
      for (std::size_t t = 0; t < n; ++t) {
        if (order[t] >= n || pos[order[t]] != n) {
          throw PreconditionError("scan order must list every vertex once");
        }
        pos[order[t]] = t;
      }
      auto const               adj = adjacency(w, induced_edges(w));
      std::vector<std::size_t> last(n, 0);  // position of the latest neighbour
      for (std::size_t v = 0; v < n; ++v) {
        for (auto const& arc : adj[v]) {
          last[v] = std::max(last[v], pos[arc.other]);
        }
      }

      Plan              plan;
      std::vector<int>  slot_of(n, -1);
      std::vector<bool> busy;
      for (std::size_t t = 0; t < n; ++t) {
        Step step;
        step.vertex = order[t];
        for (auto const& arc : adj[step.vertex]) {
          if (pos[arc.other] < t) {
            step.checks.push_back(Check{slot_of[arc.other], arc.label, arc.outgoing});
            if (last[arc.other] == t
                && std::find(step.release.begin(), step.release.end(), slot_of[arc.other])
                       == step.release.end()) {
              step.release.push_back(slot_of[arc.other]);
            }
          }
        }
        for (int s : step.release) {
          busy[s] = false;
        }
        if (last[step.vertex] > t) {
          auto it   = std::find(busy.begin(), busy.end(), false);
          step.slot = static_cast<int>(it - busy.begin());
          if (it == busy.end()) {
            busy.push_back(true);
          } else {
            *it = true;
          }
          slot_of[step.vertex] = step.slot;
        }
        plan.width = std::max(plan.width, busy.size());
        plan.steps.push_back(std::move(step));
      }
      return plan;
    }

    struct CountOverflow {};

    inline void add_to(unsigned __int128& x, unsigned __int128 y) {
      if (__builtin_add_overflow(x, y, &x)) {
        throw CountOverflow{};
      }
    }

    inline void add_to(Integer& x, Integer const& y) {
      x += y;
    }

    template <typename Count>
    using StateMap = std::unordered_map<std::uint64_t, Count>;

    class FrontierDP {
     public:
      FrontierDP(Plan const& plan, NNSFT const& X, CountOptions const& options)
          : _plan(plan), _X(X), _options(options) {
        _n         = X.alphabet();
        _bits      = std::bit_width(_n);
        _mask      = (std::uint64_t(1) << _bits) - 1;
        _symmetric = X.symbol_symmetric();
        if (plan.width * _bits > 64) {
          throw ResourceError("frontier of " + std::to_string(plan.width) + " cells with "
                              + std::to_string(_n) + " symbols does not fit a 64-bit state");
        }
      }

      template <typename Count>
      Count run(CountStats& stats) {
        StateMap<Count> current{{0, Count(1)}};
        stats.peak_states = 1;
        stats.nodes       = 0;
        for (auto const& step : _plan.steps) {
          StateMap<Count> next;
          unsigned const  threads = std::max(1u, _options.threads);
          if (threads == 1 || current.size() < 4096) {
            for (auto const& [key, count] : current) {
              stats.nodes += expand(step, key, count, next);
            }
          } else {
            std::vector<std::pair<std::uint64_t, Count>> items(current.begin(), current.end());
            std::vector<StateMap<Count>>                 local(threads);
            std::vector<std::uint64_t>                   local_nodes(threads, 0);
            std::vector<std::exception_ptr>              failure(threads);
            std::vector<std::thread>                     pool;
            std::size_t const chunk = (items.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
              pool.emplace_back([&, t] {
                try {
                  std::size_t const end = std::min(items.size(), (t + 1) * chunk);
                  for (std::size_t s = t * chunk; s < end; ++s) {
                    local_nodes[t] += expand(step, items[s].first, items[s].second, local[t]);
                  }
                } catch (...) {
                  failure[t] = std::current_exception();
                }
              });
            }
            for (auto& th : pool) {
              th.join();
            }
            for (auto const& f : failure) {
              if (f) {
                std::rethrow_exception(f);
              }
            }
            for (unsigned t = 0; t < threads; ++t) {
              stats.nodes += local_nodes[t];
              for (auto& [key, count] : local[t]) {
                add_to(next[key], count);
              }
            }
          }
          if (next.size() > _options.max_states) {
            throw ResourceError("frontier DP exceeded the state budget of "
                                + std::to_string(_options.max_states));
          }
          stats.peak_states = std::max(stats.peak_states, next.size());
          current.swap(next);
          if (current.empty()) {
            return Count(0);
          }
        }
        Count total(0);
        for (auto const& [key, count] : current) {
          add_to(total, count);
        }
        return total;
      }

     private:
      std::uint64_t field(std::uint64_t key, int slot) const {
        return (key >> (slot * _bits)) & _mask;
      }

      std::uint64_t canonical(std::uint64_t key) const {
        std::uint64_t relabel[64] = {};
        std::uint64_t fresh       = 0;
        std::uint64_t out         = 0;
        for (std::size_t s = 0; s < _plan.width; ++s) {
          std::uint64_t const v = field(key, static_cast<int>(s));
          if (v == 0) {
            continue;
          }
          if (relabel[v] == 0) {
            relabel[v] = ++fresh;
          }
          out |= relabel[v] << (s * _bits);
        }
        return out;
      }

      template <typename Count>
      std::uint64_t expand(Step const& step, std::uint64_t key, Count const& count,
                           StateMap<Count>& next) const {
        std::uint64_t base = key;
        for (int s : step.release) {
          base &= ~(_mask << (s * _bits));
        }
        std::uint64_t made = 0;
        for (std::size_t c = 0; c < _n; ++c) {
          bool ok = true;
          for (auto const& chk : step.checks) {
            auto const d = static_cast<Symbol>(field(key, chk.slot) - 1);
            auto const s = static_cast<Symbol>(c);
            if (!(chk.outgoing ? _X.allowed(chk.label, s, d) : _X.allowed(chk.label, d, s))) {
              ok = false;
              break;
            }
          }
          if (!ok) {
            continue;
          }
          std::uint64_t nk = base;
          if (step.slot >= 0) {
            nk |= std::uint64_t(c + 1) << (step.slot * _bits);
          }
          if (_symmetric) {
            nk = canonical(nk);
          }
          add_to(next[nk], count);
          ++made;
        }
        return made;
      }

      Plan const&         _plan;
      NNSFT const&        _X;
      CountOptions const& _options;
      std::size_t         _n;
      int                 _bits;
      std::uint64_t       _mask;
      bool                _symmetric;
    };

    std::int64_t rectangle_height(Window const& w) {
      if (w.kind().tag != WindowKind::Tag::rectangle) {
        throw PreconditionError("frontier DP requires a rectangle window, got "
                                + w.kind().describe());
      }
      return w.kind().size;
    }

  }  // namespace

  std::size_t frontier_width(Window const& w, std::vector<std::uint32_t> const& order) {
    return make_plan(w, order).width;
  }

  std::vector<std::uint32_t> rectangle_scan_order(Window const& w) {
    std::int64_t const m     = rectangle_height(w);
    std::int64_t const N     = w.params().N();
    std::int64_t const width = static_cast<std::int64_t>(w.size()) / m;
    auto ordinal = [&](std::int64_t k, std::int64_t i) {
      return static_cast<std::uint32_t>(i * width + k);
    };

    std::vector<std::uint32_t> plain;
    for (std::int64_t k = 0; k < width; ++k) {
      for (std::int64_t i = 0; i < m; ++i) {
        plain.push_back(ordinal(k, i));
      }
    }

    // Top-row cells r, r + N^{m-1}, ..., r + (N-1) N^{m-1} form a path that
    // is only assigned once its last cell's column has been reached.
    std::int64_t const         step  = width / N;
    std::int64_t const         start = (N - 1) * step;
    std::vector<std::uint32_t> deferred;
    for (std::int64_t k = 0; k < width; ++k) {
      for (std::int64_t i = 0; i + 1 < m; ++i) {
        deferred.push_back(ordinal(k, i));
      }
      if (k >= start) {
        for (std::int64_t t = 0; t < N; ++t) {
          deferred.push_back(ordinal(k - start + t * step, m - 1));
        }
      }
    }
    return frontier_width(w, deferred) < frontier_width(w, plain) ? deferred : plain;
  }

  CountResult count_colorings_frontier(Window const& w, NNSFT const& X,
                                       CountOptions const& options) {
    Plan const  plan = make_plan(w, rectangle_scan_order(w));
    FrontierDP  dp(plan, X, options);
    CountResult result{0, CountMethod::frontier_dp, {}};
    result.stats.frontier_width = plan.width;
    try {
      result.count = Integer(dp.run<unsigned __int128>(result.stats));
    } catch (CountOverflow const&) {
      result.count = dp.run<Integer>(result.stats);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Sampling
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Sampler {
      NNSFT const&                         X;
      std::vector<std::vector<Arc>> const& adj;
      std::vector<int>&                    colour;
      std::vector<std::uint32_t> const&    open;
      std::mt19937_64&                     rng;
      std::uint64_t                        budget;
      std::uint64_t                        nodes = 0;

      bool legal(std::uint32_t v, int c) const {
        for (auto const& arc : adj[v]) {
          int const d = colour[arc.other];
          if (d >= 0
              && !(arc.outgoing ? X.allowed(arc.label, c, d) : X.allowed(arc.label, d, c))) {
            return false;
          }
        }
        return true;
      }

      bool fill(std::size_t t) {
        if (t == open.size()) {
          return true;
        }
        if (++nodes > budget) {
          throw ResourceError("sampling exceeded the node budget of " + std::to_string(budget));
        }
        std::vector<int> symbols(X.alphabet());
        for (std::size_t c = 0; c < symbols.size(); ++c) {
          symbols[c] = static_cast<int>(c);
        }
        std::shuffle(symbols.begin(), symbols.end(), rng);
        std::uint32_t const v = open[t];
        for (int c : symbols) {
          if (legal(v, c)) {
            colour[v] = c;
            if (fill(t + 1)) {
              return true;
            }
          }
        }
        colour[v] = -1;
        return false;
      }
    };

  }  // namespace

  std::optional<Pattern> sample_coloring(Pattern const& fixed, NNSFT const& X, std::mt19937_64& rng,
                                         std::uint64_t max_nodes) {
    check_alphabets(fixed, X);
    if (find_violation(fixed, X)) {
      return std::nullopt;
    }
    auto const                 adj = adjacency(fixed.window(), induced_edges(fixed.window()));
    std::vector<int>           colour(fixed.size(), -1);
    std::vector<std::uint32_t> open;
    for (std::uint32_t v = 0; v < fixed.size(); ++v) {
      if (fixed[v]) {
        colour[v] = *fixed[v];
      } else {
        open.push_back(v);
      }
    }
    Sampler sampler{X, adj, colour, open, rng, max_nodes};
    if (!sampler.fill(0)) {
      return std::nullopt;
    }
    Pattern out(fixed.window_ptr(), X.alphabet());
    for (std::size_t v = 0; v < colour.size(); ++v) {
      out.assign(v, static_cast<Symbol>(colour[v]));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Entropy
  ////////////////////////////////////////////////////////////////////////

  std::vector<EntropyRow> entropy_table(GroupParams const& P, std::size_t n, std::int64_t m_max,
                                        CountOptions const& options) {
    if (n < 2) {
      throw ParameterError("entropy_table requires n >= 2");
    }
    NNSFT const             X = gcs(n);
    std::vector<EntropyRow> rows;
    for (std::int64_t m = 1; m <= m_max; ++m) {
      EntropyRow row;
      row.m     = m;
      row.cells = rectangle_size(P, m);
      try {
        auto const w = std::make_shared<Window const>(rectangle(P, m));
        try {
          row.count  = count_colorings_frontier(*w, X, options).count;
          row.method = CountMethod::frontier_dp;
        } catch (ResourceError const&) {
          row.count  = count_colorings_backtracking(w, X, options).count;
          row.method = CountMethod::backtracking;
        }
      } catch (ResourceError const& e) {
        row.error = e.what();
      }
      if (row.count) {
        Integer const& c     = *row.count;
        auto const     cells = row.cells.convert_to<unsigned>();
        row.estimate = c > 0 ? log_integer(c) / row.cells.convert_to<double>() : 0.0;
        row.lower_ok = boost::multiprecision::pow(Integer(n - 2), cells) <= c;
        row.spanning_ok
            = c <= Integer(n) * boost::multiprecision::pow(Integer(n - 1), cells - 1);
        if (m == 1) {
          row.step_ok = true;
        } else if (rows.back().count) {
          auto const grown = (row.cells - rows.back().cells).convert_to<unsigned>();
          row.step_ok
              = c <= *rows.back().count * boost::multiprecision::pow(Integer(n - 1), grown);
        }
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

}  // namespace bsshift
