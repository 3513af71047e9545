// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include <CLI11.hpp>

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "bsshift/coloring.hpp"
#include "bsshift/errors.hpp"
#include "bsshift/frozen.hpp"
#include "bsshift/periodicity.hpp"
#include "stuck.hpp"
#include "oracles.hpp"

using namespace bsshift;

namespace {

  using Clock = std::chrono::steady_clock;

  struct Report {
    bool                     ok = true;
    std::vector<std::string> lines;

    void check(bool cond, std::string const& what) {
      if (!cond) {
        ok = false;
        lines.push_back("failed: " + what);
      }
    }

    void note(std::string const& line) {
      lines.push_back(line);
    }
  };

  std::shared_ptr<Window const> share(Window w) {
    return std::make_shared<Window const>(std::move(w));
  }

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string str(Integer const& x) {
    return x.str();
  }

  Integer ipow(std::int64_t base, Integer const& e) {
    return boost::multiprecision::pow(Integer(base), e.convert_to<unsigned>());
  }

  // 1
  void group_laws(Report& r, std::mt19937_64& rng) {
    for (std::int64_t N : {2, 3, 4, 5}) {
      GroupParams P(N);
      int         bad = 0;
      for (int t = 0; t < 10000; ++t) {
        Element const g = oracle::random_element(rng, N, 6, 60);
        Element const h = oracle::random_element(rng, N, 6, 60);
        Element const f = oracle::random_element(rng, N, 6, 60);
        Element const gh = multiply(g, h, P);
        bool ok = multiply(gh, f, P) == multiply(g, multiply(h, f, P), P);
        ok      = ok && multiply(g, invert(g), P) == identity() && multiply(invert(g), g, P) == identity();
        ok      = ok && normalize(gh.j, gh.k, gh.i, P) == gh && is_reduced(gh, P);
        ok      = ok && oracle::affine(gh, N) == oracle::compose(oracle::affine(g, N), oracle::affine(h, N));
        bad += ok ? 0 : 1;
      }
      Element const ba  = multiply(b_pow(1), a_pow(1), P);
      Element const aNb = multiply(a_pow(N), b_pow(1), P);
      r.check(bad == 0, "N=" + std::to_string(N) + ": " + std::to_string(bad) + " of 10000 random checks");
      r.check(ba == aNb, "b a != a^N b for N=" + std::to_string(N));
      r.note("N=" + std::to_string(N) + ": 10000 triples ok=" + std::to_string(10000 - bad) + ", b a = "
             + emit_word(ba));
    }
  }

  // 2
  void boundary_formula(Report& r) {
    for (std::int64_t N : {2, 3}) {
      GroupParams P(N);
      Integer     prev;
      std::string row;
      for (std::int64_t m = 1; m <= 5; ++m) {
        Integer const brute(boundary_edge_count(rectangle(P, m)));
        Integer const closed = 2 * (ipow(N, m + 1) - 1) / (N - 1);
        r.check(brute == closed, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " brute " + str(brute)
                                     + " closed " + str(closed));
        if (m > 1) {
          r.check(brute == 2 + N * prev, "recursion at N=" + std::to_string(N) + " m=" + std::to_string(m));
        }
        r.check(gamma_closed_form(P, m) == closed, "library closed form at m=" + std::to_string(m));
        prev = brute;
        row += " " + str(brute);
      }
      r.note("N=" + std::to_string(N) + " gamma_1..5:" + row);
    }
  }

  // 3
  void rectangle_growth(Report& r) {
    for (std::int64_t N : {2, 3}) {
      GroupParams P(N);
      std::string row;
      for (std::int64_t m = 1; m <= 5; ++m) {
        Integer const d = Integer(rectangle(P, m + 1).size()) - Integer(rectangle(P, m).size());
        Integer const want = ipow(N, m) * (m * N + N - m);
        r.check(d == want, "N=" + std::to_string(N) + " m=" + std::to_string(m));
        row += " " + str(d);
      }
      r.note("N=" + std::to_string(N) + " growth m=1..5:" + row);
    }
  }

  // 4
  void folner_trend(Report& r) {
    for (std::int64_t N : {2, 3}) {
      GroupParams P(N);
      Rational    prev;
      std::string row;
      for (std::int64_t m = 1; m <= 6; ++m) {
        Window const   R = rectangle(P, m);
        Rational const q(Integer(boundary_edge_count(R)), Integer(R.size()));
        if (m > 1) {
          r.check(q < prev, "ratio not decreasing at N=" + std::to_string(N) + " m=" + std::to_string(m));
        }
        prev = q;
        row += " " + q.str();
      }
      r.note("N=" + std::to_string(N) + " gamma/|R| m=1..6:" + row);
    }
  }

  // 5
  void two_colour_dichotomy(Report& r) {
    for (std::int64_t N : {2, 3, 4, 5}) {
      for (std::int64_t m : {2, 3}) {
        auto const    R    = share(rectangle(GroupParams(N), m));
        Integer const c    = count_colorings_backtracking(R, gcs(2)).count;
        Integer const want = N % 2 == 0 ? 0 : 2;
        r.check(c == want, "N=" + std::to_string(N) + " m=" + std::to_string(m) + " count " + str(c));
        r.note("N=" + std::to_string(N) + " m=" + std::to_string(m) + ": " + str(c));
      }
    }
    for (std::int64_t N : {3, 5}) {
      GroupParams P(N);
      auto const  x = ConfigOracle::formula(Formula::parity2, P);
      bool const  ok = verify_proper(x, ball(P, 6), gcs(2));
      r.check(ok, "parity2 improper on ball(6) for N=" + std::to_string(N));
      r.note("parity2 N=" + std::to_string(N) + " proper on ball(6): " + (ok ? "true" : "false"));
    }
  }

  // 6
  void oracle_equivalence(Report& r) {
    auto const t0 = Clock::now();
    std::vector<std::tuple<int, int, int>> cases;
    for (int n : {3, 4}) {
      for (int m = 1; m <= 3; ++m) {
        cases.emplace_back(2, n, m);
      }
    }
    cases.emplace_back(3, 3, 2);
    for (auto [N, n, m] : cases) {
      auto const R  = share(rectangle(GroupParams(N), m));
      auto const dp = count_colorings_frontier(*R, gcs(n));
      auto const bt = count_colorings_backtracking(R, gcs(n));
      r.check(dp.count == bt.count, "N=" + std::to_string(N) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
      r.note("N=" + std::to_string(N) + " n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + str(dp.count)
             + " (backtracking nodes " + std::to_string(bt.stats.nodes) + ")");
    }
    double const s = seconds_since(t0);
    r.check(s < 60, "runtime " + std::to_string(s) + " s");
    r.note("runtime " + std::to_string(s) + " s");
  }

  // 7
  void entropy_bounds(Report& r) {
    for (std::size_t n : {3, 4, 5}) {
      auto const rows = entropy_table(GroupParams(2), n, 4);
      Integer    prev_count;
      Integer    prev_cells;
      for (auto const& row : rows) {
        std::string const tag = "n=" + std::to_string(n) + " m=" + std::to_string(row.m);
        if (!row.count) {
          r.check(false, tag + " not computed: " + row.error);
          continue;
        }
        Integer const& c     = *row.count;
        bool const     lower = ipow(n - 2, row.cells) <= c;
        bool const     span  = c <= n * ipow(n - 1, row.cells - 1);
        bool const     step  = row.m == 1 || c <= prev_count * ipow(n - 1, row.cells - prev_cells);
        r.check(lower && span && step, tag + " bounds");
        r.check(row.bounds_ok() == (lower && span && step), tag + " library flags disagree");
        r.note(tag + ": " + str(c) + " via " + to_string(row.method));
        prev_count = c;
        prev_cells = row.cells;
      }
    }
  }

  // 8
  void figure_regression(Report& r) {
    Pattern const fig = stuck_centre();
    r.check(fig.assigned_count() == 14 && fig.size() == 15, "pattern shape");
    r.check(locally_admissible(fig, gcs(4)), "pattern not admissible in C4");
    GroupParams     P(2);
    std::set<Symbol> seen;
    for (auto const& h : neighbors(identity(), P)) {
      if (auto s = fig.at(h)) {
        seen.insert(*s);
      }
    }
    int legal = 4 - static_cast<int>(seen.size());
    r.check(legal == 0, "centre has " + std::to_string(legal) + " legal symbols");
    auto const out = greedy_attempt(fig, gcs(4));
    r.check(out.stuck && *out.stuck == 0, "greedy did not stop at the centre");
    r.note("centre legal symbols: " + std::to_string(legal) + ", completions: " + str(count_completions(fig, gcs(4)).count));
  }

  std::string key(Pattern const& p) {
    std::string k;
    for (std::size_t v = 0; v < p.size(); ++v) {
      k += p[v] ? char('0' + *p[v]) : '.';
    }
    return k;
  }

  void enumerate_family(Report& r, WitnessFamily const& f, std::string const& tag) {
    std::set<std::string> seen;
    std::uint64_t const   size = f.size().convert_to<std::uint64_t>();
    bool                  all_ok = true;
    for (std::uint64_t t = 0; t < size; ++t) {
      Pattern const p = f.member(t);
      all_ok          = all_ok && p.is_total() && locally_admissible(p, gcs(3));
      seen.insert(key(p));
    }
    r.check(all_ok, tag + ": a member is not admissible");
    r.check(seen.size() == size, tag + ": members not distinct");
    r.note(tag + ": " + std::to_string(f.free_cells().size()) + " free cells, " + std::to_string(seen.size())
           + " distinct admissible patterns");
  }

  // 9
  void entropy_witnesses(Report& r) {
    auto const odd = witness_family_odd(GroupParams(3), 2);
    r.check(odd.free_cells().size() >= 9, "odd family has fewer than 9 free cells");
    r.check(odd.size() == Integer(1) << odd.free_cells().size(), "odd family size");
    enumerate_family(r, odd, "N=3 m=2");
    Integer const c3 = count_colorings_frontier(odd.base().window(), gcs(3)).count;
    r.check(c3 >= odd.size(), "count below family size");
    r.note("count(R_2, C3) for N=3: " + str(c3));

    auto const even = witness_family_even(GroupParams(2), 2);
    r.check(even.free_cells().size() == 6 && even.size() == 64, "even family size");
    enumerate_family(r, even, "N=2 R_4");
    Integer const c2 = count_colorings_frontier(even.base().window(), gcs(3)).count;
    r.check(c2 >= even.size(), "count below family size");
    r.note("count(R_4, C3) for N=2: " + str(c2));
  }

  bool agrees(Pattern const& big, Pattern const& small) {
    for (std::size_t v = 0; v < small.size(); ++v) {
      if (small[v] && big.at(small.window().vertex(v)) != small[v]) {
        return false;
      }
    }
    return true;
  }

  // 10
  void greedy_machinery(Report& r, std::mt19937_64& rng) {
    GroupParams P(2);
    auto const  R2 = share(rectangle(P, 2));
    int         extended = 0;
    for (int t = 0; t < 100; ++t) {
      auto const s = sample_coloring(Pattern(R2, 3), gcs(3), rng);
      if (!s) {
        r.check(false, "sampler failed");
        continue;
      }
      Pattern const e = extend_rectangle(*s, gcs(3));
      bool const    ok = e.window().size() == 24 && e.is_total() && locally_admissible(e, gcs(3)) && agrees(e, *s);
      extended += ok ? 1 : 0;
    }
    r.check(extended == 100, "extensions ok " + std::to_string(extended));
    r.note("R_2 -> R_3 extensions verified: " + std::to_string(extended) + "/100");

    auto const                                 B = share(ball(P, 4));
    std::uniform_int_distribution<std::size_t> cell(0, B->size() - 1);
    std::uniform_int_distribution<int>         sym(0, 4);
    std::uniform_int_distribution<int>         size(1, 4);
    auto random_pattern = [&] {
      Pattern p(B, 5);
      for (int c = size(rng); c > 0; --c) {
        p.assign(cell(rng), static_cast<Symbol>(sym(rng)));
      }
      return p;
    };
    auto separated = [&](Pattern const& p, Pattern const& q) {
      for (std::size_t u : p.support()) {
        Element const& g = B->vertex(u);
        for (std::size_t v : q.support()) {
          Element const& h  = B->vertex(v);
          auto const     nb = neighbors(g, P);
          if (g == h || std::find(nb.begin(), nb.end(), h) != nb.end()) {
            return false;
          }
        }
      }
      return true;
    };
    int glued = 0;
    int pairs = 0;
    while (pairs < 100) {
      Pattern const p = random_pattern();
      Pattern const q = random_pattern();
      if (!locally_admissible(p, gcs(5)) || !locally_admissible(q, gcs(5)) || !separated(p, q)) {
        continue;
      }
      ++pairs;
      Pattern const out = glue(p, q, gcs(5), B);
      bool const    ok  = out.is_total() && locally_admissible(out, gcs(5)) && agrees(out, p) && agrees(out, q);
      glued += ok ? 1 : 0;
    }
    r.check(glued == 100, "gluings ok " + std::to_string(glued));
    r.note("separated pairs glued on ball(4), n=5: " + std::to_string(glued) + "/100");
  }

  // Literal difference laws: +2 along b, +1 along a for the mod-1 and
  // mod-0 variants; +1 along b, +N^i along a for the mod-2 variant.
  int law_failures(ConfigOracle const& x, Formula f, GroupParams const& P, std::mt19937_64& rng,
                   std::string& first) {
    int bad = 0;
    for (int t = 0; t < 10000; ++t) {
      Element const g  = oracle::random_element(rng, P.N(), 6, 300);
      int const     xg = evaluate(x, g);
      int const     db = f == Formula::frozen_mod2 ? 1 : 2;
      int const     da = f == Formula::frozen_mod2
                             ? Integer(psi_pow(1, g.i, P) % 3).convert_to<int>()
                             : 1;
      Element const gb = multiply(g, b_pow(1), P);
      Element const ga = multiply(g, a_pow(1), P);
      bool const    ok = evaluate(x, gb) == (xg + db) % 3 && evaluate(x, ga) == (xg + da) % 3;
      if (!ok) {
        if (bad == 0) {
          first = emit_word(g) + ": x=" + std::to_string(xg) + ", x(g b)=" + std::to_string(evaluate(x, gb))
                  + ", x(g a)=" + std::to_string(evaluate(x, ga));
        }
        ++bad;
      }
    }
    return bad;
  }

  struct FrozenRun {
    bool        proper = false;
    std::string improper;
    int         windows = 0;
    int         unique  = 0;
    std::string first_bad;
  };

  FrozenRun frozen_suite(ConfigOracle const& x, GroupParams const& P) {
    FrozenRun    run;
    NNSFT const  X3 = gcs(3);
    auto const   bad = find_improper_edge(x, ball(P, 8), X3);
    run.proper       = !bad;
    if (bad) {
      run.improper = to_string(*bad);
    }
    Element const at = Element{1, 1, 0};  // b^-1 a
    Window const  R3 = rectangle(P, 3).translated(at);
    auto tally = [&](Window const& F) {
      FrozenVerdict const v = verify_frozen_window(x, F, X3);
      ++run.windows;
      if (v.unique) {
        ++run.unique;
      } else if (run.first_bad.empty()) {
        run.first_bad = F.kind().describe() + " fillings " + v.fillings.str();
      }
    };
    for (auto const& g : R3.vertices()) {
      tally(Window(P, {g}, WindowKind::custom("{" + emit_word(g) + "}")));
    }
    for (auto const& e : induced_edges(R3)) {
      Element const& u = R3.vertex(e.from);
      Element const& v = R3.vertex(e.to);
      tally(Window(P, {u, v}, WindowKind::custom("{" + emit_word(u) + ", " + emit_word(v) + "}")));
    }
    tally(rectangle(P, 2).translated(at));
    return run;
  }

  // 11
  void frozen_colorings(Report& r, std::mt19937_64& rng) {
    auto const t0 = Clock::now();
    for (std::int64_t N : {2, 3, 4}) {
      GroupParams     P(N);
      ConfigOracle const x  = frozen_config(P);
      Formula const   f = std::get<ConfigOracle::FormulaConfig>(x.description()).variant;
      std::string const tag = "N=" + std::to_string(N) + " " + to_string(f);
      FrozenRun const run = frozen_suite(x, P);
      r.check(run.proper, tag + " improper on ball(8): " + run.improper);
      r.check(run.unique == run.windows, tag + " frozen windows " + std::to_string(run.unique) + "/"
                                             + std::to_string(run.windows) + ", first: " + run.first_bad);
      std::string first;
      int const   bad = law_failures(x, f, P, rng, first);
      r.check(bad == 0, tag + " difference laws fail on " + std::to_string(bad) + "/10000, first " + first);
      r.note(tag + ": proper " + (run.proper ? "true" : "false") + ", unique windows " + std::to_string(run.unique)
             + "/" + std::to_string(run.windows) + ", law failures " + std::to_string(bad) + "/10000");
    }
    // Reduced-form variant for N = 2, reported alongside and not substituted.
    GroupParams        P(2);
    ConfigOracle const y   = ConfigOracle::formula(Formula::frozen_mod2_scaled, P);
    FrozenRun const    run = frozen_suite(y, P);
    r.note("N=2 frozen_mod2_scaled (reference only): proper " + std::string(run.proper ? "true" : "false")
           + ", unique windows " + std::to_string(run.unique) + "/" + std::to_string(run.windows));
    double const s = seconds_since(t0);
    r.check(s < 60, "runtime " + std::to_string(s) + " s");
    r.note("runtime " + std::to_string(s) + " s");
  }

  NNSFT random_sft(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.4);
    NNSFT                       X(n);
    for (Symbol s = 0; s < n; ++s) {
      for (Symbol t = 0; t < n; ++t) {
        X.allow(Generator::a, s, t, coin(rng));
        X.allow(Generator::b, s, t, coin(rng));
      }
    }
    return X;
  }

  // 12
  void periodicity(Report& r, std::mt19937_64& rng) {
    int bad = 0;
    for (int t = 0; t < 10000; ++t) {
      GroupParams const P(2 + static_cast<std::int64_t>(rng() % 4));
      Integer const     p = 1 + rng() % 20;
      std::int64_t const l = rng() % 5;
      std::int64_t const i = rng() % 5;
      std::int64_t const j = rng() % 5;
      Integer const      k = static_cast<std::int64_t>(rng() % 2001) - 1000;
      bad += check_group_identity(P, p, l, i, j, k) ? 0 : 1;
    }
    r.check(bad == 0, "group identity failed on " + std::to_string(bad) + " tuples");
    r.note("group identity: " + std::to_string(10000 - bad) + "/10000");

    for (std::size_t n = 2; n <= 5; ++n) {
      r.check(!find_periodic_monochromatic(gcs(n)), "witness found for gcs(" + std::to_string(n) + ")");
    }

    int solvable = 0;
    int tried    = 0;
    int disagree = 0;
    int expanded = 0;
    while (solvable < 50) {
      std::size_t const n    = 2 + rng() % 3;
      NNSFT const       X    = random_sft(rng, n);
      auto const        want = oracle::brute_level_word(X, n);
      auto const        got  = find_periodic_monochromatic(X);
      ++tried;
      if (got.has_value() != want.has_value() || (got && got->levels != *want)) {
        ++disagree;
      }
      if (!want) {
        continue;
      }
      ++solvable;
      bool ok = got && horizontal_ok(*got, X) && vertical_cycle_ok(*got, X);
      for (std::int64_t N : {2, 3}) {
        ok = ok && locally_admissible(restrict(witness_config(*got, GroupParams(N)), share(rectangle(GroupParams(N), 4))), X);
      }
      expanded += ok ? 1 : 0;
    }
    r.check(disagree == 0, std::to_string(disagree) + " disagreements with brute force");
    r.check(expanded == 50, "valid expanded witnesses " + std::to_string(expanded) + "/50");
    r.note("random SFTs: " + std::to_string(tried) + " tried, " + std::to_string(solvable)
           + " solvable, disagreements " + std::to_string(disagree) + ", witnesses admissible on R_4: "
           + std::to_string(expanded) + "/50");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App         app{"acceptance run"};
  std::uint64_t    seed = 20240601;
  std::vector<int> expect_fail;
  app.add_option("--seed", seed, "random seed");
  app.add_option("--expect-fail", expect_fail, "criteria known to fail; they still print FAIL");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  std::cout << "seed " << seed << '\n';

  std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria{
      {"group laws", [&](Report& r) { group_laws(r, rng); }},
      {"boundary formula", boundary_formula},
      {"rectangle growth", rectangle_growth},
      {"Folner trend", folner_trend},
      {"two-colour dichotomy", two_colour_dichotomy},
      {"counting oracle equivalence", oracle_equivalence},
      {"entropy bounds", entropy_bounds},
      {"stuck centre pattern", figure_regression},
      {"positive-entropy witnesses", entropy_witnesses},
      {"greedy machinery", [&](Report& r) { greedy_machinery(r, rng); }},
      {"frozen colourings", [&](Report& r) { frozen_colorings(r, rng); }},
      {"periodicity", [&](Report& r) { periodicity(r, rng); }},
  };

  int unexpected = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    int const  id = static_cast<int>(c + 1);
    Report     r;
    auto const t0 = Clock::now();
    try {
      criteria[c].second(r);
    } catch (std::exception const& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    bool const expected = std::find(expect_fail.begin(), expect_fail.end(), id) != expect_fail.end();
    std::cout << (r.ok ? "PASS" : "FAIL") << " " << id << " " << criteria[c].first;
    if (!r.ok && expected) {
      std::cout << " (known)";
    }
    std::cout << " [" << std::fixed << std::setprecision(2) << seconds_since(t0) << " s]\n";
    std::cout.unsetf(std::ios::fixed);
    for (auto const& line : r.lines) {
      std::cout << "    " << line << '\n';
    }
    std::cout.flush();
    if (!r.ok && !expected) {
      ++unexpected;
    }
  }
  return unexpected == 0 ? 0 : 1;
}
