#include <doctest.h>

#include <random>

#include "bsshift/errors.hpp"
#include "bsshift/frozen.hpp"
#include "oracles.hpp"

using namespace bsshift;

namespace {
  std::shared_ptr<Window const> share(Window w) {
    return std::make_shared<Window const>(std::move(w));
  }

  Formula variant_of(ConfigOracle const& x) {
    return std::get<ConfigOracle::FormulaConfig>(x.description()).variant;
  }

  // Embedded copy of R_m translated by g.
  Window embedded(GroupParams const& P, std::int64_t m, Element const& g) {
    return rectangle(P, m).translated(g);
  }
}  // namespace

TEST_SUITE("frozen") {
  TEST_CASE("variant selection") {
    CHECK(variant_of(frozen_config(GroupParams(4))) == Formula::frozen_mod1);
    CHECK(variant_of(frozen_config(GroupParams(2))) == Formula::frozen_mod2);
    CHECK(variant_of(frozen_config(GroupParams(3))) == Formula::frozen_mod0);
    CHECK(variant_of(frozen_config(GroupParams(7))) == Formula::frozen_mod1);
  }

  TEST_CASE("properness") {
    CHECK(verify_proper(frozen_config(GroupParams(4)), ball(GroupParams(4), 8), gcs(3)));
    CHECK(verify_proper(frozen_config(GroupParams(3)), ball(GroupParams(3), 8), gcs(3)));
    auto const scaled = ConfigOracle::formula(Formula::frozen_mod2_scaled, GroupParams(2));
    CHECK(verify_proper(scaled, ball(GroupParams(2), 8), gcs(3)));

    // the printed N = 2 formula reads off the unreduced word
    auto const literal = frozen_config(GroupParams(2));
    auto const bad     = find_improper_edge(literal, ball(GroupParams(2), 3), gcs(3));
    REQUIRE(bad);
    CHECK(bad->from_symbol == bad->to_symbol);
    auto const direct = find_improper_edge(literal, Window(GroupParams(2), {Element{1, 2, 0}}, WindowKind::custom("x")), gcs(3));
    REQUIRE(direct);
    CHECK(to_string(*direct) == "B a^2 -b-> a carries (1,1)");
  }

  TEST_CASE("corrupted cell is caught") {
    GroupParams P(4);
    auto const  x = frozen_config(P);
    auto const  w = share(ball(P, 3));
    Pattern     p = restrict(x, w);
    CHECK(locally_admissible(p, gcs(3)));
    p.assign(identity(), static_cast<Symbol>((*p.at(identity()) + 1) % 3));
    auto const v = find_violation(p, gcs(3));
    REQUIRE(v);
    CHECK((w->vertex(v->edge.from) == identity() || w->vertex(v->edge.to) == identity()));
  }

  TEST_CASE("difference laws") {
    std::mt19937_64 rng(53);
    for (std::int64_t N : {4, 7}) {
      GroupParams P(N);
      auto const  x = frozen_config(P);
      for (int t = 0; t < 500; ++t) {
        Element const g  = oracle::random_element(rng, N, 5, 200);
        int const     xg = evaluate(x, g);
        CHECK(evaluate(x, multiply(g, b_pow(1), P)) == (xg + 2) % 3);
        CHECK(evaluate(x, multiply(g, a_pow(1), P)) == (xg + 1) % 3);
      }
    }
    // the scaled N = 2 variant moves by +1 along b and by N^(i-j) along a
    GroupParams P(2);
    auto const  y = ConfigOracle::formula(Formula::frozen_mod2_scaled, P);
    for (int t = 0; t < 500; ++t) {
      Element const g  = oracle::random_element(rng, 2, 5, 200);
      int const     yg = evaluate(y, g);
      CHECK(evaluate(y, multiply(g, b_pow(1), P)) == (yg + 1) % 3);
      int const lv   = static_cast<int>(((g.i - g.j) % 2 + 2) % 2);
      int const step = lv == 0 ? 1 : 2;
      CHECK(evaluate(y, multiply(g, a_pow(1), P)) == (yg + step) % 3);
    }
  }

  TEST_CASE("single cells are forced") {
    GroupParams P(4);
    auto const  x = frozen_config(P);
    auto const  v = verify_frozen_window(x, Window(P, {identity()}, WindowKind::custom("{e}")), gcs(3));
    CHECK(v.unique);
    CHECK(v.fillings == 1);
  }

  TEST_CASE("embedded rectangles") {
    for (std::int64_t N : {3, 4}) {
      GroupParams P(N);
      auto const  x = frozen_config(P);
      for (Element const& g : {identity(), Element{2, 1, 0}, Element{0, -5, 1}}) {
        Window const F = embedded(P, 2, g);
        auto const   v = verify_frozen_window(x, F, gcs(3));
        CHECK(v.unique);
        CHECK(v.fillings == 1);
      }
    }
    GroupParams P(2);
    auto const  y = ConfigOracle::formula(Formula::frozen_mod2_scaled, P);
    CHECK(verify_frozen_window(y, rectangle(P, 2), gcs(3)).unique);
    CHECK_FALSE(verify_frozen_window(frozen_config(P), rectangle(P, 2), gcs(3)).unique);
  }

  TEST_CASE("non-frozen colouring has several fillings") {
    GroupParams P(2);
    auto const  w = share(ball(P, 5));
    Pattern     seed(w, 5);
    seed.assign(identity(), 0);
    Pattern const y = greedy_complete(seed, gcs(5));
    std::vector<std::size_t> F{*w->index_of(identity())};
    auto const               v = verify_frozen_window(y, F, gcs(5));
    CHECK_FALSE(v.unique);
    CHECK(v.fillings >= 2);
    CHECK_THROWS_AS(verify_frozen_window(Pattern(w, 5), F, gcs(5)), PreconditionError);
  }

  TEST_CASE("isoperimetric ratios") {
    auto const t = isoperimetric_ratio_table(GroupParams(2), 8);
    REQUIRE(t.size() == 8);
    CHECK(t[0].ratio == Rational(3));
    CHECK(t[1].ratio == Rational(14, 8));
    CHECK(t[0].threshold == Rational(3) + Rational(3, 2));
    for (std::size_t r = 1; r < t.size(); ++r) {
      CHECK(t[r].ratio < t[r - 1].ratio);
    }
    for (std::int64_t N : {2, 3, 5}) {
      for (auto const& row : isoperimetric_ratio_table(GroupParams(N), 8)) {
        Integer const Nm  = boost::multiprecision::pow(Integer(N), static_cast<unsigned>(row.m));
        Rational const want(Integer(2) * (Nm * N - 1), Integer(N - 1) * row.m * Nm);
        CHECK(row.ratio == want);
        CHECK(row.threshold == 3 + row.ratio / 2);
      }
    }
  }
}
