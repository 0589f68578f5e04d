#include <gtest/gtest.h>

#include "chromabound/bounds.hpp"
#include "chromabound/chromatic.hpp"
#include "chromabound/cycles.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/graph.hpp"

using namespace chromabound;

namespace {

BigInt factorial_binom(long long a, long long b) {
  BigInt num = 1, den = 1;
  for (long long i = 0; i < b; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

BoundParams k4(int r) { return {6, 4, 3, 4, 2, 0, r}; }

}  // namespace

TEST(Binom, Examples) {
  EXPECT_EQ(binom(5, 0), 1);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(6, 2), 15);
  EXPECT_EQ(binom(4, -1), 0);
  EXPECT_EQ(binom(-3, 2), 0);
  EXPECT_EQ(binom(300, 150), factorial_binom(300, 150));
}

TEST(Binom, ZeroBottomWinsForNegativeTop) {
  reset_negative_top_zero_bottom_hits();
  EXPECT_EQ(binom(-1, 0), 1);
  EXPECT_EQ(binom(-7, 0), 1);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(negative_top_zero_bottom_hits(), 2u);
  reset_negative_top_zero_bottom_hits();
  EXPECT_EQ(negative_top_zero_bottom_hits(), 0u);
}

TEST(Binom, PascalRule) {
  for (long long a = 1; a <= 80; ++a)
    for (long long b = 1; b <= a; ++b)
      ASSERT_EQ(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b)) << a << "," << b;
}

TEST(Binom, MatchesProductFormula) {
  for (long long a = 0; a <= 60; ++a)
    for (long long b = 0; b <= a; ++b) ASSERT_EQ(binom(a, b), factorial_binom(a, b));
}

TEST(TelescopingIdentity, Examples) {
  auto s = lemma1_sides(5, 3, 2);
  EXPECT_EQ(s.left, -7);
  EXPECT_EQ(s.right, -7);
  s = lemma1_sides(4, 3, 0);
  EXPECT_EQ(s.left, 0);
  EXPECT_EQ(s.right, 0);
  s = lemma1_sides(10, 2, 2);
  EXPECT_EQ(s.left, -44);
  EXPECT_EQ(s.right, -44);
}

TEST(TelescopingIdentity, Exhaustive) {
  for (long long a = 1; a <= 30; ++a)
    for (long long b = 0; b < a; ++b)
      for (long long c = 0; c <= b; ++c) {
        const auto s = lemma1_sides(a, b, c);
        ASSERT_EQ(s.left, s.right) << a << "," << b << "," << c;
      }
}

TEST(TelescopingIdentity, RejectsPreconditionViolations) {
  EXPECT_THROW(lemma1_sides(3, 3, 1), InvalidArgumentError);
  EXPECT_THROW(lemma1_sides(5, 2, 3), InvalidArgumentError);
  EXPECT_THROW(lemma1_sides(5, 2, -1), InvalidArgumentError);
}

TEST(LeadingCoefficient, Examples) {
  EXPECT_EQ(leading_coefficient(6, 4, 3, 4, 3), 6);
  EXPECT_EQ(leading_coefficient(6, 4, 3, 4, 2), 11);
  EXPECT_EQ(leading_coefficient(6, 4, 3, 4, 4), 1);
  EXPECT_FALSE(leading_coefficient(6, 4, 3, 4, 1).has_value());
  EXPECT_EQ(leading_coefficient(15, 10, 5, 12, 6), binom(15, 4) - 12);
}

TEST(BoundParams, Validation) {
  EXPECT_NO_THROW(k4(1).validate());
  EXPECT_THROW((BoundParams{6, 4, 2, 4, 2, 0, 1}).validate(), InvalidArgumentError);
  EXPECT_THROW((BoundParams{6, 4, 3, 0, 0, 0, 1}).validate(), InvalidArgumentError);
  EXPECT_THROW((BoundParams{6, 4, 3, 4, 5, 0, 1}).validate(), InvalidArgumentError);
  EXPECT_THROW((BoundParams{6, 4, 3, 4, 2, -1, 1}).validate(), InvalidArgumentError);
  EXPECT_THROW((BoundParams{6, 4, 3, 4, 2, 0, 5}).validate(), InvalidArgumentError);
  EXPECT_THROW(li_tian_bound({6, 4, 3, 4, 2, 0, 0}), InvalidArgumentError);
}

TEST(LiTian, Examples) {
  EXPECT_EQ(li_tian_bound({3, 3, 3, 1, 1, 0, 1}), 2);
  // C(6,3) - C(5,2) + C(1,2)
  EXPECT_EQ(li_tian_bound(k4(1)), 10);
  EXPECT_EQ(li_tian_bound(k4(2)), 11);
  EXPECT_EQ(li_tian_bound(k4(4)), 1);
}

TEST(Corrections, Examples) {
  EXPECT_EQ(s_term(k4(1)), 2);
  EXPECT_EQ(triangle_correction(k4(1)), 2);
  EXPECT_EQ(s_term({10, 6, 3, 5, 1, 2, 1}), 0);
  EXPECT_EQ(s_term({10, 6, 3, 5, 5, 2, 1}), 0);
  EXPECT_EQ(triangle_correction({15, 10, 5, 12, 4, 4, 1}), 0);
  EXPECT_EQ(s_term(k4(2)), 0);
  EXPECT_EQ(triangle_correction(k4(2)), 0);
}

TEST(ImprovedBound, Examples) {
  EXPECT_EQ(improved_bound(k4(1)), 6);
  EXPECT_EQ(improved_bound_alt(k4(1)), 6);
  EXPECT_EQ(improved_bound(k4(2)), 11);
  EXPECT_EQ(improved_bound_alt(k4(4)), 1);
  for (int r = 1; r <= 3; ++r) {
    const BoundParams k3{3, 3, 3, 1, 1, 0, r};
    EXPECT_EQ(improved_bound(k3), li_tian_bound(k3));
  }
  EXPECT_EQ(improved_bound_alt({3, 3, 3, 1, 1, 0, 1}), 2);
}

TEST(ImprovedBound, NeverExceedsLiTian) {
  for (long long e = 3; e <= 20; ++e)
    for (long long v = 3; v <= 10; ++v)
      for (long long g = 3; g <= v; ++g)
        for (long long kg = 1; kg <= 6; ++kg)
          for (long long lg = 0; lg <= kg; ++lg)
            for (long long star = 0; star <= (g == 3 ? 3 : 0); ++star)
              for (long long r = 1; r <= v; ++r) {
                const BoundParams p{e, v, g, kg, lg, star, r};
                ASSERT_LE(improved_bound(p), li_tian_bound(p));
                ASSERT_GE(s_term(p), 0);
                ASSERT_GE(triangle_correction(p), 0);
              }
}

TEST(ImprovedBound, FormsAgreeWhenTopsStayNonnegative) {
  for (long long e = 3; e <= 24; ++e)
    for (long long v = 3; v <= 11; ++v)
      for (long long g = 3; g <= v; ++g)
        for (long long kg = 1; kg <= 7; ++kg)
          for (long long lg = 1; lg <= kg; ++lg)
            for (long long star = 0; star <= (g == 3 ? 3 : 0); ++star) {
              if (e - g + 1 - kg - star < 0) continue;
              for (long long r = 1; r <= v; ++r) {
                const BoundParams p{e, v, g, kg, lg, star, r};
                ASSERT_EQ(improved_bound(p), improved_bound_alt(p));
              }
            }
}

TEST(ImprovedBound, FormsSplitOnNegativeTops) {
  // K_5, r = 2: the double sum counts C(-1, 0) = 1, the telescoped form does not.
  const BoundParams p{10, 5, 3, 10, 3, 0, 2};
  EXPECT_EQ(improved_bound(p), 63);
  EXPECT_EQ(improved_bound_alt(p), 66);
}

TEST(ImprovedBound, TriangleCorrectionSurvivesSingleTriangle) {
  // One triangle plus a 4-cycle through the chosen edge avoiding it.
  const Graph g = parse_edge_list("0 1\n1 2\n2 0\n1 3\n3 4\n4 0\n");
  const auto census = CycleCensus::compute(g);
  ASSERT_EQ(census.k(3), 1u);
  const EdgeId xy = *g.edge_between(0, 1);
  EXPECT_EQ(census.l(xy, 3), 1u);
  EXPECT_EQ(census.l_star(xy, 4), 1u);
  const BoundParams p = bound_params(g, census, xy, 1);
  EXPECT_EQ(s_term(p), 0);
  EXPECT_GT(triangle_correction(p), 0);
  EXPECT_LT(improved_bound(p), li_tian_bound(p));
}

TEST(EdgeMode, Parsing) {
  EXPECT_EQ(parse_edge_mode("fixed"), EdgeMode::kFixed);
  EXPECT_EQ(parse_edge_mode("per-r"), EdgeMode::kPerR);
  EXPECT_EQ(to_string(EdgeMode::kFixed), "fixed");
  EXPECT_THROW(parse_edge_mode("both"), InvalidArgumentError);
}

TEST(SelectEdge, Examples) {
  const Graph k4g = generate("complete:n=4");
  const auto k4c = CycleCensus::compute(k4g);
  const auto a = select_edge(k4g, k4c, 1, EdgeMode::kPerR);
  EXPECT_EQ(a.edge, 0);
  EXPECT_EQ(a.lg, 2u);
  EXPECT_EQ(a.s_value, 2);
  EXPECT_EQ(a.correction, 4);

  const Graph c5 = generate("cycle:n=5");
  const auto b = select_edge(c5, CycleCensus::compute(c5), 1, EdgeMode::kFixed);
  EXPECT_EQ(b.edge, 0);
  EXPECT_EQ(b.lg, 1u);
  EXPECT_EQ(b.correction, 0);

  const Graph k23 = generate("completeBipartite:a=2,b=3");
  const auto k23c = CycleCensus::compute(k23);
  EXPECT_EQ(k23c.k(4), 3u);
  const auto c = select_edge(k23, k23c, 1, EdgeMode::kPerR);
  EXPECT_EQ(c.edge, 0);
  EXPECT_EQ(c.lg, 2u);
  EXPECT_EQ(c.s_value, 1);
}

TEST(SelectEdge, RejectsForest) {
  const Graph p = generate("path:n=4");
  EXPECT_THROW(select_edge(p, CycleCensus::compute(p), 1, EdgeMode::kPerR),
               AcyclicGraphError);
  EXPECT_THROW(bound_report(p), AcyclicGraphError);
}

TEST(SelectEdge, MaximisesCorrection) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = generate("randomGnm:n=7,m=12", seed);
    const auto census = CycleCensus::compute(g);
    for (int r = 1; r <= g.vertex_count(); ++r) {
      const auto best = select_edge(g, census, r, EdgeMode::kPerR);
      for (const Edge& e : g.edges()) {
        if (census.l(e.id, *census.girth()) == 0) continue;
        const auto other = evaluate_edge(g, census, e.id, r, EdgeMode::kPerR);
        EXPECT_LE(other.correction, best.correction);
        if (other.correction == best.correction) EXPECT_LE(best.edge, e.id);
      }
    }
  }
}

TEST(BoundReport, CompleteFour) {
  const auto rep = bound_report(generate("complete:n=4"));
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_EQ(rep.girth, 3);
  EXPECT_EQ(rep.kg, 4u);
  const BoundRow& r1 = rep.rows[0];
  EXPECT_EQ(r1.exact, 6);
  EXPECT_EQ(r1.li_tian, 10);
  EXPECT_EQ(r1.improved, 6);
  EXPECT_TRUE(r1.flags.bound_holds);
  EXPECT_TRUE(r1.flags.dominates_li_tian);
  EXPECT_TRUE(rep.all_hold());
  EXPECT_TRUE(rep.all_tight());
}

TEST(BoundReport, SmallCyclesAndTriangle) {
  const auto k3 = bound_report(generate("complete:n=3"));
  for (const auto& row : k3.rows) {
    EXPECT_EQ(row.exact, row.li_tian);
    EXPECT_EQ(row.exact, row.improved);
  }
  const auto c4 = bound_report(generate("cycle:n=4"));
  for (const auto& row : c4.rows) {
    EXPECT_EQ(row.improved, row.li_tian);
    EXPECT_EQ(row.improved, row.exact);
  }
}

TEST(BoundReport, EdgeOverrideAndFixedMode) {
  const Graph g = generate("completeBipartite:a=2,b=3");
  BoundReportOptions o;
  o.mode = EdgeMode::kFixed;
  o.edge_override = 3;
  const auto rep = bound_report(g, o);
  for (const auto& row : rep.rows) EXPECT_EQ(row.choice.edge, 3);
  o.edge_override = 99;
  EXPECT_THROW(bound_report(g, o), UnknownEdgeError);
}

TEST(BoundReport, SoundOnSmallGraphsInBothModes) {
  std::vector<Graph> graphs;
  for (const char* s : {"complete:n=5", "complete:n=6", "cycle:n=6", "petersen",
                        "completeBipartite:a=3,b=3"})
    graphs.push_back(generate(s));
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    graphs.push_back(generate("randomGnm:n=7,m=10", seed));
  for (const Graph& g : graphs)
    for (EdgeMode mode : {EdgeMode::kFixed, EdgeMode::kPerR}) {
      BoundReportOptions o;
      o.mode = mode;
      const auto rep = bound_report(g, o);
      EXPECT_TRUE(rep.all_hold()) << to_edge_list(g);
      EXPECT_TRUE(rep.all_dominate());
      for (const auto& row : rep.rows)
        if (row.leading) EXPECT_EQ(*row.leading, row.exact);
    }
}
