#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "chromabound/errors.hpp"
#include "chromabound/graph.hpp"

using namespace chromabound;

namespace {

std::set<std::pair<int, int>> edge_set(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (const Edge& e : g.edges())
    out.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
  return out;
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) ++d[e.a], ++d[e.b];
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(ParseEdgeList, SingleEdge) {
  const Graph g = parse_edge_list("0 1");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(ParseEdgeList, ParallelEdgesMerge) {
  const Graph g = parse_edge_list("0 1\n0 1\n1 0\n");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_TRUE(g.is_simple());
}

TEST(ParseEdgeList, Triangle) {
  const Graph g = parse_edge_list("0 1\n1 2\n2 0\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
}

TEST(ParseEdgeList, CommentsBlankLinesAndSparseLabels) {
  const Graph g = parse_edge_list("# header\n\n10 20  # trailing\n20 7\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(edge_set(g), (std::set<std::pair<int, int>>{{0, 1}, {1, 2}}));
}

TEST(ParseEdgeList, RejectsLoopWithLineNumber) {
  try {
    parse_edge_list("0 1\n# c\n2 2\n");
    FAIL() << "loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ParseEdgeList, RejectsMalformedLines) {
  EXPECT_THROW(parse_edge_list("0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("a b\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 -1\n"), ParseError);
}

TEST(ParseEdgeList, RejectsEmptyInput) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("# only a comment\n\n"), ParseError);
}

TEST(ParseEdgeList, RoundTripsNormalizedGraphs) {
  for (const char* spec : {"complete:n=5", "petersen", "completeBipartite:a=2,b=3",
                           "cycle:n=7", "path:n=4"}) {
    const Graph g = normalize_labels(generate(spec));
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g) << spec;
  }
}

TEST(Graph, ConstructorValidates) {
  EXPECT_THROW(Graph(0), InvalidGraphError);
  EXPECT_THROW(Graph(2, {{0, 0, 0}}), InvalidGraphError);
  EXPECT_THROW(Graph(2, {{0, 2, 0}}), InvalidGraphError);
  EXPECT_THROW(Graph(3, {{0, 1, 4}, {1, 2, 4}}), InvalidGraphError);
  EXPECT_NO_THROW(Graph(1));
}

TEST(Graph, EdgeLookup) {
  const Graph g = generate("cycle:n=4");
  EXPECT_THROW(g.edge(99), UnknownEdgeError);
  EXPECT_FALSE(g.contains_edge(99));
  ASSERT_TRUE(g.edge_between(0, 1).has_value());
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.neighbors(0), (std::vector<int>{1, 3}));
}

TEST(Generate, Cycle) {
  const Graph g = generate("cycle:n=4");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(degrees(g), (std::vector<int>{2, 2, 2, 2}));
}

TEST(Generate, Complete) {
  const Graph g = generate("complete:n=4");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 6);
}

TEST(Generate, Petersen) {
  const Graph g = generate("petersen");
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edge_count(), 15);
  EXPECT_EQ(degrees(g), std::vector<int>(10, 3));
  EXPECT_TRUE(g.is_simple());
}

TEST(Generate, CompleteBipartiteAndPath) {
  const Graph k23 = generate("completeBipartite:a=2,b=3");
  EXPECT_EQ(k23.vertex_count(), 5);
  EXPECT_EQ(k23.edge_count(), 6);
  const Graph p4 = generate("path:n=4");
  EXPECT_EQ(p4.edge_count(), 3);
  EXPECT_TRUE(p4.is_connected());
}

TEST(Generate, RandomGnmIsDeterministicAndConnected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph a = generate("randomGnm:n=7,m=9", seed);
    const Graph b = generate("randomGnm:n=7,m=9", seed);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.edge_count(), 9);
    EXPECT_TRUE(a.is_connected());
    EXPECT_TRUE(a.is_simple());
  }
  EXPECT_EQ(generate("randomGnm:n=7,m=9,seed=5"), generate("randomGnm:n=7,m=9", 5));
}

TEST(Generate, RandomGnmTreeAndComplete) {
  EXPECT_EQ(generate("randomGnm:n=6,m=5", 1).edge_count(), 5);
  EXPECT_EQ(edge_set(generate("randomGnm:n=5,m=10", 3)),
            edge_set(generate("complete:n=5")));
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(generate("randomGnm:n=5,m=11", 1), InvalidArgumentError);
  EXPECT_THROW(generate("randomGnm:n=5,m=3", 1), InvalidArgumentError);
  EXPECT_THROW(generate("randomGnm:n=5,m=6"), InvalidArgumentError);
  EXPECT_THROW(generate("cycle:n=2"), InvalidArgumentError);
  EXPECT_THROW(generate("complete"), InvalidArgumentError);
  EXPECT_THROW(generate("nosuch:n=3"), InvalidArgumentError);
  EXPECT_THROW(generate("complete:n=x"), InvalidArgumentError);
  EXPECT_THROW(generate("petersen:n=3"), InvalidArgumentError);
}

TEST(GeneratorSpec, ParsesAndPrints) {
  const auto spec = parse_generator("completeBipartite:a=2,b=3");
  EXPECT_EQ(spec.family, "completeBipartite");
  EXPECT_EQ(spec.param("a"), 2);
  EXPECT_EQ(spec.param("b"), 3);
  EXPECT_FALSE(spec.param("c").has_value());
  EXPECT_EQ(parse_generator(spec.to_string()).params, spec.params);
  EXPECT_EQ(parse_generator("randomGnm:n=5,m=6,seed=9").seed, 9u);
}

TEST(DeleteEdge, Examples) {
  const Graph k3 = generate("complete:n=3");
  const Graph p3 = delete_edge(k3, 0);
  EXPECT_EQ(p3.vertex_count(), 3);
  EXPECT_EQ(p3.edge_count(), 2);
  EXPECT_TRUE(p3.is_connected());

  const Graph k4 = generate("complete:n=4");
  const Graph d = delete_edge(k4, 2);
  EXPECT_EQ(d.edge_count(), 5);
  EXPECT_FALSE(d.contains_edge(2));
  for (const Edge& e : k4.edges())
    if (e.id != 2) EXPECT_EQ(d.edge(e.id), e);
  EXPECT_THROW(delete_edge(k4, 42), UnknownEdgeError);
}

TEST(ContractEdge, Examples) {
  const Graph c3 = contract_edge(generate("cycle:n=4"), 0);
  EXPECT_EQ(c3.vertex_count(), 3);
  EXPECT_EQ(c3.edge_count(), 3);

  const Graph k3 = contract_edge(generate("complete:n=4"), 0);
  EXPECT_EQ(k3.vertex_count(), 3);
  EXPECT_EQ(k3.edge_count(), 3);
  EXPECT_TRUE(k3.is_simple());

  const Graph point = contract_edge(parse_edge_list("0 1"), 0);
  EXPECT_EQ(point.vertex_count(), 1);
  EXPECT_EQ(point.edge_count(), 0);
  EXPECT_THROW(contract_edge(point, 0), UnknownEdgeError);
}

TEST(ContractEdge, LabelsShiftDown) {
  // Path 0-1-2-3; contracting 1-2 merges 2 into 1 and relabels 3 as 2.
  const Graph p = Graph::from_pairs(4, std::vector<std::pair<int, int>>{
                                           {0, 1}, {1, 2}, {2, 3}});
  const Graph c = contract_edge(p, 1);
  EXPECT_EQ(c.vertex_count(), 3);
  EXPECT_EQ(edge_set(c), (std::set<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(c.edge(2).a + c.edge(2).b, 3);
}

TEST(Simplify, CollapsesToSmallestId) {
  const Graph multi(2, {{0, 1, 5}, {1, 0, 3}, {0, 1, 9}});
  const Graph s = simplify(multi);
  ASSERT_EQ(s.edge_count(), 1);
  EXPECT_EQ(s.edges()[0].id, 3);
  EXPECT_EQ(simplify(s), s);
  const Graph k4 = generate("complete:n=4");
  EXPECT_EQ(simplify(k4), k4);
}

TEST(NormalizeLabels, FirstAppearanceOrder) {
  const Graph g(5, {{3, 1, 7}, {1, 4, 2}});
  const Graph n = normalize_labels(g);
  EXPECT_EQ(n.vertex_count(), 5);
  // Edge 2 (1-4) comes first: 1 -> 0, 4 -> 1; then 3 -> 2; 0 and 2 isolated.
  EXPECT_EQ(n.edges()[0], (Edge{0, 1, 0}));
  EXPECT_EQ(n.edges()[1], (Edge{2, 0, 1}));
  EXPECT_EQ(normalize_labels(n), n);
}

TEST(Graph, Components) {
  EXPECT_EQ(Graph(4).component_count(), 4);
  EXPECT_EQ(parse_edge_list("0 1\n2 3\n").component_count(), 2);
  EXPECT_TRUE(generate("petersen").is_connected());
}
