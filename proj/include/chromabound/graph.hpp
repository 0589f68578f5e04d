#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromabound {

using EdgeId = int;

struct Edge {
  int a;
  int b;
  EdgeId id;

  // Endpoint other than `u`; `u` must be an endpoint.
  int other(int u) const noexcept { return u == a ? b : a; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Loopless undirected multigraph on vertices 0..v-1. Every edge carries an id
// that stays fixed under deletion. Instances are immutable once built.
class Graph {
 public:
  // Throws InvalidGraphError for v < 1, loops, out-of-range endpoints or
  // duplicate ids. Edges are stored ordered by id.
  explicit Graph(int vertex_count, std::vector<Edge> edges = {});

  // Edge ids are assigned 0..m-1 in input order.
  static Graph from_pairs(int vertex_count,
                          std::span<const std::pair<int, int>> pairs);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool contains_edge(EdgeId id) const noexcept;
  // Throws UnknownEdgeError.
  const Edge& edge(EdgeId id) const;
  // Smallest id joining a and b, if any.
  std::optional<EdgeId> edge_between(int a, int b) const noexcept;
  bool adjacent(int a, int b) const noexcept {
    return edge_between(a, b).has_value();
  }
  // Sorted, without repetition.
  std::vector<int> neighbors(int u) const;
  std::vector<std::vector<int>> adjacency_lists() const;

  bool is_simple() const;
  int component_count() const;
  bool is_connected() const { return component_count() == 1; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// G - xy. Surviving edges keep their ids.
Graph delete_edge(const Graph& g, EdgeId id);

// G / xy, simplified. The merged vertex takes the smaller endpoint label and
// every label above the larger endpoint shifts down by one. Edges that would
// become loops are dropped and each parallel family keeps its smallest id.
Graph contract_edge(const Graph& g, EdgeId id);

// Collapses parallel edges onto the smallest id of each family.
Graph simplify(const Graph& g);

// Relabels vertices in order of first appearance along the edges (taken in
// id order) and renumbers edge ids 0..e-1. Isolated vertices go last.
// to_edge_list followed by parse_edge_list reproduces a normalized graph
// exactly.
Graph normalize_labels(const Graph& g);

// Edge-list text: one "u v" pair per line, '#' comments, blank lines
// ignored. Labels are renumbered densely in order of first appearance and
// the result is simplified.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list for a normalized graph (edges in id order).
// Isolated vertices cannot be expressed and are lost.
std::string to_edge_list(const Graph& g);

// Generator families addressed as "family:key=value,...", for example
// "complete:n=4", "completeBipartite:a=2,b=3", "randomGnm:n=6,m=9,seed=3".
struct GeneratorSpec {
  std::string family;
  std::vector<std::pair<std::string, long long>> params;
  std::optional<std::uint64_t> seed;

  std::optional<long long> param(std::string_view key) const;
  std::string to_string() const;
};

GeneratorSpec parse_generator(std::string_view text);

// Bounded number of redraws for randomGnm until the sample is connected.
inline constexpr int kMaxConnectivityRetries = 10000;

Graph generate(const GeneratorSpec& spec);
Graph generate(std::string_view text,
               std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace chromabound
