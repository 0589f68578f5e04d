#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

// Shortest circuit length; nullopt stands for an infinite girth (forest).
using Girth = std::optional<int>;

// Breadth-first search from every vertex. Requires a simple graph.
Girth girth(const Graph& g);

// Calls `visit` once per simple circuit of length 3..max_length with the
// circuit's vertices in traversal order. The sequence starts at the lowest
// vertex and proceeds toward the smaller of its two circuit neighbours.
void for_each_circuit(const Graph& g, int max_length,
                      const std::function<void(std::span<const int>)>& visit);

std::uint64_t count_cycles(const Graph& g, int length);
std::uint64_t count_cycles_through_edge(const Graph& g, EdgeId edge,
                                        int length);
// Circuits of the given length through xy that use no edge xz or yz with z a
// common neighbour of x and y.
std::uint64_t count_cycles_star(const Graph& g, EdgeId edge, int length);

// Per-length global and per-edge circuit counts for lengths up to
// max_length (default: v).
class CycleCensus {
 public:
  static CycleCensus compute(const Graph& g,
                             std::optional<int> max_length = std::nullopt);

  Girth girth() const noexcept { return girth_; }
  int max_length() const noexcept { return max_length_; }

  // k_n. Zero outside 0..max_length.
  std::uint64_t k(int length) const noexcept;
  // l_n(edge). Throws UnknownEdgeError.
  std::uint64_t l(EdgeId edge, int length) const;
  // l*_n(edge).
  std::uint64_t l_star(EdgeId edge, int length) const;

 private:
  const std::vector<std::uint64_t>& row(
      const std::map<EdgeId, std::vector<std::uint64_t>>& table,
      EdgeId edge) const;

  Girth girth_;
  int max_length_ = 0;
  std::vector<std::uint64_t> k_;
  std::map<EdgeId, std::vector<std::uint64_t>> l_;
  std::map<EdgeId, std::vector<std::uint64_t>> l_star_;
};

struct Lemma2Row {
  int length = 0;
  std::uint64_t k = 0, l = 0, l_next = 0, l_star_next = 0;
  std::uint64_t measured_deleted = 0, predicted_deleted = 0;
  std::uint64_t measured_contracted = 0, predicted_contracted = 0;
  bool deletion_matches = false;
  bool contraction_matches = false;
};

struct Lemma2Report {
  EdgeId edge = 0;
  std::uint64_t triangles_through_edge = 0;  // l_3
  // Case (ii) applies when l_3 != 0.
  bool triangle_case() const noexcept { return triangles_through_edge != 0; }

  int deleted_vertices = 0, deleted_edges = 0;
  int contracted_vertices = 0, contracted_edges = 0;
  int predicted_contracted_edges = 0;
  bool counts_match = false;
  std::vector<Lemma2Row> rows;  // lengths 3..max_length

  bool deletion_holds() const;
  bool contraction_holds() const;
};

// Measures circuit counts of G-xy and G/xy directly and compares them with
// the deletion and contraction predictions from the census of G.
Lemma2Report verify_lemma2(const Graph& g, EdgeId edge, int max_length);

}  // namespace chromabound
