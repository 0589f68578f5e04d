#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chromabound/bigint.hpp"
#include "chromabound/graph.hpp"

namespace chromabound {

// P(G, q) = sum_{r=1..v} (-1)^{v-r} a_r q^r, stored as the magnitudes
// a_1..a_v.
class ChromaticPolynomial {
 public:
  ChromaticPolynomial(int vertex_count, std::vector<BigInt> magnitudes);

  // coefficients[k] multiplies q^k; the constant term must be zero and the
  // signs must alternate as above.
  static ChromaticPolynomial from_coefficients(
      std::span<const BigInt> coefficients);

  int vertex_count() const noexcept { return v_; }
  // a_r for 1 <= r <= v, zero elsewhere.
  BigInt magnitude(int r) const;
  std::span<const BigInt> magnitudes() const noexcept { return a_; }
  // (-1)^{v-r} a_r.
  BigInt coefficient(int r) const;

  BigInt evaluate(const BigInt& q) const;

  // Expanded, highest power first: "q^4 - 6q^3 + 11q^2 - 6q".
  std::string to_string() const;
  // a_1..a_v as decimal strings.
  std::vector<std::string> magnitude_strings() const;

  friend bool operator==(const ChromaticPolynomial&,
                         const ChromaticPolynomial&) = default;

 private:
  int v_;
  std::vector<BigInt> a_;
};

class ChromaticCache;

struct EngineOptions {
  // Reuse results for isomorphic subproblems on at most
  // kMaxCanonicalVertices vertices. Off by default.
  bool memoize = false;
  std::shared_ptr<ChromaticCache> cache;  // created on demand when memoizing
};

inline constexpr int kMaxCanonicalVertices = 10;

// Deletion-contraction P(G) = P(G-xy) - P(G/xy), pivoting on an edge of a
// shortest circuit. Edgeless graphs, forests and disconnected graphs are
// closed out directly. Requires a simple graph on at most 64 vertices.
ChromaticPolynomial chromatic_polynomial(const Graph& g,
                                         const EngineOptions& options = {});

// Thread-safe store of polynomials keyed by canonical form.
class ChromaticCache {
 public:
  ChromaticCache();
  ~ChromaticCache();
  ChromaticCache(const ChromaticCache&) = delete;
  ChromaticCache& operator=(const ChromaticCache&) = delete;

  std::size_t size() const;
  std::uint64_t hits() const;

  struct Impl;
  Impl& impl() { return *impl_; }

 private:
  std::unique_ptr<Impl> impl_;
};

// Canonical form of a simple graph given as adjacency bitmasks, or empty when
// the graph is too large or the labelling search exceeds its node cap.
// Isomorphic graphs map to the same string.
std::string canonical_form(std::span<const std::uint64_t> adjacency);

// Default bound on v * q^v for brute_force_colorings.
inline constexpr double kDefaultColoringBudget = 1e9;

// Exact count of proper q-colourings by exhaustive backtracking. Colours are
// introduced in first-use order and each class of relabelled assignments is
// weighted by q(q-1)...(q-k+1), so the count is exact. Throws
// BudgetExceededError when v * q^v exceeds `budget`.
BigInt brute_force_colorings(const Graph& g, int q,
                             double budget = kDefaultColoringBudget);

inline constexpr int kDefaultBrokenCircuitEdgeBudget = 20;

// a_r as the number of (v-r)-edge subsets containing no broken circuit, a
// broken circuit being a circuit minus its last edge under `edge_order`
// (listed first to last). An empty order means ascending id.
ChromaticPolynomial coefficients_via_broken_circuits(
    const Graph& g, std::span<const EdgeId> edge_order = {},
    int max_edges = kDefaultBrokenCircuitEdgeBudget);

struct AdditivityRow {
  int r = 0;
  BigInt a, a_deleted, a_contracted;
  bool holds = false;
};

struct AdditivityReport {
  EdgeId edge = 0;
  std::vector<AdditivityRow> rows;  // r = 1..v

  bool holds() const;
};

// a_r = a'_r + a''_r for r < v and a_v = a'_v.
AdditivityReport verify_additivity(const Graph& g, EdgeId edge,
                                   const EngineOptions& options = {});

struct Prop1Report {
  // a_v <= a_{v-1} <= ... <= a_1
  bool nondecreasing_chain = false;
  BigInt value_at_one;  // P(G, 1)
  std::vector<int> peak_positions;  // every r with maximal a_r
  bool chain_expected = false;  // only e = 1 permits the chain
  bool value_expected = false;  // P(G, 1) = 0 when e >= 1

  bool consistent() const {
    return nondecreasing_chain == chain_expected && value_expected;
  }
};

Prop1Report check_proposition1(const ChromaticPolynomial& p, int edge_count);

}  // namespace chromabound
