#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromabound/bigint.hpp"
#include "chromabound/chromatic.hpp"
#include "chromabound/cycles.hpp"
#include "chromabound/graph.hpp"

namespace chromabound {

// Binomial coefficient under the convention
//   C(a, 0) = 1 for every a (checked first, so also for a < 0),
//   C(a, b) = 0 when b < 0 or b > a,
// and the ordinary value otherwise.
BigInt binom(long long a, long long b);

// Number of binom calls that hit C(a, 0) with a < 0 since start-up (or the
// last reset). The convention is ambiguous there, so sweeps report it.
std::uint64_t negative_top_zero_bottom_hits();
void reset_negative_top_zero_bottom_hits();

struct Lemma1Sides {
  BigInt left;   // -C(a,c) + C(b,c)
  BigInt right;  // -sum_{n=1}^{a-b} C(a-n, c-1)
};

// Requires a > b >= c >= 0.
Lemma1Sides lemma1_sides(long long a, long long b, long long c);

// Exact a_r for the leading indices: C(e, v-r) when r > v-g+1 and
// C(e, v-r) - k_g when r = v-g+1; nullopt below that.
std::optional<BigInt> leading_coefficient(long long e, long long v,
                                          long long g, long long kg,
                                          long long r);

struct BoundParams {
  long long e = 0;
  long long v = 0;
  long long g = 0;         // girth, finite
  long long kg = 0;        // circuits of length g
  long long lg = 0;        // circuits of length g through the chosen edge
  long long lgp1star = 0;  // l*_{g+1} for the chosen edge, used when g = 3
  long long r = 1;

  // Throws InvalidArgumentError unless 3 <= g <= v, kg >= 1,
  // 0 <= lg <= kg, lgp1star >= 0 and 1 <= r <= v.
  void validate() const;
};

BigInt li_tian_bound(const BoundParams& p);

// S = sum_{n=1}^{kg-lg} sum_{m=1}^{lg-1} C(e-g+1-n-m, v-r-g)
BigInt s_term(const BoundParams& p);

// [g = 3] * sum_{n=1}^{kg+l*_{g+1}-lg} C(e-lg-g+1-n, v-r-g)
BigInt triangle_correction(const BoundParams& p);

// Li-Tian bound minus S minus the triangle correction.
BigInt improved_bound(const BoundParams& p);

// The same bound with both correction sums telescoped into binomials.
BigInt improved_bound_alt(const BoundParams& p);

enum class EdgeMode { kFixed, kPerR };

std::string to_string(EdgeMode mode);
EdgeMode parse_edge_mode(std::string_view text);

struct EdgeChoice {
  EdgeId edge = 0;
  int x = 0, y = 0;
  std::uint64_t lg = 0;
  std::uint64_t lgp1star = 0;
  BigInt s_value;     // S at the row's r
  BigInt correction;  // S plus the triangle correction at the row's r
  EdgeMode mode = EdgeMode::kPerR;
};

// Parameters for the edge at index r. Throws AcyclicGraphError without a
// finite girth.
BoundParams bound_params(const Graph& g, const CycleCensus& census,
                         EdgeId edge, int r);

// Among edges on at least one girth circuit, the one with the largest total
// correction at r (r = 1 in fixed mode); ties go to the smallest id.
EdgeChoice select_edge(const Graph& g, const CycleCensus& census, int r,
                       EdgeMode mode);

// EdgeChoice for a caller-chosen edge, evaluated at r.
EdgeChoice evaluate_edge(const Graph& g, const CycleCensus& census,
                         EdgeId edge, int r, EdgeMode mode);

struct BoundFlags {
  bool bound_holds = false;         // improved >= exact
  bool dominates_li_tian = false;   // improved <= Li-Tian
  bool tight_at_leading = false;    // improved == exact when r >= v-g+1
};

struct BoundRow {
  int r = 0;
  BigInt exact;
  BigInt li_tian;
  BigInt improved;
  BigInt improved_alt;
  std::optional<BigInt> leading;  // exact leading formula when it applies
  EdgeChoice choice;
  BoundFlags flags;
};

struct BoundReportOptions {
  EdgeMode mode = EdgeMode::kPerR;
  std::optional<EdgeId> edge_override;  // forces this edge for every r
  EngineOptions engine;
};

struct BoundReport {
  std::string graph_id;
  Graph graph{1};
  int girth = 0;
  std::uint64_t kg = 0;
  EdgeMode mode = EdgeMode::kPerR;
  std::optional<EdgeId> edge_override;
  std::vector<BoundRow> rows;  // r = 1..v

  bool all_hold() const;
  bool all_dominate() const;
  bool all_tight() const;
};

BoundReport bound_report(const Graph& g, const BoundReportOptions& options = {},
                         std::string graph_id = "graph");

}  // namespace chromabound
