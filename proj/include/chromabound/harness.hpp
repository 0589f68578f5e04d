#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromabound/bounds.hpp"
#include "chromabound/chromatic.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/report.hpp"

namespace chromabound {

struct CorpusGraph {
  std::string id;
  std::string source;  // generator string that rebuilds the graph
  Graph graph{1};
};

// Seeded connected G(n, m) draws. m defaults to the range [n, C(n,2)] so
// every draw has a circuit.
struct RandomFamily {
  int n_min = 4;
  int n_max = 8;
  std::optional<long long> m_min;
  std::optional<long long> m_max;
  int count = 100;
  std::uint64_t seed = 42;

  // "n=5,m=7,count=10,seed=7"; n and m also accept ranges such as "n=4-8".
  static RandomFamily parse(std::string_view text);
};

// Corpus-level limits. The colouring oracle gets a larger work cap than the
// library default so the 10-vertex Petersen graph is checked at every q.
struct Budgets {
  int max_vertices = 12;
  int max_broken_circuit_edges = 15;
  int max_oracle_vertices = 10;
  double coloring_work = 1e12;
};

struct CorpusSpec {
  // (id, generator string) pairs.
  std::vector<std::pair<std::string, std::string>> named;
  std::optional<RandomFamily> random;
  Budgets budgets;

  // T2, P3, P4, C3..C8, K3..K6, K2,3, K3,3, Petersen and 100 random
  // connected graphs with 4 <= n <= 8 drawn from seed 42.
  static CorpusSpec default_corpus();
  static CorpusSpec named_only();
  static CorpusSpec empty();
  // "default", "named" or "empty".
  static CorpusSpec by_name(std::string_view name);

  // Deterministic for a fixed spec; graphs are label-normalized and sorted
  // by id.
  std::vector<CorpusGraph> expand() const;
};

struct SuiteTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct BandStats {
  std::uint64_t count = 0;
  double sum = 0.0;
  double max = 0.0;
  double mean() const { return count ? sum / count : 0.0; }
};

struct SweepSummary {
  std::uint64_t graphs = 0;
  // Suite or check name -> tally.
  std::map<std::string, SuiteTally> suites;
  // Expected deviations, reported without failing the run.
  std::vector<Json> findings;
  // Replayable counterexamples; each one is also a failure.
  std::vector<Json> witnesses;
  std::vector<std::string> notices;
  // improved/exact per r-band: "leading", "upper", "lower".
  std::map<std::string, BandStats> tightness;
  std::uint64_t convention_hits = 0;

  bool ok() const;
  Json to_json() const;
};

std::vector<std::string> suite_names();

struct SuiteOptions {
  Budgets budgets;
  EngineOptions engine;
  EdgeMode mode = EdgeMode::kPerR;  // sweep only; theorem1 runs both modes
};

// Throws InvalidArgumentError for an unknown suite.
SweepSummary run_suite(std::string_view suite,
                       const std::vector<CorpusGraph>& corpus,
                       const SuiteOptions& options = {});

// Builds one BoundReport per graph with a circuit and hands it to `sink`
// before folding it into the summary.
SweepSummary run_sweep(
    const std::vector<CorpusGraph>& corpus, const SuiteOptions& options,
    const std::function<void(const CorpusGraph&, const BoundReport&)>& sink);

}  // namespace chromabound
