#include "chromabound/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "chromabound/cycles.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/random.hpp"

namespace chromabound {

namespace {

std::pair<long long, long long> parse_range(std::string_view key,
                                            std::string_view value) {
  auto to_int = [&](std::string_view s) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return x;
    } catch (const std::exception&) {
      throw InvalidArgumentError("random corpus: " + std::string(key) +
                                 " must be an integer or range, got '" +
                                 std::string(value) + "'");
    }
  };
  auto dash = value.find('-', 1);
  if (dash == std::string_view::npos) {
    long long x = to_int(value);
    return {x, x};
  }
  return {to_int(value.substr(0, dash)), to_int(value.substr(dash + 1))};
}

std::string pad3(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03zu", i);
  return buf;
}

}  // namespace

RandomFamily RandomFamily::parse(std::string_view text) {
  RandomFamily family;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgumentError("random corpus: '" + std::string(item) +
                                 "' is not key=value");
    std::string_view key = item.substr(0, eq);
    auto [lo, hi] = parse_range(key, item.substr(eq + 1));
    if (lo > hi)
      throw InvalidArgumentError("random corpus: empty range for " +
                                 std::string(key));
    if (key == "n") {
      if (lo < 2 || hi > 64)
        throw InvalidArgumentError("random corpus: n must lie in 2..64");
      family.n_min = static_cast<int>(lo);
      family.n_max = static_cast<int>(hi);
    } else if (key == "m") {
      family.m_min = lo;
      family.m_max = hi;
    } else if (key == "count") {
      if (lo < 0) throw InvalidArgumentError("random corpus: count < 0");
      family.count = static_cast<int>(lo);
    } else if (key == "seed") {
      if (lo < 0) throw InvalidArgumentError("random corpus: seed < 0");
      family.seed = static_cast<std::uint64_t>(lo);
    } else {
      throw InvalidArgumentError("random corpus: unknown key '" +
                                 std::string(key) + "'");
    }
  }
  return family;
}

CorpusSpec CorpusSpec::named_only() {
  CorpusSpec spec;
  spec.named = {{"T2", "path:n=2"},
                {"P3", "path:n=3"},
                {"P4", "path:n=4"}};
  for (int n = 3; n <= 8; ++n)
    spec.named.emplace_back("C" + std::to_string(n),
                            "cycle:n=" + std::to_string(n));
  for (int n = 3; n <= 6; ++n)
    spec.named.emplace_back("K" + std::to_string(n),
                            "complete:n=" + std::to_string(n));
  spec.named.emplace_back("K2_3", "completeBipartite:a=2,b=3");
  spec.named.emplace_back("K3_3", "completeBipartite:a=3,b=3");
  spec.named.emplace_back("Petersen", "petersen");
  return spec;
}

CorpusSpec CorpusSpec::default_corpus() {
  CorpusSpec spec = named_only();
  spec.random = RandomFamily{};
  return spec;
}

CorpusSpec CorpusSpec::empty() { return CorpusSpec{}; }

CorpusSpec CorpusSpec::by_name(std::string_view name) {
  if (name == "default") return default_corpus();
  if (name == "named") return named_only();
  if (name == "empty") return empty();
  throw InvalidArgumentError("unknown corpus '" + std::string(name) +
                             "' (expected default, named or empty)");
}

std::vector<CorpusGraph> CorpusSpec::expand() const {
  std::vector<CorpusGraph> out;
  for (const auto& [id, source] : named)
    out.push_back({id, source, normalize_labels(generate(source))});

  if (random) {
    Rng rng(random->seed);
    for (int i = 0; i < random->count; ++i) {
      const long long n = rng.between(random->n_min, random->n_max);
      const long long pairs = n * (n - 1) / 2;
      long long hi = std::min(random->m_max.value_or(pairs), pairs);
      long long lo = std::max(random->m_min.value_or(n), n - 1);
      lo = std::min(lo, hi);
      const long long m = rng.between(lo, hi);
      const std::uint64_t graph_seed = rng.below(std::uint64_t{1} << 62);
      GeneratorSpec gen{"randomGnm", {{"n", n}, {"m", m}}, graph_seed};
      out.push_back({"rand-" + pad3(static_cast<std::size_t>(i)),
                     gen.to_string(), normalize_labels(generate(gen))});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CorpusGraph& l, const CorpusGraph& r) {
                     return l.id < r.id;
                   });
  return out;
}

bool SweepSummary::ok() const {
  if (!witnesses.empty()) return false;
  return std::all_of(suites.begin(), suites.end(),
                     [](const auto& kv) { return kv.second.failed == 0; });
}

Json SweepSummary::to_json() const {
  Json j;
  j["graphs"] = std::to_string(graphs);
  j["ok"] = ok();
  Json tallies = Json::object();
  for (const auto& [name, t] : suites)
    tallies[name] = {{"passed", std::to_string(t.passed)},
                     {"failed", std::to_string(t.failed)},
                     {"skipped", std::to_string(t.skipped)}};
  j["suites"] = std::move(tallies);
  j["findings"] = findings;
  j["witnesses"] = witnesses;
  j["notices"] = notices;
  Json bands = Json::object();
  for (const auto& [band, s] : tightness)
    bands[band] = {{"count", std::to_string(s.count)},
                   {"mean_ratio", s.mean()},
                   {"max_ratio", s.max}};
  j["tightness"] = std::move(bands);
  j["negative_top_binomial_hits"] = std::to_string(convention_hits);
  return j;
}

std::vector<std::string> suite_names() {
  return {"lemma1", "lemma2", "additivity", "leading",
          "theorem1", "prop1", "oracles"};
}

namespace {

void tally(SweepSummary& s, const std::string& name, bool ok) {
  auto& t = s.suites[name];
  (ok ? t.passed : t.failed) += 1;
}

void skip(SweepSummary& s, const std::string& name, const std::string& why) {
  s.suites[name].skipped += 1;
  s.notices.push_back(name + ": skipped " + why);
}

bool within(const CorpusGraph& cg, const Budgets& b, SweepSummary& s,
            const std::string& suite) {
  if (cg.graph.vertex_count() > b.max_vertices) {
    skip(s, suite, cg.id + " (v = " +
                       std::to_string(cg.graph.vertex_count()) +
                       " exceeds budget)");
    return false;
  }
  return true;
}

void run_lemma1(SweepSummary& s) {
  for (long long a = 1; a <= 30; ++a)
    for (long long b = 0; b < a; ++b)
      for (long long c = 0; c <= b; ++c) {
        auto sides = lemma1_sides(a, b, c);
        tally(s, "lemma1", sides.left == sides.right);
      }
}

void contraction_findings(SweepSummary& s, const CorpusGraph& cg,
                          const Edge& e, const Lemma2Report& rep,
                          const char* kind) {
  for (const auto& row : rep.rows) {
    if (row.contraction_matches) continue;
    Json f;
    f["kind"] = kind;
    f["graph_id"] = cg.id;
    f["edge"] = {{"id", std::to_string(e.id)},
                 {"x", std::to_string(e.a)},
                 {"y", std::to_string(e.b)}};
    f["n"] = std::to_string(row.length);
    f["predicted"] = std::to_string(row.predicted_contracted);
    f["measured"] = std::to_string(row.measured_contracted);
    s.findings.push_back(std::move(f));
  }
}

void run_lemma2(SweepSummary& s, const std::vector<CorpusGraph>& corpus,
                const SuiteOptions& o) {
  std::uint64_t triangle_pairs = 0, triangle_matches = 0;
  for (const auto& cg : corpus) {
    if (!within(cg, o.budgets, s, "lemma2")) continue;
    const Graph& g = cg.graph;
    for (const Edge& e : g.edges()) {
      const auto rep = verify_lemma2(g, e.id, g.vertex_count());
      bool deletion = rep.deleted_vertices == g.vertex_count() &&
                      rep.deleted_edges == g.edge_count() - 1;
      for (const auto& row : rep.rows) deletion &= row.deletion_matches;
      tally(s, "lemma2.deletion", deletion);

      if (!rep.triangle_case()) {
        tally(s, "lemma2.contraction_i", rep.contraction_holds());
        contraction_findings(s, cg, e, rep, "lemma2_case_i");
        continue;
      }
      tally(s, "lemma2.contraction_ii_counts", rep.counts_match);
      ++triangle_pairs;
      if (rep.contraction_holds()) ++triangle_matches;
      contraction_findings(s, cg, e, rep, "lemma2_case_ii");
    }
  }
  s.notices.push_back("lemma2: case (ii) prediction matched on " +
                      std::to_string(triangle_matches) + " of " +
                      std::to_string(triangle_pairs) + " (graph, edge) pairs");
}

void run_additivity(SweepSummary& s, const std::vector<CorpusGraph>& corpus,
                    const SuiteOptions& o) {
  for (const auto& cg : corpus) {
    if (!within(cg, o.budgets, s, "additivity")) continue;
    for (const Edge& e : cg.graph.edges())
      tally(s, "additivity",
            verify_additivity(cg.graph, e.id, o.engine).holds());
  }
}

void run_leading(SweepSummary& s, const std::vector<CorpusGraph>& corpus,
                 const SuiteOptions& o) {
  for (const auto& cg : corpus) {
    if (!within(cg, o.budgets, s, "leading")) continue;
    const Graph& g = cg.graph;
    const int v = g.vertex_count(), e = g.edge_count();
    const auto p = chromatic_polynomial(g, o.engine);
    bool ok = p.magnitude(v) == 1 && (v < 2 || p.magnitude(v - 1) == e);
    const auto gi = girth(g);
    if (gi) {
      const auto kg = count_cycles(g, *gi);
      ok &= p.magnitude(v - *gi + 1) ==
            binom(e, *gi - 1) - BigInt(kg);
      for (int r = v - *gi + 1; r <= v; ++r)
        ok &= leading_coefficient(e, v, *gi, static_cast<long long>(kg), r) ==
              std::optional<BigInt>(p.magnitude(r));
    }
    tally(s, "leading", ok);
  }
}

void run_prop1(SweepSummary& s, const std::vector<CorpusGraph>& corpus,
               const SuiteOptions& o) {
  for (const auto& cg : corpus) {
    if (!within(cg, o.budgets, s, "prop1")) continue;
    const auto p = chromatic_polynomial(cg.graph, o.engine);
    tally(s, "prop1",
          check_proposition1(p, cg.graph.edge_count()).consistent());
  }
}

std::vector<EdgeId> shuffled_ids(const Graph& g, std::uint64_t seed) {
  std::vector<EdgeId> ids;
  for (const Edge& e : g.edges()) ids.push_back(e.id);
  Rng rng(seed);
  for (std::size_t i = ids.size(); i > 1; --i)
    std::swap(ids[i - 1], ids[rng.below(i)]);
  return ids;
}

void run_oracles(SweepSummary& s, const std::vector<CorpusGraph>& corpus,
                 const SuiteOptions& o) {
  for (const auto& cg : corpus) {
    const Graph& g = cg.graph;
    const int v = g.vertex_count();
    if (!within(cg, o.budgets, s, "oracles")) continue;
    const auto p = chromatic_polynomial(g, o.engine);

    if (v <= o.budgets.max_oracle_vertices) {
      bool ok = true;
      for (int q = 0; q <= v; ++q)
        ok &= p.evaluate(q) ==
              brute_force_colorings(g, q, o.budgets.coloring_work);
      tally(s, "oracles.coloring", ok);
    } else {
      skip(s, "oracles.coloring", cg.id + " (v above oracle budget)");
    }

    if (g.edge_count() <= o.budgets.max_broken_circuit_edges) {
      std::vector<EdgeId> ascending;
      for (const Edge& e : g.edges()) ascending.push_back(e.id);
      std::vector<EdgeId> descending(ascending.rbegin(), ascending.rend());
      auto shuffled = shuffled_ids(g, 0x5eed + ascending.size());
      bool ok = true;
      for (std::vector<EdgeId>* order :
           {&ascending, &descending, &shuffled})
        ok &= coefficients_via_broken_circuits(
                  g, *order, o.budgets.max_broken_circuit_edges) == p;
      tally(s, "oracles.whitney", ok);
    } else {
      skip(s, "oracles.whitney", cg.id + " (e above enumeration budget)");
    }
  }
}

void fold_report(SweepSummary& s, const CorpusGraph& cg,
                 const BoundReport& report, const std::string& prefix) {
  const int v = cg.graph.vertex_count();
  const int leading_from = v - report.girth + 1;
  for (const BoundRow& row : report.rows) {
    tally(s, prefix + ".soundness", row.flags.bound_holds);
    if (!row.flags.bound_holds) s.witnesses.push_back(witness_json(report, row));
    tally(s, prefix + ".dominance", row.flags.dominates_li_tian);
    tally(s, prefix + ".forms", row.improved == row.improved_alt);
    if (report.kg == 1 && row.choice.lg == 1)
      tally(s, prefix + ".reduction", row.improved == row.li_tian);
    if (row.r >= leading_from) {
      tally(s, prefix + ".leading_tightness", row.flags.tight_at_leading);
      if (!row.flags.tight_at_leading) {
        Json f;
        f["kind"] = "leading_tightness";
        f["graph_id"] = cg.id;
        f["mode"] = to_string(report.mode);
        f["r"] = std::to_string(row.r);
        f["exact"] = row.exact.str();
        f["improved"] = row.improved.str();
        f["li_tian"] = row.li_tian.str();
        s.findings.push_back(std::move(f));
      }
    }
    if (row.exact > 0) {
      const double ratio = static_cast<double>(row.improved) /
                           static_cast<double>(row.exact);
      const std::string band = row.r >= leading_from ? "leading"
                               : 2 * row.r > v       ? "upper"
                                                     : "lower";
      auto& b = s.tightness[band];
      ++b.count;
      b.sum += ratio;
      b.max = std::max(b.max, ratio);
    }
  }
}

void run_theorem1(SweepSummary& s, const std::vector<CorpusGraph>& corpus,
                  const SuiteOptions& o) {
  for (const auto& cg : corpus) {
    if (!within(cg, o.budgets, s, "theorem1")) continue;
    if (!girth(cg.graph)) {
      skip(s, "theorem1", cg.id + " (acyclic, girth undefined)");
      continue;
    }
    for (EdgeMode mode : {EdgeMode::kFixed, EdgeMode::kPerR}) {
      BoundReportOptions bo;
      bo.mode = mode;
      bo.engine = o.engine;
      fold_report(s, cg, bound_report(cg.graph, bo, cg.id), "theorem1");
    }
  }
}

}  // namespace

SweepSummary run_suite(std::string_view suite,
                       const std::vector<CorpusGraph>& corpus,
                       const SuiteOptions& options) {
  SweepSummary s;
  s.graphs = suite == "lemma1" ? 0 : corpus.size();
  const auto hits_before = negative_top_zero_bottom_hits();
  if (suite == "lemma1")
    run_lemma1(s);
  else if (suite == "lemma2")
    run_lemma2(s, corpus, options);
  else if (suite == "additivity")
    run_additivity(s, corpus, options);
  else if (suite == "leading")
    run_leading(s, corpus, options);
  else if (suite == "theorem1")
    run_theorem1(s, corpus, options);
  else if (suite == "prop1")
    run_prop1(s, corpus, options);
  else if (suite == "oracles")
    run_oracles(s, corpus, options);
  else
    throw InvalidArgumentError("unknown suite '" + std::string(suite) + "'");
  s.convention_hits = negative_top_zero_bottom_hits() - hits_before;
  return s;
}

SweepSummary run_sweep(
    const std::vector<CorpusGraph>& corpus, const SuiteOptions& options,
    const std::function<void(const CorpusGraph&, const BoundReport&)>& sink) {
  SweepSummary s;
  const auto hits_before = negative_top_zero_bottom_hits();
  for (const auto& cg : corpus) {
    ++s.graphs;
    if (!within(cg, options.budgets, s, "bounds")) continue;
    if (!girth(cg.graph)) {
      skip(s, "bounds", cg.id + " (acyclic, girth undefined)");
      continue;
    }
    BoundReportOptions bo;
    bo.mode = options.mode;
    bo.engine = options.engine;
    const auto report = bound_report(cg.graph, bo, cg.id);
    if (sink) sink(cg, report);
    fold_report(s, cg, report, "bounds");
  }
  s.convention_hits = negative_top_zero_bottom_hits() - hits_before;
  return s;
}

}  // namespace chromabound
