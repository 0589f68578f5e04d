// Command-line front end: poly, bounds, verify, sweep.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "chromabound/bounds.hpp"
#include "chromabound/chromatic.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/harness.hpp"
#include "chromabound/report.hpp"

namespace cb = chromabound;
namespace fs = std::filesystem;

namespace {

struct SourceFlags {
  std::string input;
  std::string gen;
  std::optional<std::uint64_t> seed;
};

void add_source_flags(CLI::App* cmd, SourceFlags& f) {
  auto* in = cmd->add_option("--input", f.input, "edge-list file ('-' for stdin)");
  auto* gen = cmd->add_option("--gen", f.gen, "generator, e.g. complete:n=4");
  in->excludes(gen);
  cmd->add_option("--seed", f.seed, "seed for random generators");
}

cb::Graph load_graph(const SourceFlags& f) {
  if (!f.gen.empty()) return cb::normalize_labels(cb::generate(f.gen, f.seed));
  if (f.input.empty())
    throw cb::InvalidArgumentError("one of --input or --gen is required");
  if (f.input == "-") return cb::parse_edge_list(std::cin);
  std::ifstream in(f.input);
  if (!in) throw cb::Error("cannot open '" + f.input + "'");
  return cb::parse_edge_list(in);
}

std::string source_id(const SourceFlags& f) {
  return f.gen.empty() ? fs::path(f.input).filename().string() : f.gen;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw cb::Error("cannot write '" + out_path + "'");
  out << text;
}

struct CorpusFlags {
  std::string corpus;
  std::string random;
  std::optional<std::uint64_t> seed;
  bool memo = false;
};

void add_corpus_flags(CLI::App* cmd, CorpusFlags& f) {
  cmd->add_option("--corpus", f.corpus, "default | named | empty");
  cmd->add_option("--random", f.random,
                  "random family, e.g. n=5,m=7,count=10,seed=7");
  cmd->add_option("--seed", f.seed, "seed for the random family");
  cmd->add_flag("--memo", f.memo, "cache isomorphic subproblems");
}

cb::CorpusSpec corpus_from(const CorpusFlags& f) {
  cb::CorpusSpec spec;
  if (!f.corpus.empty())
    spec = cb::CorpusSpec::by_name(f.corpus);
  else if (f.random.empty())
    spec = cb::CorpusSpec::default_corpus();
  if (!f.random.empty()) spec.random = cb::RandomFamily::parse(f.random);
  if (f.seed && spec.random) spec.random->seed = *f.seed;
  return spec;
}

cb::SuiteOptions suite_options(const CorpusFlags& f,
                               const cb::CorpusSpec& spec) {
  cb::SuiteOptions o;
  o.budgets = spec.budgets;
  o.engine.memoize = f.memo;
  if (f.memo) o.engine.cache = std::make_shared<cb::ChromaticCache>();
  return o;
}

void print_summary(const cb::SweepSummary& s) {
  std::cout << "graphs: " << s.graphs << "\n";
  for (const auto& [name, t] : s.suites)
    std::cout << name << ": passed " << t.passed << ", failed " << t.failed
              << ", skipped " << t.skipped << "\n";
  std::cout << "findings: " << s.findings.size()
            << ", witnesses: " << s.witnesses.size() << "\n";
  for (const auto& n : s.notices) std::cerr << "note: " << n << "\n";
  std::cout << (s.ok() ? "OK" : "FAILED") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chromatic polynomials and coefficient bounds"};
  app.require_subcommand(1);

  SourceFlags poly_src;
  std::string poly_format = "text";
  auto* poly = app.add_subcommand("poly", "print the chromatic polynomial");
  add_source_flags(poly, poly_src);
  poly->add_option("--format", poly_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  SourceFlags bounds_src;
  std::string bounds_format = "json", bounds_out, bounds_mode = "per-r",
              bounds_edge;
  auto* bounds = app.add_subcommand("bounds", "per-r coefficient bounds");
  add_source_flags(bounds, bounds_src);
  bounds->add_option("--format", bounds_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--out", bounds_out, "output file");
  bounds->add_option("--mode", bounds_mode, "fixed | per-r")
      ->check(CLI::IsMember({"fixed", "per-r"}));
  bounds->add_option("--edge", bounds_edge, "force edge U,V for every r");

  CorpusFlags verify_flags;
  std::string suite, verify_out;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "lemma1 | lemma2 | additivity | "
                                       "leading | theorem1 | prop1 | oracles")
      ->required();
  add_corpus_flags(verify, verify_flags);
  verify->add_option("--out", verify_out, "write the summary JSON here");

  CorpusFlags sweep_flags;
  std::string sweep_out, sweep_format = "json", sweep_mode = "per-r";
  auto* sweep = app.add_subcommand("sweep", "bound reports over a corpus");
  add_corpus_flags(sweep, sweep_flags);
  sweep->add_option("--out", sweep_out, "output directory")->required();
  sweep->add_option("--format", sweep_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  sweep->add_option("--mode", sweep_mode, "fixed | per-r")
      ->check(CLI::IsMember({"fixed", "per-r"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*poly) {
      const auto g = load_graph(poly_src);
      const auto p = cb::chromatic_polynomial(g);
      if (poly_format == "json") {
        std::cout << cb::to_json(p).dump(2) << "\n";
      } else {
        std::cout << p.to_string() << "\n"
                  << cb::Json(p.magnitude_strings()).dump() << "\n";
      }
      return 0;
    }

    if (*bounds) {
      const auto g = load_graph(bounds_src);
      cb::BoundReportOptions o;
      o.mode = cb::parse_edge_mode(bounds_mode);
      if (!bounds_edge.empty()) {
        int u = 0, v = 0;
        char comma = 0;
        std::istringstream in(bounds_edge);
        if (!(in >> u >> comma >> v) || comma != ',')
          throw cb::InvalidArgumentError("--edge expects U,V");
        auto id = g.edge_between(u, v);
        if (!id)
          throw cb::InvalidArgumentError("--edge " + bounds_edge +
                                         " is not an edge of the graph");
        o.edge_override = *id;
      }
      const auto report = cb::bound_report(g, o, source_id(bounds_src));
      emit(bounds_format == "csv" ? cb::to_csv(report)
                                  : cb::to_json(report).dump(2) + "\n",
           bounds_out);
      return 0;
    }

    if (*verify) {
      const auto spec = corpus_from(verify_flags);
      const auto corpus = spec.expand();
      const auto summary =
          cb::run_suite(suite, corpus, suite_options(verify_flags, spec));
      if (!verify_out.empty()) emit(summary.to_json().dump(2) + "\n", verify_out);
      print_summary(summary);
      return summary.ok() ? 0 : 1;
    }

    if (*sweep) {
      const auto spec = corpus_from(sweep_flags);
      const auto corpus = spec.expand();
      auto options = suite_options(sweep_flags, spec);
      options.mode = cb::parse_edge_mode(sweep_mode);
      fs::create_directories(sweep_out);
      const auto summary = cb::run_sweep(
          corpus, options,
          [&](const cb::CorpusGraph& cg, const cb::BoundReport& report) {
            const bool csv = sweep_format == "csv";
            emit(csv ? cb::to_csv(report) : cb::to_json(report).dump(2) + "\n",
                 (fs::path(sweep_out) / (cg.id + (csv ? ".csv" : ".json")))
                     .string());
          });
      emit(summary.to_json().dump(2) + "\n",
           (fs::path(sweep_out) / "summary.json").string());
      print_summary(summary);
      return summary.ok() ? 0 : 1;
    }
  } catch (const cb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
