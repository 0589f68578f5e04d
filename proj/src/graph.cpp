#include "chromabound/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "chromabound/errors.hpp"
#include "chromabound/random.hpp"

namespace chromabound {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidGraphError("graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& l, const Edge& r) { return l.id < r.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= n_)
      throw InvalidGraphError("edge " + std::to_string(e.id) +
                              " has an endpoint outside 0.." +
                              std::to_string(n_ - 1));
    if (e.a == e.b)
      throw InvalidGraphError("edge " + std::to_string(e.id) + " is a loop");
    if (i > 0 && edges_[i - 1].id == e.id)
      throw InvalidGraphError("duplicate edge id " + std::to_string(e.id));
  }
}

Graph Graph::from_pairs(int vertex_count,
                        std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    edges.push_back({a, b, static_cast<EdgeId>(edges.size())});
  return Graph(vertex_count, std::move(edges));
}

bool Graph::contains_edge(EdgeId id) const noexcept {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  return it != edges_.end() && it->id == id;
}

const Edge& Graph::edge(EdgeId id) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), id,
      [](const Edge& e, EdgeId key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) throw UnknownEdgeError(id);
  return *it;
}

std::optional<EdgeId> Graph::edge_between(int a, int b) const noexcept {
  for (const Edge& e : edges_)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.id;
  return std::nullopt;
}

std::vector<int> Graph::neighbors(int u) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.a == u) out.push_back(e.b);
    if (e.b == u) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

bool Graph::is_simple() const {
  std::vector<std::pair<int, int>> keys;
  keys.reserve(edges_.size());
  for (const Edge& e : edges_)
    keys.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

int Graph::component_count() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n_;
  for (const Edge& e : edges_) {
    int ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

Graph delete_edge(const Graph& g, EdgeId id) {
  g.edge(id);
  std::vector<Edge> kept;
  kept.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    if (e.id != id) kept.push_back(e);
  return Graph(g.vertex_count(), std::move(kept));
}

Graph simplify(const Graph& g) {
  std::map<std::pair<int, int>, Edge> families;
  for (const Edge& e : g.edges()) {
    auto key = std::make_pair(std::min(e.a, e.b), std::max(e.a, e.b));
    families.try_emplace(key, e);  // edges arrive in id order
  }
  std::vector<Edge> kept;
  kept.reserve(families.size());
  for (const auto& [key, e] : families) kept.push_back(e);
  return Graph(g.vertex_count(), std::move(kept));
}

Graph contract_edge(const Graph& g, EdgeId id) {
  const Edge& xy = g.edge(id);
  const int keep = std::min(xy.a, xy.b);
  const int gone = std::max(xy.a, xy.b);
  auto relabel = [&](int u) {
    if (u == gone) return keep;
    return u > gone ? u - 1 : u;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    int a = relabel(e.a), b = relabel(e.b);
    if (a == b) continue;
    edges.push_back({a, b, e.id});
  }
  return simplify(Graph(g.vertex_count() - 1, std::move(edges)));
}

Graph normalize_labels(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  for (const Edge& e : g.edges())
    for (int u : {e.a, e.b})
      if (label[u] < 0) label[u] = next++;
  for (int u = 0; u < n; ++u)
    if (label[u] < 0) label[u] = next++;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edges().size());
  for (const Edge& e : g.edges()) pairs.emplace_back(label[e.a], label[e.b]);
  return Graph::from_pairs(n, pairs);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::map<long long, int> labels;
  std::vector<std::pair<int, int>> pairs;
  auto label_of = [&](long long raw) {
    auto [it, inserted] =
        labels.try_emplace(raw, static_cast<int>(labels.size()));
    return it->second;
  };

  std::string raw_line;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string_view line = raw_line;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream fields{std::string(line)};
    std::string tok_u, tok_v, extra;
    fields >> tok_u >> tok_v;
    if (tok_v.empty() || (fields >> extra))
      throw ParseError(line_no, "expected two vertex labels, got '" +
                                    std::string(line) + "'");
    auto parse_label = [&](const std::string& tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos ||
          tok.size() > 18)
        throw ParseError(line_no, "'" + tok +
                                      "' is not a nonnegative integer label");
      return std::stoll(tok);
    };
    long long u = parse_label(tok_u), v = parse_label(tok_v);
    if (u == v)
      throw ParseError(line_no, "loop edge " + tok_u + " " + tok_v);
    int a = label_of(u);
    int b = label_of(v);
    pairs.emplace_back(a, b);
  }
  if (labels.empty()) throw ParseError(line_no, "empty graph: no vertices");
  // Merge duplicates, then renumber the surviving edges densely.
  return normalize_labels(
      simplify(Graph::from_pairs(static_cast<int>(labels.size()), pairs)));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges())
    out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
  return out;
}

std::optional<long long> GeneratorSpec::param(std::string_view key) const {
  for (const auto& [k, value] : params)
    if (k == key) return value;
  return std::nullopt;
}

std::string GeneratorSpec::to_string() const {
  std::string out = family;
  char sep = ':';
  for (const auto& [k, value] : params) {
    out += sep + k + "=" + std::to_string(value);
    sep = ',';
  }
  if (seed) out += std::string(1, sep) + "seed=" + std::to_string(*seed);
  return out;
}

GeneratorSpec parse_generator(std::string_view text) {
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.family = std::string(trim(text.substr(0, colon)));
  if (spec.family.empty())
    throw InvalidArgumentError("generator string has no family name");
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw InvalidArgumentError("generator parameter '" + std::string(item) +
                                 "' is not key=value");
    std::string key(trim(item.substr(0, eq)));
    std::string value(trim(item.substr(eq + 1)));
    long long parsed = 0;
    try {
      std::size_t used = 0;
      parsed = std::stoll(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw InvalidArgumentError("generator parameter '" + key +
                                 "' is not an integer: '" + value + "'");
    }
    if (key == "seed") {
      if (parsed < 0) throw InvalidArgumentError("seed must be nonnegative");
      spec.seed = static_cast<std::uint64_t>(parsed);
    } else {
      spec.params.emplace_back(std::move(key), parsed);
    }
  }
  return spec;
}

namespace {

long long require(const GeneratorSpec& spec, std::string_view key,
                  long long min_value, long long max_value = 64) {
  auto value = spec.param(key);
  if (!value)
    throw InvalidArgumentError(spec.family + " needs parameter '" +
                               std::string(key) + "'");
  if (*value < min_value)
    throw InvalidArgumentError(spec.family + ": " + std::string(key) +
                               " must be at least " +
                               std::to_string(min_value));
  if (*value > max_value)
    throw InvalidArgumentError(spec.family + ": " + std::string(key) +
                               " must be at most " +
                               std::to_string(max_value));
  return *value;
}

Graph random_connected_gnm(int n, long long m, std::uint64_t seed) {
  const long long pairs_total = static_cast<long long>(n) * (n - 1) / 2;
  if (m > pairs_total)
    throw InvalidArgumentError("randomGnm: m=" + std::to_string(m) +
                               " exceeds C(n,2)=" +
                               std::to_string(pairs_total));
  if (m < n - 1)
    throw InvalidArgumentError("randomGnm: m=" + std::to_string(m) +
                               " < n-1, no connected sample exists");
  std::vector<std::pair<int, int>> all;
  all.reserve(pairs_total);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.emplace_back(a, b);

  Rng rng(seed);
  for (int attempt = 0; attempt < kMaxConnectivityRetries; ++attempt) {
    auto pool = all;
    // Partial Fisher-Yates: the first m slots are a uniform m-subset.
    for (long long i = 0; i < m; ++i) {
      auto j = i + static_cast<long long>(rng.below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    std::sort(pool.begin(), pool.end());
    Graph g = Graph::from_pairs(n, pool);
    if (g.is_connected()) return g;
  }
  throw InvalidArgumentError("randomGnm: no connected sample after " +
                             std::to_string(kMaxConnectivityRetries) +
                             " draws");
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  const std::string& f = spec.family;
  std::vector<std::pair<int, int>> pairs;
  if (f == "complete") {
    int n = static_cast<int>(require(spec, "n", 1));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return Graph::from_pairs(n, pairs);
  }
  if (f == "cycle") {
    int n = static_cast<int>(require(spec, "n", 3));
    for (int a = 0; a < n; ++a) pairs.emplace_back(a, (a + 1) % n);
    return Graph::from_pairs(n, pairs);
  }
  if (f == "path") {
    int n = static_cast<int>(require(spec, "n", 1));
    for (int a = 0; a + 1 < n; ++a) pairs.emplace_back(a, a + 1);
    return Graph::from_pairs(n, pairs);
  }
  if (f == "completeBipartite") {
    int a = static_cast<int>(require(spec, "a", 1));
    int b = static_cast<int>(require(spec, "b", 1));
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
    return Graph::from_pairs(a + b, pairs);
  }
  if (f == "petersen") {
    if (!spec.params.empty())
      throw InvalidArgumentError("petersen takes no parameters");
    for (int i = 0; i < 5; ++i) {
      pairs.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
      pairs.emplace_back(i, i + 5);                // spokes
      pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_pairs(10, pairs);
  }
  if (f == "randomGnm") {
    int n = static_cast<int>(require(spec, "n", 1));
    long long m = require(spec, "m", 0, 64 * 63 / 2);
    if (!spec.seed) throw InvalidArgumentError("randomGnm needs a seed");
    return random_connected_gnm(n, m, *spec.seed);
  }
  throw InvalidArgumentError("unknown generator family '" + f + "'");
}

Graph generate(std::string_view text, std::optional<std::uint64_t> seed) {
  GeneratorSpec spec = parse_generator(text);
  if (seed && !spec.seed) spec.seed = seed;
  return generate(spec);
}

}  // namespace chromabound
