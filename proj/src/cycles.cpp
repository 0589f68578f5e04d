#include "chromabound/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

void require_simple(const Graph& g) {
  if (!g.is_simple())
    throw InvalidGraphError("circuit census requires a simplified graph");
}

// Dense id lookup, -1 where no edge.
std::vector<std::vector<EdgeId>> edge_table(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<EdgeId>> table(n, std::vector<EdgeId>(n, -1));
  for (const Edge& e : g.edges()) table[e.a][e.b] = table[e.b][e.a] = e.id;
  return table;
}

}  // namespace

Girth girth(const Graph& g) {
  require_simple(g);
  const int n = g.vertex_count();
  const auto adj = g.adjacency_lists();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

void for_each_circuit(const Graph& g, int max_length,
                      const std::function<void(std::span<const int>)>& visit) {
  require_simple(g);
  const int n = g.vertex_count();
  max_length = std::min(max_length, n);
  if (max_length < 3) return;
  const auto adj = g.adjacency_lists();

  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  path.reserve(n);

  // Paths from `root` through vertices above it; a circuit is reported when
  // the path can close and its second vertex is below its last vertex.
  auto extend = [&](auto&& self, int root, int u) -> void {
    for (int w : adj[u]) {
      if (w == root) {
        if (path.size() >= 3 && path[1] < path.back()) visit(path);
        continue;
      }
      if (w < root || on_path[w]) continue;
      if (static_cast<int>(path.size()) >= max_length) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, root, w);
      on_path[w] = 0;
      path.pop_back();
    }
  };

  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    on_path[root] = 1;
    extend(extend, root, root);
    on_path[root] = 0;
  }
}

std::uint64_t count_cycles(const Graph& g, int length) {
  std::uint64_t count = 0;
  for_each_circuit(g, length, [&](std::span<const int> c) {
    if (static_cast<int>(c.size()) == length) ++count;
  });
  return count;
}

std::uint64_t count_cycles_through_edge(const Graph& g, EdgeId edge,
                                        int length) {
  g.edge(edge);
  if (length < 3 || length > g.vertex_count()) return 0;
  return CycleCensus::compute(g, length).l(edge, length);
}

std::uint64_t count_cycles_star(const Graph& g, EdgeId edge, int length) {
  g.edge(edge);
  if (length < 3 || length > g.vertex_count()) return 0;
  return CycleCensus::compute(g, length).l_star(edge, length);
}

CycleCensus CycleCensus::compute(const Graph& g,
                                 std::optional<int> max_length) {
  CycleCensus census;
  census.girth_ = chromabound::girth(g);
  census.max_length_ = std::min(max_length.value_or(g.vertex_count()),
                                g.vertex_count());
  const int top = std::max(census.max_length_, 0);
  census.k_.assign(top + 1, 0);
  for (const Edge& e : g.edges()) {
    census.l_[e.id].assign(top + 1, 0);
    census.l_star_[e.id].assign(top + 1, 0);
  }

  const auto ids = edge_table(g);
  const auto adj = g.adjacency_lists();
  auto common_neighbour = [&](int x, int y, int z) {
    return std::binary_search(adj[x].begin(), adj[x].end(), z) &&
           std::binary_search(adj[y].begin(), adj[y].end(), z);
  };

  for_each_circuit(g, top, [&](std::span<const int> c) {
    const int len = static_cast<int>(c.size());
    ++census.k_[len];
    for (int i = 0; i < len; ++i) {
      const int x = c[i];
      const int y = c[(i + 1) % len];
      const int before_x = c[(i + len - 1) % len];
      const int after_y = c[(i + 2) % len];
      const EdgeId id = ids[x][y];
      ++census.l_[id][len];
      if (!common_neighbour(x, y, before_x) &&
          !common_neighbour(x, y, after_y))
        ++census.l_star_[id][len];
    }
  });
  return census;
}

std::uint64_t CycleCensus::k(int length) const noexcept {
  if (length < 0 || length >= static_cast<int>(k_.size())) return 0;
  return k_[length];
}

const std::vector<std::uint64_t>& CycleCensus::row(
    const std::map<EdgeId, std::vector<std::uint64_t>>& table,
    EdgeId edge) const {
  auto it = table.find(edge);
  if (it == table.end()) throw UnknownEdgeError(edge);
  return it->second;
}

std::uint64_t CycleCensus::l(EdgeId edge, int length) const {
  const auto& r = row(l_, edge);
  if (length < 0 || length >= static_cast<int>(r.size())) return 0;
  return r[length];
}

std::uint64_t CycleCensus::l_star(EdgeId edge, int length) const {
  const auto& r = row(l_star_, edge);
  if (length < 0 || length >= static_cast<int>(r.size())) return 0;
  return r[length];
}

bool Lemma2Report::deletion_holds() const {
  return counts_match &&
         std::all_of(rows.begin(), rows.end(),
                     [](const Lemma2Row& r) { return r.deletion_matches; });
}

bool Lemma2Report::contraction_holds() const {
  return counts_match &&
         std::all_of(rows.begin(), rows.end(), [](const Lemma2Row& r) {
           return r.contraction_matches;
         });
}

Lemma2Report verify_lemma2(const Graph& g, EdgeId edge, int max_length) {
  g.edge(edge);
  max_length = std::min(max_length, g.vertex_count());
  const Graph deleted = delete_edge(g, edge);
  const Graph contracted = contract_edge(g, edge);

  // l_{n+1} is needed up to n = max_length.
  const auto census = CycleCensus::compute(g, max_length + 1);
  const auto census_deleted = CycleCensus::compute(deleted, max_length);
  const auto census_contracted = CycleCensus::compute(contracted, max_length);

  Lemma2Report report;
  report.edge = edge;
  report.triangles_through_edge = census.l(edge, 3);
  report.deleted_vertices = deleted.vertex_count();
  report.deleted_edges = deleted.edge_count();
  report.contracted_vertices = contracted.vertex_count();
  report.contracted_edges = contracted.edge_count();
  report.predicted_contracted_edges =
      g.edge_count() - 1 - static_cast<int>(report.triangles_through_edge);
  report.counts_match =
      report.deleted_vertices == g.vertex_count() &&
      report.deleted_edges == g.edge_count() - 1 &&
      report.contracted_vertices == g.vertex_count() - 1 &&
      report.contracted_edges == report.predicted_contracted_edges;

  for (int n = 3; n <= max_length; ++n) {
    Lemma2Row row;
    row.length = n;
    row.k = census.k(n);
    row.l = census.l(edge, n);
    row.l_next = census.l(edge, n + 1);
    row.l_star_next = census.l_star(edge, n + 1);
    row.measured_deleted = census_deleted.k(n);
    row.predicted_deleted = row.k - row.l;
    row.measured_contracted = census_contracted.k(n);
    row.predicted_contracted = row.k - row.l + (report.triangle_case()
                                                    ? row.l_star_next
                                                    : row.l_next);
    row.deletion_matches = row.measured_deleted == row.predicted_deleted;
    row.contraction_matches =
        row.measured_contracted == row.predicted_contracted;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace chromabound
