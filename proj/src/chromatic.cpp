#include "chromabound/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "chromabound/cycles.hpp"
#include "chromabound/errors.hpp"

namespace chromabound {

ChromaticPolynomial::ChromaticPolynomial(int vertex_count,
                                         std::vector<BigInt> magnitudes)
    : v_(vertex_count), a_(std::move(magnitudes)) {
  if (v_ < 1)
    throw InvalidArgumentError("chromatic polynomial needs v >= 1");
  if (static_cast<int>(a_.size()) != v_)
    throw InvalidArgumentError("expected " + std::to_string(v_) +
                               " magnitudes, got " +
                               std::to_string(a_.size()));
}

ChromaticPolynomial ChromaticPolynomial::from_coefficients(
    std::span<const BigInt> coefficients) {
  if (coefficients.size() < 2 || coefficients[0] != 0)
    throw InvalidArgumentError(
        "chromatic polynomial must have degree >= 1 and no constant term");
  const int v = static_cast<int>(coefficients.size()) - 1;
  std::vector<BigInt> magnitudes(v);
  for (int r = 1; r <= v; ++r) {
    BigInt m = (v - r) % 2 == 0 ? coefficients[r] : BigInt(-coefficients[r]);
    if (m < 0)
      throw InvalidArgumentError("coefficient of q^" + std::to_string(r) +
                                 " breaks the alternating sign pattern");
    magnitudes[r - 1] = std::move(m);
  }
  return ChromaticPolynomial(v, std::move(magnitudes));
}

BigInt ChromaticPolynomial::magnitude(int r) const {
  if (r < 1 || r > v_) return 0;
  return a_[r - 1];
}

BigInt ChromaticPolynomial::coefficient(int r) const {
  BigInt m = magnitude(r);
  return (v_ - r) % 2 == 0 ? m : BigInt(-m);
}

BigInt ChromaticPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (int r = v_; r >= 1; --r) acc = acc * q + coefficient(r);
  return acc * q;
}

std::string ChromaticPolynomial::to_string() const {
  std::string out;
  for (int r = v_; r >= 1; --r) {
    const BigInt& m = a_[r - 1];
    if (m == 0) continue;
    const bool negative = (v_ - r) % 2 != 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m != 1) out += m.str();
    out += "q";
    if (r > 1) out += "^" + std::to_string(r);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> ChromaticPolynomial::magnitude_strings() const {
  std::vector<std::string> out;
  out.reserve(a_.size());
  for (const BigInt& m : a_) out.push_back(m.str());
  return out;
}

// Deletion-contraction engine --------------------------------------------

namespace {

using Poly = std::vector<BigInt>;  // Poly[k] multiplies q^k
using Mask = std::uint64_t;

Mask bit(int i) { return Mask{1} << i; }

struct WorkGraph {
  int n = 0;
  std::vector<Mask> adj;

  int edge_count() const {
    int twice = 0;
    for (Mask m : adj) twice += std::popcount(m);
    return twice / 2;
  }
};

WorkGraph to_work(const Graph& g) {
  if (g.vertex_count() > 64)
    throw InvalidArgumentError("chromatic engine supports at most 64 vertices");
  if (!g.is_simple())
    throw InvalidGraphError("chromatic engine requires a simplified graph");
  WorkGraph w{g.vertex_count(), std::vector<Mask>(g.vertex_count(), 0)};
  for (const Edge& e : g.edges()) {
    w.adj[e.a] |= bit(e.b);
    w.adj[e.b] |= bit(e.a);
  }
  return w;
}

std::vector<Mask> components(const WorkGraph& w) {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int s = 0; s < w.n; ++s) {
    if (seen & bit(s)) continue;
    Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= w.adj[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

WorkGraph induced(const WorkGraph& w, Mask vertices) {
  std::vector<int> index(w.n, -1);
  WorkGraph sub;
  for (Mask m = vertices; m; m &= m - 1) index[std::countr_zero(m)] = sub.n++;
  sub.adj.assign(sub.n, 0);
  for (Mask m = vertices; m; m &= m - 1) {
    int u = std::countr_zero(m);
    for (Mask nb = w.adj[u] & vertices; nb; nb &= nb - 1)
      sub.adj[index[u]] |= bit(index[std::countr_zero(nb)]);
  }
  return sub;
}

Poly multiply(const Poly& l, const Poly& r) {
  Poly out(l.size() + r.size() - 1, 0);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
  }
  return out;
}

// q^c (q-1)^{n-c}
Poly forest_poly(int n, int c) {
  Poly out(n + 1, 0);
  const int t = n - c;
  BigInt binom = 1;
  for (int j = 0; j <= t; ++j) {
    // (q-1)^t = sum_j C(t,j) q^j (-1)^{t-j}
    out[c + j] = (t - j) % 2 == 0 ? binom : BigInt(-binom);
    binom = binom * (t - j) / (j + 1);
  }
  return out;
}

// q (q-1) ... (q-n+1)
Poly falling_poly(int n) {
  Poly out{0, 1};
  for (int i = 1; i < n; ++i) out = multiply(out, Poly{BigInt(-i), 1});
  return out;
}

// An edge lying on a shortest circuit; the graph must contain a circuit.
std::pair<int, int> pivot_edge(const WorkGraph& w) {
  for (int u = 0; u < w.n; ++u)
    for (Mask nb = w.adj[u]; nb; nb &= nb - 1) {
      int x = std::countr_zero(nb);
      if (x > u && (w.adj[u] & w.adj[x])) return {u, x};
    }
  int best = w.n + 1;
  std::pair<int, int> choice{-1, -1};
  std::vector<int> dist(w.n), parent(w.n), queue(w.n);
  for (int s = 0; s < w.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (Mask nb = w.adj[u]; nb; nb &= nb - 1) {
        int x = std::countr_zero(nb);
        if (dist[x] < 0) {
          dist[x] = dist[u] + 1;
          parent[x] = u;
          queue[tail++] = x;
        } else if (parent[u] != x && dist[u] + dist[x] + 1 < best) {
          best = dist[u] + dist[x] + 1;
          choice = {u, x};
        }
      }
    }
  }
  return choice;
}

WorkGraph without_edge(WorkGraph w, int u, int x) {
  w.adj[u] &= ~bit(x);
  w.adj[x] &= ~bit(u);
  return w;
}

// Merge the higher endpoint into the lower, then move the last vertex into
// the freed slot.
WorkGraph contracted(const WorkGraph& w, int u, int x) {
  if (u > x) std::swap(u, x);
  WorkGraph c = w;
  Mask merged = (c.adj[u] | c.adj[x]) & ~bit(u) & ~bit(x);
  c.adj[u] = merged;
  for (int y = 0; y < c.n; ++y) {
    if (y == u || y == x) continue;
    if (c.adj[y] & bit(x)) c.adj[y] = (c.adj[y] & ~bit(x)) | bit(u);
  }
  const int last = c.n - 1;
  if (x != last) {
    c.adj[x] = c.adj[last];
    for (int y = 0; y < last; ++y)
      if (c.adj[y] & bit(last)) c.adj[y] = (c.adj[y] & ~bit(last)) | bit(x);
  }
  c.adj.pop_back();
  --c.n;
  return c;
}

}  // namespace

struct ChromaticCache::Impl {
  mutable std::mutex mutex;
  std::unordered_map<std::string, Poly> entries;
  std::uint64_t hits = 0;
};

ChromaticCache::ChromaticCache() : impl_(std::make_unique<Impl>()) {}
ChromaticCache::~ChromaticCache() = default;

std::size_t ChromaticCache::size() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->entries.size();
}

std::uint64_t ChromaticCache::hits() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->hits;
}

namespace {

class Engine {
 public:
  explicit Engine(ChromaticCache* cache) : cache_(cache) {}

  Poly solve(const WorkGraph& w) {
    std::string key;
    if (cache_ && w.n <= kMaxCanonicalVertices) {
      key = canonical_form(w.adj);
      if (!key.empty()) {
        auto& impl = cache_->impl();
        std::lock_guard lock(impl.mutex);
        if (auto it = impl.entries.find(key); it != impl.entries.end()) {
          ++impl.hits;
          return it->second;
        }
      }
    }
    Poly result = compute(w);
    if (!key.empty()) {
      auto& impl = cache_->impl();
      std::lock_guard lock(impl.mutex);
      impl.entries.try_emplace(key, result);
    }
    return result;
  }

 private:
  Poly compute(const WorkGraph& w) {
    const int m = w.edge_count();
    if (m == 0) {
      Poly out(w.n + 1, 0);
      out[w.n] = 1;
      return out;
    }
    const auto parts = components(w);
    const int c = static_cast<int>(parts.size());
    if (m == w.n - c) return forest_poly(w.n, c);
    if (c > 1) {
      Poly out{1};
      for (Mask part : parts) out = multiply(out, solve(induced(w, part)));
      return out;
    }
    if (2 * m == w.n * (w.n - 1)) return falling_poly(w.n);

    auto [u, x] = pivot_edge(w);
    Poly result = solve(without_edge(w, u, x));
    Poly merged = solve(contracted(w, u, x));
    for (std::size_t k = 0; k < merged.size(); ++k) result[k] -= merged[k];
    return result;
  }

  ChromaticCache* cache_;
};

}  // namespace

ChromaticPolynomial chromatic_polynomial(const Graph& g,
                                         const EngineOptions& options) {
  WorkGraph w = to_work(g);
  std::shared_ptr<ChromaticCache> cache = options.cache;
  if (options.memoize && !cache) cache = std::make_shared<ChromaticCache>();
  Engine engine(options.memoize ? cache.get() : nullptr);
  Poly p = engine.solve(w);
  return ChromaticPolynomial::from_coefficients(p);
}

// Canonical labelling -----------------------------------------------------

namespace {

// Colour refinement to a stable, isomorphism-invariant vertex colouring.
std::vector<int> refined_colours(std::span<const Mask> adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(n);
  for (int u = 0; u < n; ++u) colour[u] = std::popcount(adj[u]);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> signature(n);
    for (int u = 0; u < n; ++u) {
      signature[u].push_back(colour[u]);
      std::vector<int> around;
      for (Mask nb = adj[u]; nb; nb &= nb - 1)
        around.push_back(colour[std::countr_zero(nb)]);
      std::sort(around.begin(), around.end());
      signature[u].insert(signature[u].end(), around.begin(), around.end());
    }
    auto sorted = signature;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int u = 0; u < n; ++u)
      next[u] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), signature[u]) -
          sorted.begin());
    const bool stable = next == colour;
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

constexpr std::uint64_t kCanonicalNodeCap = 200000;

}  // namespace

std::string canonical_form(std::span<const std::uint64_t> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n > kMaxCanonicalVertices) return {};
  const auto colour = refined_colours(adjacency);

  // Position k must hold a vertex of colour slot[k].
  std::vector<int> slot(colour);
  std::sort(slot.begin(), slot.end());

  // Certificate: for each position k, adjacency bits to positions < k.
  std::vector<Mask> best, current;
  std::vector<int> order;
  Mask placed = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;

  auto search = [&](auto&& self, int k) -> void {
    if (aborted) return;
    if (++nodes > kCanonicalNodeCap) {
      aborted = true;
      return;
    }
    if (k == n) {
      if (best.empty() || current < best) best = current;
      return;
    }
    for (int u = 0; u < n; ++u) {
      if ((placed & bit(u)) || colour[u] != slot[k]) continue;
      Mask row = 0;
      for (int j = 0; j < k; ++j)
        if (adjacency[u] & bit(order[j])) row |= bit(j);
      current.push_back(row);
      // Prune prefixes already above the best certificate.
      if (!best.empty() &&
          std::lexicographical_compare(best.begin(), best.begin() + k + 1,
                                       current.begin(), current.end())) {
        current.pop_back();
        continue;
      }
      order.push_back(u);
      placed |= bit(u);
      self(self, k + 1);
      placed &= ~bit(u);
      order.pop_back();
      current.pop_back();
    }
  };
  search(search, 0);
  if (aborted) return {};

  std::string key = std::to_string(n) + ":";
  for (int c : slot) key += std::to_string(c) + ",";
  key += "|";
  for (Mask row : best) key += std::to_string(row) + ",";
  return key;
}

// Oracles -------------------------------------------------------------------

BigInt brute_force_colorings(const Graph& g, int q, double budget) {
  if (q < 0) throw InvalidArgumentError("q must be nonnegative");
  const int n = g.vertex_count();
  const double work = n * std::pow(static_cast<double>(q), n);
  if (work > budget)
    throw BudgetExceededError("brute-force colouring refused: v*q^v = " +
                              std::to_string(work) + " exceeds budget " +
                              std::to_string(budget));

  // Visit vertices in BFS order so conflicts surface early.
  const auto adj = g.adjacency_lists();
  std::vector<int> order;
  std::vector<int> position(n, -1);
  for (int s = 0; s < n; ++s) {
    if (position[s] >= 0) continue;
    position[s] = static_cast<int>(order.size());
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head)
      for (int w : adj[order[head]])
        if (position[w] < 0) {
          position[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
  }
  std::vector<std::vector<int>> earlier(n);
  for (int i = 0; i < n; ++i)
    for (int w : adj[order[i]])
      if (position[w] < i) earlier[i].push_back(position[w]);

  std::vector<int> colour(n, -1);
  std::vector<std::uint64_t> leaves(n + 1, 0);  // by number of colours used
  auto assign = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      ++leaves[used];
      return;
    }
    const int limit = std::min(used + 1, q);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int j : earlier[i])
        if (colour[j] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colour[i] = c;
      self(self, i + 1, c == used ? used + 1 : used);
    }
    colour[i] = -1;
  };
  assign(assign, 0, 0);

  BigInt total = 0;
  BigInt falling = 1;  // q (q-1) ... (q-k+1)
  for (int k = 0; k <= n; ++k) {
    if (k > 0) falling *= q - k + 1;
    total += falling * leaves[k];
  }
  return total;
}

ChromaticPolynomial coefficients_via_broken_circuits(
    const Graph& g, std::span<const EdgeId> edge_order, int max_edges) {
  if (!g.is_simple())
    throw InvalidGraphError("broken-circuit count requires a simple graph");
  const int e = g.edge_count();
  if (e > max_edges || e > 63)
    throw BudgetExceededError("broken-circuit enumeration refused: e = " +
                              std::to_string(e) + " exceeds budget " +
                              std::to_string(std::min(max_edges, 63)));
  std::vector<EdgeId> order(edge_order.begin(), edge_order.end());
  if (order.empty())
    for (const Edge& edge : g.edges()) order.push_back(edge.id);
  if (static_cast<int>(order.size()) != e)
    throw InvalidArgumentError("edge order must list every edge exactly once");

  std::map<EdgeId, int> rank;
  for (int i = 0; i < e; ++i) {
    g.edge(order[i]);
    if (!rank.emplace(order[i], i).second)
      throw InvalidArgumentError("edge order repeats edge " +
                                 std::to_string(order[i]));
  }

  std::vector<std::vector<int>> rank_of(g.vertex_count(),
                                        std::vector<int>(g.vertex_count(), -1));
  for (const Edge& edge : g.edges())
    rank_of[edge.a][edge.b] = rank_of[edge.b][edge.a] = rank.at(edge.id);

  // Broken circuits grouped by their highest remaining rank.
  std::vector<std::vector<Mask>> by_top(e);
  for_each_circuit(g, g.vertex_count(), [&](std::span<const int> c) {
    Mask circuit = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      circuit |= bit(rank_of[c[i]][c[(i + 1) % c.size()]]);
    Mask broken = circuit & ~bit(63 - std::countl_zero(circuit));
    by_top[63 - std::countl_zero(broken)].push_back(broken);
  });

  const int v = g.vertex_count();
  std::vector<std::uint64_t> by_size(v + 1, 0);
  auto grow = [&](auto&& self, Mask chosen, int size, int next) -> void {
    ++by_size[size];
    for (int j = next; j < e; ++j) {
      const Mask with = chosen | bit(j);
      bool blocked = false;
      for (Mask broken : by_top[j])
        if ((with & broken) == broken) {
          blocked = true;
          break;
        }
      if (!blocked) self(self, with, size + 1, j + 1);
    }
  };
  grow(grow, 0, 0, 0);

  std::vector<BigInt> magnitudes(v);
  for (int r = 1; r <= v; ++r) magnitudes[r - 1] = by_size[v - r];
  return ChromaticPolynomial(v, std::move(magnitudes));
}

bool AdditivityReport::holds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const AdditivityRow& r) { return r.holds; });
}

AdditivityReport verify_additivity(const Graph& g, EdgeId edge,
                                   const EngineOptions& options) {
  const auto p = chromatic_polynomial(g, options);
  const auto deleted = chromatic_polynomial(delete_edge(g, edge), options);
  const auto contracted =
      chromatic_polynomial(contract_edge(g, edge), options);
  AdditivityReport report;
  report.edge = edge;
  const int v = g.vertex_count();
  for (int r = 1; r <= v; ++r) {
    AdditivityRow row;
    row.r = r;
    row.a = p.magnitude(r);
    row.a_deleted = deleted.magnitude(r);
    row.a_contracted = contracted.magnitude(r);  // zero at r = v
    row.holds = r < v ? row.a == row.a_deleted + row.a_contracted
                      : row.a == row.a_deleted;
    report.rows.push_back(std::move(row));
  }
  return report;
}

Prop1Report check_proposition1(const ChromaticPolynomial& p, int edge_count) {
  Prop1Report report;
  const int v = p.vertex_count();
  report.nondecreasing_chain = true;
  for (int r = v; r >= 2; --r)
    if (p.magnitude(r) > p.magnitude(r - 1)) report.nondecreasing_chain = false;
  report.value_at_one = p.evaluate(1);

  BigInt peak = 0;
  for (int r = 1; r <= v; ++r) peak = std::max(peak, p.magnitude(r));
  for (int r = 1; r <= v; ++r)
    if (p.magnitude(r) == peak) report.peak_positions.push_back(r);

  report.chain_expected = edge_count <= 1;
  report.value_expected = edge_count >= 1 ? report.value_at_one == 0 : true;
  return report;
}

}  // namespace chromabound
