#include "chromabound/bounds.hpp"

#include <algorithm>
#include <atomic>

#include "chromabound/errors.hpp"

namespace chromabound {

namespace {

std::atomic<std::uint64_t> g_negative_top_hits{0};

constexpr long long kPascalRows = 256;

const std::vector<std::vector<BigInt>>& pascal() {
  static const auto table = [] {
    std::vector<std::vector<BigInt>> rows(kPascalRows);
    for (long long a = 0; a < kPascalRows; ++a) {
      rows[a].assign(a + 1, 1);
      for (long long b = 1; b < a; ++b)
        rows[a][b] = rows[a - 1][b - 1] + rows[a - 1][b];
    }
    return rows;
  }();
  return table;
}

}  // namespace

BigInt binom(long long a, long long b) {
  if (b == 0) {
    if (a < 0) g_negative_top_hits.fetch_add(1, std::memory_order_relaxed);
    return 1;
  }
  if (b < 0 || b > a) return 0;
  if (a < kPascalRows) return pascal()[a][b];
  b = std::min(b, a - b);
  BigInt out = 1;
  for (long long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

std::uint64_t negative_top_zero_bottom_hits() {
  return g_negative_top_hits.load(std::memory_order_relaxed);
}

void reset_negative_top_zero_bottom_hits() { g_negative_top_hits.store(0); }

Lemma1Sides lemma1_sides(long long a, long long b, long long c) {
  if (!(a > b && b >= c && c >= 0))
    throw InvalidArgumentError("lemma1_sides needs a > b >= c >= 0, got (" +
                               std::to_string(a) + ", " + std::to_string(b) +
                               ", " + std::to_string(c) + ")");
  Lemma1Sides sides;
  sides.left = binom(b, c) - binom(a, c);
  BigInt sum = 0;
  for (long long n = 1; n <= a - b; ++n) sum += binom(a - n, c - 1);
  sides.right = -sum;
  return sides;
}

std::optional<BigInt> leading_coefficient(long long e, long long v,
                                          long long g, long long kg,
                                          long long r) {
  if (r < 1) throw InvalidArgumentError("r must be at least 1");
  if (r > v - g + 1) return binom(e, v - r);
  if (r == v - g + 1) return binom(e, v - r) - kg;
  return std::nullopt;
}

void BoundParams::validate() const {
  auto fail = [](const std::string& what) {
    throw InvalidArgumentError("invalid bound parameters: " + what);
  };
  if (g < 3 || g > v) fail("need 3 <= g <= v");
  if (kg < 1) fail("need k_g >= 1");
  if (lg < 0 || lg > kg) fail("need 0 <= l_g <= k_g");
  if (lgp1star < 0) fail("need l*_{g+1} >= 0");
  if (r < 1 || r > v) fail("need 1 <= r <= v");
  if (e < 0) fail("need e >= 0");
}

BigInt li_tian_bound(const BoundParams& p) {
  p.validate();
  const long long e = p.e, v = p.v, g = p.g, r = p.r;
  return binom(e, v - r) - binom(e - g + 2, v - r - g + 2) +
         binom(e - p.kg - g + 2, v - r - g + 2);
}

BigInt s_term(const BoundParams& p) {
  p.validate();
  const long long bottom = p.v - p.r - p.g;
  BigInt sum = 0;
  if (bottom < 0) return sum;
  for (long long n = 1; n <= p.kg - p.lg; ++n)
    for (long long m = 1; m <= p.lg - 1; ++m)
      sum += binom(p.e - p.g + 1 - n - m, bottom);
  return sum;
}

BigInt triangle_correction(const BoundParams& p) {
  p.validate();
  BigInt sum = 0;
  const long long bottom = p.v - p.r - p.g;
  if (p.g != 3 || bottom < 0) return sum;
  // The upper limit may be <= 0, leaving the sum empty.
  for (long long n = 1; n <= p.kg + p.lgp1star - p.lg; ++n)
    sum += binom(p.e - p.lg - p.g + 1 - n, bottom);
  return sum;
}

BigInt improved_bound(const BoundParams& p) {
  return li_tian_bound(p) - s_term(p) - triangle_correction(p);
}

BigInt improved_bound_alt(const BoundParams& p) {
  p.validate();
  const long long e = p.e, v = p.v, g = p.g, r = p.r, kg = p.kg, lg = p.lg;
  BigInt out = binom(e, v - r) - binom(e - g + 2, v - r - g + 2) +
               binom(e - lg - g + 2, v - r - g + 2) -
               binom(e - g + 1, v - r - g + 2) +
               binom(e - kg + lg - g + 1, v - r - g + 2);
  if (g == 3)
    out -= binom(e - lg - g + 1, v - r - g + 1) -
           binom(e - kg - p.lgp1star - g + 1, v - r - g + 1);
  return out;
}

std::string to_string(EdgeMode mode) {
  return mode == EdgeMode::kFixed ? "fixed" : "per-r";
}

EdgeMode parse_edge_mode(std::string_view text) {
  if (text == "fixed") return EdgeMode::kFixed;
  if (text == "per-r") return EdgeMode::kPerR;
  throw InvalidArgumentError("edge mode must be 'fixed' or 'per-r', got '" +
                             std::string(text) + "'");
}

BoundParams bound_params(const Graph& g, const CycleCensus& census,
                         EdgeId edge, int r) {
  const auto girth = census.girth();
  if (!girth) throw AcyclicGraphError();
  BoundParams p;
  p.e = g.edge_count();
  p.v = g.vertex_count();
  p.g = *girth;
  p.kg = static_cast<long long>(census.k(p.g));
  p.lg = static_cast<long long>(census.l(edge, p.g));
  p.lgp1star = static_cast<long long>(census.l_star(edge, p.g + 1));
  p.r = r;
  return p;
}

EdgeChoice evaluate_edge(const Graph& g, const CycleCensus& census,
                         EdgeId edge, int r, EdgeMode mode) {
  const Edge& xy = g.edge(edge);
  const BoundParams p = bound_params(g, census, edge, r);
  EdgeChoice choice;
  choice.edge = edge;
  choice.x = xy.a;
  choice.y = xy.b;
  choice.lg = static_cast<std::uint64_t>(p.lg);
  choice.lgp1star = static_cast<std::uint64_t>(p.lgp1star);
  choice.s_value = s_term(p);
  choice.correction = choice.s_value + triangle_correction(p);
  choice.mode = mode;
  return choice;
}

EdgeChoice select_edge(const Graph& g, const CycleCensus& census, int r,
                       EdgeMode mode) {
  const auto girth = census.girth();
  if (!girth) throw AcyclicGraphError();
  const int at = mode == EdgeMode::kFixed ? 1 : r;
  std::optional<EdgeChoice> best;
  for (const Edge& e : g.edges()) {  // ascending id
    if (census.l(e.id, *girth) == 0) continue;
    EdgeChoice candidate = evaluate_edge(g, census, e.id, at, mode);
    if (!best || candidate.correction > best->correction)
      best = std::move(candidate);
  }
  if (!best) throw AcyclicGraphError();
  if (at != r) *best = evaluate_edge(g, census, best->edge, r, mode);
  return *best;
}

bool BoundReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const BoundRow& r) { return r.flags.bound_holds; });
}

bool BoundReport::all_dominate() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) {
    return r.flags.dominates_li_tian;
  });
}

bool BoundReport::all_tight() const {
  return std::all_of(rows.begin(), rows.end(), [](const BoundRow& r) {
    return r.flags.tight_at_leading;
  });
}

BoundReport bound_report(const Graph& g, const BoundReportOptions& options,
                         std::string graph_id) {
  const auto census = CycleCensus::compute(g);
  if (!census.girth()) throw AcyclicGraphError();
  const auto exact = chromatic_polynomial(g, options.engine);

  BoundReport report;
  report.graph_id = std::move(graph_id);
  report.graph = g;
  report.girth = *census.girth();
  report.kg = census.k(report.girth);
  report.mode = options.mode;
  report.edge_override = options.edge_override;

  const int v = g.vertex_count();
  for (int r = 1; r <= v; ++r) {
    BoundRow row;
    row.r = r;
    row.choice = options.edge_override
                     ? evaluate_edge(g, census, *options.edge_override, r,
                                     options.mode)
                     : select_edge(g, census, r, options.mode);
    const BoundParams p = bound_params(g, census, row.choice.edge, r);
    row.exact = exact.magnitude(r);
    row.li_tian = li_tian_bound(p);
    row.improved = improved_bound(p);
    row.improved_alt = improved_bound_alt(p);
    row.leading = leading_coefficient(p.e, p.v, p.g, p.kg, r);
    row.flags.bound_holds = row.improved >= row.exact;
    row.flags.dominates_li_tian = row.improved <= row.li_tian;
    row.flags.tight_at_leading =
        r < v - report.girth + 1 || row.improved == row.exact;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace chromabound
