#include "bst/detect.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <string>

#include "bst/canonical.hpp"
#include "bst/error.hpp"

namespace bst {

// ---------------------------------------------------------------- patterns

std::string Pattern::to_string() const {
  switch (kind) {
    case PatternKind::kPath: return "P" + std::to_string(order);
    case PatternKind::kCycle: return "C" + std::to_string(order);
    case PatternKind::kCycleAtLeast: return "C>=" + std::to_string(order);
  }
  return "?";
}

ForbiddenSpec::ForbiddenSpec(std::vector<Pattern> patterns) {
  for (const Pattern& p : patterns) {
    if (p.kind == PatternKind::kPath && p.order < 2) throw DomainError("forbidden path needs order >= 2");
    if (p.kind != PatternKind::kPath && p.order < 3) throw DomainError("forbidden cycle needs order >= 3");
    if (std::find(patterns_.begin(), patterns_.end(), p) == patterns_.end()) patterns_.push_back(p);
  }
}

namespace {

int parse_order(std::string_view digits, std::string_view token) {
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError("malformed forbidden pattern '" + std::string(token) + "'");
  return std::stoi(std::string(digits));
}

}  // namespace

ForbiddenSpec ForbiddenSpec::parse(std::string_view text) {
  std::vector<Pattern> out;
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (cleaned.empty()) return ForbiddenSpec{};

  std::size_t start = 0;
  while (start <= cleaned.size()) {
    const std::size_t comma = cleaned.find(',', start);
    const std::string_view token =
        std::string_view(cleaned).substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty()) throw DomainError("empty token in forbidden spec '" + std::string(text) + "'");
    Pattern p;
    if (token[0] == 'P') {
      p = {PatternKind::kPath, parse_order(token.substr(1), token)};
    } else if (token[0] == 'C' && token.substr(1, 2) == ">=") {
      p = {PatternKind::kCycleAtLeast, parse_order(token.substr(3), token)};
    } else if (token[0] == 'C') {
      p = {PatternKind::kCycle, parse_order(token.substr(1), token)};
    } else {
      throw DomainError("malformed forbidden pattern '" + std::string(token) + "'");
    }
    out.push_back(p);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ForbiddenSpec(std::move(out));
}

std::string ForbiddenSpec::to_string() const {
  std::string s;
  for (const Pattern& p : patterns_) {
    if (!s.empty()) s += ',';
    s += p.to_string();
  }
  return s;
}

bool ForbiddenSpec::admits(const Graph& g) const {
  return std::none_of(patterns_.begin(), patterns_.end(), [&](const Pattern& p) { return contains_pattern(g, p); });
}

bool contains_pattern(const Graph& g, const Pattern& p) {
  switch (p.kind) {
    case PatternKind::kPath: return has_path(g, p.order);
    case PatternKind::kCycle: return p.order <= g.order() && has_cycle(g, p.order);
    case PatternKind::kCycleAtLeast: return has_cycle_at_least(g, p.order);
  }
  return false;
}

// ---------------------------------------------------------------- subset DP

namespace {

std::vector<std::uint32_t>& dp_table(std::size_t size) {
  thread_local std::vector<std::uint32_t> table;
  table.assign(size, 0);
  return table;
}

void check_dp_order(const Graph& g) {
  if (g.order() > kSubsetDpMaxOrder)
    throw UnsupportedError("subset DP supports order <= " + std::to_string(kSubsetDpMaxOrder));
}

// Paths on exactly l vertices, starting in `starts` and ending in `ends`.
bool path_dp(const Graph& g, VertexSet starts, VertexSet ends, int l) {
  const int n = g.order();
  auto& dp = dp_table(std::size_t{1} << n);
  for (VertexSet s = starts; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    dp[std::size_t{1} << v] = static_cast<std::uint32_t>(singleton(v));
  }
  const std::size_t limit = std::size_t{1} << n;
  for (std::size_t mask = 1; mask < limit; ++mask) {
    const std::uint32_t e = dp[mask];
    if (!e) continue;
    const int pc = std::popcount(mask);
    if (pc == l) {
      if (e & ends) return true;
      continue;
    }
    for (std::uint32_t s = e; s; s &= s - 1) {
      for (VertexSet t = g.neighbors(std::countr_zero(s)) & ~static_cast<VertexSet>(mask); t; t &= t - 1) {
        const int w = std::countr_zero(t);
        dp[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }
  return false;
}

bool path_dfs(const Graph& g, int v, VertexSet visited, int remaining, VertexSet ends) {
  if (remaining == 0) return contains(ends, v);
  for (VertexSet s = g.neighbors(v) & ~visited; s; s &= s - 1) {
    const int w = std::countr_zero(s);
    if (path_dfs(g, w, visited | singleton(w), remaining - 1, ends)) return true;
  }
  return false;
}

bool path_dfs_from(const Graph& g, VertexSet starts, VertexSet ends, int l) {
  for (VertexSet s = starts; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    if (popcount(reachable(g, v, g.vertices())) < l) continue;
    if (path_dfs(g, v, singleton(v), l - 1, ends)) return true;
  }
  return false;
}

void check_path_order(int l) {
  if (l < 1) throw DomainError("path order must be positive");
}

void check_cycle_order(int l) {
  if (l < 3) throw DomainError("cycle order must be at least 3");
}

}  // namespace

bool has_path_dp(const Graph& g, int l) {
  check_path_order(l);
  check_dp_order(g);
  if (l > g.order()) return false;
  if (l == 1) return true;
  return path_dp(g, g.vertices(), g.vertices(), l);
}

bool has_path_dfs(const Graph& g, int l) {
  check_path_order(l);
  if (l > g.order()) return false;
  if (l == 1) return true;
  return path_dfs_from(g, g.vertices(), g.vertices(), l);
}

bool has_path(const Graph& g, int l) {
  check_path_order(l);
  if (l > g.order()) return false;
  if (l == 1) return true;
  if (l == 2) return g.edge_count() > 0;
  return g.order() <= kSubsetDpMaxOrder ? has_path_dp(g, l) : has_path_dfs(g, l);
}

int longest_path_order(const Graph& g) {
  int lo = 1;  // has_path(lo) holds
  int hi = g.order() + 1;  // has_path(hi) fails
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (has_path(g, mid) ? lo : hi) = mid;
  }
  return lo;
}

bool has_cycle_dp(const Graph& g, int l) {
  check_cycle_order(l);
  check_dp_order(g);
  const int n = g.order();
  if (l > n) return false;
  std::array<int, kMaxOrder> index{};
  std::array<int, kMaxOrder> vert{};
  std::array<std::uint32_t, kMaxOrder> cadj{};
  for (int v = 0; v < n; ++v) {
    const VertexSet rest = g.vertices() & ~all_vertices(v + 1);
    const int r = popcount(rest);
    if (r < l - 1) break;
    int i = 0;
    for (VertexSet s = rest; s; s &= s - 1) {
      vert[i] = std::countr_zero(s);
      index[vert[i]] = i;
      ++i;
    }
    auto compress = [&](VertexSet set) {
      std::uint32_t out = 0;
      for (VertexSet s = set & rest; s; s &= s - 1) out |= std::uint32_t{1} << index[std::countr_zero(s)];
      return out;
    };
    for (int j = 0; j < r; ++j) cadj[j] = compress(g.neighbors(vert[j]));
    const std::uint32_t anchor = compress(g.neighbors(v));
    if (std::popcount(anchor) < 2) continue;

    auto& dp = dp_table(std::size_t{1} << r);
    for (std::uint32_t s = anchor; s; s &= s - 1) dp[s & (~s + 1)] = s & (~s + 1);
    const std::size_t limit = std::size_t{1} << r;
    for (std::size_t mask = 1; mask < limit; ++mask) {
      const std::uint32_t e = dp[mask];
      if (!e) continue;
      const int pc = std::popcount(mask);
      if (pc == l - 1) {
        if (e & anchor) return true;
        continue;
      }
      for (std::uint32_t s = e; s; s &= s - 1) {
        for (std::uint32_t t = cadj[std::countr_zero(s)] & ~static_cast<std::uint32_t>(mask); t; t &= t - 1) {
          const int w = std::countr_zero(t);
          dp[mask | (std::size_t{1} << w)] |= std::uint32_t{1} << w;
        }
      }
    }
  }
  return false;
}

namespace {

bool cycle_dfs(const Graph& g, int anchor, int v, VertexSet allowed, int remaining) {
  if (remaining == 0) return g.adjacent(v, anchor);
  for (VertexSet s = g.neighbors(v) & allowed; s; s &= s - 1) {
    const int w = std::countr_zero(s);
    if (cycle_dfs(g, anchor, w, allowed & ~singleton(w), remaining - 1)) return true;
  }
  return false;
}

}  // namespace

bool has_cycle_dfs(const Graph& g, int l) {
  check_cycle_order(l);
  const int n = g.order();
  if (l > n) return false;
  for (int v = 0; v + l <= n; ++v) {
    const VertexSet rest = g.vertices() & ~all_vertices(v + 1);
    if (popcount(g.neighbors(v) & rest) < 2) continue;
    if (cycle_dfs(g, v, v, rest, l - 1)) return true;
  }
  return false;
}

bool has_cycle(const Graph& g, int l) {
  check_cycle_order(l);
  if (l > g.order()) return false;
  return g.order() <= kSubsetDpMaxOrder ? has_cycle_dp(g, l) : has_cycle_dfs(g, l);
}

bool has_cycle_at_least(const Graph& g, int l) {
  check_cycle_order(l);
  for (int p = l; p <= g.order(); ++p)
    if (has_cycle(g, p)) return true;
  return false;
}

bool has_path_with_ends_in_dp(const Graph& g, VertexSet ends, int l) {
  check_path_order(l);
  check_dp_order(g);
  ends &= g.vertices();
  if (l < 2 || l > g.order() || popcount(ends) < 2) return false;
  return path_dp(g, ends, ends, l);
}

bool has_path_with_ends_in_dfs(const Graph& g, VertexSet ends, int l) {
  check_path_order(l);
  ends &= g.vertices();
  if (l < 2 || l > g.order() || popcount(ends) < 2) return false;
  return path_dfs_from(g, ends, ends, l);
}

bool has_path_with_ends_in(const Graph& g, VertexSet ends, int l) {
  return g.order() <= kSubsetDpMaxOrder ? has_path_with_ends_in_dp(g, ends, l)
                                        : has_path_with_ends_in_dfs(g, ends, l);
}

// ---------------------------------------------------------------- edge facts

BoundReport check_fact_erdos_gallai(const Graph& g, int l) {
  if (l < 2) throw DomainError("Erdos-Gallai fact requires l >= 2");
  const double twice_edges = 2.0 * g.edge_count();
  const double rhs = has_path(g, l + 2) ? std::numeric_limits<double>::infinity()
                                        : static_cast<double>(l) * g.order();
  return make_report("erdos_gallai_l" + std::to_string(l), twice_edges, rhs);
}

bool is_isomorphic_to_snk(const Graph& g, int k, bool plus) {
  const int n = g.order();
  if (k < 1 || k >= n || (plus && n - k < 2)) return false;
  if (n <= kMaxCanonicalOrder) {
    if (g.edge_count() != k * n - (k * k + k) / 2 + (plus ? 1 : 0)) return false;
    return canonical_form(g) == canonical_form(make_snk(n, k, plus));
  }
  return plus ? is_snk_plus(g, k) : is_snk(g, k);
}

EdgeFactReports check_fact_f2_f3(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1) throw DomainError("edge facts require k >= 1");
  if (n <= 3 * k) throw DomainError("edge facts require n > 3k");
  if (!is_connected(g)) throw DomainError("edge facts require a connected graph");
  const int e = g.edge_count();
  const int e_snk = k * n - (k * k + k) / 2;
  const double inf = std::numeric_limits<double>::infinity();

  EdgeFactReports out;
  const bool escape3 = has_path(g, 2 * k + 2) || (e == e_snk && is_isomorphic_to_snk(g, k, false));
  out.paths_2k2 = make_report("edges_vs_snk_k" + std::to_string(k), e, escape3 ? inf : e_snk - 1.0);
  const bool escape4 = has_path(g, 2 * k + 3) || (e == e_snk + 1 && is_isomorphic_to_snk(g, k, true));
  out.paths_2k3 = make_report("edges_vs_snk_plus_k" + std::to_string(k), e, escape4 ? inf : e_snk);
  return out;
}

}  // namespace bst
