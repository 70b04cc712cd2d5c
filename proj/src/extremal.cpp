#include "bst/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>

#include "bst/enumerate.hpp"
#include "bst/error.hpp"
#include "bst/graph6.hpp"
#include "bst/trees.hpp"

namespace bst {

namespace {

struct Candidate {
  double mu;
  CanonicalForm form;
};

// Keeps every graph within kWitnessTolerance of the running maximum.
struct MaxTracker {
  double best = -1.0;
  std::vector<Candidate> pool;

  void offer(double mu, const Graph& g) {
    if (mu < best - kWitnessTolerance) return;
    pool.push_back({mu, canonical_form(g)});
    if (mu > best) {
      best = mu;
      std::erase_if(pool, [&](const Candidate& c) { return c.mu < best - kWitnessTolerance; });
    }
  }

  void merge(const MaxTracker& other) {
    for (const Candidate& c : other.pool) {
      if (c.mu < best - kWitnessTolerance) continue;
      pool.push_back(c);
      if (c.mu > best) best = c.mu;
    }
    std::erase_if(pool, [&](const Candidate& c) { return c.mu < best - kWitnessTolerance; });
  }
};

void check_order(int n) {
  if (n < 1) throw DomainError("order must be positive");
  if (n > kMaxEnumerationOrder)
    throw UnsupportedError("exhaustive search supports order <= " + std::to_string(kMaxEnumerationOrder));
}

void check_config(const SearchConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw DomainError("eigen tolerance must be positive");
  if (cfg.threads < 1) throw DomainError("thread count must be at least 1");
}

// Runs `visit` over every class of order n, one callback state per worker.
template <class State, class Visit>
std::vector<State> sweep(int n, const EnumerationOptions& opts, int threads, Visit visit,
                         EnumerationCensus& census) {
  std::vector<State> states(static_cast<std::size_t>(threads));
  census = enumerate_graphs_parallel(n, opts, threads, [&](int w, const Graph& g) { visit(states[w], g); });
  return states;
}

}  // namespace

ExtremalRecord extremal_mu(int n, const ForbiddenSpec& spec, bool connected_only, const SearchConfig& cfg) {
  check_order(n);
  check_config(cfg);
  EnumerationOptions opts;
  opts.connected_only = connected_only;
  if (cfg.hereditary) opts.keep = [&spec](const Graph& g) { return spec.admits(g); };

  struct State {
    MaxTracker tracker;
    std::uint64_t admissible = 0;
  };
  EnumerationCensus census;
  auto states = sweep<State>(
      n, opts, cfg.threads,
      [&](State& s, const Graph& g) {
        if (!cfg.hereditary && !spec.admits(g)) return;
        ++s.admissible;
        s.tracker.offer(spectral_radius(g, cfg.tol).mu, g);
      },
      census);

  ExtremalRecord rec;
  rec.n = n;
  rec.spec = spec;
  rec.connected_only = connected_only;
  rec.enumerated = census.generated;
  rec.pruned = census.pruned;
  MaxTracker all;
  for (const State& s : states) {
    rec.admissible += s.admissible;
    all.merge(s.tracker);
  }
  rec.max_mu = std::max(all.best, 0.0);
  for (const Candidate& c : all.pool) rec.witnesses.push_back(c.form);
  std::sort(rec.witnesses.begin(), rec.witnesses.end());
  rec.witnesses.erase(std::unique(rec.witnesses.begin(), rec.witnesses.end()), rec.witnesses.end());
  return rec;
}

std::string to_string(ClaimId c) {
  switch (c) {
    case ClaimId::kTh1a: return "th1a";
    case ClaimId::kTh1b: return "th1b";
    case ClaimId::kTh2: return "th2";
    case ClaimId::kTh3: return "th3";
    case ClaimId::kConj1a: return "conj1a";
    case ClaimId::kConj1b: return "conj1b";
    case ClaimId::kConj2a: return "conj2a";
    case ClaimId::kConj2b: return "conj2b";
  }
  return "?";
}

std::optional<ClaimId> parse_claim(std::string_view text) {
  for (ClaimId c : {ClaimId::kTh1a, ClaimId::kTh1b, ClaimId::kTh2, ClaimId::kTh3, ClaimId::kConj1a,
                    ClaimId::kConj1b, ClaimId::kConj2a, ClaimId::kConj2b})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kVerified: return "verified";
    case Outcome::kVacuous: return "vacuous";
    case Outcome::kCounterexample: return "counterexample";
    case Outcome::kSmallNException: return "small-n-exception";
  }
  return "?";
}

double theorem2_threshold(int n, int k) {
  const double kd = k;
  return kd / 2.0 + std::sqrt(kd * n + (kd * kd - 4.0 * kd) / 4.0);
}

double theorem3_threshold(int n, int k) {
  const double kd = k;
  return (kd - 1.0) / 2.0 + std::sqrt(kd * n + (kd + 1.0) * (kd + 1.0) / 4.0);
}

namespace {

// One statement of the form: if mu(G) meets the threshold, then G has the
// property, unless G is the excepted graph.
struct Claim {
  ClaimId id;
  int k;
  bool strict;                                       // mu > t rather than mu >= t
  std::function<bool(int n)> defined;                // threshold and exception make sense at n
  std::function<bool(int n)> applicable;             // order hypothesis of the statement
  std::function<double(int n)> threshold;
  std::function<bool(const Graph&)> has_property;    // negation is subgraph-closed
  std::function<std::optional<Graph>(int n)> exception;
};

bool meets(const Claim& c, double mu, double t) {
  return c.strict ? mu > t + kThresholdSlack : mu >= t - kThresholdSlack;
}

ClaimVerdict run_claim(const Claim& claim, int n_from, int n_to, bool connected_only, const SearchConfig& cfg) {
  check_config(cfg);
  if (n_from > n_to) throw DomainError("empty order range");
  check_order(n_from);
  check_order(n_to);

  ClaimVerdict v;
  v.claim = claim.id;
  v.k = claim.k;
  v.n_from = n_from;
  v.n_to = n_to;
  v.connected_only = connected_only;

  bool any_defined = false;
  bool any_applicable_violation = false;
  bool any_violation = false;
  for (int n = n_from; n <= n_to; ++n) {
    if (!claim.defined(n)) {
      v.notes.push_back("n=" + std::to_string(n) + ": statement undefined, skipped");
      continue;
    }
    any_defined = true;
    ClaimPoint pt;
    pt.n = n;
    pt.threshold = claim.threshold(n);
    pt.applicable = claim.applicable(n);
    const std::optional<Graph> exc = claim.exception(n);
    const std::optional<CanonicalForm> exc_form =
        exc ? std::optional<CanonicalForm>(canonical_form(*exc)) : std::nullopt;

    EnumerationOptions opts;
    opts.connected_only = connected_only;
    if (cfg.hereditary) opts.keep = [&](const Graph& g) { return !claim.has_property(g); };

    struct State {
      std::uint64_t above = 0;
      std::uint64_t escapes = 0;
      std::vector<Violation> found;
    };
    EnumerationCensus census;
    auto states = sweep<State>(
        n, opts, cfg.threads,
        [&](State& s, const Graph& g) {
          const double cheap = std::min<double>(g.max_degree(), std::sqrt(2.0 * g.edge_count()));
          if (!meets(claim, cheap + kThresholdSlack, pt.threshold)) return;
          if (!cfg.hereditary && claim.has_property(g)) return;
          const double mu = spectral_radius(g, cfg.tol).mu;
          if (!meets(claim, mu, pt.threshold)) return;
          ++s.above;
          const CanonicalForm form = canonical_form(g);
          if (exc_form && form == *exc_form) {
            ++s.escapes;
            return;
          }
          s.found.push_back({form.text(), n, mu, pt.threshold, pt.applicable});
        },
        census);

    pt.enumerated = census.generated;
    std::vector<Violation> found;
    for (State& s : states) {
      pt.above += s.above;
      pt.escapes += s.escapes;
      found.insert(found.end(), s.found.begin(), s.found.end());
    }
    std::sort(found.begin(), found.end(), [](const Violation& a, const Violation& b) { return a.graph6 < b.graph6; });
    pt.violations = found.size();
    if (!found.empty()) {
      any_violation = true;
      any_applicable_violation = any_applicable_violation || pt.applicable;
    }
    if (!pt.applicable) v.notes.push_back("n=" + std::to_string(n) + ": order hypothesis not met, exploratory");
    v.violations.insert(v.violations.end(), found.begin(), found.end());
    v.points.push_back(pt);
  }

  if (!any_defined) v.outcome = Outcome::kVacuous;
  else if (any_applicable_violation) v.outcome = Outcome::kCounterexample;
  else if (any_violation) v.outcome = Outcome::kSmallNException;
  else v.outcome = Outcome::kVerified;
  return v;
}

auto always = [](int) { return true; };

std::function<bool(int)> snk_defined(int k, bool plus) {
  return [k, plus](int n) { return plus ? k < n - 1 : k < n; };
}

std::function<double(int)> snk_threshold(int k, bool plus) {
  return [k, plus](int n) { return plus ? mu_snk_plus(n, k) : mu_snk_closed(n, k); };
}

std::function<std::optional<Graph>(int)> snk_exception(int k, bool plus) {
  return [k, plus](int n) { return std::optional<Graph>(make_snk(n, k, plus)); };
}

void check_k(int k, int min_k) {
  if (k < min_k) throw DomainError("k must be at least " + std::to_string(min_k));
}

}  // namespace

ClaimVerdict verify_theorem1(int k, bool part_b, int n_from, int n_to, bool connected_only, const SearchConfig& cfg) {
  check_k(k, 1);
  const int path = 2 * k + (part_b ? 3 : 2);
  Claim c{part_b ? ClaimId::kTh1b : ClaimId::kTh1a,
          k,
          false,
          snk_defined(k, part_b),
          [k, part_b](int n) {
            if (k == 1) return part_b ? n >= 10 : n > 5;
            return k < 16 && n >= (1 << (4 * k));
          },
          snk_threshold(k, part_b),
          [path](const Graph& g) { return has_path(g, path); },
          snk_exception(k, part_b)};
  ClaimVerdict v = run_claim(c, n_from, n_to, connected_only, cfg);
  if (k == 1)
    v.notes.insert(v.notes.begin(), part_b ? "k=1 order hypothesis: n >= 10" : "k=1 order hypothesis: n > 5");
  else
    v.notes.insert(v.notes.begin(), "order hypothesis: n >= 2^(4k)");
  return v;
}

ClaimVerdict verify_theorem2(int k, int n_from, int n_to, bool connected_only, const SearchConfig& cfg) {
  check_k(k, 1);
  Claim c{ClaimId::kTh2,
          k,
          true,
          always,
          always,
          [k](int n) { return theorem2_threshold(n, k); },
          [k](const Graph& g) {
            for (int l = 1; l <= k; ++l)
              if (!has_cycle(g, 2 * l + 2)) return false;
            return true;
          },
          [](int) { return std::optional<Graph>(); }};
  return run_claim(c, n_from, n_to, connected_only, cfg);
}

ClaimVerdict verify_theorem3(int k, int n_from, int n_to, bool connected_only, const SearchConfig& cfg) {
  check_k(k, 1);
  Claim c{ClaimId::kTh3,
          k,
          true,
          always,
          always,
          [k](int n) { return theorem3_threshold(n, k); },
          [k](const Graph& g) { return has_cycle(g, 2 * k + 1) || has_cycle(g, 2 * k + 2); },
          [](int) { return std::optional<Graph>(); }};
  return run_claim(c, n_from, n_to, connected_only, cfg);
}

ClaimVerdict scan_conjecture1(int k, bool part_b, int n_from, int n_to, bool connected_only, const SearchConfig& cfg) {
  check_k(k, 2);
  Claim c{part_b ? ClaimId::kConj1b : ClaimId::kConj1a,
          k,
          false,
          snk_defined(k, part_b),
          [](int) { return false; },
          snk_threshold(k, part_b),
          part_b ? std::function<bool(const Graph&)>([k](const Graph& g) { return has_cycle(g, 2 * k + 2); })
                 : std::function<bool(const Graph&)>(
                       [k](const Graph& g) { return has_cycle(g, 2 * k + 1) || has_cycle(g, 2 * k + 2); }),
          snk_exception(k, part_b)};
  ClaimVerdict v = run_claim(c, n_from, n_to, connected_only, cfg);
  v.notes.insert(v.notes.begin(), "stated for sufficiently large n; small-order scan is exploratory");
  return v;
}

ClaimVerdict scan_conjecture2(int k, bool part_b, int n_from, int n_to, bool connected_only, const SearchConfig& cfg) {
  check_k(k, 2);
  const int t = 2 * k + (part_b ? 3 : 2);
  if (t > kMaxTreeOrder) throw UnsupportedError("tree order " + std::to_string(t) + " exceeds supported maximum");
  Claim c{part_b ? ClaimId::kConj2b : ClaimId::kConj2a,
          k,
          false,
          snk_defined(k, part_b),
          [](int) { return false; },
          snk_threshold(k, part_b),
          [t](const Graph& g) { return contains_all_trees(g, t).all; },
          snk_exception(k, part_b)};
  ClaimVerdict v = run_claim(c, n_from, n_to, connected_only, cfg);
  v.notes.insert(v.notes.begin(), "stated for sufficiently large n; small-order scan is exploratory");
  return v;
}

ClaimVerdict verify_claim(ClaimId id, int k, int n_from, int n_to, bool connected_only, const SearchConfig& cfg) {
  switch (id) {
    case ClaimId::kTh1a: return verify_theorem1(k, false, n_from, n_to, connected_only, cfg);
    case ClaimId::kTh1b: return verify_theorem1(k, true, n_from, n_to, connected_only, cfg);
    case ClaimId::kTh2: return verify_theorem2(k, n_from, n_to, connected_only, cfg);
    case ClaimId::kTh3: return verify_theorem3(k, n_from, n_to, connected_only, cfg);
    case ClaimId::kConj1a: return scan_conjecture1(k, false, n_from, n_to, connected_only, cfg);
    case ClaimId::kConj1b: return scan_conjecture1(k, true, n_from, n_to, connected_only, cfg);
    case ClaimId::kConj2a: return scan_conjecture2(k, false, n_from, n_to, connected_only, cfg);
    case ClaimId::kConj2b: return scan_conjecture2(k, true, n_from, n_to, connected_only, cfg);
  }
  throw DomainError("unknown claim");
}

GVariantComparison compare_g_variants(int n, int l, bool connected_only, const SearchConfig& cfg) {
  if (l < 3) throw DomainError("g_l requires l >= 3");
  GVariantComparison out;
  out.strict = extremal_mu(n, ForbiddenSpec({{PatternKind::kCycle, l}, {PatternKind::kCycle, l + 1}}), connected_only,
                           cfg);
  out.relaxed = extremal_mu(n, ForbiddenSpec({{PatternKind::kCycleAtLeast, l}}), connected_only, cfg);
  out.agree = std::fabs(out.strict.max_mu - out.relaxed.max_mu) <= kWitnessTolerance;
  return out;
}

SandwichPosition sandwich_position(double value, int n, int k) {
  const double root = std::sqrt(static_cast<double>(k) * n);
  SandwichPosition s;
  s.value = value;
  s.lower = (k - 1.0) / 2.0 + root;
  s.upper = k / 2.0 + root;
  s.offset = value - s.lower;
  return s;
}

}  // namespace bst
