#include "bst/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bst/bounds.hpp"
#include "bst/error.hpp"
#include "bst/graph6.hpp"
#include "bst/kernels.hpp"

namespace bst {

using nlohmann::json;

void RunConfig::validate() const {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (threads < 1) throw DomainError("thread count must be at least 1");
}

int default_threads() {
  if (const char* env = std::getenv("BST_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

int exit_code_for(const ClaimVerdict& v) { return v.alarming() ? kExitCounterexample : kExitOk; }

namespace {

struct Inputs {
  std::string g6;
  bool from_stdin = false;
};

std::vector<Graph> read_inputs(const Inputs& src, std::istream& in) {
  if (src.from_stdin) return read_graph6_stream(in);
  if (src.g6.empty()) throw DomainError("a graph is required (--g6 or --stdin)");
  return {graph6_decode(src.g6)};
}

std::string render_spectral(const std::vector<std::pair<Graph, SpectralResult>>& rows, Format f) {
  std::ostringstream out;
  if (f == Format::kJson) {
    for (const auto& [g, s] : rows)
      out << json_line({{"type", "spectral"},
                        {"graph6", graph6_encode(g)},
                        {"mu", round12(s.mu)},
                        {"residual", round12(s.residual)},
                        {"iterations", s.iterations}})
          << '\n';
    return out.str();
  }
  if (f == Format::kCsv) out << "graph6,mu,residual,iterations\n";
  for (const auto& [g, s] : rows) {
    const char sep = f == Format::kCsv ? ',' : ' ';
    out << graph6_encode(g) << sep << format_real(s.mu) << sep << format_real(s.residual) << sep << s.iterations
        << '\n';
  }
  return out.str();
}

std::string render_detect(const std::string& g6, const ForbiddenSpec& spec, const Graph& g, Format f) {
  std::ostringstream out;
  if (f == Format::kCsv) out << "graph6,pattern,present\n";
  for (const Pattern& p : spec.patterns()) {
    const bool present = contains_pattern(g, p);
    if (f == Format::kJson)
      out << json_line({{"type", "detect"}, {"graph6", g6}, {"pattern", p.to_string()}, {"present", present}})
          << '\n';
    else if (f == Format::kCsv)
      out << g6 << ',' << p.to_string() << ',' << (present ? "true" : "false") << '\n';
    else
      out << p.to_string() << ' ' << (present ? "present" : "absent") << '\n';
  }
  return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral extremal problems for paths and cycles: constructions, bounds and exhaustive checks", "bst"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.threads = default_threads();
  std::string format = "table";
  std::string kernels = "auto";
  app.add_option("--format", format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--threads", cfg.threads, "worker threads (default: BST_THREADS or 1)");
  app.add_option("--tol", cfg.tol, "eigensolver residual tolerance");
  app.add_option("--kernels", kernels, "scalar | avx2 | auto")->check(CLI::IsMember({"scalar", "avx2", "auto"}));

  // construct
  auto* construct = app.add_subcommand("construct", "emit graph6 of a named family");
  std::string family;
  int cn = 0;
  int ck = 0;
  construct->add_option("--family", family, "snk | snk-plus | friendship | kab")
      ->required()
      ->check(CLI::IsMember({"snk", "snk-plus", "friendship", "kab"}));
  construct->add_option("--n", cn, "order (snk, snk-plus, kab; optional for friendship)");
  construct->add_option("--k", ck, "clique size; triangles for friendship; first part for kab")->required();

  // mu
  auto* mu = app.add_subcommand("mu", "spectral radius and residual");
  Inputs mu_in;
  auto* mu_g6 = mu->add_option("--g6", mu_in.g6, "graph6 text");
  mu->add_flag("--stdin", mu_in.from_stdin, "read graph6 lines from standard input")->excludes(mu_g6);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "all applicable spectral inequalities");
  Inputs bounds_in;
  auto* bounds_g6 = bounds->add_option("--g6", bounds_in.g6, "graph6 text");
  bounds->add_flag("--stdin", bounds_in.from_stdin, "read graph6 lines from standard input")->excludes(bounds_g6);

  // detect
  auto* detect = app.add_subcommand("detect", "path and cycle containment");
  Inputs detect_in;
  std::string detect_forbid;
  auto* detect_g6 = detect->add_option("--g6", detect_in.g6, "graph6 text");
  detect->add_flag("--stdin", detect_in.from_stdin, "read graph6 lines from standard input")->excludes(detect_g6);
  detect->add_option("--forbid", detect_forbid, "patterns, e.g. \"P5,C6,C>=6\"")->required();

  // extremal
  auto* extremal = app.add_subcommand("extremal", "maximum spectral radius over graphs avoiding patterns");
  int ex_n = 0;
  int ex_n_to = 0;
  std::string ex_forbid;
  bool ex_connected = false;
  bool ex_exhaustive = false;
  extremal->add_option("--n", ex_n, "order")->required();
  extremal->add_option("--n-to", ex_n_to, "last order of a range starting at --n");
  extremal->add_option("--forbid", ex_forbid, "patterns, e.g. \"C3,C4\"")->required();
  extremal->add_flag("--connected", ex_connected, "connected graphs only");
  extremal->add_flag("--exhaustive", ex_exhaustive, "visit every graph instead of pruning violating subtrees");
  extremal->add_option("--out", cfg.out_path, "append records to this JSONL file (manifest alongside)");
  extremal->add_flag("--resume", cfg.resume, "skip cells already present in --out");

  // verify
  auto* verify = app.add_subcommand("verify", "exhaustive check of a theorem on a range of orders");
  std::string claim;
  int vk = 1;
  int v_from = 0;
  int v_to = 0;
  bool v_connected = false;
  bool v_exhaustive = false;
  verify->add_option("--claim", claim, "th1a | th1b | th2 | th3")
      ->required()
      ->check(CLI::IsMember({"th1a", "th1b", "th2", "th3"}));
  verify->add_option("--k", vk, "k")->required();
  verify->add_option("--n-from", v_from, "first order")->required();
  verify->add_option("--n-to", v_to, "last order")->required();
  verify->add_flag("--connected", v_connected, "connected graphs only");
  verify->add_flag("--exhaustive", v_exhaustive, "visit every graph instead of pruning");

  // scan
  auto* scan = app.add_subcommand("scan", "exploratory small-order scan of a conjecture");
  int conjecture = 1;
  std::string part = "a";
  int sk = 2;
  int s_from = 0;
  int s_to = 0;
  bool s_connected = false;
  bool s_exhaustive = false;
  scan->add_option("--conjecture", conjecture, "1 | 2")->required()->check(CLI::Range(1, 2));
  scan->add_option("--part", part, "a | b")->check(CLI::IsMember({"a", "b"}));
  scan->add_option("--k", sk, "k (>= 2)")->required();
  scan->add_option("--n-from", s_from, "first order")->required();
  scan->add_option("--n-to", s_to, "last order")->required();
  scan->add_flag("--connected", s_connected, "connected graphs only");
  scan->add_flag("--exhaustive", s_exhaustive, "visit every graph instead of pruning");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.format = *parse_format(format);
    cfg.validate();
    kernels::force_isa(kernels == "scalar" ? std::optional(kernels::Isa::kScalar)
                       : kernels == "avx2" ? std::optional(kernels::Isa::kAvx2)
                                           : std::nullopt);

    if (*construct) {
      Graph g;
      if (family == "snk" || family == "snk-plus") {
        const bool plus = family == "snk-plus";
        if (ck < 1 || ck >= cn || (plus && ck >= cn - 1))
          throw DomainError(plus ? "snk-plus requires 1 <= k < n - 1" : "snk requires 1 <= k < n");
        g = make_snk(cn, ck, plus);
      } else if (family == "friendship") {
        if (ck < 1) throw DomainError("friendship requires k >= 1 triangles");
        if (cn != 0 && cn != 2 * ck + 1) throw DomainError("friendship graph with k triangles has order 2k+1");
        g = make_friendship(ck);
      } else {
        if (ck < 1 || cn - ck < 1) throw DomainError("kab requires 1 <= k < n");
        g = make_complete_bipartite(ck, cn - ck);
      }
      const std::string text = graph6_encode(g);
      if (cfg.format == Format::kJson)
        out << json_line({{"type", "graph"}, {"family", family}, {"n", g.order()}, {"k", ck}, {"graph6", text}})
            << '\n';
      else if (cfg.format == Format::kCsv)
        out << "family,n,k,graph6\n" << family << ',' << g.order() << ',' << ck << ',' << text << '\n';
      else
        out << text << '\n';
      return kExitOk;
    }

    if (*mu) {
      std::vector<std::pair<Graph, SpectralResult>> rows;
      for (const Graph& g : read_inputs(mu_in, in)) rows.emplace_back(g, spectral_radius(g, cfg.tol));
      out << render_spectral(rows, cfg.format);
      return kExitOk;
    }

    if (*bounds) {
      std::vector<BoundReport> all;
      for (const Graph& g : read_inputs(bounds_in, in)) {
        auto b = all_bounds(g, cfg.tol);
        all.insert(all.end(), b.begin(), b.end());
      }
      out << render_bounds(all, cfg.format);
      return kExitOk;
    }

    if (*detect) {
      const ForbiddenSpec spec = ForbiddenSpec::parse(detect_forbid);
      for (const Graph& g : read_inputs(detect_in, in))
        out << render_detect(graph6_encode(g), spec, g, cfg.format);
      return kExitOk;
    }

    const SearchConfig search{cfg.tol, cfg.threads, true};

    if (*extremal) {
      const ForbiddenSpec spec = ForbiddenSpec::parse(ex_forbid);
      const int last = ex_n_to ? ex_n_to : ex_n;
      if (last < ex_n) throw DomainError("--n-to must not be below --n");
      SearchConfig sc = search;
      sc.hereditary = !ex_exhaustive;
      std::optional<ResultStore> store;
      if (!cfg.out_path.empty()) {
        store.emplace(cfg.out_path, cfg.resume,
                      json{{"command", "extremal"},
                           {"forbid", spec.to_string()},
                           {"connected", ex_connected},
                           {"n_from", ex_n},
                           {"n_to", last},
                           {"exhaustive", ex_exhaustive},
                           {"eigen_tolerance", cfg.tol}});
      } else if (cfg.resume) {
        throw DomainError("--resume requires --out");
      }
      std::vector<ExtremalRecord> records;
      for (int n = ex_n; n <= last; ++n) {
        if (store && store->has({n, spec.to_string(), ex_connected})) {
          for (const auto& r : store->records())
            if (ResultStore::key_of(r) == ResultStore::CellKey{n, spec.to_string(), ex_connected}) records.push_back(r);
          continue;
        }
        ExtremalRecord r = extremal_mu(n, spec, ex_connected, sc);
        if (store) store->append(r);
        records.push_back(std::move(r));
      }
      out << render_records(records, cfg.format);
      return kExitOk;
    }

    if (*verify) {
      SearchConfig sc = search;
      sc.hereditary = !v_exhaustive;
      const ClaimVerdict v = verify_claim(*parse_claim(claim), vk, v_from, v_to, v_connected, sc);
      out << render_verdicts({v}, cfg.format);
      return exit_code_for(v);
    }

    if (*scan) {
      SearchConfig sc = search;
      sc.hereditary = !s_exhaustive;
      const bool b = part == "b";
      const ClaimVerdict v = conjecture == 1 ? scan_conjecture1(sk, b, s_from, s_to, s_connected, sc)
                                             : scan_conjecture2(sk, b, s_from, s_to, s_connected, sc);
      out << render_verdicts({v}, cfg.format);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace bst
