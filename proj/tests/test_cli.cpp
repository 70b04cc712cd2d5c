#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "bst/cli.hpp"
#include "bst/error.hpp"
#include "bst/graph6.hpp"

using namespace bst;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct") {
  const Run r = run({"construct", "--family", "snk", "--n", "6", "--k", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "Esa?\n");
  CHECK(run({"construct", "--family", "friendship", "--k", "2"}).out == graph6_encode(make_friendship(2)) + "\n");
  CHECK(run({"construct", "--family", "kab", "--n", "4", "--k", "2"}).code == kExitOk);
  CHECK(run({"construct", "--family", "snk-plus", "--n", "3", "--k", "2"}).code == kExitDomain);
  CHECK(run({"construct", "--family", "wheel", "--n", "6", "--k", "1"}).code == kExitUsage);
}

TEST_CASE("mu") {
  const Run r = run({"mu", "--g6", "C~"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("C~ 3 ", 0) == 0);
  const Run s = run({"--format", "csv", "mu", "--stdin"}, "C~\nBw\n");
  CHECK(s.code == kExitOk);
  CHECK(s.out.find("graph6,mu,residual,iterations\n") == 0);
  CHECK(s.out.find("\nBw,") != std::string::npos);
  const Run bad = run({"mu", "--g6", "C~~"});
  CHECK(bad.code == kExitDomain);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"mu"}).code == kExitDomain);
}

TEST_CASE("bounds and detect") {
  const Run b = run({"bounds", "--g6", "C~"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.find("min_degree") != std::string::npos);
  const Run d = run({"detect", "--g6", "DK{", "--forbid", "P5,C4,C>=4"});
  CHECK(d.code == kExitOk);
  CHECK(d.out == "P5 present\nC4 absent\nC>=4 absent\n");
  CHECK(run({"detect", "--g6", "DK{", "--forbid", "Q3"}).code == kExitDomain);
}

TEST_CASE("extremal") {
  const Run r = run({"--format", "json", "extremal", "--n", "6", "--forbid", "P4"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["max_mu"].get<double>() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-11));
  CHECK(j["witnesses"][0] == canonical_form(make_star(6)).text());

  const auto path = std::filesystem::temp_directory_path() / "bst_cli_store.jsonl";
  CHECK(run({"extremal", "--n", "4", "--n-to", "5", "--forbid", "C4", "--out", path.string()}).code == kExitOk);
  const Run resumed =
      run({"--format", "csv", "extremal", "--n", "4", "--n-to", "6", "--forbid", "C4", "--out", path.string(), "--resume"});
  CHECK(resumed.code == kExitOk);
  CHECK(std::count(resumed.out.begin(), resumed.out.end(), '\n') == 4);
  std::filesystem::remove(path);
  std::filesystem::remove(path.string() + ".manifest.json");

  CHECK(run({"extremal", "--n", "11", "--forbid", "C4"}).code == kExitDomain);
  CHECK(run({"extremal", "--n", "5", "--forbid", "C4", "--resume"}).code == kExitDomain);
}

TEST_CASE("verify and scan exit codes") {
  CHECK(run({"verify", "--claim", "th1a", "--k", "1", "--n-from", "4", "--n-to", "7"}).code == kExitOk);
  CHECK(run({"verify", "--claim", "th2", "--k", "1", "--n-from", "4", "--n-to", "7"}).code == kExitOk);
  CHECK(run({"verify", "--claim", "th5", "--k", "1", "--n-from", "4", "--n-to", "7"}).code == kExitUsage);
  CHECK(run({"scan", "--conjecture", "1", "--k", "2", "--n-from", "5", "--n-to", "7"}).code == kExitOk);
  CHECK(run({"scan", "--conjecture", "3", "--k", "2", "--n-from", "5", "--n-to", "7"}).code == kExitUsage);
  CHECK(run({"scan", "--conjecture", "1", "--k", "1", "--n-from", "5", "--n-to", "7"}).code == kExitDomain);
}

TEST_CASE("exit code for a synthesized counterexample") {
  ClaimVerdict v;
  v.claim = ClaimId::kTh3;
  v.outcome = Outcome::kCounterexample;
  v.violations.push_back({"Bw", 3, 2.0, 1.0, true});
  CHECK(exit_code_for(v) == kExitCounterexample);
  v.outcome = Outcome::kSmallNException;
  CHECK(exit_code_for(v) == kExitOk);
  v.outcome = Outcome::kVerified;
  CHECK(exit_code_for(v) == kExitOk);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"mu", "--g6", "C~", "--bogus"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "mu", "--g6", "C~"}).code == kExitUsage);
  CHECK(run({"--threads", "0", "mu", "--g6", "C~"}).code == kExitDomain);
  CHECK(run({"--tol", "-1", "mu", "--g6", "C~"}).code == kExitDomain);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("run configuration") {
  RunConfig c;
  CHECK_NOTHROW(c.validate());
  c.tol = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK(default_threads() >= 1);
}
