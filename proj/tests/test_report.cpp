#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bst/error.hpp"
#include "bst/report.hpp"

using namespace bst;

namespace {

std::vector<ExtremalRecord> oracle_records() {
  return {extremal_mu(6, ForbiddenSpec::parse("P4"), false), extremal_mu(7, ForbiddenSpec::parse("C3,C4"), false),
          extremal_mu(5, ForbiddenSpec::parse("C4"), false)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Set BST_UPDATE_GOLDEN=1 to rewrite the files instead of comparing.
void check_golden(const std::string& name, const std::string& text) {
  const std::filesystem::path p = std::filesystem::path(BST_GOLDEN_DIR) / name;
  if (std::getenv("BST_UPDATE_GOLDEN")) {
    std::ofstream(p) << text;
    return;
  }
  REQUIRE(std::filesystem::exists(p));
  CHECK(slurp(p) == text);
}

std::filesystem::path temp_path(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("bst_test_") + name);
}

}  // namespace

TEST_CASE("real formatting") {
  CHECK(format_real(std::sqrt(5.0)) == "2.2360679775");
  CHECK(format_real(3.0) == "3");
  CHECK(format_real(INFINITY) == "inf");
  CHECK(format_real(-INFINITY) == "-inf");
  CHECK(format_real(NAN) == "nan");
  CHECK(parse_real("2.2360679775") == round12(std::sqrt(5.0)));
  CHECK(std::isinf(parse_real("inf")));
  CHECK(std::isnan(parse_real("nan")));
  CHECK_THROWS_AS(parse_real("2.5x"), DomainError);
  CHECK_THROWS_AS(parse_real(""), DomainError);
  CHECK(parse_format("csv") == Format::kCsv);
  CHECK_FALSE(parse_format("xml").has_value());
}

TEST_CASE("records round-trip through JSON and CSV") {
  for (const ExtremalRecord& r : oracle_records()) {
    const std::string j = json_line(to_json(r));
    CHECK(json_line(to_json(record_from_json(nlohmann::json::parse(j)))) == j);
    const std::string c = to_csv(r);
    CHECK(to_csv(record_from_csv(c)) == c);
    const ExtremalRecord back = record_from_json(nlohmann::json::parse(j));
    CHECK(back.witnesses == r.witnesses);
    CHECK(back.spec == r.spec);
    CHECK(std::fabs(back.max_mu - r.max_mu) < 1e-11);
  }
}

TEST_CASE("bounds round-trip") {
  const BoundReport b = make_report("edges", std::sqrt(2.0), INFINITY);
  const std::string c = to_csv(b);
  CHECK(to_csv(bound_from_csv(c)) == c);
  const std::string j = json_line(to_json(b));
  CHECK(json_line(to_json(bound_from_json(nlohmann::json::parse(j)))) == j);
  CHECK(std::isinf(bound_from_json(nlohmann::json::parse(j)).rhs));
}

TEST_CASE("verdicts round-trip") {
  const ClaimVerdict v = verify_theorem1(1, false, 4, 6);
  const std::string j = json_line(to_json(v));
  const ClaimVerdict back = verdict_from_json(nlohmann::json::parse(j));
  CHECK(json_line(to_json(back)) == j);
  CHECK(back.outcome == v.outcome);
  CHECK(back.violations.size() == v.violations.size());
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(record_from_json(nlohmann::json::parse("{\"n\":3}")), DomainError);
  CHECK_THROWS_AS(record_from_csv("1,2"), DomainError);
  CHECK(split_csv("a,\"b,c\",\"d\"\"e\"") == std::vector<std::string>{"a", "b,c", "d\"e"});
}

TEST_CASE("golden renderings") {
  const auto records = oracle_records();
  check_golden("oracles.table", render_records(records, Format::kTable));
  check_golden("oracles.csv", render_records(records, Format::kCsv));
  check_golden("oracles.jsonl", render_records(records, Format::kJson));
}

TEST_CASE("references") {
  const auto p4 = reference_for(ForbiddenSpec::parse("P4"), 6);
  REQUIRE(p4.has_value());
  CHECK(p4->value == doctest::Approx(std::sqrt(5.0)));
  const auto c4 = reference_for(ForbiddenSpec::parse("C4"), 5);
  REQUIRE(c4.has_value());
  CHECK(c4->relation == "upper");
  CHECK(c4->value == doctest::Approx(0.5 + std::sqrt(4.25)));
}

TEST_CASE("result store resumes by cell") {
  const auto path = temp_path("store.jsonl");
  const auto records = oracle_records();
  {
    ResultStore s(path, false, {{"run", 1}});
    s.append(records[0]);
    s.append(records[1]);
  }
  {
    std::ofstream torn(path, std::ios::app);
    torn << "{\"type\":\"extr";
  }
  ResultStore s(path, true, {{"run", 2}});
  CHECK(s.records().size() == 2);
  CHECK(s.has(ResultStore::key_of(records[0])));
  CHECK(s.has(ResultStore::key_of(records[1])));
  CHECK_FALSE(s.has(ResultStore::key_of(records[2])));
  s.append(records[2]);
  const auto manifest = nlohmann::json::parse(slurp(ResultStore::manifest_path(path)));
  CHECK(manifest["version"] == kVersion);
  CHECK(manifest["cells"].size() == 3);
  CHECK(manifest["parameters"]["run"] == 2);
  std::size_t lines = 0;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) {
    ++lines;
    CHECK_NOTHROW((void)nlohmann::json::parse(line));
  }
  CHECK(lines == 3);

  ResultStore fresh(path, false, {});
  CHECK(fresh.records().empty());
  std::filesystem::remove(path);
  std::filesystem::remove(ResultStore::manifest_path(path));
}
