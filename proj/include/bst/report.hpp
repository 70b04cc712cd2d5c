#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "bst/bound_report.hpp"
#include "bst/extremal.hpp"

namespace bst {

enum class Format { kTable, kCsv, kJson };

std::optional<Format> parse_format(std::string_view text);
std::string to_string(Format f);

/// Rounds to 12 significant digits.
double round12(double x);
/// "%.12g", with "inf", "-inf" and "nan" for non-finite values.
std::string format_real(double x);
/// Inverse of format_real. Throws DomainError on malformed text.
double parse_real(std::string_view text);

// ---------------------------------------------------------------- JSON

nlohmann::json to_json(const ExtremalRecord& r);
ExtremalRecord record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& b);
BoundReport bound_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClaimVerdict& v);
ClaimVerdict verdict_from_json(const nlohmann::json& j);

/// Compact one-line serialization.
std::string json_line(const nlohmann::json& j);

// ---------------------------------------------------------------- CSV

/// Splits one CSV line; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv(std::string_view line);

std::string record_csv_header();
std::string to_csv(const ExtremalRecord& r);
ExtremalRecord record_from_csv(std::string_view line);

std::string bound_csv_header();
std::string to_csv(const BoundReport& b);
BoundReport bound_from_csv(std::string_view line);

/// One row per scanned order.
std::string verdict_csv_header();
std::string verdict_csv_row(const ClaimVerdict& v, const ClaimPoint& p);

// ---------------------------------------------------------------- rendering

/// Closed-form comparison value attached to a forbidden family, when one is
/// known: a lower bound from S_{n,k} or S_{n,k}^+, or the C_4 upper bound.
struct Reference {
  std::string label;
  std::string relation;  // "lower", "upper" or "exact"
  double value = 0.0;
  /// Asymptotic window [(k-1)/2 + sqrt(kn), k/2 + sqrt(kn)] for the even-cycle
  /// families, up to lower-order terms.
  std::optional<std::pair<double, double>> window;
};

std::optional<Reference> reference_for(const ForbiddenSpec& spec, int n);

std::string render_records(const std::vector<ExtremalRecord>& records, Format f);
std::string render_verdicts(const std::vector<ClaimVerdict>& verdicts, Format f);
std::string render_bounds(const std::vector<BoundReport>& reports, Format f);

// ---------------------------------------------------------------- persistence

/// Line-delimited extremal records plus a manifest next to them
/// (<path>.manifest.json) holding parameters, tolerances, version and census.
class ResultStore {
 public:
  using CellKey = std::tuple<int, std::string, bool>;  // n, forbid, connected

  /// With `resume`, existing records are loaded and their cells are skipped;
  /// otherwise the file is truncated.
  ResultStore(std::filesystem::path path, bool resume, nlohmann::json parameters);

  bool has(const CellKey& key) const { return done_.count(key) != 0; }
  const std::vector<ExtremalRecord>& records() const noexcept { return records_; }

  /// Appends a record and rewrites the manifest.
  void append(const ExtremalRecord& r);

  static CellKey key_of(const ExtremalRecord& r);
  static std::filesystem::path manifest_path(const std::filesystem::path& p);

 private:
  void write_manifest() const;

  std::filesystem::path path_;
  nlohmann::json parameters_;
  std::vector<ExtremalRecord> records_;
  std::set<CellKey> done_;
};

inline constexpr const char* kVersion = "1.0.0";

}  // namespace bst
