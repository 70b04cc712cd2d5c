#include "bst/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "bst/error.hpp"

namespace bst {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view text) {
  if (text == "table") return Format::kTable;
  if (text == "csv") return Format::kCsv;
  if (text == "json") return Format::kJson;
  return std::nullopt;
}

std::string to_string(Format f) {
  switch (f) {
    case Format::kTable: return "table";
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
  }
  return "?";
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_real(x).c_str(), nullptr);
}

double parse_real(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw DomainError("malformed number '" + s + "'");
  return v;
}

namespace {

json real_json(double x) {
  if (!std::isfinite(x)) return format_real(x);
  return round12(x);
}

double real_from_json(const json& j) {
  if (j.is_string()) return parse_real(j.get<std::string>());
  return j.get<double>();
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed ") + what + ": " + e.what());
  }
}

std::string quote_csv(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

bool parse_bool(std::string_view s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw DomainError("malformed boolean '" + std::string(s) + "'");
}

template <class Int>
Int parse_int(std::string_view s) {
  const std::string t(s);
  char* end = nullptr;
  const long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size()) throw DomainError("malformed integer '" + t + "'");
  return static_cast<Int>(v);
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

// Plain aligned text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::ostringstream out;
    for (std::size_t ri = 0; ri < rows_.size(); ++ri) {
      const auto& r = rows_[ri];
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) line += "  ";
        line += r[i];
        if (i + 1 < r.size()) line.append(width[i] - r[i].size(), ' ');
      }
      out << line << '\n';
      if (ri == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
        out << std::string(total, '-') << '\n';
      }
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t p = s.find(sep, start);
    out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace

std::string json_line(const json& j) { return j.dump(); }

// ---------------------------------------------------------------- records

json to_json(const ExtremalRecord& r) {
  json w = json::array();
  for (const auto& f : r.witnesses) w.push_back(f.text());
  return {{"type", "extremal"},      {"n", r.n},
          {"forbid", r.spec.to_string()}, {"connected", r.connected_only},
          {"max_mu", real_json(r.max_mu)}, {"witnesses", w},
          {"enumerated", r.enumerated},  {"admissible", r.admissible},
          {"pruned", r.pruned}};
}

ExtremalRecord record_from_json(const json& j) {
  return guarded("extremal record", [&] {
    if (j.at("type").get<std::string>() != "extremal") throw DomainError("not an extremal record");
    ExtremalRecord r;
    r.n = j.at("n").get<int>();
    r.spec = ForbiddenSpec::parse(j.at("forbid").get<std::string>());
    r.connected_only = j.at("connected").get<bool>();
    r.max_mu = real_from_json(j.at("max_mu"));
    for (const auto& w : j.at("witnesses")) r.witnesses.emplace_back(w.get<std::string>());
    r.enumerated = j.at("enumerated").get<std::uint64_t>();
    r.admissible = j.at("admissible").get<std::uint64_t>();
    r.pruned = j.at("pruned").get<std::uint64_t>();
    return r;
  });
}

std::string record_csv_header() { return "n,forbid,connected,max_mu,witnesses,enumerated,admissible,pruned"; }

std::string to_csv(const ExtremalRecord& r) {
  std::vector<std::string> w;
  for (const auto& f : r.witnesses) w.push_back(f.text());
  std::ostringstream out;
  out << r.n << ',' << quote_csv(r.spec.to_string()) << ',' << bool_text(r.connected_only) << ','
      << format_real(r.max_mu) << ',' << quote_csv(join(w, ';')) << ',' << r.enumerated << ',' << r.admissible
      << ',' << r.pruned;
  return out.str();
}

ExtremalRecord record_from_csv(std::string_view line) {
  const auto f = split_csv(line);
  if (f.size() != 8) throw DomainError("extremal CSV row needs 8 fields");
  ExtremalRecord r;
  r.n = parse_int<int>(f[0]);
  r.spec = ForbiddenSpec::parse(f[1]);
  r.connected_only = parse_bool(f[2]);
  r.max_mu = parse_real(f[3]);
  for (auto& w : split(f[4], ';')) r.witnesses.emplace_back(std::move(w));
  r.enumerated = parse_int<std::uint64_t>(f[5]);
  r.admissible = parse_int<std::uint64_t>(f[6]);
  r.pruned = parse_int<std::uint64_t>(f[7]);
  return r;
}

std::vector<std::string> split_csv(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw DomainError("unterminated quote in CSV line");
  out.push_back(std::move(cur));
  return out;
}

// ---------------------------------------------------------------- bounds

json to_json(const BoundReport& b) {
  return {{"type", "bound"},          {"name", b.name},   {"lhs", real_json(b.lhs)}, {"rhs", real_json(b.rhs)},
          {"holds", b.holds},         {"slack", real_json(b.slack)}, {"vacuous", b.vacuous}};
}

BoundReport bound_from_json(const json& j) {
  return guarded("bound report", [&] {
    if (j.at("type").get<std::string>() != "bound") throw DomainError("not a bound report");
    BoundReport b;
    b.name = j.at("name").get<std::string>();
    b.lhs = real_from_json(j.at("lhs"));
    b.rhs = real_from_json(j.at("rhs"));
    b.holds = j.at("holds").get<bool>();
    b.slack = real_from_json(j.at("slack"));
    b.vacuous = j.at("vacuous").get<bool>();
    return b;
  });
}

std::string bound_csv_header() { return "name,lhs,rhs,holds,slack,vacuous"; }

std::string to_csv(const BoundReport& b) {
  return quote_csv(b.name) + ',' + format_real(b.lhs) + ',' + format_real(b.rhs) + ',' + bool_text(b.holds) + ',' +
         format_real(b.slack) + ',' + bool_text(b.vacuous);
}

BoundReport bound_from_csv(std::string_view line) {
  const auto f = split_csv(line);
  if (f.size() != 6) throw DomainError("bound CSV row needs 6 fields");
  BoundReport b;
  b.name = f[0];
  b.lhs = parse_real(f[1]);
  b.rhs = parse_real(f[2]);
  b.holds = parse_bool(f[3]);
  b.slack = parse_real(f[4]);
  b.vacuous = parse_bool(f[5]);
  return b;
}

// ---------------------------------------------------------------- verdicts

json to_json(const ClaimVerdict& v) {
  json points = json::array();
  for (const auto& p : v.points)
    points.push_back({{"n", p.n},
                      {"threshold", real_json(p.threshold)},
                      {"applicable", p.applicable},
                      {"enumerated", p.enumerated},
                      {"above", p.above},
                      {"escapes", p.escapes},
                      {"violations", p.violations}});
  json viol = json::array();
  for (const auto& x : v.violations)
    viol.push_back({{"graph6", x.graph6},
                    {"n", x.n},
                    {"mu", real_json(x.mu)},
                    {"threshold", real_json(x.threshold)},
                    {"applicable", x.applicable}});
  return {{"type", "verdict"},
          {"claim", to_string(v.claim)},
          {"k", v.k},
          {"n_from", v.n_from},
          {"n_to", v.n_to},
          {"connected", v.connected_only},
          {"outcome", to_string(v.outcome)},
          {"points", points},
          {"violations", viol},
          {"notes", v.notes}};
}

ClaimVerdict verdict_from_json(const json& j) {
  return guarded("verdict", [&] {
    if (j.at("type").get<std::string>() != "verdict") throw DomainError("not a verdict");
    ClaimVerdict v;
    const auto claim = parse_claim(j.at("claim").get<std::string>());
    if (!claim) throw DomainError("unknown claim id");
    v.claim = *claim;
    v.k = j.at("k").get<int>();
    v.n_from = j.at("n_from").get<int>();
    v.n_to = j.at("n_to").get<int>();
    v.connected_only = j.at("connected").get<bool>();
    const std::string outcome = j.at("outcome").get<std::string>();
    bool matched = false;
    for (Outcome o : {Outcome::kVerified, Outcome::kVacuous, Outcome::kCounterexample, Outcome::kSmallNException})
      if (to_string(o) == outcome) {
        v.outcome = o;
        matched = true;
      }
    if (!matched) throw DomainError("unknown outcome '" + outcome + "'");
    for (const auto& p : j.at("points"))
      v.points.push_back({p.at("n").get<int>(), real_from_json(p.at("threshold")), p.at("applicable").get<bool>(),
                          p.at("enumerated").get<std::uint64_t>(), p.at("above").get<std::uint64_t>(),
                          p.at("escapes").get<std::uint64_t>(), p.at("violations").get<std::uint64_t>()});
    for (const auto& x : j.at("violations"))
      v.violations.push_back({x.at("graph6").get<std::string>(), x.at("n").get<int>(), real_from_json(x.at("mu")),
                              real_from_json(x.at("threshold")), x.at("applicable").get<bool>()});
    v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
  });
}

std::string verdict_csv_header() { return "claim,k,n,connected,threshold,applicable,enumerated,above,escapes,violations,outcome"; }

std::string verdict_csv_row(const ClaimVerdict& v, const ClaimPoint& p) {
  std::ostringstream out;
  out << to_string(v.claim) << ',' << v.k << ',' << p.n << ',' << bool_text(v.connected_only) << ','
      << format_real(p.threshold) << ',' << bool_text(p.applicable) << ',' << p.enumerated << ',' << p.above << ','
      << p.escapes << ',' << p.violations << ',' << to_string(v.outcome);
  return out.str();
}

// ---------------------------------------------------------------- rendering

std::optional<Reference> reference_for(const ForbiddenSpec& spec, int n) {
  const auto& ps = spec.patterns();
  auto window = [n](int k) {
    const double r = std::sqrt(static_cast<double>(k) * n);
    return std::make_pair((k - 1.0) / 2.0 + r, k / 2.0 + r);
  };
  if (ps.size() == 1 && ps[0].kind == PatternKind::kPath && ps[0].order >= 4) {
    const int l = ps[0].order;
    const int k = (l - 2) / 2;
    if (l % 2 == 0 && k < n) return Reference{"mu(S_{n," + std::to_string(k) + "})", "lower", mu_snk_closed(n, k), {}};
    if (l % 2 == 1 && k < n - 1)
      return Reference{"mu(S_{n," + std::to_string(k) + "}^+)", "lower", mu_snk_plus(n, k), {}};
  }
  if (ps.size() == 1 && ps[0].kind == PatternKind::kCycle && ps[0].order == 4)
    return Reference{"1/2+sqrt(n-3/4)", "upper", 0.5 + std::sqrt(n - 0.75), window(1)};
  if (ps.size() == 1 && ps[0].kind == PatternKind::kCycle && ps[0].order % 2 == 0 && ps[0].order >= 6) {
    const int k = (ps[0].order - 2) / 2;
    if (k < n - 1)
      return Reference{"mu(S_{n," + std::to_string(k) + "}^+)", "lower", mu_snk_plus(n, k), window(k)};
  }
  if (ps.size() == 2 && ps[0].kind == PatternKind::kCycle && ps[1].kind == PatternKind::kCycle) {
    const int lo = std::min(ps[0].order, ps[1].order);
    if (std::max(ps[0].order, ps[1].order) == lo + 1) {
      if (lo == 3 && n >= 2) return Reference{"sqrt(n-1)", "exact", std::sqrt(n - 1.0), {}};
      if (lo % 2 == 1) {
        const int k = (lo - 1) / 2;
        if (k < n) return Reference{"mu(S_{n," + std::to_string(k) + "})", "lower", mu_snk_closed(n, k), window(k)};
      } else {
        const int k = (lo - 2) / 2;
        if (k >= 1 && k < n - 1)
          return Reference{"mu(S_{n," + std::to_string(k) + "}^+)", "lower", mu_snk_plus(n, k), {}};
      }
    }
  }
  return std::nullopt;
}

std::string render_records(const std::vector<ExtremalRecord>& records, Format f) {
  std::ostringstream out;
  if (f == Format::kJson) {
    for (const auto& r : records) out << json_line(to_json(r)) << '\n';
    return out.str();
  }
  if (f == Format::kCsv) {
    out << record_csv_header() << '\n';
    for (const auto& r : records) out << to_csv(r) << '\n';
    return out.str();
  }
  TextTable t({"n", "forbid", "connected", "max_mu", "reference", "relation", "ref_value", "max_mu-ref", "window",
               "witnesses", "enumerated", "admissible"});
  for (const auto& r : records) {
    std::vector<std::string> w;
    for (const auto& x : r.witnesses) w.push_back(x.text());
    std::vector<std::string> row{std::to_string(r.n), r.spec.to_string(), bool_text(r.connected_only),
                                 format_real(r.max_mu)};
    if (const auto ref = reference_for(r.spec, r.n)) {
      row.push_back(ref->label);
      row.push_back(ref->relation);
      row.push_back(format_real(ref->value));
      const double diff = r.max_mu - ref->value;
      row.push_back(format_real(std::fabs(diff) < 1e-11 ? 0.0 : diff));
      row.push_back(ref->window ? "[" + format_real(ref->window->first) + ", " + format_real(ref->window->second) + "]"
                                : "-");
    } else {
      row.insert(row.end(), {"-", "-", "-", "-", "-"});
    }
    row.push_back(join(w, ' '));
    row.push_back(std::to_string(r.enumerated));
    row.push_back(std::to_string(r.admissible));
    t.add(std::move(row));
  }
  return t.str();
}

std::string render_verdicts(const std::vector<ClaimVerdict>& verdicts, Format f) {
  std::ostringstream out;
  if (f == Format::kJson) {
    for (const auto& v : verdicts) out << json_line(to_json(v)) << '\n';
    return out.str();
  }
  if (f == Format::kCsv) {
    out << verdict_csv_header() << '\n';
    for (const auto& v : verdicts)
      for (const auto& p : v.points) out << verdict_csv_row(v, p) << '\n';
    return out.str();
  }
  for (const auto& v : verdicts) {
    out << to_string(v.claim) << " k=" << v.k << " n=" << v.n_from << ".." << v.n_to
        << (v.connected_only ? " connected" : "") << ": " << to_string(v.outcome) << '\n';
    TextTable t({"n", "threshold", "applicable", "enumerated", "above", "escapes", "violations"});
    for (const auto& p : v.points)
      t.add({std::to_string(p.n), format_real(p.threshold), bool_text(p.applicable), std::to_string(p.enumerated),
             std::to_string(p.above), std::to_string(p.escapes), std::to_string(p.violations)});
    out << t.str();
    for (const auto& x : v.violations)
      out << "  violation n=" << x.n << " " << x.graph6 << " mu=" << format_real(x.mu)
          << " threshold=" << format_real(x.threshold) << (x.applicable ? "" : " (exploratory)") << '\n';
    for (const auto& note : v.notes) out << "  note: " << note << '\n';
  }
  return out.str();
}

std::string render_bounds(const std::vector<BoundReport>& reports, Format f) {
  std::ostringstream out;
  if (f == Format::kJson) {
    for (const auto& b : reports) out << json_line(to_json(b)) << '\n';
    return out.str();
  }
  if (f == Format::kCsv) {
    out << bound_csv_header() << '\n';
    for (const auto& b : reports) out << to_csv(b) << '\n';
    return out.str();
  }
  TextTable t({"name", "lhs", "rhs", "holds", "slack", "vacuous"});
  for (const auto& b : reports)
    t.add({b.name, format_real(b.lhs), format_real(b.rhs), bool_text(b.holds), format_real(b.slack),
           bool_text(b.vacuous)});
  return t.str();
}

// ---------------------------------------------------------------- store

ResultStore::CellKey ResultStore::key_of(const ExtremalRecord& r) {
  return {r.n, r.spec.to_string(), r.connected_only};
}

std::filesystem::path ResultStore::manifest_path(const std::filesystem::path& p) {
  return std::filesystem::path(p.string() + ".manifest.json");
}

ResultStore::ResultStore(std::filesystem::path path, bool resume, json parameters)
    : path_(std::move(path)), parameters_(std::move(parameters)) {
  if (resume && std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j;
      try {
        j = json::parse(line);
      } catch (const json::exception&) {
        break;  // torn final line from an interrupted run
      }
      ExtremalRecord r = record_from_json(j);
      done_.insert(key_of(r));
      records_.push_back(std::move(r));
    }
    std::ofstream rewrite(path_, std::ios::trunc);
    for (const auto& r : records_) rewrite << json_line(to_json(r)) << '\n';
  } else {
    std::ofstream truncate(path_, std::ios::trunc);
    if (!truncate) throw Error("cannot open " + path_.string() + " for writing");
  }
  write_manifest();
}

void ResultStore::append(const ExtremalRecord& r) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw Error("cannot open " + path_.string() + " for appending");
  out << json_line(to_json(r)) << '\n';
  done_.insert(key_of(r));
  records_.push_back(r);
  write_manifest();
}

void ResultStore::write_manifest() const {
  json cells = json::array();
  for (const auto& r : records_)
    cells.push_back({{"n", r.n},
                     {"forbid", r.spec.to_string()},
                     {"connected", r.connected_only},
                     {"enumerated", r.enumerated},
                     {"admissible", r.admissible},
                     {"pruned", r.pruned}});
  const json m = {{"version", kVersion},
                  {"parameters", parameters_},
                  {"tolerances", {{"witness", kWitnessTolerance}, {"inequality", kInequalitySlack}}},
                  {"cells", cells}};
  const auto tmp = std::filesystem::path(manifest_path(path_).string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write manifest " + tmp.string());
    out << m.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, manifest_path(path_));
}

}  // namespace bst
