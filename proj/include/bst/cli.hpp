#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bst/report.hpp"

namespace bst {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCounterexample = 3;

struct RunConfig {
  double tol = kDefaultEigenTolerance;
  int threads = 1;
  Format format = Format::kTable;
  std::string out_path;
  bool resume = false;

  /// Throws DomainError unless tol > 0 and threads >= 1.
  void validate() const;
};

/// Default worker count: BST_THREADS when set to a positive integer, else 1.
int default_threads();

/// kExitCounterexample when a theorem without order hypothesis failed.
int exit_code_for(const ClaimVerdict& v);

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace bst
