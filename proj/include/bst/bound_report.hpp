#pragma once

#include <string>

namespace bst {

inline constexpr double kInequalitySlack = 1e-9;

/// One evaluated inequality lhs <= rhs.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
  double slack = 0.0;  // rhs - lhs
  /// The statement's hypotheses are not met, so it asserts nothing here.
  bool vacuous = false;
};

inline BoundReport make_report(std::string name, double lhs, double rhs) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = lhs <= rhs + kInequalitySlack;
  return r;
}

inline BoundReport make_vacuous_report(std::string name, double lhs, double rhs) {
  BoundReport r = make_report(std::move(name), lhs, rhs);
  r.holds = true;
  r.vacuous = true;
  return r;
}

}  // namespace bst
