#pragma once

#include "qhcis/omega.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qhcis {

/// Reference data for one quasi-Heisenberg case: the distinguished roots,
/// Levi subsets, tensor decomposition, special constituents and invariance
/// parameters. Classical entries carry coordinates in the orthogonal
/// realization; exceptional entries carry simple-root coordinates.
struct ExpectedSpecial {
  std::vector<Rational> hw_eps, eps_eps;  // classical
  Coords hw_simple, eps_simple;           // exceptional
  std::string type;                       // "1a", "1b", "2", "3"
  std::string source;                     // "l_gamma" or "l_ngamma"
  bool has_value = false;
  Rational s;
};

struct ExpectedCase {
  std::string label;
  bool classical = false;
  int alpha_gamma = 0;  // 1-based
  std::vector<Rational> mu_e, gamma_e, xig_e, xing_e;  // xing empty when absent
  Coords mu_s, gamma_s, xig_s, xing_s;
  std::set<int> lgamma, lngamma;  // 1-based
  std::vector<std::vector<Rational>> decomp_e;
  std::vector<Coords> decomp_s;
  std::vector<ExpectedSpecial> specials;
};

ExpectedCase expected_case(const std::string& label);

/// The case list every table-level check runs over.
const std::vector<std::string>& acceptance_case_labels();

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // first failure, when any
};

CheckResult run_criterion(int k);

/// Runs the requested criteria, printing one line each to `progress`
/// (when non-null). `color` enables ANSI coloring of the verdicts.
std::vector<CheckResult> run_criteria(const std::vector<int>& which, std::ostream* progress,
                                      bool color);

std::vector<int> criteria_for_scope(const std::string& scope);  // tables | lemmas | all

}  // namespace qhcis
