#pragma once

#include "qhcis/omega.hpp"

#include <string>

namespace qhcis {

/// Everything the CLI prints for one case: the classification, the
/// distinguished roots and Levi data, the tensor decomposition, the special
/// constituents with their systems and invariance parameters, and a summary
/// of the per-case property checks. Serialization is deterministic.
struct CaseReport {
  ParabolicCase c;
  StepClassification cls;
  std::vector<std::pair<Weight, long long>> decomposition;  // l_gamma (x) z(n)
  std::vector<BigInt> constituent_dims;
  std::vector<SpecialConstituent> specials;

  struct OmegaEntry {
    bool solved = false;  // false for types 1b/3 (no closed form)
    SpecialValueResult res;
    UEAElement lowest;  // the lowest-weight operator of the system
  };
  std::vector<OmegaEntry> omega2;  // parallel to specials
  Omega1Result omega1;
  WeightLemmaReport lemmas;
};

CaseReport build_report(const std::string& label);

std::string report_text(const CaseReport& r);
std::string report_json(const CaseReport& r);
std::string report_csv(const CaseReport& r);

}  // namespace qhcis
