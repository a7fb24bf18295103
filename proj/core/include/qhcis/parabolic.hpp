#pragma once

#include "qhcis/chevalley.hpp"

#include <set>
#include <string>
#include <vector>

namespace qhcis {

/// Standard parabolic subalgebra q_S, S a set of simple roots (1-based indices).
struct ParabolicSpec {
  AlgebraType type;
  std::set<int> subset;

  void validate() const;
  std::string label() const;  // maximal parabolics only, e.g. "B7(3)"
};

enum class NilpotencyKind { Abelian, Heisenberg, QuasiHeisenberg, KStep };

struct StepClassification {
  int k = 0;
  NilpotencyKind kind = NilpotencyKind::KStep;
  long long dim_derived = 0;  // dim [n, n]

  std::string kind_name() const;
};

/// k from the multiplicities of the S-roots in the highest root; the kind is
/// refined through dim [n,n] counted from the S-grading levels.
StepClassification classify_step(const ParabolicSpec& spec);

/// Independent oracle: length of the lower central series of n computed by
/// iterated brackets of root vectors. Requires structure constants
/// (families A-F).
int nilpotency_step_bruteforce(const ParabolicSpec& spec);

/// Thrown for D_n(n-2), whose deleted diagram has three simple ideals.
struct excluded_case_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One maximal parabolic of quasi-Heisenberg type with its 2-grading,
/// Levi ideals and distinguished weights.
struct ParabolicCase {
  ParabolicSpec spec;
  std::shared_ptr<const LieAlgebraModel> model;
  int q_index = -1;  // 0-based index of alpha_q

  std::vector<Rational> h_q;  // grading element over {h_i}
  std::vector<RootId> delta_g1, delta_zn, delta_l_plus;
  int alpha_gamma = -1;  // 0-based
  RootId mu = 0, gamma_hw = 0, xi_gamma = 0;
  RootId xi_ngamma = 0;  // 0 when l_ngamma vanishes
  std::set<int> lgamma_simples, lngamma_simples;  // 0-based
  Weight lambda_q;

  const RootSystem& roots() const { return model->roots(); }
  std::string label() const { return spec.label(); }

  /// ad(H_q)-eigenvalue of a basis label (0 for Cartan labels).
  int level(BasisLabel l) const {
    if (is_cartan_label(l)) return 0;
    const Coords& c = roots().coords(l);
    return l > 0 ? c[q_index] : -c[q_index];
  }
  bool has_lngamma() const { return !lngamma_simples.empty(); }

  /// All simple-root indices of the Levi (0-based), i.e. everything but q.
  std::set<int> levi_simples() const;
  /// Norm squared of alpha_q.
  Rational alpha_q_norm2() const { return roots().simple_norm2(q_index); }
};

ParabolicSpec parse_case_label(const std::string& label);  // "B7(3)" etc.

ParabolicCase build_case(const ParabolicSpec& spec);
ParabolicCase build_case(const std::string& label);

/// Boolean report for the highest-weight lemmas; every clause must hold.
struct WeightLemmaReport {
  std::vector<std::pair<std::string, bool>> clauses;
  bool all() const {
    for (const auto& [n, v] : clauses)
      if (!v) return false;
    return true;
  }
};

WeightLemmaReport verify_weight_lemmas(const ParabolicCase& c);

}  // namespace qhcis
