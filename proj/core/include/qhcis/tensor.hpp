#pragma once

#include "qhcis/parabolic.hpp"

#include <map>

namespace qhcis {

/// Weights of a finite-dimensional module, with multiplicities.
struct WeightSystem {
  Weight highest;
  std::map<Weight, long long> mult;

  long long dim() const {
    long long d = 0;
    for (const auto& [w, m] : mult) d += m;
    return d;
  }
};

/// Weight system of z(n): its weights are roots of g, each of multiplicity 1.
WeightSystem zn_weight_system(const ParabolicCase& c);

/// Trivial one-dimensional module (single weight 0).
WeightSystem trivial_weight_system(int rank);

/// Half sum of the positive roots of the Levi subsystem spanned by `simples`.
Weight levi_rho(const LieAlgebraModel& m, const std::set<int>& simples);

/// Tensor product decomposition V(hw_left) (x) right over the Levi subsystem,
/// by the rho-shifted dominant-conjugation character formula. Returns
/// (highest weight, multiplicity) pairs, deterministically ordered.
std::vector<std::pair<Weight, long long>> klimyk_decompose(const LieAlgebraModel& m,
                                                           const std::set<int>& levi,
                                                           const Weight& hw_left,
                                                           const WeightSystem& right);

/// Weight multiplicities of the irreducible Levi module with highest weight hw.
WeightSystem freudenthal(const LieAlgebraModel& m, const std::set<int>& levi, const Weight& hw);

/// Dimension of the irreducible Levi module with highest weight hw.
BigInt weyl_dim(const LieAlgebraModel& m, const std::set<int>& levi, const Weight& hw);

enum class ConstituentKind { Type1a, Type1b, Type2, Type3 };
enum class ConstituentSource { LGammaTensor, LnGammaTensor };

std::string kind_name(ConstituentKind k);

/// Special constituent V(mu + eps) of l (x) z(n).
struct SpecialConstituent {
  Weight nu;   // = mu + eps
  RootId eps;  // in Delta(g(1))
  ConstituentKind kind;
  ConstituentSource source;
};

/// The special constituents of l (x) z(n): exactly one inside
/// l_gamma (x) z(n), plus l_ngamma (x) z(n) itself when l_ngamma is nonzero.
/// The center copy C H_q (x) z(n) = V(gamma) contributes none.
std::vector<SpecialConstituent> special_constituents(const ParabolicCase& c);

/// Root sets and the constant feeding the second-order system for a
/// constituent of type 1a or 2.
struct OmegaRootData {
  std::vector<RootId> delta_mue_g1;  // alpha with (mu+eps) - alpha a root
  std::vector<RootId> delta_mue_zn;
  QuadExt c_mue;                     // nonzero by construction

  RootId theta(const RootSystem& rs, const Weight& nu, RootId beta) const {
    return rs.root_from_weight(weight_sub(nu, rs.weight_of(beta)));
  }
};

OmegaRootData omega_root_data(const ParabolicCase& c, const SpecialConstituent& sc);

}  // namespace qhcis
