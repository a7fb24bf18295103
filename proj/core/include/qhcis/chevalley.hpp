#pragma once

#include "qhcis/rootsystem.hpp"

#include <iosfwd>
#include <map>
#include <memory>

namespace qhcis {

/// Basis label for algebra elements: root vectors are the signed RootId,
/// Cartan coroot generators h_i are CARTAN_BASE + i.
using BasisLabel = int32_t;
constexpr BasisLabel CARTAN_BASE = 1 << 20;

inline bool is_cartan_label(BasisLabel l) { return l >= CARTAN_BASE; }
inline int cartan_index(BasisLabel l) { return static_cast<int>(l - CARTAN_BASE); }
inline BasisLabel cartan_label(int i) { return CARTAN_BASE + i; }

/// Sparse element of the Lie algebra over the Chevalley basis
/// {X_alpha} u {h_i}; no explicit zero entries.
struct AlgebraElement {
  std::map<BasisLabel, QuadExt> terms;

  bool is_zero() const { return terms.empty(); }
  void add(BasisLabel l, const QuadExt& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(l, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  void add_scaled(const AlgebraElement& x, const QuadExt& c) {
    if (c.is_zero()) return;
    for (const auto& [l, v] : x.terms) add(l, v * c);
  }
  QuadExt coeff(BasisLabel l) const {
    auto it = terms.find(l);
    return it == terms.end() ? QuadExt(0) : it->second;
  }
  static AlgebraElement basis(BasisLabel l) {
    AlgebraElement e;
    e.terms.emplace(l, QuadExt(1));
    return e;
  }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.terms == y.terms;
  }
};

/// Structure constants N_{alpha,beta} for [X_alpha, X_beta] = N X_{alpha+beta},
/// normalized so that {X_alpha, X_-alpha, H_alpha} are sl2-triples,
/// kappa(X_alpha, X_-alpha) = 1, and the cyclic identity holds on zero-sum
/// triples. Constants live in Q(sqrt 2) (irrational entries occur only for
/// short roots in B, C, F4).
class StructureConstants {
public:
  static StructureConstants build(const RootSystem& rs);

  /// N_{a,b}; zero when a+b is not a root.
  const QuadExt& N(RootId a, RootId b) const {
    int32_t k = idx_[pos(a) * stride_ + pos(b)];
    return k < 0 ? zero_ : values_[k];
  }
  /// Coordinates of H_beta (the inner-product dual of beta) over {h_i}.
  std::vector<Rational> coroot_coords(const RootSystem& rs, RootId beta) const;

  void write_csv(const RootSystem& rs, std::ostream& os) const;

private:
  size_t pos(RootId r) const { return r > 0 ? r - 1 : m_ + (-r - 1); }
  size_t m_ = 0, stride_ = 0;
  std::vector<int32_t> idx_;
  std::vector<QuadExt> values_;
  QuadExt zero_;
};

/// A complex simple Lie algebra presented by its root system and the
/// normalized structure-constant table. Immutable after construction.
class LieAlgebraModel {
public:
  static std::shared_ptr<const LieAlgebraModel> get(const AlgebraType& t);  // process-wide cache

  const RootSystem& roots() const { return rs_; }
  const StructureConstants& constants() const { return sc_; }
  const AlgebraType& type() const { return rs_.type(); }
  int rank() const { return rs_.rank(); }

  /// Dimension of the algebra: 2|Delta+| + rank.
  int dim() const { return 2 * rs_.num_positive() + rank(); }

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  void bracket_basis(BasisLabel a, BasisLabel b, AlgebraElement& out, const QuadExt& scale) const;

  /// Invariant pairing with kappa(X_alpha, X_-alpha) = 1.
  QuadExt killing_pair(const AlgebraElement& x, const AlgebraElement& y) const;

  /// Enumeration of the full basis, roots first then Cartan, deterministic.
  std::vector<BasisLabel> basis_labels() const;

  explicit LieAlgebraModel(RootSystem rs);

private:
  RootSystem rs_;
  StructureConstants sc_;
  std::vector<std::vector<Rational>> h_coords_;     // H_beta for each positive root
  std::vector<std::vector<Rational>> coroot_gram_;  // <alpha_i^v, alpha_j^v>
};

}  // namespace qhcis
