#pragma once

#include "qhcis/scalars.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qhcis {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

struct AlgebraType {
  Family family;
  int rank;

  void validate() const;  // throws std::invalid_argument on a bad family/rank combination
  std::string name() const;
  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }
  friend bool operator<(const AlgebraType& x, const AlgebraType& y) {
    return x.family != y.family ? x.family < y.family : x.rank < y.rank;
  }
  friend bool operator==(const AlgebraType& x, const AlgebraType& y) {
    return x.family == y.family && x.rank == y.rank;
  }
};

/// Signed root handle: +k / -k refer to the k-th positive root (1-based) and
/// its negative. 0 is "not a root".
using RootId = int32_t;

/// Integer coordinates over the simple-root basis (Bourbaki numbering).
using Coords = std::vector<int>;

/// Rational vector over the simple-root basis; used for weights.
using Weight = std::vector<Rational>;

Weight to_weight(const Coords& c);
Weight weight_add(const Weight& x, const Weight& y);
Weight weight_sub(const Weight& x, const Weight& y);

/// The full root system of a complex simple Lie algebra, with a
/// Weyl-invariant inner product normalized so that long roots have
/// squared length 2. Positive roots are ordered by height, then
/// lexicographically on coordinates; this order is fixed and shared by
/// everything built downstream.
class RootSystem {
public:
  static RootSystem build(const AlgebraType& t);

  const AlgebraType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  RootId highest_root() const { return num_positive(); }

  const Coords& coords(RootId r) const;  // of the underlying positive root
  Coords signed_coords(RootId r) const;
  int height(RootId r) const;  // signed

  RootId find_root(const Coords& c) const;           // 0 if not a root
  RootId root_from_weight(const Weight& w) const;    // 0 if not a root
  RootId sum(RootId a, RootId b) const;              // 0 if a+b is not a root (or is 0)
  bool is_root_sum(RootId a, RootId b) const { return sum(a, b) != 0; }

  /// Cartan matrix entry <alpha_j, alpha_i^v> (Bourbaki convention), 0-based.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  Rational simple_norm2(int i) const { return simple_norm2_[i]; }

  int coroot_pairing(RootId b, int i) const;               // <beta, alpha_i^v>
  Rational coroot_pairing(const Weight& w, int i) const;   // <w, alpha_i^v>

  Rational ip(const Weight& x, const Weight& y) const;     // <.,.>, long roots have norm 2
  Rational ip(RootId a, RootId b) const;
  Rational norm2(RootId a) const { return ip(a, a); }
  bool is_long(RootId a) const { return norm2(a) == Rational(2); }

  /// (p, q): largest j with beta - j*alpha (resp. beta + j*alpha) a root.
  std::pair<int, int> root_string(RootId alpha, RootId beta) const;

  Weight fundamental_weight(int i) const;  // 0-based simple index
  Weight weight_of(RootId r) const { return to_weight(signed_coords(r)); }
  Weight reflect(const Weight& w, int i) const;  // simple reflection s_i

  /// Positive roots supported on a subset of simple roots (0-based indices).
  std::vector<RootId> subsystem_positive(const std::set<int>& simples) const;
  /// Highest root of the (connected) subsystem spanned by `simples`.
  RootId subsystem_highest_root(const std::set<int>& simples) const;

  /// Coordinates in the standard orthogonal realization (families B, C, D only).
  std::vector<Rational> eps_coords(RootId r) const;
  std::vector<Rational> eps_of_weight(const Weight& w) const;
  std::string eps_string(RootId r) const;
  std::string eps_string(const Weight& w) const;
  static std::string format_eps(const std::vector<Rational>& e);

private:
  AlgebraType type_;
  std::vector<Coords> positive_;          // ordered by (height, lex)
  std::vector<int> heights_;
  std::vector<std::vector<int>> cartan_;  // cartan_[i][j] = <alpha_j, alpha_i^v>
  std::vector<Rational> simple_norm2_;
  std::vector<std::vector<long long>> six_ip_;  // 6*<alpha_i, alpha_j>, exact integers
  std::vector<int32_t> sum_table_;        // dense (2m)^2 -> RootId
  std::vector<std::vector<int>> lookup_;  // hash-free coord lookup via sorted map
  std::vector<std::pair<Coords, int>> index_;  // sorted coords -> positive index

  int dense(RootId r) const { return r > 0 ? r - 1 : num_positive() + (-r - 1); }
};

/// Multiplicities of the simple roots in the highest root; one row of the
/// classical table per family.
Coords highest_root_multiplicities(const AlgebraType& t);

}  // namespace qhcis
