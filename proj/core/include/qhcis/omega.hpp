#pragma once

#include "qhcis/echelon.hpp"
#include "qhcis/tensor.hpp"

#include <array>

namespace qhcis {

/// Sparse element of g (x) g; left slots may be Cartan labels, right slots
/// are root vectors throughout this module.
struct TensorElement {
  std::map<std::pair<BasisLabel, BasisLabel>, QuadExt> terms;

  bool is_zero() const { return terms.empty(); }
  void add(BasisLabel l, BasisLabel r, const QuadExt& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(std::make_pair(l, r), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend bool operator==(const TensorElement& x, const TensorElement& y) {
    return x.terms == y.terms;
  }
};

/// omega = sum_j X_{-gamma_j} (x) X_{gamma_j} over Delta(z(n)).
TensorElement omega_element(const ParabolicCase& c);
/// The opposite-side pairing element sum_t X_{gamma_t} (x) X_{-gamma_t}.
TensorElement omega_bar_element(const ParabolicCase& c);

/// Covariant map (1/k!)(ad X)^k (x) Id applied to omega, k in {1, 2}.
TensorElement tau_k(const ParabolicCase& c, int k, const AlgebraElement& x);

/// Polarized quadratic map (1/2)(ad A ad B + ad B ad A) (x) Id omega;
/// tau_2(X) equals half of tau2_polar(X, X), and the directional derivative
/// of tau_2 at X along V is tau2_polar(V, X).
TensorElement tau2_polar(const ParabolicCase& c, const AlgebraElement& a, const AlgebraElement& b);

/// Infinitesimal action of a basis element of l on g (x) g.
TensorElement l_act(const ParabolicCase& c, BasisLabel z, const TensorElement& t);

/// Homogeneous polynomial on g(1) in the root coordinates eta_alpha,
/// of degree 1 or 2.
struct PolyOnG1 {
  int degree = 0;
  std::map<RootId, QuadExt> lin;                      // degree 1 monomials
  std::map<std::pair<RootId, RootId>, QuadExt> quad;  // degree 2; keys sorted (a <= b)

  bool is_zero() const { return lin.empty() && quad.empty(); }
  void add_lin(RootId a, const QuadExt& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = lin.emplace(a, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) lin.erase(it);
    }
  }
  void add_quad(RootId a, RootId b, const QuadExt& c) {
    if (c.is_zero()) return;
    if (a > b) std::swap(a, b);
    auto [it, fresh] = quad.emplace(std::make_pair(a, b), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) quad.erase(it);
    }
  }
};

/// tilde-tau_k(Y*)(X) = Y*(tau_k(X)) with X = sum eta_alpha X_alpha generic;
/// Y* lives on the kappa-dual side (g(1) (x) z(nbar) for k = 1,
/// l (x) z(nbar) for k = 2).
PolyOnG1 tau_tilde(const ParabolicCase& c, int k, const TensorElement& ystar);

/// PBW word over the negative-root generators of nbar: at most two letters,
/// canonically ordered (letter of larger positive index first).
struct Word {
  int8_t len = 0;
  std::array<RootId, 2> a{0, 0};

  static Word empty() { return Word{}; }
  static Word single(RootId x) { return Word{1, {x, 0}}; }
  static Word pair(RootId x, RootId y) {
    if (x > y) std::swap(x, y);  // more negative = later positive root goes first
    return Word{2, {x, y}};
  }
  friend bool operator<(const Word& u, const Word& v) {
    if (u.len != v.len) return u.len < v.len;
    if (u.a[0] != v.a[0]) return u.a[0] < v.a[0];
    return u.a[1] < v.a[1];
  }
  friend bool operator==(const Word& u, const Word& v) { return u.len == v.len && u.a == v.a; }
};

/// PBW-normal element of U(nbar) with coefficients polynomial in s.
struct UEAElement {
  std::map<Word, SPoly> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const Word& w, const SPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend bool operator==(const UEAElement& x, const UEAElement& y) { return x.terms == y.terms; }
};

std::map<Word, QuadExt> uea_at(const UEAElement& u, const QuadExt& s);
std::map<Word, QuadExt> uea_slice(const UEAElement& u, int k);

/// Image of a polynomial on g(1) under symmetrization followed by the
/// right-action identification (R . sigma), in PBW normal form.
UEAElement pbw_of_poly(const ParabolicCase& c, const PolyOnG1& p);

/// Lowest weight vector of V(mu+eps)* inside l (x) z(nbar).
TensorElement omega2_lowest_dual(const ParabolicCase& c, const SpecialConstituent& sc);

/// The lowest second-order operator of the system, assembled directly from
/// the structure-constant table; type 1a or 2 only.
UEAElement build_omega2_lowest(const ParabolicCase& c, const SpecialConstituent& sc);

struct Omega2System {
  std::vector<TensorElement> dual_basis;  // basis of V(mu+eps)*, lowest vector first
  std::vector<UEAElement> ops;            // operators in matching order
};

/// Spans V(mu+eps)* by raising from the lowest vector and maps each basis
/// vector through tilde-tau_2 to an operator; certifies independence by
/// exact rank over the PBW words. The first operator is the image of the
/// lowest vector. The three-argument form checks that it reproduces a
/// lowest operator built elsewhere.
Omega2System generate_system(const ParabolicCase& c, const SpecialConstituent& sc);
Omega2System generate_system(const ParabolicCase& c, const SpecialConstituent& sc,
                             const UEAElement& lowest);

/// Commutator [pi_s(Y), D] evaluated at the identity, expressed in PBW
/// normal form with coefficients affine in s. D must have PBW degree <= 2.
UEAElement bracket_at_identity(const ParabolicCase& c, const AlgebraElement& y,
                               const UEAElement& d);

struct SpecialValueResult {
  SpecialConstituent constituent;
  QuadExt s_value;
  QuadExt prefactor;  // -(||alpha_q||^2 / 2) C(mu, eps)
  RootId residual_direction = 0;
  SPoly residual;  // coefficient of R(X_{-eps}) in [pi_s(X_mu), Omega_2(Y*_l)]_e
  size_t system_size = 0;
};

/// Solves the vanishing condition of the second-order system's bracket at
/// the identity and checks it against the closed form
/// -(||alpha_q||^2/2) C(mu,eps) (s - s2).
SpecialValueResult solve_special_value(const ParabolicCase& c, const SpecialConstituent& sc);

struct Omega1Result {
  QuadExt s_value;
  std::vector<std::pair<RootId, QuadExt>> c_alpha;  // one constant per root of g(1)
  std::vector<RootId> zero_anomalies;
  bool certificate = false;  // invariance at s_value against the full basis of g
};

/// First-order system {R(X_{-alpha})}: its unique invariance parameter and
/// the nondegeneracy constants of its construction.
Omega1Result omega1_special_value(const ParabolicCase& c);

/// Extensional invariance check: for every label in ys and every operator,
/// the bracket at the identity (with s = s0 substituted) lies in the span of
/// the operators. On failure *diag names the first offending pair.
bool conformal_certificate(const ParabolicCase& c, const std::vector<UEAElement>& ops,
                           const QuadExt& s0, const std::vector<BasisLabel>& ys,
                           std::string* diag = nullptr);

/// Basis of g(1) u z(n) u l, the sweep required of a full certificate.
std::vector<BasisLabel> certificate_basis(const ParabolicCase& c);

}  // namespace qhcis
