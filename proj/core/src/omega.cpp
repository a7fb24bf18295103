#include "qhcis/omega.hpp"

#include <algorithm>
#include <deque>

namespace qhcis {

namespace {

SPoly spoly_times_s(const SPoly& p) { return SPoly::s() * p; }

// Multiplication of two negative-root generators in U(nbar), PBW-normal.
// nbar is 2-step nilpotent: letters of level -2 are central and a swap of
// level -1 letters costs one central correction.
void uea_mul(const ParabolicCase& c, RootId x, RootId y, const SPoly& coeff, UEAElement& out) {
  if (x <= y) {  // canonical already (x carries the later positive root)
    out.add(Word::pair(x, y), coeff);
    return;
  }
  out.add(Word::pair(y, x), coeff);
  if (c.level(x) == -1 && c.level(y) == -1) {
    RootId s = c.roots().sum(x, y);
    if (s != 0) out.add(Word::single(s), coeff * SPoly(c.model->constants().N(x, y)));
  }
}

RootId simple_root_id(const RootSystem& rs, int i) {
  Coords e(rs.rank(), 0);
  e[i] = 1;
  RootId r = rs.find_root(e);
  if (r == 0) throw std::logic_error("simple root not found");
  return r;
}

}  // namespace

TensorElement omega_element(const ParabolicCase& c) {
  TensorElement t;
  for (RootId g : c.delta_zn) t.add(-g, g, QuadExt(1));
  return t;
}

TensorElement omega_bar_element(const ParabolicCase& c) {
  TensorElement t;
  for (RootId g : c.delta_zn) t.add(g, -g, QuadExt(1));
  return t;
}

TensorElement tau2_polar(const ParabolicCase& c, const AlgebraElement& a,
                         const AlgebraElement& b) {
  TensorElement out;
  const auto& m = *c.model;
  for (RootId g : c.delta_zn) {
    AlgebraElement base = AlgebraElement::basis(-g);
    AlgebraElement ab = m.bracket(a, m.bracket(b, base));
    AlgebraElement ba = m.bracket(b, m.bracket(a, base));
    for (const auto& [l, v] : ab.terms) out.add(l, g, v * QuadExt(Rational(1, 2)));
    for (const auto& [l, v] : ba.terms) out.add(l, g, v * QuadExt(Rational(1, 2)));
  }
  return out;
}

TensorElement tau_k(const ParabolicCase& c, int k, const AlgebraElement& x) {
  if (k != 1 && k != 2) throw std::invalid_argument("tau_k: only k = 1, 2 are built");
  for (const auto& [l, v] : x.terms)
    if (c.level(l) != 1) throw std::invalid_argument("tau_k: argument not supported on g(1)");
  TensorElement out;
  const auto& m = *c.model;
  if (k == 1) {
    for (RootId g : c.delta_zn) {
      AlgebraElement img = m.bracket(x, AlgebraElement::basis(-g));
      for (const auto& [l, v] : img.terms) out.add(l, g, v);
    }
    return out;
  }
  TensorElement p = tau2_polar(c, x, x);
  for (const auto& [key, v] : p.terms) out.add(key.first, key.second, v * QuadExt(Rational(1, 2)));
  return out;
}

TensorElement l_act(const ParabolicCase& c, BasisLabel z, const TensorElement& t) {
  if (c.level(z) != 0) throw std::invalid_argument("l_act: label not in the Levi");
  TensorElement out;
  const auto& m = *c.model;
  for (const auto& [key, v] : t.terms) {
    AlgebraElement left;
    m.bracket_basis(z, key.first, left, QuadExt(1));
    for (const auto& [l, w] : left.terms) out.add(l, key.second, v * w);
    AlgebraElement right;
    m.bracket_basis(z, key.second, right, QuadExt(1));
    for (const auto& [r, w] : right.terms) {
      if (is_cartan_label(r)) throw std::logic_error("l_act: right slot left the root space");
      out.add(key.first, r, v * w);
    }
  }
  return out;
}

PolyOnG1 tau_tilde(const ParabolicCase& c, int k, const TensorElement& ystar) {
  if (k != 1 && k != 2) throw std::invalid_argument("tau_tilde: only k = 1, 2 are built");
  const RootSystem& rs = c.roots();
  const auto& sc = c.model->constants();
  PolyOnG1 out;
  out.degree = k;
  for (const auto& [key, y] : ystar.terms) {
    BasisLabel dl = key.first;
    RootId gt = -key.second;  // right slot must be X_{-gamma_t}
    if (gt <= 0 || c.level(gt) != 2)
      throw std::invalid_argument("tau_tilde: right slot not in z(nbar)");
    if (k == 1) {
      if (is_cartan_label(dl) || c.level(dl) != 1)
        throw std::invalid_argument("tau_tilde: left slot not in g(1)");
      // kappa(X_dl, [X_beta, X_{-gt}]) is nonzero only for beta = gt - dl.
      RootId beta = rs.sum(gt, -dl);
      if (beta != 0 && c.level(beta) == 1) out.add_lin(beta, y * sc.N(beta, -gt));
      continue;
    }
    // k = 2: coefficient of eta_alpha eta_beta in
    // (1/2) kappa(X_dl, ad(X)^2 X_{-gt}).
    for (RootId beta : c.delta_g1) {
      RootId u = rs.sum(beta, -gt);
      if (u == 0) continue;
      QuadExt nb = sc.N(beta, -gt);
      for (RootId alpha : c.delta_g1) {
        QuadExt pv(0);
        RootId v = rs.sum(alpha, u);
        if (alpha == -u) {
          if (is_cartan_label(dl)) pv = QuadExt(rs.coroot_pairing(alpha, cartan_index(dl)));
        } else if (v != 0 && !is_cartan_label(dl) && dl == -v) {
          pv = sc.N(alpha, u);
        }
        if (!pv.is_zero()) out.add_quad(alpha, beta, y * nb * pv * QuadExt(Rational(1, 2)));
      }
    }
  }
  return out;
}

std::map<Word, QuadExt> uea_at(const UEAElement& u, const QuadExt& s) {
  std::map<Word, QuadExt> out;
  for (const auto& [w, p] : u.terms) {
    QuadExt v = p.eval(s);
    if (!v.is_zero()) out.emplace(w, v);
  }
  return out;
}

std::map<Word, QuadExt> uea_slice(const UEAElement& u, int k) {
  std::map<Word, QuadExt> out;
  for (const auto& [w, p] : u.terms) {
    QuadExt v = p.coeff(k);
    if (!v.is_zero()) out.emplace(w, v);
  }
  return out;
}

UEAElement pbw_of_poly(const ParabolicCase& c, const PolyOnG1& p) {
  UEAElement out;
  for (const auto& [a, v] : p.lin) out.add(Word::single(-a), SPoly(v));
  for (const auto& [key, v] : p.quad) {
    RootId x = -key.first, y = -key.second;
    if (key.first == key.second) {
      out.add(Word::pair(x, x), SPoly(v));
    } else {
      SPoly half = SPoly(v * QuadExt(Rational(1, 2)));
      uea_mul(c, x, y, half, out);
      uea_mul(c, y, x, half, out);
    }
  }
  return out;
}

TensorElement omega2_lowest_dual(const ParabolicCase& c, const SpecialConstituent& sc) {
  if (sc.kind != ConstituentKind::Type1a && sc.kind != ConstituentKind::Type2)
    throw std::domain_error("omega2_lowest_dual: type " + kind_name(sc.kind) + " refused");
  const RootSystem& rs = c.roots();
  const auto& N = c.model->constants();
  OmegaRootData rd = omega_root_data(c, sc);
  TensorElement out;
  for (RootId gt : rd.delta_mue_zn) {
    RootId gt_minus_eps = rs.sum(gt, -sc.eps);
    RootId theta = rd.theta(rs, sc.nu, gt);  // (mu+eps) - gamma_t, a Levi root
    if (gt_minus_eps == 0 || theta == 0)
      throw std::logic_error("omega2_lowest_dual: malformed root data");
    out.add(-theta, -gt, N.N(-c.mu, gt_minus_eps) * N.N(-sc.eps, gt));
  }
  return out;
}

UEAElement build_omega2_lowest(const ParabolicCase& c, const SpecialConstituent& sc) {
  if (sc.kind != ConstituentKind::Type1a && sc.kind != ConstituentKind::Type2)
    throw std::domain_error("build_omega2_lowest: type " + kind_name(sc.kind) + " refused");
  const RootSystem& rs = c.roots();
  const auto& N = c.model->constants();
  OmegaRootData rd = omega_root_data(c, sc);
  UEAElement out;
  for (RootId alpha : rd.delta_mue_g1) {
    RootId th_a = rd.theta(rs, sc.nu, alpha);
    if (th_a == 0 || c.level(th_a) != 1)
      throw std::logic_error("build_omega2_lowest: theta(alpha) not in g(1)");
    for (RootId gt : rd.delta_mue_zn) {
      RootId th_g = rd.theta(rs, sc.nu, gt);
      RootId gt_minus_eps = rs.sum(gt, -sc.eps);
      QuadExt coeff = N.N(-c.mu, gt_minus_eps) * N.N(-sc.eps, gt) * N.N(alpha, -gt) *
                      N.N(-th_g, th_a) * QuadExt(Rational(1, 2));
      out.add(Word::pair(-alpha, -th_a), SPoly(coeff));
    }
  }
  return out;
}

Omega2System generate_system(const ParabolicCase& c, const SpecialConstituent& sc) {
  const RootSystem& rs = c.roots();
  Omega2System sys;
  TensorElement lowest = omega2_lowest_dual(c, sc);

  std::vector<BasisLabel> raising;
  for (int i : c.levi_simples()) raising.push_back(simple_root_id(rs, i));

  SparseEchelon<std::pair<BasisLabel, BasisLabel>> span;
  span.insert(lowest.terms);
  sys.dual_basis.push_back(lowest);
  for (size_t head = 0; head < sys.dual_basis.size(); ++head) {
    TensorElement cur = sys.dual_basis[head];  // copy: the vector may reallocate
    for (BasisLabel z : raising) {
      TensorElement next = l_act(c, z, cur);
      if (next.is_zero()) continue;
      if (span.insert(next.terms)) sys.dual_basis.push_back(std::move(next));
    }
  }

  BigInt dim = weyl_dim(*c.model, c.levi_simples(), sc.nu);
  if (BigInt(sys.dual_basis.size()) != dim)
    throw std::logic_error("generate_system: spanned " + std::to_string(sys.dual_basis.size()) +
                           " vectors, expected dim V = " + dim.str());

  // tilde-tau_2 row cache: (left label, gamma_t) -> quadratic monomials.
  std::map<std::pair<BasisLabel, RootId>, std::vector<std::tuple<RootId, RootId, QuadExt>>> rows;
  const auto& N = c.model->constants();
  auto row_of = [&](BasisLabel dl, RootId gt) -> const auto& {
    auto key = std::make_pair(dl, gt);
    auto it = rows.find(key);
    if (it != rows.end()) return it->second;
    std::map<std::pair<RootId, RootId>, QuadExt> acc;
    for (RootId beta : c.delta_g1) {
      RootId u = rs.sum(beta, -gt);
      if (u == 0) continue;
      QuadExt nb = N.N(beta, -gt);
      for (RootId alpha : c.delta_g1) {
        QuadExt pv(0);
        RootId v = rs.sum(alpha, u);
        if (alpha == -u) {
          if (is_cartan_label(dl)) pv = QuadExt(rs.coroot_pairing(alpha, cartan_index(dl)));
        } else if (v != 0 && !is_cartan_label(dl) && dl == -v) {
          pv = N.N(alpha, u);
        }
        if (pv.is_zero()) continue;
        auto mkey = std::minmax(alpha, beta);
        auto [jt, fresh] = acc.emplace(std::make_pair(mkey.first, mkey.second), QuadExt(0));
        jt->second += nb * pv * QuadExt(Rational(1, 2));
      }
    }
    std::vector<std::tuple<RootId, RootId, QuadExt>> row;
    for (const auto& [k, v] : acc)
      if (!v.is_zero()) row.emplace_back(k.first, k.second, v);
    return rows.emplace(key, std::move(row)).first->second;
  };

  SparseEchelon<Word> oprank;
  for (const TensorElement& dual : sys.dual_basis) {
    PolyOnG1 p;
    p.degree = 2;
    for (const auto& [key, y] : dual.terms)
      for (const auto& [a, b, v] : row_of(key.first, -key.second)) p.add_quad(a, b, y * v);
    UEAElement op = pbw_of_poly(c, p);
    if (!oprank.insert(uea_slice(op, 0)))
      throw std::logic_error("generate_system: rank deficiency in the operator system");
    sys.ops.push_back(std::move(op));
  }
  return sys;
}

Omega2System generate_system(const ParabolicCase& c, const SpecialConstituent& sc,
                             const UEAElement& lowest) {
  Omega2System sys = generate_system(c, sc);
  if (!(sys.ops.front() == lowest))
    throw std::logic_error("generate_system: disagrees with the supplied lowest operator");
  return sys;
}

UEAElement bracket_at_identity(const ParabolicCase& c, const AlgebraElement& y,
                               const UEAElement& d) {
  const BasisLabel hq = cartan_label(c.q_index);
  const auto& m = *c.model;
  UEAElement out;
  for (const auto& [yl, yc] : y.terms) {
    if (c.level(yl) < 0) continue;  // straightness: pi_s of nbar kills nothing at e
    for (const auto& [w, wc] : d.terms) {
      SPoly coeff = SPoly(yc) * wc;
      if (w.len == 0) continue;
      if (w.len == 1) {
        AlgebraElement b;
        m.bracket_basis(yl, w.a[0], b, QuadExt(1));
        for (const auto& [l, v] : b.terms) {
          if (!is_cartan_label(l) && c.level(l) < 0) out.add(Word::single(l), coeff * SPoly(v));
        }
        QuadExt lam = b.coeff(hq);
        if (!lam.is_zero()) out.add(Word::empty(), -spoly_times_s(coeff * SPoly(lam)));
        continue;
      }
      const RootId x1 = w.a[0], x2 = w.a[1];
      AlgebraElement b1, b2;
      m.bracket_basis(yl, x1, b1, QuadExt(1));
      m.bracket_basis(yl, x2, b2, QuadExt(1));
      for (const auto& [l, v] : b1.terms) {
        if (!is_cartan_label(l) && c.level(l) < 0) {
          uea_mul(c, l, x2, coeff * SPoly(v), out);  // R([Y,X1])R(X2)
        } else {
          AlgebraElement e;  // [[Y,X1]_q, X2]
          m.bracket_basis(l, x2, e, v);
          for (const auto& [l2, v2] : e.terms)
            if (!is_cartan_label(l2) && c.level(l2) < 0) out.add(Word::single(l2), coeff * SPoly(v2));
          QuadExt lam6 = e.coeff(hq);
          if (!lam6.is_zero()) out.add(Word::empty(), -spoly_times_s(coeff * SPoly(lam6)));
        }
      }
      for (const auto& [l, v] : b2.terms) {
        if (!is_cartan_label(l) && c.level(l) < 0)
          uea_mul(c, x1, l, coeff * SPoly(v), out);  // R(X1)R([Y,X2])
      }
      QuadExt lam1 = b1.coeff(hq);
      if (!lam1.is_zero()) out.add(Word::single(x2), -spoly_times_s(coeff * SPoly(lam1)));
      QuadExt lam2 = b2.coeff(hq);
      if (!lam2.is_zero()) out.add(Word::single(x1), -spoly_times_s(coeff * SPoly(lam2)));
    }
  }
  return out;
}

SpecialValueResult solve_special_value(const ParabolicCase& c, const SpecialConstituent& sc) {
  if (sc.kind != ConstituentKind::Type1a && sc.kind != ConstituentKind::Type2)
    throw std::domain_error("solve_special_value: type " + kind_name(sc.kind) + " refused");
  OmegaRootData rd = omega_root_data(c, sc);
  Omega2System sys = generate_system(c, sc, build_omega2_lowest(c, sc));

  SparseEchelon<Word> span;
  for (const UEAElement& op : sys.ops) span.insert(uea_slice(op, 0));

  UEAElement b = bracket_at_identity(c, AlgebraElement::basis(c.mu), sys.ops.front());
  auto r0 = span.reduce(uea_slice(b, 0));
  auto r1 = span.reduce(uea_slice(b, 1));
  const Word weps = Word::single(-sc.eps);
  for (const auto* r : {&r0, &r1})
    for (const auto& [w, v] : *r)
      if (!(w == weps))
        throw std::logic_error("solve_special_value: residual not proportional to R(X_{-eps})");

  SpecialValueResult res;
  res.constituent = sc;
  res.system_size = sys.ops.size();
  res.residual_direction = sc.eps;
  res.residual = SPoly::affine(r0.count(weps) ? r0[weps] : QuadExt(0),
                               r1.count(weps) ? r1[weps] : QuadExt(0));
  res.prefactor = -(QuadExt(c.alpha_q_norm2()) * rd.c_mue * QuadExt(Rational(1, 2)));

  // Closed form -(||alpha_q||^2/2) C(mu,eps) (s - s2), coefficient by coefficient.
  QuadExt s2 = sc.kind == ConstituentKind::Type2
                   ? QuadExt(-1)
                   : QuadExt(Rational(static_cast<long long>(rd.delta_mue_g1.size()), 2) -
                             Rational(1));
  if (res.residual.coeff(1) != res.prefactor || res.residual.coeff(0) != -(res.prefactor * s2))
    throw std::logic_error("solve_special_value: bracket disagrees with the closed form");
  res.s_value = spoly_root(res.residual);
  return res;
}

Omega1Result omega1_special_value(const ParabolicCase& c) {
  const auto& m = *c.model;
  Omega1Result res;

  // Nondegeneracy constants of the construction: the operator attached to
  // the dual image of X_{-alpha} is c_alpha R(X_{-alpha}).
  TensorElement omega_bar = omega_bar_element(c);
  for (RootId alpha : c.delta_g1) {
    TensorElement y;
    for (const auto& [key, v] : omega_bar.terms) {
      AlgebraElement img;
      m.bracket_basis(-alpha, key.first, img, v);
      for (const auto& [l, w] : img.terms) y.add(l, key.second, w);
    }
    PolyOnG1 p = tau_tilde(c, 1, y);
    UEAElement op = pbw_of_poly(c, p);
    QuadExt ca(0);
    for (const auto& [w, v] : op.terms) {
      if (!(w == Word::single(-alpha)))
        throw std::logic_error("omega1: operator not proportional to R(X_{-alpha})");
      ca = v.coeff(0);
    }
    res.c_alpha.emplace_back(alpha, ca);
    if (ca.is_zero()) res.zero_anomalies.push_back(alpha);
  }

  // The system itself: one first-order generator per root of g(1).
  std::vector<UEAElement> ops;
  for (RootId alpha : c.delta_g1) {
    UEAElement op;
    op.add(Word::single(-alpha), SPoly(1));
    ops.push_back(op);
  }

  // Bracket every basis element of g against the system; the only possible
  // escape from the span is the constant term, which is linear in s.
  bool forced = false;
  QuadExt s_value(0);
  for (BasisLabel yl : m.basis_labels()) {
    for (const UEAElement& op : ops) {
      UEAElement b = bracket_at_identity(c, AlgebraElement::basis(yl), op);
      for (const auto& [w, p] : b.terms) {
        if (w.len == 1 && c.level(w.a[0]) == -1) continue;  // inside the span
        if (!(w == Word::empty()))
          throw std::logic_error("omega1: unexpected residual word");
        if (!p.coeff(0).is_zero())
          throw std::logic_error("omega1: constant residual independent of s");
        if (!p.coeff(1).is_zero()) forced = true;  // forces s = 0
      }
    }
  }
  if (!forced) throw std::logic_error("omega1: invariance placed no constraint on s");
  res.s_value = s_value;
  res.certificate = conformal_certificate(c, ops, res.s_value, m.basis_labels());
  return res;
}

bool conformal_certificate(const ParabolicCase& c, const std::vector<UEAElement>& ops,
                           const QuadExt& s0, const std::vector<BasisLabel>& ys,
                           std::string* diag) {
  SparseEchelon<Word> span;
  for (const UEAElement& op : ops) span.insert(uea_at(op, s0));
  for (BasisLabel yl : ys) {
    for (size_t i = 0; i < ops.size(); ++i) {
      UEAElement b = bracket_at_identity(c, AlgebraElement::basis(yl), ops[i]);
      auto residual = span.reduce(uea_at(b, s0));
      if (!residual.empty()) {
        if (diag)
          *diag = "bracket of operator " + std::to_string(i) + " against label " +
                  std::to_string(yl) + " leaves the span";
        return false;
      }
    }
  }
  return true;
}

std::vector<BasisLabel> certificate_basis(const ParabolicCase& c) {
  std::vector<BasisLabel> ys;
  for (RootId r : c.delta_g1) ys.push_back(r);
  for (RootId r : c.delta_zn) ys.push_back(r);
  for (RootId r : c.delta_l_plus) {
    ys.push_back(r);
    ys.push_back(-r);
  }
  for (int i = 0; i < c.model->rank(); ++i) ys.push_back(cartan_label(i));
  return ys;
}

}  // namespace qhcis
