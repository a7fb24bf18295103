#include "qhcis/omega.hpp"

#include <doctest.h>

using namespace qhcis;

namespace {

struct Rng {
  uint64_t s = 0x853c49e6748fea9bull;
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  Rational rational() {
    return Rational(static_cast<long long>(next() % 9) - 4, 1 + static_cast<long long>(next() % 3));
  }
};

AlgebraElement random_g1_element(const ParabolicCase& c, Rng& rng) {
  AlgebraElement x;
  for (RootId r : c.delta_g1) x.add(r, QuadExt(rng.rational()));
  return x;
}

std::vector<BasisLabel> levi_basis(const ParabolicCase& c) {
  std::vector<BasisLabel> out;
  for (RootId r : c.delta_l_plus) {
    out.push_back(r);
    out.push_back(-r);
  }
  for (int i = 0; i < c.model->rank(); ++i) out.push_back(cartan_label(i));
  return out;
}

Weight word_weight(const ParabolicCase& c, const Word& w) {
  Weight acc(c.model->rank(), Rational(0));
  for (int i = 0; i < w.len; ++i) acc = weight_add(acc, c.roots().weight_of(w.a[i]));
  return acc;
}

const SpecialConstituent& pick(const std::vector<SpecialConstituent>& v, ConstituentSource src) {
  for (const auto& sc : v)
    if (sc.source == src) return sc;
  throw std::logic_error("constituent not found");
}

}  // namespace

TEST_CASE("tau_1 of the top vector matches its structure-constant expansion") {
  ParabolicCase c = build_case("B5(3)");
  const auto& N = c.model->constants();
  TensorElement got = tau_k(c, 1, AlgebraElement::basis(c.mu));
  TensorElement want;
  for (RootId g : c.delta_zn) {
    RootId diff = c.roots().sum(c.mu, -g);
    if (diff != 0) want.add(diff, g, N.N(c.mu, -g));
  }
  CHECK(got == want);
  CHECK_FALSE(got.is_zero());
}

TEST_CASE("tau_k is zero on zero and rejects other degrees") {
  ParabolicCase c = build_case("B5(3)");
  CHECK(tau_k(c, 1, AlgebraElement{}).is_zero());
  CHECK(tau_k(c, 2, AlgebraElement{}).is_zero());
  CHECK_THROWS_AS(tau_k(c, 3, AlgebraElement{}), std::invalid_argument);
  CHECK_THROWS_AS(tau_k(c, 1, AlgebraElement::basis(c.gamma_hw)), std::invalid_argument);
}

TEST_CASE("omega is infinitesimally invariant under the Levi") {
  for (auto label : {"B5(3)", "C5(2)", "F4(4)"}) {
    ParabolicCase c = build_case(label);
    TensorElement om = omega_element(c);
    for (BasisLabel z : levi_basis(c)) CHECK(l_act(c, z, om).is_zero());
  }
}

TEST_CASE("tau_k is infinitesimally equivariant") {
  ParabolicCase c = build_case("B5(3)");
  Rng rng;
  auto zs = levi_basis(c);
  for (BasisLabel z : zs) {
    for (int trial = 0; trial < 50; ++trial) {
      AlgebraElement x = random_g1_element(c, rng);
      AlgebraElement zx = c.model->bracket(AlgebraElement::basis(z), x);
      CHECK(l_act(c, z, tau_k(c, 1, x)) == tau_k(c, 1, zx));
      CHECK(l_act(c, z, tau_k(c, 2, x)) == tau2_polar(c, zx, x));
    }
  }
}

TEST_CASE("tau_2 of the distinguished pair is a highest weight vector") {
  for (auto label : {"B5(3)", "D6(3)", "F4(4)", "E6(3)"}) {
    ParabolicCase c = build_case(label);
    for (const auto& sc : special_constituents(c)) {
      if (sc.kind != ConstituentKind::Type1a && sc.kind != ConstituentKind::Type2) continue;
      AlgebraElement x;
      x.add(c.mu, QuadExt(1));
      x.add(sc.eps, QuadExt(1));
      TensorElement tv = tau_k(c, 2, x);
      CHECK_FALSE(tv.is_zero());
      // equals a_{mu,eps} ad(X_mu) ad(X_eps) omega
      QuadExt a(sc.eps == c.mu ? 2 : 1);
      TensorElement direct;
      for (RootId g : c.delta_zn) {
        AlgebraElement img = c.model->bracket(
            AlgebraElement::basis(c.mu),
            c.model->bracket(AlgebraElement::basis(sc.eps), AlgebraElement::basis(-g)));
        for (const auto& [l, v] : img.terms) direct.add(l, g, v * a);
      }
      CHECK(tv == direct);
      // killed by every raising operator of the Levi
      for (RootId r : c.delta_l_plus) CHECK(l_act(c, r, tv).is_zero());
    }
  }
}

TEST_CASE("tilde-tau_1 of the normalized lowest dual is the top coordinate") {
  ParabolicCase c = build_case("C5(3)");
  const auto& N = c.model->constants();
  // c_mu and the un-normalized dual image of X_{-mu}
  QuadExt cmu(0);
  TensorElement y;
  for (RootId g : c.delta_zn) {
    RootId d = c.roots().sum(g, -c.mu);
    if (d == 0) continue;
    cmu += N.N(-c.mu, g) * N.N(c.mu, -g);
    y.add(d, -g, N.N(-c.mu, g));
  }
  REQUIRE_FALSE(cmu.is_zero());
  PolyOnG1 p = tau_tilde(c, 1, y);
  REQUIRE(p.lin.size() == 1);
  CHECK(p.lin.begin()->first == c.mu);
  CHECK(p.lin.begin()->second == cmu);  // (1/c_mu) normalization gives eta_mu exactly
}

TEST_CASE("tilde-tau_2 annihilates the center copy of V(gamma)") {
  for (auto label : {"B5(3)", "C5(2)", "E6(5)", "F4(4)"}) {
    ParabolicCase c = build_case(label);
    for (RootId g : c.delta_zn) {
      TensorElement y;
      for (int i = 0; i < c.model->rank(); ++i)
        if (!c.h_q[i].is_zero()) y.add(cartan_label(i), -g, QuadExt(c.h_q[i]));
      CHECK(tau_tilde(c, 2, y).is_zero());
    }
  }
}

TEST_CASE("the image of z(n) in g(1) (x) g(1) is purely antisymmetric") {
  // ad(X_gamma) applied across the pairing element lands in the wedge part,
  // which is why no second-order system exists over V(gamma).
  for (auto label : {"B5(3)", "C5(2)", "F4(4)"}) {
    ParabolicCase c = build_case(label);
    TensorElement a;
    for (RootId b : c.delta_g1) {
      AlgebraElement img =
          c.model->bracket(AlgebraElement::basis(c.gamma_hw), AlgebraElement::basis(-b));
      for (const auto& [l, v] : img.terms) a.add(l, b, v);
    }
    TensorElement sym, antisym;
    for (const auto& [key, v] : a.terms) {
      sym.add(key.first, key.second, v);
      sym.add(key.second, key.first, v);
      antisym.add(key.first, key.second, v);
      antisym.add(key.second, key.first, -v);
    }
    CHECK(sym.is_zero());
    CHECK_FALSE(antisym.is_zero());
  }
}

TEST_CASE("tilde-tau_2 is nonzero on the special dual and zero routes match") {
  for (auto label : {"B5(3)", "B5(5)", "D6(3)", "F4(4)", "E6(3)"}) {
    ParabolicCase c = build_case(label);
    for (const auto& sc : special_constituents(c)) {
      if (sc.kind != ConstituentKind::Type1a && sc.kind != ConstituentKind::Type2) continue;
      TensorElement dual = omega2_lowest_dual(c, sc);
      PolyOnG1 p = tau_tilde(c, 2, dual);
      CHECK_FALSE(p.is_zero());
      CHECK(pbw_of_poly(c, p) == build_omega2_lowest(c, sc));
    }
  }
}

TEST_CASE("type 2 operator collapses to half C(mu,mu) R(X_{-mu})^2") {
  for (auto label : {"B5(5)", "F4(4)", "C5(4)"}) {
    ParabolicCase c = build_case(label);
    auto specials = special_constituents(c);
    for (const auto& sc : specials) {
      if (sc.kind != ConstituentKind::Type2) continue;
      UEAElement op = build_omega2_lowest(c, sc);
      REQUIRE(op.terms.size() == 1);
      const auto& [w, coeff] = *op.terms.begin();
      CHECK(w == Word::pair(-c.mu, -c.mu));
      QuadExt cmue = omega_root_data(c, sc).c_mue;
      CHECK(coeff == SPoly(cmue * QuadExt(Rational(1, 2))));
      // type 2 prerequisite in this scale
      CHECK(c.roots().norm2(c.mu) == c.alpha_q_norm2());
    }
  }
}

TEST_CASE("lowest operator of D6(3) has three words, all of weight -(mu+eps)") {
  ParabolicCase c = build_case("D6(3)");
  auto sc = special_constituents(c)[0];
  UEAElement op = build_omega2_lowest(c, sc);
  CHECK(op.terms.size() == 3);
  Weight want(c.model->rank(), Rational(0));
  want = weight_sub(want, sc.nu);
  for (const auto& [w, v] : op.terms) CHECK(word_weight(c, w) == want);
}

TEST_CASE("system sizes match the module dimensions") {
  ParabolicCase c = build_case("B5(3)");
  auto specials = special_constituents(c);
  auto sys_g = generate_system(c, pick(specials, ConstituentSource::LGammaTensor));
  CHECK(sys_g.ops.size() == 6);  // Sym^2 of the standard A_2 module
  auto sys_ng = generate_system(c, pick(specials, ConstituentSource::LnGammaTensor));
  CHECK(sys_ng.ops.size() == 30);  // dim(l_ngamma) * dim z(n) = 10 * 3
  // every operator is homogeneous: words share the weight of the dual vector
  for (size_t i = 0; i < sys_g.ops.size(); ++i) {
    Weight wref;
    bool first = true;
    for (const auto& [key, v] : sys_g.dual_basis[i].terms) {
      Weight w = weight_add(is_cartan_label(key.first) ? Weight(c.model->rank(), Rational(0))
                                                       : c.roots().weight_of(key.first),
                            c.roots().weight_of(key.second));
      if (first) {
        wref = w;
        first = false;
      } else {
        CHECK(w == wref);
      }
    }
    for (const auto& [w, v] : sys_g.ops[i].terms) CHECK(word_weight(c, w) == wref);
  }
}

TEST_CASE("brackets against nbar vanish (straightness)") {
  ParabolicCase c = build_case("B5(3)");
  auto sys = generate_system(c, special_constituents(c)[0]);
  for (RootId r : c.delta_g1)
    CHECK(bracket_at_identity(c, AlgebraElement::basis(-r), sys.ops[0]).is_zero());
  for (RootId r : c.delta_zn)
    CHECK(bracket_at_identity(c, AlgebraElement::basis(-r), sys.ops[0]).is_zero());
}

TEST_CASE("first-order bracket carries the expected s-coefficient") {
  ParabolicCase c = build_case("D6(3)");
  UEAElement op;
  op.add(Word::single(-c.mu), SPoly(1));
  UEAElement b = bracket_at_identity(c, AlgebraElement::basis(c.mu), op);
  // [pi_s(X_mu), R(X_{-mu})]_e = R(H-part) - s lambda_q(H_mu); only the
  // constant term survives since [X_mu, X_{-mu}] is Cartan.
  REQUIRE(b.terms.size() == 1);
  const auto& [w, p] = *b.terms.begin();
  CHECK(w == Word::empty());
  CHECK(p.coeff(0).is_zero());
  CHECK(p.coeff(1) == -(QuadExt(c.alpha_q_norm2()) * QuadExt(Rational(1, 2))));
}

TEST_CASE("type 2 bracket reproduces -(s+1)||alpha_q||^2 R(X_{-mu})") {
  ParabolicCase c = build_case("F4(4)");
  UEAElement d;
  d.add(Word::pair(-c.mu, -c.mu), SPoly(1));
  UEAElement b = bracket_at_identity(c, AlgebraElement::basis(c.mu), d);
  REQUIRE(b.terms.size() == 1);
  const auto& [w, p] = *b.terms.begin();
  CHECK(w == Word::single(-c.mu));
  QuadExt n2 = QuadExt(c.alpha_q_norm2());
  CHECK(p == SPoly::affine(-n2, -n2));  // -(s ||a_q||^2 + ||mu||^2), equal norms here
}

TEST_CASE("bracket coefficients stay affine in s") {
  ParabolicCase c = build_case("C5(3)");
  auto sys = generate_system(c, pick(special_constituents(c), ConstituentSource::LnGammaTensor));
  for (BasisLabel y : certificate_basis(c))
    for (const UEAElement& op : sys.ops) {
      UEAElement b = bracket_at_identity(c, AlgebraElement::basis(y), op);
      for (const auto& [w, p] : b.terms) CHECK(p.degree() <= 1);
    }
}

TEST_CASE("nested commutator route agrees with the direct bracket") {
  ParabolicCase c = build_case("B5(3)");
  const RootSystem& rs = c.roots();
  auto specials = special_constituents(c);
  UEAElement lowest = build_omega2_lowest(c, specials[0]);
  for (int i : c.levi_simples()) {
    Coords e(rs.rank(), 0);
    e[i] = 1;
    BasisLabel zbar = -rs.find_root(e);
    AlgebraElement zx =
        c.model->bracket(AlgebraElement::basis(zbar), AlgebraElement::basis(c.mu));
    UEAElement direct = bracket_at_identity(c, zx, lowest);
    UEAElement inner = bracket_at_identity(c, AlgebraElement::basis(c.mu), lowest);
    inner.terms.erase(Word::empty());
    UEAElement nested = bracket_at_identity(c, AlgebraElement::basis(zbar), inner);
    CHECK(direct == nested);
  }
}

TEST_CASE("the operator map intertwines raising with the bracket") {
  ParabolicCase c = build_case("B5(3)");
  for (const auto& sc : special_constituents(c)) {
    TensorElement dual = omega2_lowest_dual(c, sc);
    UEAElement op = pbw_of_poly(c, tau_tilde(c, 2, dual));
    for (int i : c.levi_simples()) {
      Coords e(c.model->rank(), 0);
      e[i] = 1;
      RootId z = c.roots().find_root(e);
      UEAElement raised_op = pbw_of_poly(c, tau_tilde(c, 2, l_act(c, z, dual)));
      UEAElement bracket_op = bracket_at_identity(c, AlgebraElement::basis(z), op);
      CHECK(raised_op == bracket_op);
    }
  }
}

TEST_CASE("special values across small-rank cases") {
  struct Row {
    const char* label;
    ConstituentSource src;
    Rational s;
  };
  const Row rows[] = {
      {"B5(3)", ConstituentSource::LGammaTensor, Rational(3, 2)},
      {"B5(3)", ConstituentSource::LnGammaTensor, Rational(1)},
      {"B5(4)", ConstituentSource::LGammaTensor, Rational(1, 2)},
      {"B5(5)", ConstituentSource::LGammaTensor, Rational(-1)},
      {"C5(2)", ConstituentSource::LnGammaTensor, Rational(-1)},
      {"D6(3)", ConstituentSource::LGammaTensor, Rational(2)},
      {"D7(4)", ConstituentSource::LGammaTensor, Rational(2)},
      {"D6(3)", ConstituentSource::LnGammaTensor, Rational(1)},
      {"F4(4)", ConstituentSource::LGammaTensor, Rational(-1)},
  };
  for (const Row& row : rows) {
    ParabolicCase c = build_case(row.label);
    auto specials = special_constituents(c);
    const auto& sc = pick(specials, row.src);
    SpecialValueResult res = solve_special_value(c, sc);
    CHECK(res.s_value == QuadExt(row.s));
    CHECK(res.residual_direction == sc.eps);
    QuadExt want_prefactor =
        -(QuadExt(c.alpha_q_norm2()) * omega_root_data(c, sc).c_mue * QuadExt(Rational(1, 2)));
    CHECK(res.prefactor == want_prefactor);
    CHECK(res.residual.eval(res.s_value).is_zero());
  }
}

TEST_CASE("solver refuses types 1b and 3") {
  ParabolicCase c = build_case("C5(2)");
  CHECK_THROWS_AS(solve_special_value(c, pick(special_constituents(c),
                                              ConstituentSource::LGammaTensor)),
                  std::domain_error);
  ParabolicCase b = build_case("B5(4)");
  CHECK_THROWS_AS(build_omega2_lowest(b, pick(special_constituents(b),
                                              ConstituentSource::LnGammaTensor)),
                  std::domain_error);
}

TEST_CASE("omega1 vanishes with nonzero first-order constants") {
  for (auto label : {"B5(3)", "C5(2)", "D6(3)"}) {
    ParabolicCase c = build_case(label);
    Omega1Result r = omega1_special_value(c);
    CHECK(r.s_value == QuadExt(0));
    CHECK(r.certificate);
    CHECK(r.zero_anomalies.empty());
    CHECK(r.c_alpha.size() == c.delta_g1.size());
    for (const auto& [a, ca] : r.c_alpha) CHECK_FALSE(ca.is_zero());
  }
}

TEST_CASE("certificates discriminate: wrong s fails, right s passes") {
  ParabolicCase c = build_case("F4(4)");
  auto sc = special_constituents(c)[0];
  auto sys = generate_system(c, sc);
  auto ys = certificate_basis(c);
  CHECK(conformal_certificate(c, sys.ops, QuadExt(-1), ys));
  std::string diag;
  CHECK_FALSE(conformal_certificate(c, sys.ops, QuadExt(0), ys, &diag));
  CHECK_FALSE(diag.empty());
}

TEST_CASE("certificate basis covers g(1), z(n) and the Levi") {
  ParabolicCase c = build_case("B5(3)");
  auto ys = certificate_basis(c);
  CHECK(ys.size() ==
        c.delta_g1.size() + c.delta_zn.size() + 2 * c.delta_l_plus.size() + c.model->rank());
}
