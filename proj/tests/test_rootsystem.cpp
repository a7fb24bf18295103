#include "qhcis/rootsystem.hpp"

#include <doctest.h>

#include <set>

using namespace qhcis;

TEST_CASE("positive root counts match the classical formulas") {
  CHECK(RootSystem::build({Family::A, 5}).num_positive() == 15);
  CHECK(RootSystem::build({Family::B, 5}).num_positive() == 25);
  CHECK(RootSystem::build({Family::C, 6}).num_positive() == 36);
  CHECK(RootSystem::build({Family::D, 6}).num_positive() == 30);
  CHECK(RootSystem::build({Family::F, 4}).num_positive() == 24);
  CHECK(RootSystem::build({Family::G, 2}).num_positive() == 6);
  CHECK(RootSystem::build({Family::E, 8}).num_positive() == 120);
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootSystem::build({Family::E, 5}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build({Family::F, 5}), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build({Family::A, 0}), std::invalid_argument);
}

TEST_CASE("highest roots of B4 and A5") {
  RootSystem b4 = RootSystem::build({Family::B, 4});
  CHECK(b4.coords(b4.highest_root()) == Coords{1, 2, 2, 2});
  RootSystem a5 = RootSystem::build({Family::A, 5});
  CHECK(a5.coords(a5.highest_root()) == Coords{1, 1, 1, 1, 1});
}

TEST_CASE("closure under addition and sign split") {
  RootSystem rs = RootSystem::build({Family::C, 4});
  const int m = rs.num_positive();
  for (RootId a = -m; a <= m; ++a) {
    if (a == 0) continue;
    for (RootId b = -m; b <= m; ++b) {
      if (b == 0) continue;
      Coords s = rs.signed_coords(a);
      const Coords sb = rs.signed_coords(b);
      for (int i = 0; i < rs.rank(); ++i) s[i] += sb[i];
      CHECK(rs.sum(a, b) == rs.find_root(s));
    }
  }
}

TEST_CASE("gram normalization: long roots have norm 2") {
  for (auto t : {AlgebraType{Family::B, 4}, AlgebraType{Family::C, 4}, AlgebraType{Family::F, 4},
                 AlgebraType{Family::D, 5}}) {
    RootSystem rs = RootSystem::build(t);
    Rational maxn(0);
    for (RootId a = 1; a <= rs.num_positive(); ++a)
      if (rs.norm2(a) > maxn) maxn = rs.norm2(a);
    CHECK(maxn == Rational(2));
    if (!t.simply_laced() && t.family != Family::G) {
      bool has_short = false;
      for (RootId a = 1; a <= rs.num_positive(); ++a)
        if (rs.norm2(a) == Rational(1)) has_short = true;
      CHECK(has_short);
    }
  }
}

TEST_CASE("root strings") {
  RootSystem a2 = RootSystem::build({Family::A, 2});
  RootId r1 = a2.find_root({1, 0}), r2 = a2.find_root({0, 1});
  CHECK(a2.root_string(r1, r2) == std::pair<int, int>{0, 1});

  // B2: the string through the long root along the short one has q = 2.
  RootSystem b2 = RootSystem::build({Family::B, 2});
  RootId alpha = b2.find_root({0, 1});  // short
  RootId beta = b2.find_root({1, 0});   // long, adjacent
  auto [p, q] = b2.root_string(alpha, beta);
  CHECK(p == 0);
  CHECK(q == 2);
  CHECK_THROWS_AS(b2.root_string(alpha, alpha), std::invalid_argument);
}

TEST_CASE("p - q equals the coroot pairing for all root pairs") {
  for (auto t : {AlgebraType{Family::B, 3}, AlgebraType{Family::G, 2}, AlgebraType{Family::D, 4}}) {
    RootSystem rs = RootSystem::build(t);
    const int m = rs.num_positive();
    for (RootId a = -m; a <= m; ++a) {
      if (a == 0) continue;
      for (RootId b = 1; b <= m; ++b) {
        if (a == b || a == -b) continue;
        auto [p, q] = rs.root_string(a, b);
        Rational pairing = Rational(2) * rs.ip(a, b) / rs.norm2(a);
        CHECK(Rational(p - q) == pairing);
      }
    }
  }
}

TEST_CASE("long-root string bounds hold for every pair") {
  for (auto t : {AlgebraType{Family::B, 5}, AlgebraType{Family::C, 5}, AlgebraType{Family::F, 4}}) {
    RootSystem rs = RootSystem::build(t);
    const int m = rs.num_positive();
    for (RootId a = -m; a <= m; ++a) {
      if (a == 0 || !rs.is_long(a)) continue;
      for (RootId b = -m; b <= m; ++b) {
        if (b == 0 || b == a || b == -a) continue;
        Rational pairing = Rational(2) * rs.ip(b, a) / rs.norm2(a);
        if (rs.sum(b, -a) != 0) CHECK(pairing == Rational(1));
        if (rs.sum(b, a) != 0) CHECK(pairing == Rational(-1));
        if (rs.sum(b, a) != 0) CHECK(rs.sum(b, -a) == 0);
        if (rs.sum(b, -a) != 0) CHECK(rs.sum(b, a) == 0);
        CHECK(rs.sum(rs.sum(b, a) ? rs.sum(b, a) : b, a) == 0);   // b + 2a never a root
        CHECK(rs.sum(rs.sum(b, -a) ? rs.sum(b, -a) : b, -a) == 0);
      }
    }
  }
}

TEST_CASE("fundamental weights pair to the identity with the coroots") {
  for (auto t : {AlgebraType{Family::B, 3}, AlgebraType{Family::E, 6}, AlgebraType{Family::C, 5}}) {
    RootSystem rs = RootSystem::build(t);
    for (int i = 0; i < rs.rank(); ++i) {
      Weight w = rs.fundamental_weight(i);
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(rs.coroot_pairing(w, j) == Rational(i == j ? 1 : 0));
    }
    CHECK_THROWS_AS(rs.fundamental_weight(rs.rank()), std::out_of_range);
  }
}

TEST_CASE("fundamental weight of alpha_q pairs to half the norm on g(1) roots (B5)") {
  RootSystem rs = RootSystem::build({Family::B, 5});
  const int q = 2;  // alpha_3, 0-based
  Weight lam = rs.fundamental_weight(q);
  Rational half_norm = rs.simple_norm2(q) / Rational(2);
  for (RootId b = 1; b <= rs.num_positive(); ++b) {
    if (rs.coords(b)[q] != 1) continue;
    CHECK(rs.ip(lam, rs.weight_of(b)) == half_norm);
  }
}

TEST_CASE("adjoint dimension from the Weyl dimension formula") {
  for (auto t : {AlgebraType{Family::B, 4}, AlgebraType{Family::D, 5}, AlgebraType{Family::F, 4}}) {
    RootSystem rs = RootSystem::build(t);
    Weight rho(rs.rank(), Rational(0));
    for (RootId a = 1; a <= rs.num_positive(); ++a) {
      const Coords& c = rs.coords(a);
      for (int i = 0; i < rs.rank(); ++i) rho[i] += Rational(c[i], 2);
    }
    Weight top = rs.weight_of(rs.highest_root());
    Rational dim(1);
    for (RootId a = 1; a <= rs.num_positive(); ++a) {
      Weight alpha = rs.weight_of(a);
      dim *= rs.ip(weight_add(top, rho), alpha) / rs.ip(rho, alpha);
    }
    CHECK(dim == Rational(2 * rs.num_positive() + rs.rank()));
  }
}

TEST_CASE("positive roots are ordered by height then lexicographically") {
  RootSystem rs = RootSystem::build({Family::D, 5});
  for (RootId a = 1; a < rs.num_positive(); ++a) {
    int ha = rs.height(a), hb = rs.height(a + 1);
    CHECK(ha <= hb);
    if (ha == hb) CHECK(rs.coords(a) < rs.coords(a + 1));
  }
}

TEST_CASE("orthogonal realization render") {
  RootSystem rs = RootSystem::build({Family::B, 5});
  CHECK(rs.eps_string(rs.highest_root()) == "e1+e2");
  RootSystem cs = RootSystem::build({Family::C, 4});
  CHECK(cs.eps_string(cs.highest_root()) == "2e1");
  RootSystem ds = RootSystem::build({Family::D, 4});
  CHECK(ds.eps_string(ds.find_root({0, 0, 0, 1})) == "e3+e4");
  CHECK_THROWS_AS(RootSystem::build({Family::E, 6}).eps_coords(1), std::invalid_argument);
}
