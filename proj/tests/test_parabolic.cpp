#include "qhcis/parabolic.hpp"

#include <doctest.h>

using namespace qhcis;

TEST_CASE("classification examples") {
  CHECK(classify_step({{Family::A, 5}, {2, 4}}).k == 2);
  CHECK(classify_step({{Family::C, 6}, {3}}).kind == NilpotencyKind::QuasiHeisenberg);
  CHECK(classify_step({{Family::B, 4}, {1}}).kind == NilpotencyKind::Abelian);
  CHECK(classify_step({{Family::C, 5}, {1}}).kind == NilpotencyKind::Heisenberg);
  CHECK(classify_step({{Family::C, 5}, {1}}).dim_derived == 1);
  CHECK(classify_step({{Family::G, 2}, {1}}).k == 3);
  CHECK(classify_step({{Family::G, 2}, {2}}).kind == NilpotencyKind::Heisenberg);
  CHECK(classify_step({{Family::E, 8}, {4}}).k == 6);
  CHECK_THROWS_AS(classify_step({{Family::B, 4}, {5}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_step({{Family::B, 4}, {}}), std::invalid_argument);
}

TEST_CASE("formula agrees with the bracket oracle on small algebras") {
  for (int i = 1; i <= 4; ++i) {
    ParabolicSpec spec{{Family::C, 4}, {i}};
    CHECK(classify_step(spec).k == nilpotency_step_bruteforce(spec));
  }
  ParabolicSpec a4{{Family::A, 4}, {1, 3}};
  CHECK(classify_step(a4).k == nilpotency_step_bruteforce(a4));
}

TEST_CASE("case labels parse and render") {
  ParabolicSpec s = parse_case_label("E7(6)");
  CHECK(s.type.family == Family::E);
  CHECK(s.type.rank == 7);
  CHECK(*s.subset.begin() == 6);
  CHECK(s.label() == "E7(6)");
  CHECK_THROWS_AS(parse_case_label("B7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_case_label("X7(1)"), std::invalid_argument);
}

TEST_CASE("B5(3) case data") {
  ParabolicCase c = build_case("B5(3)");
  const RootSystem& rs = c.roots();
  CHECK(c.alpha_gamma == 1);  // alpha_2
  CHECK(rs.eps_string(c.mu) == "e1+e4");
  CHECK(rs.eps_string(c.gamma_hw) == "e1+e2");
  CHECK(rs.eps_string(c.xi_gamma) == "e1-e3");
  CHECK(rs.eps_string(c.xi_ngamma) == "e4+e5");
  CHECK(c.lgamma_simples == std::set<int>{0, 1});
  CHECK(c.lngamma_simples == std::set<int>{3, 4});
  CHECK(c.delta_zn.size() == 3);  // i(i-1)/2
  CHECK(c.delta_g1.size() == 15);
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(build_case("D9(7)"), excluded_case_error);
  CHECK_THROWS_AS(build_case("D6(4)"), excluded_case_error);
  CHECK_THROWS_AS(build_case("B5(1)"), std::invalid_argument);   // abelian
  CHECK_THROWS_AS(build_case("C6(1)"), std::invalid_argument);   // Heisenberg
  CHECK_THROWS_AS(build_case("A5(3)"), std::invalid_argument);   // abelian family
  CHECK_THROWS_AS(build_case("G2(2)"), std::invalid_argument);   // Heisenberg
  CHECK_NOTHROW(build_case("D7(4)"));
}

TEST_CASE("grading: brackets respect ad(H_q) eigenvalues") {
  ParabolicCase c = build_case("C5(3)");
  auto& m = *c.model;
  auto labels = m.basis_labels();
  for (BasisLabel a : labels)
    for (BasisLabel b : labels) {
      AlgebraElement z = m.bracket(AlgebraElement::basis(a), AlgebraElement::basis(b));
      int want = c.level(a) + c.level(b);
      for (const auto& [l, v] : z.terms) CHECK(c.level(l) == want);
    }
}

TEST_CASE("two-step oracle: [n,[n,n]] vanishes exactly for quasi-Heisenberg cases") {
  CHECK(nilpotency_step_bruteforce({{Family::B, 5}, {3}}) == 2);
  CHECK(nilpotency_step_bruteforce({{Family::D, 6}, {3}}) == 2);
  CHECK(nilpotency_step_bruteforce({{Family::F, 4}, {3}}) == 4);
}

TEST_CASE("g(1) is spanned by the Levi orbit of the top vector") {
  for (auto label : {"B5(3)", "C5(2)", "F4(4)"}) {
    ParabolicCase c = build_case(label);
    auto& m = *c.model;
    const RootSystem& rs = c.roots();
    std::set<RootId> reached{c.mu};
    std::vector<RootId> queue{c.mu};
    while (!queue.empty()) {
      RootId cur = queue.back();
      queue.pop_back();
      for (int i : c.levi_simples()) {
        Coords e(rs.rank(), 0);
        e[i] = 1;
        RootId down = rs.sum(cur, -rs.find_root(e));
        if (down != 0 && c.level(down) == 1 && reached.insert(down).second)
          queue.push_back(down);
      }
    }
    CHECK(reached == std::set<RootId>(c.delta_g1.begin(), c.delta_g1.end()));
  }
}

TEST_CASE("z(n) is the l_gamma orbit of the top vector and l_ngamma kills it") {
  ParabolicCase c = build_case("B6(3)");
  const RootSystem& rs = c.roots();
  std::set<RootId> reached{c.gamma_hw};
  std::vector<RootId> queue{c.gamma_hw};
  while (!queue.empty()) {
    RootId cur = queue.back();
    queue.pop_back();
    for (int i : c.lgamma_simples) {
      Coords e(rs.rank(), 0);
      e[i] = 1;
      RootId down = rs.sum(cur, -rs.find_root(e));
      if (down != 0 && c.level(down) == 2 && reached.insert(down).second) queue.push_back(down);
    }
  }
  CHECK(reached == std::set<RootId>(c.delta_zn.begin(), c.delta_zn.end()));
  for (int i : c.lngamma_simples) {
    Coords e(rs.rank(), 0);
    e[i] = 1;
    RootId simple = rs.find_root(e);
    for (RootId g : c.delta_zn) {
      CHECK(rs.sum(g, simple) == 0);
      CHECK(rs.sum(g, -simple) == 0);
    }
  }
}

TEST_CASE("exactly one simple root meets the highest root (non-A families)") {
  for (auto t : {AlgebraType{Family::B, 5}, AlgebraType{Family::D, 6}, AlgebraType{Family::E, 7},
                 AlgebraType{Family::F, 4}}) {
    RootSystem rs = RootSystem::build(t);
    int count = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.coroot_pairing(rs.highest_root(), i) != 0) ++count;
    CHECK(count == 1);
  }
}

TEST_CASE("weight lemmas hold on a sample of cases") {
  for (auto label : {"B5(3)", "B5(4)", "B5(5)", "C5(2)", "C5(4)", "D6(3)", "E6(3)", "F4(4)"}) {
    WeightLemmaReport rep = verify_weight_lemmas(build_case(label));
    for (const auto& [name, ok] : rep.clauses) {
      INFO(label << ": " << name);
      CHECK(ok);
    }
  }
}
