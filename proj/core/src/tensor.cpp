#include "qhcis/tensor.hpp"

#include <algorithm>
#include <deque>

namespace qhcis {

WeightSystem zn_weight_system(const ParabolicCase& c) {
  WeightSystem ws;
  ws.highest = c.roots().weight_of(c.gamma_hw);
  for (RootId r : c.delta_zn) ws.mult[c.roots().weight_of(r)] = 1;
  return ws;
}

WeightSystem trivial_weight_system(int rank) {
  WeightSystem ws;
  ws.highest.assign(rank, Rational(0));
  ws.mult[ws.highest] = 1;
  return ws;
}

Weight levi_rho(const LieAlgebraModel& m, const std::set<int>& simples) {
  const RootSystem& rs = m.roots();
  Weight rho(rs.rank(), Rational(0));
  for (RootId r : rs.subsystem_positive(simples)) {
    const Coords& c = rs.coords(r);
    for (int i = 0; i < rs.rank(); ++i) rho[i] += Rational(c[i], 2);
  }
  return rho;
}

std::vector<std::pair<Weight, long long>> klimyk_decompose(const LieAlgebraModel& m,
                                                           const std::set<int>& levi,
                                                           const Weight& hw_left,
                                                           const WeightSystem& right) {
  const RootSystem& rs = m.roots();
  for (int i : levi)
    if (rs.coroot_pairing(hw_left, i).sign() < 0)
      throw std::invalid_argument("klimyk_decompose: left highest weight not dominant");

  const Weight rho = levi_rho(m, levi);
  std::map<Weight, long long> acc;
  for (const auto& [w, mult] : right.mult) {
    Weight x = weight_add(weight_add(hw_left, w), rho);
    int sign = 1;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i : levi) {
        if (rs.coroot_pairing(x, i).sign() < 0) {
          x = rs.reflect(x, i);
          sign = -sign;
          moved = true;
          break;
        }
      }
    }
    bool wall = false;
    for (int i : levi)
      if (rs.coroot_pairing(x, i).is_zero()) {
        wall = true;
        break;
      }
    if (wall) continue;
    acc[weight_sub(x, rho)] += sign * mult;
  }

  std::vector<std::pair<Weight, long long>> out;
  for (auto& [w, mult] : acc) {
    if (mult == 0) continue;
    if (mult < 0) throw std::logic_error("klimyk_decompose: negative multiplicity");
    out.emplace_back(w, mult);
  }
  return out;
}

WeightSystem freudenthal(const LieAlgebraModel& m, const std::set<int>& levi, const Weight& hw) {
  const RootSystem& rs = m.roots();
  for (int i : levi)
    if (rs.coroot_pairing(hw, i).sign() < 0)
      throw std::invalid_argument("freudenthal: highest weight not dominant");

  // Weight saturation: close downward along the simple root strings.
  std::map<Weight, int> depth;  // height of hw - w
  depth[hw] = 0;
  std::deque<Weight> queue{hw};
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i : levi) {
      Rational k = rs.coroot_pairing(w, i);
      if (k.sign() <= 0) continue;
      Weight cur = w;
      long long kk = static_cast<long long>(k.num() / k.den());
      for (long long j = 1; j <= kk; ++j) {
        cur[i] -= Rational(1);
        if (!depth.count(cur)) {
          depth[cur] = depth[w] + static_cast<int>(j);
          queue.push_back(cur);
        }
      }
    }
  }

  std::vector<Weight> order;
  for (const auto& [w, d] : depth) order.push_back(w);
  std::sort(order.begin(), order.end(),
            [&](const Weight& a, const Weight& b) { return depth[a] < depth[b]; });

  const Weight rho = levi_rho(m, levi);
  auto pos = rs.subsystem_positive(levi);
  const Rational top = rs.ip(weight_add(hw, rho), weight_add(hw, rho));

  WeightSystem ws;
  ws.highest = hw;
  ws.mult[hw] = 1;
  for (const Weight& w : order) {
    if (w == hw) continue;
    Rational num(0);
    for (RootId a : pos) {
      Weight alpha = rs.weight_of(a);
      Weight cur = w;
      while (true) {
        cur = weight_add(cur, alpha);
        if (!depth.count(cur)) break;  // the alpha-string through w is unbroken
        auto it = ws.mult.find(cur);
        if (it == ws.mult.end()) throw std::logic_error("freudenthal: traversal order violated");
        num += Rational(it->second) * rs.ip(cur, alpha);
      }
    }
    Rational den = top - rs.ip(weight_add(w, rho), weight_add(w, rho));
    Rational mult = Rational(2) * num / den;
    if (!mult.is_integer() || mult.sign() <= 0)
      throw std::logic_error("freudenthal: non-positive-integer multiplicity");
    ws.mult[w] = static_cast<long long>(mult.num());
  }
  return ws;
}

BigInt weyl_dim(const LieAlgebraModel& m, const std::set<int>& levi, const Weight& hw) {
  const RootSystem& rs = m.roots();
  const Weight rho = levi_rho(m, levi);
  Rational prod(1);
  for (RootId a : rs.subsystem_positive(levi)) {
    Weight alpha = rs.weight_of(a);
    prod *= rs.ip(weight_add(hw, rho), alpha) / rs.ip(rho, alpha);
  }
  if (!prod.is_integer() || prod.sign() <= 0)
    throw std::logic_error("weyl_dim: non-integral dimension");
  return prod.num();
}

std::string kind_name(ConstituentKind k) {
  switch (k) {
    case ConstituentKind::Type1a: return "1a";
    case ConstituentKind::Type1b: return "1b";
    case ConstituentKind::Type2: return "2";
    case ConstituentKind::Type3: return "3";
  }
  return "";
}

namespace {

ConstituentKind classify_constituent(const ParabolicCase& c, RootId eps) {
  const RootSystem& rs = c.roots();
  if (rs.sum(c.mu, eps) != 0) return ConstituentKind::Type3;
  if (eps == c.mu) return ConstituentKind::Type2;
  bool both_long = rs.is_long(c.mu) && rs.is_long(eps);
  return both_long ? ConstituentKind::Type1a : ConstituentKind::Type1b;
}

}  // namespace

std::vector<SpecialConstituent> special_constituents(const ParabolicCase& c) {
  const RootSystem& rs = c.roots();
  const Weight mu_w = rs.weight_of(c.mu);
  const Weight gamma_w = rs.weight_of(c.gamma_hw);

  auto decomp = klimyk_decompose(*c.model, c.lgamma_simples, rs.weight_of(c.xi_gamma),
                                 zn_weight_system(c));
  std::vector<SpecialConstituent> out;
  for (const auto& [nu, mult] : decomp) {
    if (mult != 1) throw std::logic_error("special_constituents: multiplicity != 1");
    if (nu == gamma_w) continue;
    RootId eps = rs.root_from_weight(weight_sub(nu, mu_w));
    if (eps == 0 || c.level(eps) != 1) continue;  // eps must lie in Delta(g(1))
    out.push_back({nu, eps, classify_constituent(c, eps), ConstituentSource::LGammaTensor});
  }
  if (out.size() != 1)
    throw std::logic_error("special_constituents: expected a unique constituent in lg (x) z(n)");

  if (c.has_lngamma()) {
    Weight nu = weight_add(rs.weight_of(c.xi_ngamma), gamma_w);
    RootId eps = rs.root_from_weight(weight_sub(nu, mu_w));
    if (eps == 0 || c.level(eps) != 1)
      throw std::logic_error("special_constituents: l_ngamma (x) z(n) is not special");
    out.push_back({nu, eps, classify_constituent(c, eps), ConstituentSource::LnGammaTensor});
  }
  return out;
}

OmegaRootData omega_root_data(const ParabolicCase& c, const SpecialConstituent& sc) {
  if (sc.kind != ConstituentKind::Type1a && sc.kind != ConstituentKind::Type2)
    throw std::domain_error("omega_root_data: no closed-form support for type " +
                            kind_name(sc.kind) + " constituents");
  const RootSystem& rs = c.roots();
  OmegaRootData d;
  for (RootId a : c.delta_g1)
    if (rs.root_from_weight(weight_sub(sc.nu, rs.weight_of(a))) != 0) d.delta_mue_g1.push_back(a);
  for (RootId g : c.delta_zn)
    if (rs.root_from_weight(weight_sub(sc.nu, rs.weight_of(g))) != 0) d.delta_mue_zn.push_back(g);
  if (d.delta_mue_zn.empty())
    throw std::logic_error("omega_root_data: empty Delta_{mu+eps}(z(n))");

  d.c_mue = QuadExt(0);
  for (RootId gt : d.delta_mue_zn) {
    RootId eg = rs.sum(sc.eps, -gt);  // eps - gamma_t
    if (eg == 0) throw std::logic_error("omega_root_data: eps - gamma_t not a root");
    QuadExt term = c.model->constants().N(c.mu, eg) * c.model->constants().N(-c.mu, -eg) *
                   c.model->constants().N(sc.eps, -gt) * c.model->constants().N(-sc.eps, gt);
    d.c_mue += term;
  }
  if (d.c_mue.is_zero()) throw std::logic_error("omega_root_data: C(mu,eps) vanishes");
  return d;
}

}  // namespace qhcis
