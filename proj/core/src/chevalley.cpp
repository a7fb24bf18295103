#include "qhcis/chevalley.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>

namespace qhcis {

namespace {

// Chevalley-basis constants (values +-(p+1)) over positive special pairs,
// from the extraspecial-pair sign assignment. Everything is exact rational.
struct ChevalleyTable {
  const RootSystem& rs;
  std::map<std::pair<RootId, RootId>, Rational> pos;  // (a,b) with a<b, both positive

  explicit ChevalleyTable(const RootSystem& r) : rs(r) { fill(); }

  Rational npos(RootId x, RootId y) const {
    if (x < y) {
      auto it = pos.find({x, y});
      if (it == pos.end()) throw std::logic_error("missing positive structure constant");
      return it->second;
    }
    auto it = pos.find({y, x});
    if (it == pos.end()) throw std::logic_error("missing positive structure constant");
    return -it->second;
  }

  // General signed lookup; requires a+b to be a root.
  Rational n(RootId a, RootId b) const {
    if (a > 0 && b > 0) return npos(a, b);
    if (a < 0 && b < 0) return -npos(-a, -b);
    if (a < 0) return -n(b, a);
    RootId s = rs.sum(a, b);
    if (s > 0) return rs.norm2(s) / rs.norm2(a) * npos(s, -b);
    return rs.norm2(s) / rs.norm2(b) * npos(-s, a);
  }

  void fill() {
    const int m = rs.num_positive();
    for (RootId g = 1; g <= m; ++g) {
      // special pairs (a, b), a < b, a + b = g
      std::vector<std::pair<RootId, RootId>> pairs;
      for (RootId a = 1; a < g; ++a) {
        Coords c = rs.coords(g);
        const Coords& ca = rs.coords(a);
        for (int i = 0; i < rs.rank(); ++i) c[i] -= ca[i];
        RootId b = rs.find_root(c);
        if (b > 0 && a < b) pairs.emplace_back(a, b);
      }
      if (pairs.empty()) continue;
      auto [a1, b1] = pairs.front();  // extraspecial: minimal a in the root order
      int p = rs.root_string(a1, b1).first;
      pos[{a1, b1}] = Rational(p + 1);
      for (size_t k = 1; k < pairs.size(); ++k) {
        auto [a, b] = pairs[k];
        Rational t1(0), t3(0);
        if (rs.sum(a, -a1) != 0) t1 = n(-a1, a) * n(rs.sum(a, -a1), b);
        if (rs.sum(b, -a1) != 0) t3 = n(b, -a1) * n(rs.sum(b, -a1), a);
        Rational div = n(g, -a1);
        pos[{a, b}] = -(t1 + t3) / div;
      }
    }
  }
};

QuadExt length_factor(const RootSystem& rs, RootId r) {
  Rational n2 = rs.norm2(r);
  if (n2 == Rational(2)) return QuadExt(1);
  if (n2 == Rational(1)) return QuadExt(Rational(0), Rational(1, 2));  // 1/sqrt(2)
  throw std::invalid_argument("structure constants: unsupported root length (family G)");
}

}  // namespace

StructureConstants StructureConstants::build(const RootSystem& rs) {
  ChevalleyTable cv(rs);
  StructureConstants sc;
  const int m = rs.num_positive();
  sc.m_ = m;
  sc.stride_ = 2 * static_cast<size_t>(m);
  sc.idx_.assign(sc.stride_ * sc.stride_, -1);

  auto all_ids = [&](auto&& fn) {
    for (RootId a = -m; a <= m; ++a) {
      if (a == 0) continue;
      fn(a);
    }
  };

  all_ids([&](RootId a) {
    all_ids([&](RootId b) {
      RootId s = rs.sum(a, b);
      if (s == 0) return;
      QuadExt factor = length_factor(rs, a) * length_factor(rs, b) / length_factor(rs, s);
      QuadExt v = QuadExt(cv.n(a, b)) * factor;
      if (v.is_zero()) throw std::logic_error("constant vanishes on a root sum");
      sc.idx_[sc.pos(a) * sc.stride_ + sc.pos(b)] = static_cast<int32_t>(sc.values_.size());
      sc.values_.push_back(v);
    });
  });

  // Self-check the cyclic identity and the product rule before handing the table out.
  all_ids([&](RootId a) {
    all_ids([&](RootId b) {
      RootId s = rs.sum(a, b);
      if (s == 0) return;
      RootId c = -s;
      const QuadExt& nab = sc.N(a, b);
      if (nab != sc.N(b, c) || nab != sc.N(c, a))
        throw std::logic_error("cyclic identity fails on a zero-sum triple");
      auto [p, q] = rs.root_string(a, b);
      QuadExt expected = QuadExt(Rational(-q * (1 + p), 2) * rs.norm2(a));
      if (nab * sc.N(-a, -b) != expected)
        throw std::logic_error("structure-constant product rule fails");
      if (nab != -sc.N(b, a)) throw std::logic_error("antisymmetry violated");
    });
  });
  return sc;
}

std::vector<Rational> StructureConstants::coroot_coords(const RootSystem& rs, RootId beta) const {
  const Coords c = rs.signed_coords(beta);
  std::vector<Rational> h(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) h[j] = Rational(c[j]) * rs.simple_norm2(j) / Rational(2);
  return h;
}

void StructureConstants::write_csv(const RootSystem& rs, std::ostream& os) const {
  os << "alpha,beta,a,b\n";
  const int m = rs.num_positive();
  auto coord_str = [&](RootId r) {
    std::string s;
    const Coords c = rs.signed_coords(r);
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    return s;
  };
  for (RootId a = -m; a <= m; ++a) {
    if (a == 0) continue;
    for (RootId b = -m; b <= m; ++b) {
      if (b == 0 || rs.sum(a, b) == 0) continue;
      const QuadExt& v = N(a, b);
      os << coord_str(a) << ',' << coord_str(b) << ',' << v.a.str() << ',' << v.b.str() << '\n';
    }
  }
}

LieAlgebraModel::LieAlgebraModel(RootSystem rs) : rs_(std::move(rs)) {
  sc_ = StructureConstants::build(rs_);
  const int m = rs_.num_positive();
  h_coords_.reserve(m);
  for (RootId k = 1; k <= m; ++k) h_coords_.push_back(sc_.coroot_coords(rs_, k));
  const int n = rs_.rank();
  coroot_gram_.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational aij = Rational(rs_.cartan(i, j)) * rs_.simple_norm2(i) / Rational(2);
      coroot_gram_[i][j] = Rational(4) * aij / (rs_.simple_norm2(i) * rs_.simple_norm2(j));
    }
}

std::shared_ptr<const LieAlgebraModel> LieAlgebraModel::get(const AlgebraType& t) {
  static std::mutex mu;
  static std::map<AlgebraType, std::shared_ptr<const LieAlgebraModel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  auto model = std::make_shared<const LieAlgebraModel>(RootSystem::build(t));
  cache.emplace(t, model);
  return model;
}

void LieAlgebraModel::bracket_basis(BasisLabel a, BasisLabel b, AlgebraElement& out,
                                    const QuadExt& scale) const {
  if (scale.is_zero()) return;
  const bool ca = is_cartan_label(a), cb = is_cartan_label(b);
  if (ca && cb) return;
  if (ca) {
    int pairing = rs_.coroot_pairing(b, cartan_index(a));
    if (pairing != 0) out.add(b, scale * QuadExt(pairing));
    return;
  }
  if (cb) {
    int pairing = rs_.coroot_pairing(a, cartan_index(b));
    if (pairing != 0) out.add(a, -(scale * QuadExt(pairing)));
    return;
  }
  if (a == -b) {
    const auto& h = h_coords_[(a > 0 ? a : -a) - 1];
    QuadExt sgn = a > 0 ? scale : -scale;
    for (int i = 0; i < rs_.rank(); ++i)
      if (!h[i].is_zero()) out.add(cartan_label(i), sgn * QuadExt(h[i]));
    return;
  }
  RootId s = rs_.sum(a, b);
  if (s != 0) out.add(s, scale * sc_.N(a, b));
}

AlgebraElement LieAlgebraModel::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [la, cx] : x.terms)
    for (const auto& [lb, cy] : y.terms) bracket_basis(la, lb, out, cx * cy);
  return out;
}

QuadExt LieAlgebraModel::killing_pair(const AlgebraElement& x, const AlgebraElement& y) const {
  QuadExt v(0);
  for (const auto& [la, cx] : x.terms) {
    if (is_cartan_label(la)) {
      int i = cartan_index(la);
      for (int j = 0; j < rs_.rank(); ++j) {
        auto it = y.terms.find(cartan_label(j));
        if (it != y.terms.end()) v += cx * it->second * QuadExt(coroot_gram_[i][j]);
      }
    } else {
      auto it = y.terms.find(-la);
      if (it != y.terms.end()) v += cx * it->second;
    }
  }
  return v;
}

std::vector<BasisLabel> LieAlgebraModel::basis_labels() const {
  std::vector<BasisLabel> out;
  const int m = rs_.num_positive();
  for (RootId k = 1; k <= m; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  for (int i = 0; i < rs_.rank(); ++i) out.push_back(cartan_label(i));
  return out;
}

}  // namespace qhcis
