#include "qhcis/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qhcis {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
  }
}

void AlgebraType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid algebra type " + name());
}

std::string AlgebraType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

Weight to_weight(const Coords& c) {
  Weight w(c.size());
  for (size_t i = 0; i < c.size(); ++i) w[i] = Rational(c[i]);
  return w;
}

Weight weight_add(const Weight& x, const Weight& y) {
  Weight r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Weight weight_sub(const Weight& x, const Weight& y) {
  Weight r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

namespace {

// Cartan matrix with cartan[i][j] = <alpha_j, alpha_i^v> and the squared
// lengths of the simple roots in the normalization max ||.||^2 = 2.
void make_cartan(const AlgebraType& t, std::vector<std::vector<int>>& A,
                 std::vector<Rational>& n2) {
  const int n = t.rank;
  A.assign(n, std::vector<int>(n, 0));
  n2.assign(n, Rational(2));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto link = [&](int i, int j) { A[i][j] = A[j][i] = -1; };  // 0-based
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A[n - 1][n - 2] = -2;  // alpha_n short
      n2[n - 1] = Rational(1);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      A[n - 2][n - 1] = -2;  // alpha_n long, the others short
      for (int i = 0; i + 1 < n; ++i) n2[i] = Rational(1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to node 4.
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      A[2][1] = -2;  // alpha_3, alpha_4 short
      n2[2] = n2[3] = Rational(1);
      break;
    case Family::G:
      link(0, 1);
      A[0][1] = -3;  // alpha_1 short, squared length 2/3
      n2[0] = Rational(2, 3);
      break;
  }
}

bool lex_less(const Coords& a, const Coords& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

RootSystem RootSystem::build(const AlgebraType& t) {
  t.validate();
  RootSystem rs;
  rs.type_ = t;
  const int n = t.rank;
  make_cartan(t, rs.cartan_, rs.simple_norm2_);

  rs.six_ip_.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // <alpha_i, alpha_j> = cartan(i,j) * ||alpha_i||^2 / 2
      Rational v = Rational(rs.cartan_[i][j]) * rs.simple_norm2_[i] / Rational(2) * Rational(6);
      if (!v.is_integer()) throw std::logic_error("inner product table not integral");
      rs.six_ip_[i][j] = static_cast<long long>(v.num());
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rs.six_ip_[i][j] != rs.six_ip_[j][i])
        throw std::logic_error("inner product table not symmetric");

  // Generate the positive roots by closing root strings upward.
  std::map<Coords, int> seen;
  std::vector<Coords> roots;
  for (int i = 0; i < n; ++i) {
    Coords c(n, 0);
    c[i] = 1;
    seen.emplace(c, 0);
    roots.push_back(c);
  }
  for (size_t pos = 0; pos < roots.size(); ++pos) {
    Coords beta = roots[pos];
    for (int i = 0; i < n; ++i) {
      // <beta, alpha_i^v>
      long long pair = 0;
      for (int j = 0; j < n; ++j) pair += static_cast<long long>(rs.cartan_[i][j]) * beta[j];
      // p = how far the string through beta extends downward along alpha_i
      int p = 0;
      Coords down = beta;
      while (true) {
        down[i] -= 1;
        if (std::any_of(down.begin(), down.end(), [](int x) { return x < 0; })) break;
        if (std::all_of(down.begin(), down.end(), [](int x) { return x == 0; })) break;
        if (!seen.count(down)) break;
        ++p;
      }
      long long q = p - pair;
      if (q >= 1) {
        Coords up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen.emplace(up, 0);
          roots.push_back(up);
        }
      }
    }
  }

  std::sort(roots.begin(), roots.end(), [](const Coords& a, const Coords& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });
  rs.positive_ = std::move(roots);
  rs.heights_.resize(rs.positive_.size());
  for (size_t k = 0; k < rs.positive_.size(); ++k) {
    int h = 0;
    for (int x : rs.positive_[k]) h += x;
    rs.heights_[k] = h;
  }

  rs.index_.reserve(rs.positive_.size());
  for (size_t k = 0; k < rs.positive_.size(); ++k) rs.index_.emplace_back(rs.positive_[k], k + 1);
  std::sort(rs.index_.begin(), rs.index_.end(),
            [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });

  const int m = rs.num_positive();
  rs.sum_table_.assign(4 * m * m, 0);
  for (RootId a = -m; a <= m; ++a) {
    if (a == 0) continue;
    for (RootId b = -m; b <= m; ++b) {
      if (b == 0) continue;
      Coords s = rs.signed_coords(a);
      Coords sb = rs.signed_coords(b);
      for (int i = 0; i < n; ++i) s[i] += sb[i];
      RootId r = rs.find_root(s);
      rs.sum_table_[rs.dense(a) * 2 * m + rs.dense(b)] = r;
    }
  }
  return rs;
}

const Coords& RootSystem::coords(RootId r) const {
  int k = r > 0 ? r : -r;
  if (k < 1 || k > num_positive()) throw std::out_of_range("RootSystem::coords: bad id");
  return positive_[k - 1];
}

Coords RootSystem::signed_coords(RootId r) const {
  Coords c = coords(r);
  if (r < 0)
    for (int& x : c) x = -x;
  return c;
}

int RootSystem::height(RootId r) const {
  int k = r > 0 ? r : -r;
  return r > 0 ? heights_[k - 1] : -heights_[k - 1];
}

RootId RootSystem::find_root(const Coords& c) const {
  bool pos = false, neg = false;
  for (int x : c) {
    if (x > 0) pos = true;
    if (x < 0) neg = true;
  }
  if (pos == neg) return 0;  // zero or mixed sign
  Coords key = c;
  if (neg)
    for (int& x : key) x = -x;
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& e, const Coords& k) { return lex_less(e.first, k); });
  if (it == index_.end() || it->first != key) return 0;
  return neg ? -it->second : it->second;
}

RootId RootSystem::root_from_weight(const Weight& w) const {
  Coords c(w.size());
  for (size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_integer()) return 0;
    c[i] = static_cast<int>(w[i].num());
  }
  return find_root(c);
}

RootId RootSystem::sum(RootId a, RootId b) const {
  if (a == 0 || b == 0) return 0;
  return sum_table_[dense(a) * 2 * static_cast<size_t>(num_positive()) + dense(b)];
}

int RootSystem::coroot_pairing(RootId b, int i) const {
  const Coords c = signed_coords(b);
  long long v = 0;
  for (int j = 0; j < rank(); ++j) v += static_cast<long long>(cartan_[i][j]) * c[j];
  return static_cast<int>(v);
}

Rational RootSystem::coroot_pairing(const Weight& w, int i) const {
  Rational v(0);
  for (int j = 0; j < rank(); ++j)
    if (!w[j].is_zero()) v += Rational(cartan_[i][j]) * w[j];
  return v;
}

Rational RootSystem::ip(const Weight& x, const Weight& y) const {
  Rational v(0);
  for (int i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < rank(); ++j) {
      if (y[j].is_zero() || six_ip_[i][j] == 0) continue;
      v += x[i] * y[j] * Rational(six_ip_[i][j]);
    }
  }
  return v / Rational(6);
}

Rational RootSystem::ip(RootId a, RootId b) const {
  const Coords ca = signed_coords(a), cb = signed_coords(b);
  long long v = 0;
  for (int i = 0; i < rank(); ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      if (cb[j] != 0) v += static_cast<long long>(ca[i]) * cb[j] * six_ip_[i][j];
  }
  return Rational(v, 6);
}

std::pair<int, int> RootSystem::root_string(RootId alpha, RootId beta) const {
  if (alpha == 0 || beta == 0 || alpha == beta || alpha == -beta)
    throw std::invalid_argument("root_string: need distinct non-opposite roots");
  int p = 0, q = 0;
  RootId cur = beta;
  while ((cur = sum(cur, -alpha)) != 0) ++p;
  cur = beta;
  while ((cur = sum(cur, alpha)) != 0) ++q;
  return {p, q};
}

Weight RootSystem::fundamental_weight(int i) const {
  const int n = rank();
  if (i < 0 || i >= n) throw std::out_of_range("fundamental_weight: index out of range");
  // Solve A x = e_i with A[j][k] = <alpha_k, alpha_j^v>.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1, Rational(0)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) M[r][c] = Rational(cartan_[r][c]);
    M[r][n] = Rational(r == i ? 1 : 0);
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!M[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(M[col], M[piv]);
    Rational d = M[col][col];
    for (int c = col; c <= n; ++c) M[col][c] /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col].is_zero()) continue;
      Rational f = M[r][col];
      for (int c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
    }
  }
  Weight w(n);
  for (int r = 0; r < n; ++r) w[r] = M[r][n];
  return w;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  Rational c = coroot_pairing(w, i);
  Weight r = w;
  r[i] -= c;  // subtract c * alpha_i
  return r;
}

std::vector<RootId> RootSystem::subsystem_positive(const std::set<int>& simples) const {
  std::vector<RootId> out;
  for (int k = 1; k <= num_positive(); ++k) {
    const Coords& c = positive_[k - 1];
    bool ok = true;
    for (int i = 0; i < rank() && ok; ++i)
      if (c[i] != 0 && !simples.count(i)) ok = false;
    if (ok) out.push_back(k);
  }
  return out;
}

RootId RootSystem::subsystem_highest_root(const std::set<int>& simples) const {
  auto roots = subsystem_positive(simples);
  if (roots.empty()) throw std::invalid_argument("subsystem_highest_root: empty subsystem");
  RootId best = roots.back();  // maximal in the (height, lex) order
  for (RootId r : roots) {
    if (r == best) continue;
    Coords diff = signed_coords(best);
    const Coords& c = coords(r);
    for (int i = 0; i < rank(); ++i) diff[i] -= c[i];
    if (std::any_of(diff.begin(), diff.end(), [](int x) { return x < 0; }))
      throw std::logic_error("subsystem not connected: no dominant highest root");
  }
  return best;
}

std::vector<Rational> RootSystem::eps_of_weight(const Weight& w) const {
  const int n = rank();
  Family f = type_.family;
  if (f != Family::B && f != Family::C && f != Family::D)
    throw std::invalid_argument("eps coordinates: only families B, C, D have a stored realization");
  std::vector<Rational> e(n, Rational(0));
  auto add_simple = [&](int i, const Rational& m) {
    if (m.is_zero()) return;
    if (f == Family::B) {
      if (i < n - 1) {
        e[i] += m;
        e[i + 1] -= m;
      } else {
        e[n - 1] += m;
      }
    } else if (f == Family::C) {
      if (i < n - 1) {
        e[i] += m;
        e[i + 1] -= m;
      } else {
        e[n - 1] += Rational(2) * m;
      }
    } else {
      if (i < n - 1) {
        e[i] += m;
        e[i + 1] -= m;
      } else {
        e[n - 2] += m;
        e[n - 1] += m;
      }
    }
  };
  for (int i = 0; i < n; ++i) add_simple(i, w[i]);
  return e;
}

std::vector<Rational> RootSystem::eps_coords(RootId r) const {
  return eps_of_weight(weight_of(r));
}

std::string RootSystem::format_eps(const std::vector<Rational>& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero()) continue;
    std::string coef;
    const Rational& a = e[i];
    if (a == Rational(1)) coef = out.empty() ? "" : "+";
    else if (a == Rational(-1)) coef = "-";
    else coef = (a.sign() > 0 && !out.empty() ? "+" : "") + a.str();
    out += coef + "e" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string RootSystem::eps_string(RootId r) const { return format_eps(eps_coords(r)); }

std::string RootSystem::eps_string(const Weight& w) const { return format_eps(eps_of_weight(w)); }

Coords highest_root_multiplicities(const AlgebraType& t) {
  t.validate();
  const int n = t.rank;
  Coords m(n, 0);
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) m[i] = 1;
      break;
    case Family::B:
      m[0] = 1;
      for (int i = 1; i < n; ++i) m[i] = 2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) m[i] = 2;
      m[n - 1] = 1;
      break;
    case Family::D:
      m[0] = 1;
      for (int i = 1; i < n - 2; ++i) m[i] = 2;
      m[n - 2] = m[n - 1] = 1;
      break;
    case Family::E:
      if (n == 6) m = {1, 2, 2, 3, 2, 1};
      else if (n == 7) m = {2, 2, 3, 4, 3, 2, 1};
      else m = {2, 3, 4, 6, 5, 4, 3, 2};
      break;
    case Family::F:
      m = {2, 3, 4, 2};
      break;
    case Family::G:
      m = {3, 2};
      break;
  }
  return m;
}

}  // namespace qhcis
