#include "qhcis/parabolic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace qhcis {

namespace {

// Root systems alone are cheap and exist for every family (including G2,
// which has no structure-constant table here).
const RootSystem& get_root_system(const AlgebraType& t) {
  static std::mutex mu;
  static std::map<AlgebraType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, std::make_unique<RootSystem>(RootSystem::build(t))).first;
  return *it->second;
}

int s_level(const Coords& c, const std::set<int>& s0) {  // s0 holds 0-based indices
  int lvl = 0;
  for (int i : s0) lvl += c[i];
  return lvl;
}

}  // namespace

void ParabolicSpec::validate() const {
  type.validate();
  if (subset.empty()) throw std::invalid_argument("parabolic spec: empty subset");
  for (int i : subset)
    if (i < 1 || i > type.rank)
      throw std::invalid_argument("parabolic spec: simple-root index out of range");
}

std::string ParabolicSpec::label() const {
  std::string s = type.name() + "(";
  bool first = true;
  for (int i : subset) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

std::string StepClassification::kind_name() const {
  switch (kind) {
    case NilpotencyKind::Abelian: return "abelian";
    case NilpotencyKind::Heisenberg: return "heisenberg";
    case NilpotencyKind::QuasiHeisenberg: return "quasi-Heisenberg";
    case NilpotencyKind::KStep: return std::to_string(k) + "-step";
  }
  return "";
}

StepClassification classify_step(const ParabolicSpec& spec) {
  spec.validate();
  const RootSystem& rs = get_root_system(spec.type);
  std::set<int> s0;
  for (int i : spec.subset) s0.insert(i - 1);

  const Coords& gamma = rs.coords(rs.highest_root());
  StepClassification out;
  out.k = s_level(gamma, s0);
  for (int k = 1; k <= rs.num_positive(); ++k)
    if (s_level(rs.coords(k), s0) >= 2) ++out.dim_derived;
  if (out.k == 1) out.kind = NilpotencyKind::Abelian;
  else if (out.k == 2)
    out.kind = out.dim_derived == 1 ? NilpotencyKind::Heisenberg : NilpotencyKind::QuasiHeisenberg;
  else out.kind = NilpotencyKind::KStep;
  return out;
}

int nilpotency_step_bruteforce(const ParabolicSpec& spec) {
  spec.validate();
  if (spec.type.rank > 8)
    throw std::invalid_argument("nilpotency_step_bruteforce: oracle limited to rank <= 8");
  auto model = LieAlgebraModel::get(spec.type);
  const RootSystem& rs = model->roots();
  std::set<int> s0;
  for (int i : spec.subset) s0.insert(i - 1);

  std::vector<RootId> nil;
  for (RootId k = 1; k <= rs.num_positive(); ++k)
    if (s_level(rs.coords(k), s0) >= 1) nil.push_back(k);

  std::set<RootId> cur(nil.begin(), nil.end());
  int steps = 0;
  while (!cur.empty()) {
    ++steps;
    std::set<RootId> next;
    for (RootId a : nil)
      for (RootId b : cur) {
        AlgebraElement z;
        model->bracket_basis(a, b, z, QuadExt(1));
        for (const auto& [l, v] : z.terms)
          if (!is_cartan_label(l)) next.insert(l);
      }
    cur = std::move(next);
  }
  return steps;
}

std::set<int> ParabolicCase::levi_simples() const {
  std::set<int> s;
  for (int i = 0; i < model->rank(); ++i)
    if (i != q_index) s.insert(i);
  return s;
}

ParabolicSpec parse_case_label(const std::string& label) {
  size_t open = label.find('(');
  if (open == std::string::npos || label.back() != ')' || open < 2)
    throw std::invalid_argument("bad case label '" + label + "' (expected e.g. B7(3))");
  Family fam = family_from_char(label[0]);
  int rank = 0, idx = 0;
  try {
    rank = std::stoi(label.substr(1, open - 1));
    idx = std::stoi(label.substr(open + 1, label.size() - open - 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad case label '" + label + "'");
  }
  return ParabolicSpec{AlgebraType{fam, rank}, {idx}};
}

ParabolicCase build_case(const std::string& label) { return build_case(parse_case_label(label)); }

ParabolicCase build_case(const ParabolicSpec& spec) {
  spec.validate();
  if (spec.subset.size() != 1)
    throw std::invalid_argument("build_case: need a maximal parabolic (one simple root)");
  StepClassification cls = classify_step(spec);
  if (cls.kind != NilpotencyKind::QuasiHeisenberg)
    throw std::invalid_argument("build_case: " + spec.label() + " is " + cls.kind_name() +
                                ", not quasi-Heisenberg");

  ParabolicCase c;
  c.spec = spec;
  c.q_index = *spec.subset.begin() - 1;
  c.model = LieAlgebraModel::get(spec.type);
  const RootSystem& rs = c.model->roots();
  const int n = rs.rank();

  // Connected components of the deleted Dynkin diagram.
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (i == c.q_index || comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (w == c.q_index || comp[w] >= 0 || rs.cartan(v, w) == 0 || v == w) continue;
        comp[w] = ncomp;
        stack.push_back(w);
      }
    }
    ++ncomp;
  }
  if (ncomp == 3)
    throw excluded_case_error("build_case: " + spec.label() +
                              " excluded: three simple ideals in the Levi");
  if (ncomp > 3) throw std::logic_error("build_case: unexpected Levi component count");

  c.gamma_hw = rs.highest_root();
  for (int i = 0; i < n; ++i) {
    if (rs.coroot_pairing(c.gamma_hw, i) != 0) {
      if (c.alpha_gamma >= 0) throw std::logic_error("highest root meets two simple roots");
      c.alpha_gamma = i;
    }
  }
  if (c.alpha_gamma < 0 || c.alpha_gamma == c.q_index)
    throw std::logic_error("build_case: alpha_gamma not in the Levi");

  for (int i = 0; i < n; ++i) {
    if (i == c.q_index) continue;
    if (comp[i] == comp[c.alpha_gamma]) c.lgamma_simples.insert(i);
    else c.lngamma_simples.insert(i);
  }

  for (RootId k = 1; k <= rs.num_positive(); ++k) {
    int lvl = rs.coords(k)[c.q_index];
    if (lvl == 0) c.delta_l_plus.push_back(k);
    else if (lvl == 1) c.delta_g1.push_back(k);
    else if (lvl == 2) c.delta_zn.push_back(k);
    else throw std::logic_error("build_case: grading level out of range");
  }

  // Highest weight of g(1): the unique root killed by every raising operator
  // of the Levi.
  for (RootId b : c.delta_g1) {
    bool top = true;
    for (int i : c.levi_simples()) {
      Coords up = rs.coords(b);
      up[i] += 1;
      if (rs.find_root(up) != 0) {
        top = false;
        break;
      }
    }
    if (top) {
      if (c.mu != 0) throw std::logic_error("build_case: g(1) highest weight not unique");
      c.mu = b;
    }
  }
  if (c.mu == 0) throw std::logic_error("build_case: no g(1) highest weight");

  c.xi_gamma = rs.subsystem_highest_root(c.lgamma_simples);
  if (!c.lngamma_simples.empty()) c.xi_ngamma = rs.subsystem_highest_root(c.lngamma_simples);

  c.lambda_q = rs.fundamental_weight(c.q_index);
  c.h_q.assign(n, Rational(0));
  for (int k = 0; k < n; ++k)
    c.h_q[k] = c.lambda_q[k] * rs.simple_norm2(k) / rs.simple_norm2(c.q_index);

  // beta(H_q) must equal the grading level everywhere.
  for (RootId k = 1; k <= rs.num_positive(); ++k) {
    Rational v(0);
    for (int i = 0; i < n; ++i)
      if (!c.h_q[i].is_zero()) v += c.h_q[i] * Rational(rs.coroot_pairing(k, i));
    if (v != Rational(rs.coords(k)[c.q_index]))
      throw std::logic_error("build_case: grading element check failed");
  }
  return c;
}

WeightLemmaReport verify_weight_lemmas(const ParabolicCase& c) {
  const RootSystem& rs = c.roots();
  WeightLemmaReport rep;
  auto is_root = [&](const Weight& w) { return rs.root_from_weight(w) != 0; };
  auto wroot = [&](RootId r) { return rs.weight_of(r); };
  Weight gamma = wroot(c.gamma_hw), mu = wroot(c.mu), xg = wroot(c.xi_gamma);
  Coords aq(rs.rank(), 0);
  aq[c.q_index] = 1;
  Weight alpha_q = to_weight(aq);

  rep.clauses.emplace_back("xi_gamma + alpha_q is a root", is_root(weight_add(xg, alpha_q)));
  if (c.has_lngamma()) {
    Weight xn = wroot(c.xi_ngamma);
    rep.clauses.emplace_back("xi_ngamma + alpha_q is a root",
                             is_root(weight_add(xn, alpha_q)));
    rep.clauses.emplace_back("gamma - xi_ngamma is not a root",
                             !is_root(weight_sub(gamma, xn)));
    rep.clauses.emplace_back("mu - xi_ngamma is a root", is_root(weight_sub(mu, xn)));
    rep.clauses.emplace_back("gamma - mu + xi_ngamma is a root",
                             is_root(weight_add(weight_sub(gamma, mu), xn)));
    rep.clauses.emplace_back("gamma - mu - xi_ngamma is not a root",
                             !is_root(weight_sub(weight_sub(gamma, mu), xn)));
  }
  rep.clauses.emplace_back("gamma - xi_gamma is a root", is_root(weight_sub(gamma, xg)));
  rep.clauses.emplace_back("gamma - mu is a root", is_root(weight_sub(gamma, mu)));
  rep.clauses.emplace_back("mu - xi_gamma is a root", is_root(weight_sub(mu, xg)));

  bool xg_long = rs.is_long(c.xi_gamma);
  if (c.spec.type.family == Family::C) {
    rep.clauses.emplace_back("xi_gamma short in type C", !xg_long);
    rep.clauses.emplace_back("gamma - mu + xi_gamma is not a root",
                             !is_root(weight_add(weight_sub(gamma, mu), xg)));
    rep.clauses.emplace_back("gamma - mu - xi_gamma is a root",
                             is_root(weight_sub(weight_sub(gamma, mu), xg)));
  } else {
    rep.clauses.emplace_back("xi_gamma is long", xg_long);
    rep.clauses.emplace_back("gamma - mu + xi_gamma is not a root",
                             !is_root(weight_add(weight_sub(gamma, mu), xg)));
    rep.clauses.emplace_back("gamma - mu - xi_gamma is not a root",
                             !is_root(weight_sub(weight_sub(gamma, mu), xg)));
  }
  return rep;
}

}  // namespace qhcis
