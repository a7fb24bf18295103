#include "report.hpp"

#include <json.hpp>

#include <sstream>

namespace qhcis {

namespace {

using ordered_json = nlohmann::ordered_json;

bool classical(const CaseReport& r) {
  Family f = r.c.spec.type.family;
  return f == Family::B || f == Family::C || f == Family::D;
}

std::string weight_str(const Weight& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += w[i].str();
  }
  return s;
}

ordered_json weight_json(const CaseReport& r, const Weight& w) {
  ordered_json j;
  std::vector<std::string> simple;
  for (const auto& x : w) simple.push_back(x.str());
  j["simple"] = simple;
  if (classical(r)) j["eps"] = r.c.roots().eps_string(w);
  return j;
}

ordered_json root_json(const CaseReport& r, RootId root) {
  return weight_json(r, r.c.roots().weight_of(root));
}

std::string root_str(const CaseReport& r, RootId root) {
  if (classical(r)) return r.c.roots().eps_string(root);
  return weight_str(r.c.roots().weight_of(root));
}

std::string wstr(const CaseReport& r, const Weight& w) {
  if (classical(r)) return r.c.roots().eps_string(w);
  return weight_str(w);
}

std::vector<int> one_based(const std::set<int>& s) {
  std::vector<int> v;
  for (int i : s) v.push_back(i + 1);
  return v;
}

std::string omega2_value_str(const CaseReport::OmegaEntry& e) {
  return e.solved ? e.res.s_value.str() : "?";
}

ordered_json operator_json(const CaseReport& r, const UEAElement& op) {
  ordered_json terms = ordered_json::array();
  for (const auto& [w, coeff] : op.terms) {
    ordered_json word = ordered_json::array();
    for (int i = 0; i < w.len; ++i) {
      const Coords c = r.c.roots().signed_coords(w.a[i]);
      word.push_back(std::vector<int>(c.begin(), c.end()));
    }
    terms.push_back({{"word", word}, {"coefficient", coeff.str()}});
  }
  return terms;
}

}  // namespace

CaseReport build_report(const std::string& label) {
  CaseReport r;
  r.c = build_case(label);
  r.cls = classify_step(r.c.spec);
  r.decomposition = klimyk_decompose(*r.c.model, r.c.lgamma_simples,
                                     r.c.roots().weight_of(r.c.xi_gamma), zn_weight_system(r.c));
  for (const auto& [w, m] : r.decomposition)
    r.constituent_dims.push_back(weyl_dim(*r.c.model, r.c.lgamma_simples, w));
  r.specials = special_constituents(r.c);
  for (const auto& sc : r.specials) {
    CaseReport::OmegaEntry e;
    if (sc.kind == ConstituentKind::Type1a || sc.kind == ConstituentKind::Type2) {
      e.solved = true;
      e.res = solve_special_value(r.c, sc);
      e.lowest = build_omega2_lowest(r.c, sc);
    }
    r.omega2.push_back(std::move(e));
  }
  r.omega1 = omega1_special_value(r.c);
  r.lemmas = verify_weight_lemmas(r.c);
  return r;
}

std::string report_text(const CaseReport& r) {
  std::ostringstream os;
  os << "case " << r.c.label() << "  [" << r.cls.kind_name() << ", dim[n,n]=" << r.cls.dim_derived
     << "]\n";
  os << "scale: long roots have squared length 2\n";
  os << "alpha_q = a" << r.c.q_index + 1 << ", alpha_gamma = a" << r.c.alpha_gamma + 1 << "\n";
  os << "mu      = " << root_str(r, r.c.mu) << "\n";
  os << "gamma   = " << root_str(r, r.c.gamma_hw) << "\n";
  os << "xi_g    = " << root_str(r, r.c.xi_gamma) << "\n";
  if (r.c.has_lngamma()) os << "xi_ng   = " << root_str(r, r.c.xi_ngamma) << "\n";
  auto pset = [&](const std::set<int>& s) {
    std::string out = "{";
    bool first = true;
    for (int i : s) {
      if (!first) out += ",";
      out += "a" + std::to_string(i + 1);
      first = false;
    }
    return out + "}";
  };
  os << "Pi(l_g) = " << pset(r.c.lgamma_simples)
     << "  Pi(l_ng) = " << pset(r.c.lngamma_simples) << "\n";
  os << "|Delta(g(1))| = " << r.c.delta_g1.size() << ", |Delta(z(n))| = " << r.c.delta_zn.size()
     << "\n";
  os << "l_g (x) z(n) =";
  for (size_t i = 0; i < r.decomposition.size(); ++i)
    os << (i ? " + " : " ") << "V(" << wstr(r, r.decomposition[i].first) << ")[dim "
       << r.constituent_dims[i].str() << "]";
  os << "\n";
  for (size_t i = 0; i < r.specials.size(); ++i) {
    const auto& sc = r.specials[i];
    os << "special " << (sc.source == ConstituentSource::LGammaTensor ? "l_g" : "l_ng")
       << ": V(" << wstr(r, sc.nu) << "), eps = " << root_str(r, sc.eps) << ", type "
       << kind_name(sc.kind) << "\n";
    const auto& e = r.omega2[i];
    if (e.solved) {
      os << "  omega2: s = " << e.res.s_value.str() << ", system size " << e.res.system_size
         << ", bracket = (" << e.res.prefactor.str() << ")*(s - (" << e.res.s_value.str()
         << "))*R(X_{-eps})\n";
    } else {
      os << "  omega2: s = ?  (no closed form for type " << kind_name(sc.kind) << ")\n";
    }
  }
  os << "omega1: s = " << r.omega1.s_value.str() << ", system size " << r.c.delta_g1.size()
     << ", certificate " << (r.omega1.certificate ? "pass" : "FAIL") << "\n";
  os << "weight lemmas: " << (r.lemmas.all() ? "pass" : "FAIL");
  for (const auto& [name, ok] : r.lemmas.clauses)
    if (!ok) os << "  [" << name << "]";
  os << "\n";
  return os.str();
}

std::string report_json(const CaseReport& r) {
  ordered_json j;
  j["spec_version"] = "1";
  j["label"] = r.c.label();
  j["algebra"] = r.c.spec.type.name();
  j["scale_convention"] = "long roots have squared length 2";
  j["classification"] = {{"k", r.cls.k},
                         {"kind", r.cls.kind_name()},
                         {"dim_derived", r.cls.dim_derived}};
  ordered_json data;
  data["alpha_q"] = r.c.q_index + 1;
  data["alpha_gamma"] = r.c.alpha_gamma + 1;
  data["mu"] = root_json(r, r.c.mu);
  data["gamma"] = root_json(r, r.c.gamma_hw);
  data["xi_gamma"] = root_json(r, r.c.xi_gamma);
  if (r.c.has_lngamma()) data["xi_ngamma"] = root_json(r, r.c.xi_ngamma);
  else data["xi_ngamma"] = nullptr;
  data["levi_gamma"] = one_based(r.c.lgamma_simples);
  data["levi_ngamma"] = one_based(r.c.lngamma_simples);
  data["dim_g1"] = r.c.delta_g1.size();
  data["dim_zn"] = r.c.delta_zn.size();
  j["case_data"] = data;

  ordered_json dec = ordered_json::array();
  for (size_t i = 0; i < r.decomposition.size(); ++i) {
    ordered_json e;
    e["highest_weight"] = weight_json(r, r.decomposition[i].first);
    e["multiplicity"] = r.decomposition[i].second;
    e["dim"] = r.constituent_dims[i].str();
    dec.push_back(e);
  }
  j["decomposition"] = dec;

  ordered_json sp = ordered_json::array();
  for (size_t i = 0; i < r.specials.size(); ++i) {
    const auto& sc = r.specials[i];
    ordered_json e;
    e["source"] = sc.source == ConstituentSource::LGammaTensor ? "l_gamma" : "l_ngamma";
    e["type"] = kind_name(sc.kind);
    e["highest_weight"] = weight_json(r, sc.nu);
    e["eps"] = root_json(r, sc.eps);
    ordered_json om;
    if (r.omega2[i].solved) {
      const auto& res = r.omega2[i].res;
      om["s"] = res.s_value.str();
      om["system_size"] = res.system_size;
      om["prefactor"] = res.prefactor.str();
      om["bracket_coefficient"] = res.residual.str();
      om["residual_direction"] = root_json(r, res.residual_direction);
      om["lowest_operator"] = operator_json(r, r.omega2[i].lowest);
    } else {
      om["s"] = "?";
      om["note"] = "no closed form for type " + kind_name(sc.kind);
    }
    e["omega2"] = om;
    sp.push_back(e);
  }
  j["special_constituents"] = sp;

  ordered_json o1;
  o1["s"] = r.omega1.s_value.str();
  o1["system_size"] = r.c.delta_g1.size();
  o1["certificate"] = r.omega1.certificate;
  ordered_json anomalies = ordered_json::array();
  for (RootId a : r.omega1.zero_anomalies) anomalies.push_back(root_json(r, a));
  o1["zero_anomalies"] = anomalies;
  j["omega1"] = o1;

  ordered_json lem = ordered_json::array();
  for (const auto& [name, ok] : r.lemmas.clauses) lem.push_back({{"name", name}, {"pass", ok}});
  j["property_suite"] = {{"weight_lemmas", lem}, {"all_pass", r.lemmas.all()}};
  return j.dump(2) + "\n";
}

std::string report_csv(const CaseReport& r) {
  std::ostringstream os;
  os << "label,source,type,highest_weight,eps,s,system_size,prefactor\n";
  for (size_t i = 0; i < r.specials.size(); ++i) {
    const auto& sc = r.specials[i];
    os << r.c.label() << ','
       << (sc.source == ConstituentSource::LGammaTensor ? "l_gamma" : "l_ngamma") << ','
       << kind_name(sc.kind) << ',' << wstr(r, sc.nu) << ',' << root_str(r, sc.eps) << ','
       << omega2_value_str(r.omega2[i]) << ',';
    if (r.omega2[i].solved)
      os << r.omega2[i].res.system_size << ',' << r.omega2[i].res.prefactor.str();
    else
      os << ',';
    os << '\n';
  }
  return os.str();
}

}  // namespace qhcis
