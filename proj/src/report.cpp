#include "liebranch/report.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace liebranch {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rat json_rat(const json& v) {
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  if (v.is_string()) return rat_parse(v.get<std::string>());
  fail("expected an integer or rational string in JSON, got " + v.dump());
}

ordered_json rat_json(const Rat& r) {
  if (is_int(r) && r.get_num().fits_sint_p())
    return ordered_json(static_cast<long>(r.get_num().get_si()));
  return ordered_json(rat_str(r));
}

std::string labels_str(const std::vector<Rat>& labels) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ",";
    os << rat_str(labels[i]);
  }
  os << "]";
  return os.str();
}

std::string int_labels_str(const std::vector<Int>& labels) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ",";
    os << int_str(labels[i]);
  }
  os << "]";
  return os.str();
}

ordered_json eps_json(const Weight& w) {
  ordered_json arr = ordered_json::array();
  for (const Rat& c : w.finite) arr.push_back(rat_json(c));
  return arr;
}

// a-side weight with the depth convention on the grade field.
ordered_json a_weight_json(const Embedding& emb, const Weight& w,
                           const Rat& top_grade) {
  ordered_json j;
  ordered_json labels = ordered_json::array();
  for (const Rat& l : a_labels(emb, w)) labels.push_back(rat_json(l));
  j["labels"] = labels;
  if (emb.a.affine) {
    j["level"] = rat_json(w.level);
    j["grade"] = rat_json(top_grade - w.grade);
  }
  j["eps"] = eps_json(w);
  return j;
}

ordered_json embedding_json_obj(const EmbeddingSpec& spec) {
  return ordered_json::parse(embedding_to_json(spec));
}

ordered_json module_json_obj(const Embedding& emb, const Weight& mu) {
  ordered_json j;
  j["algebra"] = algebra_str(*emb.g.spec);
  ordered_json labels = ordered_json::array();
  for (const Rat& l : dynkin_labels(emb.g, mu)) labels.push_back(rat_json(l));
  j["labels"] = labels;
  if (emb.g.affine) j["level"] = rat_json(mu.level);
  j["eps"] = eps_json(mu);
  return j;
}

std::string embedding_line(const Embedding& emb) {
  std::ostringstream os;
  os << algebra_str(emb.spec.g_spec) << " > " << algebra_str(emb.spec.a_spec);
  if (emb.spec.kind == EmbeddingSpec::Kind::Regular) {
    os << " (regular, drop [";
    for (size_t i = 0; i < emb.spec.drop.size(); ++i) {
      if (i) os << ",";
      os << emb.spec.drop[i];
    }
    os << "])";
  } else {
    os << " (special)";
  }
  os << ", index " << rat_str(emb.x_e);
  return os.str();
}

std::string qseries_body(const std::vector<Int>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << int_str(coeffs[d]);
      continue;
    }
    if (coeffs[d] != 1) os << int_str(coeffs[d]) << " ";
    os << "q";
    if (d > 1) os << "^" << d;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

Weight weight_from_json_text(const RootSystem& rs, const std::string& text) {
  json j = json::parse(text);
  Weight w;
  if (j.contains("labels")) {
    std::vector<Rat> labels;
    for (const auto& v : j.at("labels")) labels.push_back(json_rat(v));
    w = weight_from_labels(rs, labels);
  } else if (j.contains("eps")) {
    for (const auto& v : j.at("eps")) w.finite.push_back(json_rat(v));
    if (static_cast<int>(w.finite.size()) != rs.ambient)
      fail("eps length does not match the ambient dimension");
  } else {
    fail("weight JSON needs 'labels' or 'eps'");
  }
  if (j.contains("level")) w.level = json_rat(j.at("level"));
  if (j.contains("grade")) w.grade = -json_rat(j.at("grade"));
  return w;
}

std::string fan_table(const Embedding& emb, const OrthogonalPair& orth,
                      const Fan& fan) {
  std::ostringstream os;
  os << "fan: " << embedding_line(emb) << "\n";
  os << "perp positive roots: " << orth.a_perp.positive.size() << "\n";
  if (fan.cutoff) os << "max grade: " << *fan.cutoff << "\n";
  os << "gamma0: labels " << labels_str(a_labels(emb, fan.gamma0)) << " eps "
     << weight_str(fan.gamma0) << "  s0 = " << int_str(fan.s_gamma0) << "\n";
  os << "terms: " << fan.terms.size() << "\n";
  os << "labels  delta  s\n";
  for (const FanTerm& t : fan.terms) {
    os << labels_str(a_labels(emb, t.gamma)) << "  " << rat_str(t.gamma.grade)
       << "  " << int_str(t.s) << "\n";
  }
  return os.str();
}

std::string fan_json(const Embedding& emb, const OrthogonalPair& orth,
                     const Fan& fan) {
  ordered_json j;
  j["embedding"] = embedding_json_obj(emb.spec);
  j["index"] = rat_json(emb.x_e);
  j["perp_positive_roots"] = orth.a_perp.positive.size();
  if (fan.cutoff) j["max_grade"] = *fan.cutoff;
  ordered_json g0;
  ordered_json g0l = ordered_json::array();
  for (const Rat& l : a_labels(emb, fan.gamma0)) g0l.push_back(rat_json(l));
  g0["labels"] = g0l;
  g0["delta"] = rat_json(fan.gamma0.grade);
  g0["eps"] = eps_json(fan.gamma0);
  j["gamma0"] = g0;
  j["s0"] = rat_json(Rat(fan.s_gamma0));
  ordered_json terms = ordered_json::array();
  for (const FanTerm& t : fan.terms) {
    ordered_json tj;
    ordered_json tl = ordered_json::array();
    for (const Rat& l : a_labels(emb, t.gamma)) tl.push_back(rat_json(l));
    tj["labels"] = tl;
    tj["delta"] = rat_json(t.gamma.grade);
    tj["eps"] = eps_json(t.gamma);
    tj["s"] = rat_json(Rat(t.s));
    terms.push_back(tj);
  }
  j["terms"] = terms;
  return j.dump(2) + "\n";
}

namespace {

// Shared character-grid rendering.  For rank-one subalgebras the rows run
// over the given per-point row coordinate (delta count or depth) and the
// columns over the single a-label; rank-two finite grids use the two labels.
std::string grid_view(const Embedding& emb,
                      const std::vector<std::pair<Weight, Int>>& pts,
                      const std::string& row_name,
                      const std::function<Rat(const Weight&)>& row_of) {
  std::ostringstream os;
  auto cell = [](const Int& v) {
    std::string s = v.get_str();
    while (s.size() < 4) s.insert(s.begin(), ' ');
    return " " + s;
  };
  if (emb.a.rank() == 1) {
    std::vector<Rat> xs;
    Rat max_row(0);
    for (auto& [w, s] : pts) {
      xs.push_back(a_labels(emb, w)[0]);
      if (row_of(w) > max_row) max_row = row_of(w);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    os << "rows: " << row_name << ", columns: a-label " << labels_str(xs)
       << "\n";
    for (Rat d(0); d <= max_row; d += 1) {
      os << rat_str(d) << " |";
      for (const Rat& x : xs) {
        Int v = 0;
        for (auto& [w, s] : pts)
          if (row_of(w) == d && a_labels(emb, w)[0] == x) v = s;
        os << (v == 0 ? "    ." : cell(v));
      }
      os << "\n";
    }
  } else if (emb.a.rank() == 2 && !emb.a.affine) {
    std::vector<Rat> xs, ys;
    for (auto& [w, s] : pts) {
      auto l = a_labels(emb, w);
      xs.push_back(l[0]);
      ys.push_back(l[1]);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    os << "rows: first a-label " << labels_str(xs)
       << ", columns: second a-label " << labels_str(ys) << "\n";
    for (const Rat& x : xs) {
      os << rat_str(x) << " |";
      for (const Rat& y : ys) {
        Int v = 0;
        for (auto& [w, s] : pts) {
          auto l = a_labels(emb, w);
          if (l[0] == x && l[1] == y) v = s;
        }
        os << (v == 0 ? "    ." : cell(v));
      }
      os << "\n";
    }
  } else {
    os << "grid view available for a of rank 1, or rank 2 finite\n";
  }
  return os.str();
}

}  // namespace

std::string fan_grid(const Embedding& emb, const Fan& fan) {
  std::vector<std::pair<Weight, Int>> pts;
  pts.emplace_back(fan.gamma0, fan.s_gamma0);
  for (const FanTerm& t : fan.terms)
    pts.emplace_back(w_add(fan.gamma0, t.gamma), t.s);
  return grid_view(emb, pts, "delta count",
                   [](const Weight& w) { return w.grade; });
}

std::string singular_grid(const Embedding& emb, const Weight& mu,
                          const SingularElement& se) {
  std::vector<std::pair<Weight, Int>> pts(se.element.terms.begin(),
                                          se.element.terms.end());
  Rat top = mu.grade;
  return grid_view(emb, pts, "depth",
                   [top](const Weight& w) { return top - w.grade; });
}

std::string singular_table(const Embedding& emb, const Weight& mu,
                           const SingularElement& se) {
  std::ostringstream os;
  os << "singular element: " << embedding_line(emb) << "\n";
  os << "module: " << algebra_str(*emb.g.spec) << " "
     << labels_str(dynkin_labels(emb.g, mu));
  if (emb.g.affine) os << " level " << rat_str(mu.level);
  os << "\n";
  if (se.cutoff) os << "max grade: " << *se.cutoff << "\n";
  os << "orbit points: " << se.orbit_size
     << "  selected: " << se.selected.size() << "\n";
  os << "sign  dim_perp  a-labels  depth  mu_perp\n";
  for (const SingularTerm& t : se.selected) {
    os << (t.sign > 0 ? "+" : "-") << "  " << int_str(t.dim_perp) << "  "
       << labels_str(a_labels(emb, t.exponent)) << "  "
       << rat_str(mu.grade - t.exponent.grade) << "  "
       << weight_str(t.mu_perp) << "\n";
  }
  return os.str();
}

std::string singular_json(const Embedding& emb, const Weight& mu,
                          const SingularElement& se) {
  ordered_json j;
  j["module"] = module_json_obj(emb, mu);
  j["embedding"] = embedding_json_obj(emb.spec);
  if (se.cutoff) j["max_grade"] = *se.cutoff;
  j["orbit_points"] = se.orbit_size;
  ordered_json sel = ordered_json::array();
  for (const SingularTerm& t : se.selected) {
    ordered_json tj;
    tj["sign"] = t.sign;
    tj["dim_perp"] = rat_json(Rat(t.dim_perp));
    tj["exponent"] = a_weight_json(emb, t.exponent, mu.grade);
    tj["mu_perp"] = eps_json(t.mu_perp);
    tj["mu_a"] = eps_json(t.mu_a);
    sel.push_back(tj);
  }
  j["selected"] = sel;
  return j.dump(2) + "\n";
}

std::string branch_table(const BranchResult& res, const Weight& mu) {
  const Embedding& emb = res.emb;
  std::ostringstream os;
  os << "branching: " << embedding_line(emb) << "\n";
  os << "module: " << algebra_str(*emb.g.spec) << " "
     << labels_str(dynkin_labels(emb.g, mu));
  if (emb.g.affine)
    os << " level " << rat_str(mu.level) << ", a-level "
       << int_str(res.table.a_level);
  os << "\n";
  if (res.table.cutoff) os << "max grade: " << *res.table.cutoff << "\n";
  os << "labels  depth  mult\n";
  for (const BranchEntry& e : res.table.entries)
    os << int_labels_str(e.labels) << "  " << int_str(e.depth) << "  "
       << int_str(e.coeff) << "\n";
  if (!emb.g.affine) {
    Int total = 0;
    for (const BranchEntry& e : res.table.entries)
      total += e.coeff * weyl_dim(emb.a, e.nu);
    os << "dimension check: " << int_str(total) << " = "
       << int_str(weyl_dim(emb.g, mu)) << "\n";
  }
  for (const std::string& d : res.table.diagnostics) os << "note: " << d << "\n";
  return os.str();
}

std::string branch_json(const BranchResult& res, const Weight& mu) {
  const Embedding& emb = res.emb;
  ordered_json j;
  j["module"] = module_json_obj(emb, mu);
  j["embedding"] = embedding_json_obj(emb.spec);
  if (emb.g.affine) j["a_level"] = rat_json(Rat(res.table.a_level));
  if (res.table.cutoff) j["max_grade"] = *res.table.cutoff;
  ordered_json arr = ordered_json::array();
  for (const BranchEntry& e : res.table.entries) {
    ordered_json ej;
    ej["nu"] = a_weight_json(emb, e.nu, mu.grade);
    ej["coeff"] = rat_json(Rat(e.coeff));
    arr.push_back(ej);
  }
  j["branching"] = arr;
  if (emb.g.affine) {
    ordered_json bf;
    for (const auto& [labels, coeffs] : res.table.series) {
      ordered_json row = ordered_json::array();
      for (const Int& c : coeffs) row.push_back(rat_json(Rat(c)));
      bf[class_name(labels, res.table.a_level)] = row;
    }
    j["branching_functions"] = bf;
  }
  if (!res.table.diagnostics.empty()) j["notes"] = res.table.diagnostics;
  return j.dump(2) + "\n";
}

std::string branch_qseries(const BranchResult& res, const Weight& mu) {
  const Embedding& emb = res.emb;
  if (!emb.g.affine) fail("qseries output needs an affine branching");
  std::ostringstream os;
  os << "branching functions: " << embedding_line(emb) << ", module "
     << labels_str(dynkin_labels(emb.g, mu)) << " level " << rat_str(mu.level)
     << "\n";
  for (const auto& [labels, coeffs] : res.table.series)
    os << "b_" << class_name(labels, res.table.a_level)
       << "(q) = " << qseries_body(coeffs) << "\n";
  return os.str();
}

std::string verify_report(const BranchResult& res, const Weight& mu,
                          const BranchingTable& oracle, bool match) {
  std::ostringstream os;
  os << branch_table(res, mu);
  os << "independent expansion:\n";
  os << "labels  depth  mult\n";
  for (const BranchEntry& e : oracle.entries)
    os << int_labels_str(e.labels) << "  " << int_str(e.depth) << "  "
       << int_str(e.coeff) << "\n";
  os << (match ? "VERIFIED: tables agree\n" : "MISMATCH: tables differ\n");
  return os.str();
}

std::string coset_report(const BranchResult& res, const Weight& mu,
                         const std::map<std::vector<Int>, QSeries>& chars,
                         const ConformalReport& conf) {
  const Embedding& emb = res.emb;
  std::ostringstream os;
  os << "coset: " << algebra_str(emb.spec.g_spec) << " level "
     << rat_str(mu.level) << " / " << algebra_str(emb.spec.a_spec) << " level "
     << int_str(res.table.a_level) << "\n";
  os << "c(g) = " << rat_str(conf.c_g) << "  c(a) = " << rat_str(conf.c_a)
     << "  coset c = " << rat_str(conf.c_g - conf.c_a) << "\n";
  os << "module: " << labels_str(dynkin_labels(emb.g, mu)) << "\n";
  for (const auto& [labels, q] : chars) {
    os << "chi_" << class_name(labels, res.table.a_level) << "(q) = q^("
       << rat_str(q.prefactor) << ") * (" << qseries_body(q.coeffs) << ")\n";
  }
  return os.str();
}

std::string coset_json(const BranchResult& res, const Weight& mu,
                       const std::map<std::vector<Int>, QSeries>& chars,
                       const ConformalReport& conf) {
  const Embedding& emb = res.emb;
  ordered_json j;
  j["module"] = module_json_obj(emb, mu);
  j["embedding"] = embedding_json_obj(emb.spec);
  j["a_level"] = rat_json(Rat(res.table.a_level));
  j["c_g"] = rat_json(conf.c_g);
  j["c_a"] = rat_json(conf.c_a);
  j["c_coset"] = rat_json(conf.c_g - conf.c_a);
  ordered_json ch;
  for (const auto& [labels, q] : chars) {
    ordered_json cj;
    cj["prefactor"] = rat_json(q.prefactor);
    ordered_json arr = ordered_json::array();
    for (const Int& c : q.coeffs) arr.push_back(rat_json(Rat(c)));
    cj["coeffs"] = arr;
    ch[class_name(labels, res.table.a_level)] = cj;
  }
  j["characters"] = ch;
  return j.dump(2) + "\n";
}

std::string invariant_report(const PartitionFunction& pf,
                             const ConformalReport& conf) {
  std::ostringstream os;
  os << "conformal embedding: index " << rat_str(conf.x_e) << ", c = "
     << rat_str(conf.c_g) << " = " << rat_str(conf.c_a) << "\n";
  os << "g level " << int_str(pf.g_level) << ", a level " << int_str(pf.a_level)
     << "\n";
  for (const auto& [mu_labels, counts] : pf.modules) {
    os << "module " << int_labels_str(mu_labels) << " -> ";
    bool first = true;
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (counts[i] != 1) os << int_str(counts[i]) << " ";
      os << class_name(pf.classes[i], pf.a_level);
    }
    if (first) os << "(none)";
    os << "\n";
  }
  os << pf.rendered << "\n";
  return os.str();
}

std::string invariant_json(const PartitionFunction& pf,
                           const ConformalReport& conf) {
  ordered_json j;
  j["index"] = rat_json(conf.x_e);
  j["c"] = rat_json(conf.c_g);
  j["g_level"] = rat_json(Rat(pf.g_level));
  j["a_level"] = rat_json(Rat(pf.a_level));
  ordered_json cls = ordered_json::array();
  for (const auto& labels : pf.classes) cls.push_back(class_name(labels, pf.a_level));
  j["classes"] = cls;
  ordered_json mods;
  for (const auto& [mu_labels, counts] : pf.modules) {
    ordered_json row = ordered_json::array();
    for (const Int& c : counts) row.push_back(rat_json(Rat(c)));
    mods[int_labels_str(mu_labels)] = row;
  }
  j["modules"] = mods;
  ordered_json mass = ordered_json::array();
  for (const auto& mrow : pf.mass) {
    ordered_json row = ordered_json::array();
    for (const Int& c : mrow) row.push_back(rat_json(Rat(c)));
    mass.push_back(row);
  }
  j["mass"] = mass;
  j["partition_function"] = pf.rendered;
  return j.dump(2) + "\n";
}

}  // namespace liebranch
