#include "liebranch/cft.hpp"

#include <algorithm>
#include <sstream>

namespace liebranch {

Rat central_charge(const AlgebraSpec& spec, const Rat& level) {
  AlgebraSpec cl = spec;
  cl.affine = false;
  RootSystem rs = build_root_system(cl);
  return level * Rat(rs.dim_alg) / (level + Rat(rs.h_dual));
}

ConformalReport conformal_check(const Embedding& emb,
                                const OrthogonalPair& orth, const Rat& level) {
  ConformalReport rep;
  rep.x_e = emb.x_e;
  rep.c_g = central_charge(emb.spec.g_spec, level);
  rep.c_a = central_charge(emb.spec.a_spec, emb.x_e * level);
  rep.conformal = rep.c_g == rep.c_a;
  rep.perp_roots_empty = orth.a_perp.positive.empty();
  return rep;
}

Rat modular_anomaly(const AlgebraSpec& spec, const Rat& level,
                    const std::vector<Rat>& labels) {
  AlgebraSpec cl = spec;
  cl.affine = false;
  RootSystem rs = build_root_system(cl);
  Weight mu = weight_from_labels(rs, labels);
  Rat short_norm(0);
  for (const Weight& a : rs.positive) {
    Rat n = dot_finite(a, a);
    if (short_norm == 0 || n < short_norm) short_norm = n;
  }
  Rat scale = Rat(2) / short_norm;
  Weight ms = w_add(mu, rs.rho);
  Rat h_dual(rs.h_dual);
  return scale * dot_finite(ms, ms) / (Rat(2) * (level + h_dual)) -
         scale * dot_finite(rs.rho, rs.rho) / (Rat(2) * h_dual);
}

std::map<std::vector<Int>, QSeries> coset_characters(const Embedding& emb,
                                                     const Weight& mu,
                                                     const BranchingTable& table) {
  std::vector<Rat> mu_labels = dynkin_labels(emb.g, mu);
  Rat m_mu = modular_anomaly(emb.spec.g_spec, mu.level, mu_labels);
  std::map<std::vector<Int>, QSeries> out;
  for (const auto& [labels, coeffs] : table.series) {
    std::vector<Rat> nu_labels(labels.begin(), labels.end());
    Rat m_nu = modular_anomaly(emb.spec.a_spec, Rat(table.a_level), nu_labels);
    QSeries q;
    q.prefactor = m_mu - m_nu;
    q.coeffs = coeffs;
    out.emplace(labels, std::move(q));
  }
  return out;
}

std::string class_name(const std::vector<Int>& labels, const Int& level) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ",";
    os << int_str(labels[i]);
  }
  os << ";" << int_str(level) << ";0)";
  return os.str();
}

PartitionFunction assemble_partition_function(const EmbeddingSpec& spec,
                                              const Int& level, int cutoff) {
  Embedding emb = resolve_embedding(spec);
  if (!emb.g.affine) fail("partition functions need affine algebras");
  OrthogonalPair orth = orthogonal_pair(emb);
  ConformalReport rep = conformal_check(emb, orth, Rat(level));
  if (!rep.conformal)
    fail("embedding is not conformal at level " + int_str(level) +
         " (central charges " + rat_str(rep.c_g) + " vs " + rat_str(rep.c_a) +
         ")");

  PartitionFunction pf;
  pf.g_level = level;
  Rat la = emb.x_e * Rat(level);
  pf.a_level = la.get_num();

  AlgebraSpec a_std = spec.a_spec;
  RootSystem a_model = build_root_system(a_std);
  for (const Weight& w : dominant_weights_at_level(a_model, pf.a_level)) {
    std::vector<Int> labels;
    for (const Rat& l : dynkin_labels(a_model, w)) labels.push_back(l.get_num());
    pf.classes.push_back(std::move(labels));
  }
  std::sort(pf.classes.begin(), pf.classes.end());

  FormalElement prod = fan_product(emb, orth, cutoff);
  Fan fan = extract_fan(emb, prod);
  size_t nc = pf.classes.size();
  pf.mass.assign(nc, std::vector<Int>(nc, 0));

  for (const Weight& mu : dominant_weights_at_level(emb.g, level)) {
    BranchResult res = branch_module(emb, orth, prod, fan, mu, cutoff);
    std::vector<Int> counts(nc, 0);
    for (const auto& [labels, coeffs] : res.table.series) {
      auto it = std::lower_bound(pf.classes.begin(), pf.classes.end(), labels);
      if (it == pf.classes.end() || *it != labels)
        fail("branching produced an unknown class");
      size_t idx = static_cast<size_t>(it - pf.classes.begin());
      for (const Int& c : coeffs) counts[idx] += c;
    }
    std::vector<Int> mu_labels;
    for (const Rat& l : dynkin_labels(emb.g, mu)) mu_labels.push_back(l.get_num());
    for (size_t i = 0; i < nc; ++i)
      for (size_t j = 0; j < nc; ++j) pf.mass[i][j] += counts[i] * counts[j];
    pf.modules.emplace_back(std::move(mu_labels), std::move(counts));
  }

  // Group identical class-content vectors, keeping the order in which the
  // modules were enumerated (vacuum first), and render the invariant.
  std::vector<std::pair<std::vector<Int>, Int>> groups;
  for (const auto& [mu_labels, counts] : pf.modules) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == counts; });
    if (it == groups.end())
      groups.emplace_back(counts, 1);
    else
      ++it->second;
  }
  std::ostringstream os;
  os << "Z = ";
  bool first = true;
  for (const auto& [counts, times] : groups) {
    bool all_zero = true;
    for (const Int& c : counts)
      if (c != 0) all_zero = false;
    if (all_zero) continue;
    if (!first) os << " + ";
    first = false;
    if (times != 1) os << int_str(times) << " ";
    int nonzero = 0;
    bool unit = true;
    std::ostringstream inner;
    bool inner_first = true;
    for (size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] == 0) continue;
      ++nonzero;
      if (counts[i] != 1) unit = false;
      if (!inner_first) inner << " + ";
      inner_first = false;
      if (counts[i] != 1) inner << int_str(counts[i]) << " ";
      inner << "chi_" << class_name(pf.classes[i], pf.a_level);
    }
    if (nonzero == 1 && unit)
      os << inner.str() << "^2";
    else
      os << "|" << inner.str() << "|^2";
  }
  pf.rendered = os.str();
  return pf;
}

}  // namespace liebranch
