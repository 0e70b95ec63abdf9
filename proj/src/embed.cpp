#include "liebranch/embed.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

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

// Cartan matrix entries <alpha_i, alpha_j^vee> of a list of roots.
Mat cartan_of(const std::vector<Weight>& roots) {
  int n = static_cast<int>(roots.size());
  Mat c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.at(i, j) = Rat(2) * dot_finite(roots[i], roots[j]) /
                   dot_finite(roots[j], roots[j]);
  return c;
}

// Permutation p with cartan(roots[p[0..n]]) equal to target, if any.
std::optional<std::vector<int>> match_diagram(const std::vector<Weight>& roots,
                                              const Mat& target) {
  int n = static_cast<int>(roots.size());
  if (target.rows != n) return std::nullopt;
  Mat c = cartan_of(roots);
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) {
    if (i == n) return true;
    for (int k = 0; k < n; ++k) {
      if (used[k]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = c.at(k, p[j]) == target.at(i, j) && c.at(p[j], k) == target.at(j, i);
      if (ok && c.at(k, k) == target.at(i, i)) {
        p[i] = k;
        used[k] = true;
        if (rec(i + 1)) return true;
        used[k] = false;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return p;
}

// Integer coordinates of x in the given independent root list, if any.
bool in_integer_span(const std::vector<Weight>& basis, const Weight& x) {
  int ambient = static_cast<int>(x.finite.size());
  int n = static_cast<int>(basis.size());
  Mat m(ambient, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < ambient; ++i) m.at(i, j) = basis[j].finite[i];
  std::vector<Rat> c;
  if (!solve_linear(m, x.finite, c)) return false;
  for (const Rat& v : c)
    if (!is_int(v)) return false;
  // Confirm the solution reproduces x (solve_linear zeroes free variables).
  std::vector<Rat> back = mat_apply(m, c);
  for (int i = 0; i < ambient; ++i)
    if (back[i] != x.finite[i]) return false;
  return true;
}

std::vector<Weight> abstract_positive_closure(const std::vector<Weight>& simples) {
  // Reflect known roots by the simples, keeping those with nonnegative
  // coordinates in the simple basis; for the root systems of interest this
  // reaches every positive root.
  int ambient = simples.empty() ? 0 : static_cast<int>(simples[0].finite.size());
  int n = static_cast<int>(simples.size());
  Mat m(ambient, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < ambient; ++i) m.at(i, j) = simples[j].finite[i];
  auto nonneg_coords = [&](const Weight& x) {
    std::vector<Rat> c;
    if (!solve_linear(m, x.finite, c)) return false;
    std::vector<Rat> back = mat_apply(m, c);
    for (int i = 0; i < ambient; ++i)
      if (back[i] != x.finite[i]) return false;
    for (const Rat& v : c)
      if (sgn_rat(v) < 0) return false;
    return true;
  };
  std::set<Weight, WeightLess> known(simples.begin(), simples.end());
  std::deque<Weight> queue(simples.begin(), simples.end());
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    for (const Weight& s : simples) {
      Rat p = Rat(2) * dot_finite(x, s) / dot_finite(s, s);
      Weight y = w_sub(x, w_scale(p, s));
      if (is_zero(y) || !nonneg_coords(y)) continue;
      if (known.insert(y).second) queue.push_back(y);
    }
  }
  return {known.begin(), known.end()};
}

}  // namespace

EmbeddingSpec regular_embedding(const AlgebraSpec& g, std::vector<int> drop,
                                const AlgebraSpec& a) {
  EmbeddingSpec spec;
  spec.kind = EmbeddingSpec::Kind::Regular;
  spec.g_spec = g;
  spec.a_spec = a;
  spec.drop = std::move(drop);
  return spec;
}

EmbeddingSpec special_embedding(const AlgebraSpec& g, const AlgebraSpec& a,
                                std::vector<std::vector<Rat>> roots) {
  EmbeddingSpec spec;
  spec.kind = EmbeddingSpec::Kind::Special;
  spec.g_spec = g;
  spec.a_spec = a;
  spec.embedded_simple_roots = std::move(roots);
  return spec;
}

EmbeddingSpec embedding_from_json(const std::string& text) {
  json j = json::parse(text);
  EmbeddingSpec spec;
  spec.g_spec = parse_algebra(j.at("g").get<std::string>());
  spec.a_spec = parse_algebra(j.at("a").get<std::string>());
  std::string kind = j.value("kind", std::string("regular"));
  if (kind == "regular") {
    spec.kind = EmbeddingSpec::Kind::Regular;
    if (j.contains("drop"))
      for (const auto& v : j.at("drop")) spec.drop.push_back(v.get<int>());
  } else if (kind == "special") {
    spec.kind = EmbeddingSpec::Kind::Special;
    for (const auto& row : j.at("embedded_simple_roots")) {
      std::vector<Rat> r;
      for (const auto& v : row) r.push_back(json_rat(v));
      spec.embedded_simple_roots.push_back(std::move(r));
    }
    if (j.contains("projection")) {
      const auto& rows = j.at("projection");
      int nr = static_cast<int>(rows.size());
      int nc = nr ? static_cast<int>(rows[0].size()) : 0;
      Mat m(nr, nc);
      for (int r = 0; r < nr; ++r) {
        if (static_cast<int>(rows[r].size()) != nc)
          fail("ragged projection matrix");
        for (int c = 0; c < nc; ++c) m.at(r, c) = json_rat(rows[r][c]);
      }
      spec.projection = std::move(m);
    }
  } else {
    fail("unknown embedding kind '" + kind + "'");
  }
  return spec;
}

std::string embedding_to_json(const EmbeddingSpec& spec) {
  ordered_json j;
  j["g"] = algebra_str(spec.g_spec);
  j["kind"] = spec.kind == EmbeddingSpec::Kind::Regular ? "regular" : "special";
  if (spec.kind == EmbeddingSpec::Kind::Regular) {
    j["drop"] = spec.drop;
  } else {
    json rows = json::array();
    for (const auto& r : spec.embedded_simple_roots) {
      json row = json::array();
      for (const Rat& v : r)
        if (is_int(v))
          row.push_back(static_cast<long>(v.get_num().get_si()));
        else
          row.push_back(rat_str(v));
      rows.push_back(row);
    }
    j["embedded_simple_roots"] = rows;
  }
  j["a"] = algebra_str(spec.a_spec);
  return j.dump();
}

Weight Embedding::project(const Weight& w) const {
  Weight out = apply_projector(pi, w);
  out.level = x_e * w.level;
  out.grade = w.grade;
  return out;
}

Embedding resolve_embedding(const EmbeddingSpec& spec_in) {
  Embedding emb;
  emb.spec = spec_in;
  EmbeddingSpec& spec = emb.spec;
  if (spec.g_spec.affine != spec.a_spec.affine)
    fail("g and a must be both finite or both affine");
  emb.g = build_root_system(spec.g_spec);
  const RootSystem& g = emb.g;
  int ambient = g.ambient;

  std::vector<Weight> a_positive;
  if (spec.kind == EmbeddingSpec::Kind::Regular) {
    int r = g.rank();
    if (spec.drop.empty()) {
      AlgebraSpec acl = spec.a_spec, gcl = spec.g_spec;
      acl.affine = gcl.affine = false;
      if (!spec_equal(acl, gcl))
        fail("an empty drop list is only valid when a equals g");
      spec.drop = {0};
    }
    std::sort(spec.drop.begin(), spec.drop.end());
    spec.drop.erase(std::unique(spec.drop.begin(), spec.drop.end()),
                    spec.drop.end());
    for (int d : spec.drop)
      if (d < 0 || d > r) fail("drop index out of range");

    // Nodes of the extended diagram; node 0 carries the lowest root.
    std::vector<Weight> node(r + 1);
    node[0] = w_neg(g.theta);
    for (int i = 1; i <= r; ++i) node[i] = g.simple[i - 1];
    std::vector<int> surviving;
    for (int i = 0; i <= r; ++i)
      if (!std::binary_search(spec.drop.begin(), spec.drop.end(), i))
        surviving.push_back(i);
    if (surviving.empty()) fail("drop list removes the whole diagram");

    // Connected components of the surviving diagram.
    std::vector<int> comp(surviving.size(), -1);
    int ncomp = 0;
    for (size_t s = 0; s < surviving.size(); ++s) {
      if (comp[s] != -1) continue;
      comp[s] = ncomp;
      std::deque<size_t> queue{s};
      while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        for (size_t y = 0; y < surviving.size(); ++y)
          if (comp[y] == -1 &&
              sgn_rat(dot_finite(node[surviving[x]], node[surviving[y]])) != 0) {
            comp[y] = ncomp;
            queue.push_back(y);
          }
      }
      ++ncomp;
    }

    AlgebraSpec a_cl = spec.a_spec;
    a_cl.affine = false;
    RootSystem a_model = build_root_system(a_cl);
    Mat target = cartan_of(a_model.simple);
    std::optional<std::vector<Weight>> chosen;
    for (int c = 0; c < ncomp; ++c) {
      std::vector<Weight> roots;
      for (size_t s = 0; s < surviving.size(); ++s)
        if (comp[s] == c) roots.push_back(node[surviving[s]]);
      if (match_diagram(roots, target)) {
        if (chosen) fail("drop list matches '" + algebra_str(spec.a_spec) +
                         "' in more than one component");
        chosen = roots;
      }
    }
    if (!chosen)
      fail("drop list does not produce a component of type '" +
           algebra_str(spec.a_spec) + "'");

    for (const Weight& x : g.positive)
      if (in_integer_span(*chosen, x)) a_positive.push_back(x);
  } else {
    std::vector<Weight> simples;
    for (const auto& row : spec.embedded_simple_roots) {
      if (static_cast<int>(row.size()) != ambient)
        fail("embedded root length does not match the g coordinate count");
      Weight w;
      w.finite = row;
      if (is_zero(w)) fail("embedded simple root is zero");
      simples.push_back(w);
    }
    if (simples.empty()) fail("special embedding needs embedded simple roots");
    a_positive = abstract_positive_closure(simples);
  }

  RootSystem a = root_system_from_positive(ambient, a_positive, g.affine,
                                           spec.a_spec.rank);
  AlgebraSpec a_cl = spec.a_spec;
  a_cl.affine = false;
  RootSystem a_model = build_root_system(a_cl);
  auto perm = match_diagram(a.simple, cartan_of(a_model.simple));
  if (!perm)
    fail("embedded root data is not of type '" + algebra_str(spec.a_spec) + "'");
  std::vector<Weight> ordered;
  for (int i = 0; i < static_cast<int>(perm->size()); ++i)
    ordered.push_back(a.simple[(*perm)[i]]);
  a.simple = std::move(ordered);
  if (!a.has_theta)
    fail("embedded subalgebra is not simple");
  a.spec = spec.a_spec;
  emb.a = std::move(a);

  emb.pi = span_projector(ambient, emb.a.simple);
  if (spec.projection) {
    if (spec.projection->rows != ambient || spec.projection->cols != ambient)
      fail("projection matrix must be square on the g coordinates");
    if (!mat_equal(*spec.projection, emb.pi))
      fail("projection matrix disagrees with the embedded simple roots");
  }
  emb.x_e = emb.a.cl_scale / emb.g.cl_scale;
  if (!is_int(emb.x_e)) fail("embedding index came out non-integral");
  return emb;
}

std::vector<Rat> a_labels(const Embedding& emb, const Weight& w) {
  std::vector<Rat> out;
  out.reserve(emb.a.simple.size());
  for (const Weight& s : emb.a.simple) {
    // The projector is self-adjoint and fixes a-roots, so pairing the raw
    // weight is the same as pairing its projection.
    out.push_back(Rat(2) * dot_finite(w, s) / dot_finite(s, s));
  }
  return out;
}

OrthogonalPair orthogonal_pair(const Embedding& emb) {
  OrthogonalPair out;
  int ambient = emb.g.ambient;
  std::vector<Weight> perp_pos;
  for (const Weight& alpha : emb.g.positive) {
    Weight pr = apply_projector(emb.pi, alpha);
    if (is_zero(pr)) perp_pos.push_back(alpha);
  }
  out.a_perp = root_system_from_positive(ambient, perp_pos, false, 0);

  // Cartan directions orthogonal to a and a_perp inside span(roots of g).
  std::vector<Weight> constraints = emb.a.simple;
  for (const Weight& s : out.a_perp.simple) constraints.push_back(s);
  bool traceless = emb.g.spec && emb.g.spec->series == Series::A;
  int rows = static_cast<int>(constraints.size()) + (traceless ? 1 : 0);
  Mat m(rows, ambient);
  for (int i = 0; i < static_cast<int>(constraints.size()); ++i)
    for (int j = 0; j < ambient; ++j) m.at(i, j) = constraints[i].finite[j];
  if (traceless)
    for (int j = 0; j < ambient; ++j) m.at(rows - 1, j) = 1;
  for (auto& v : nullspace(m)) {
    // Normalize to a primitive integer vector with positive leading entry.
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = lcm(lcm_den, x.get_den());
    Int gcd_num = 0;
    for (const Rat& x : v) gcd_num = gcd(gcd_num, x.get_num() * (lcm_den / x.get_den()));
    Weight w;
    w.finite.resize(ambient);
    for (int j = 0; j < ambient; ++j)
      w.finite[j] = v[j] * Rat(lcm_den) / Rat(gcd_num);
    int lead = 0;
    for (int j = 0; j < ambient; ++j)
      if (sgn_rat(w.finite[j]) != 0) { lead = sgn_rat(w.finite[j]); break; }
    if (lead < 0) w = w_neg(w);
    out.h_perp.push_back(w);
  }

  Mat pi_perp = span_projector(ambient, out.a_perp.simple);
  Weight rho_g_cl = emb.g.rho;
  rho_g_cl.level = 0;
  out.defect_perp = w_sub(out.a_perp.rho, apply_projector(pi_perp, rho_g_cl));
  Weight rho_a_cl = emb.a.rho;
  rho_a_cl.level = 0;
  out.defect_a = w_sub(rho_a_cl, apply_projector(emb.pi, rho_g_cl));
  return out;
}

}  // namespace liebranch
