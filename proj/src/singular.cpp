#include "liebranch/singular.hpp"

namespace liebranch {

SingularElement build_singular_element(const Embedding& emb,
                                       const OrthogonalPair& orth,
                                       const Weight& mu,
                                       std::optional<int> cutoff) {
  const RootSystem& g = emb.g;
  if (!is_dominant_integral(g, mu))
    fail("module weight is not dominant integral");
  if (g.affine && !cutoff) fail("affine orbit needs a grade cutoff");

  Weight start = w_add(mu, g.rho);
  std::optional<Rat> floor;
  if (g.affine) floor = mu.grade - Rat(*cutoff);
  auto orbit = weyl_orbit_signed(g, start, floor);

  // Complement projector: identity minus the a-projector; correct on the
  // span of the g roots, which contains every u(mu+rho) - rho.
  int ambient = g.ambient;
  Mat pi_comp = mat_identity(ambient);
  for (int r = 0; r < ambient; ++r)
    for (int c = 0; c < ambient; ++c) pi_comp.at(r, c) -= emb.pi.at(r, c);

  SingularElement se;
  se.cutoff = cutoff;
  se.orbit_size = orbit.size();
  if (cutoff) se.element.min_grade = mu.grade - Rat(*cutoff);
  for (const auto& pt : orbit) {
    Weight shifted = w_sub(pt.weight, g.rho);
    Weight comp = apply_projector(pi_comp, shifted);
    comp.level = 0;
    comp.grade = 0;
    Weight mu_perp = w_sub(comp, orth.defect_perp);
    bool keep = true;
    for (const Weight& s : orth.a_perp.simple)
      if (sgn_rat(pair_coroot(orth.a_perp, mu_perp, s)) < 0) {
        keep = false;
        break;
      }
    if (!keep) continue;
    SingularTerm term;
    term.orbit_point = pt.weight;
    term.sign = pt.sign;
    term.mu_perp = mu_perp;
    term.dim_perp = weyl_dim(orth.a_perp, mu_perp);
    term.exponent = emb.project(shifted);
    term.mu_a = term.exponent;
    for (int i = 0; i < ambient; ++i)
      term.mu_a.finite[i] += orth.defect_perp.finite[i];
    se.element.add(term.exponent, Int(term.sign) * term.dim_perp);
    se.selected.push_back(std::move(term));
  }
  return se;
}

std::vector<SingularTerm> select_u(const Embedding& emb,
                                   const OrthogonalPair& orth, const Weight& mu,
                                   std::optional<int> cutoff) {
  return build_singular_element(emb, orth, mu, cutoff).selected;
}

}  // namespace liebranch
