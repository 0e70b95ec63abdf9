#pragma once

#include <optional>
#include <vector>

#include "liebranch/embed.hpp"
#include "liebranch/formal.hpp"

namespace liebranch {

// One retained point of the shifted Weyl orbit of mu + rho.
struct SingularTerm {
  Weight orbit_point;  // u(mu + rho)
  int sign = 1;        // det u
  Weight mu_perp;      // dominant highest weight of the complement factor
  Int dim_perp = 1;
  Weight exponent;     // projection of u(mu + rho) - rho onto the a side
  Weight mu_a;         // exponent shifted by the complement defect (reported)
};

// Orbit points whose complement component lands in the open dominant
// chamber after the rho shift; wall points drop out automatically.
std::vector<SingularTerm> select_u(const Embedding& emb,
                                   const OrthogonalPair& orth, const Weight& mu,
                                   std::optional<int> cutoff);

struct SingularElement {
  FormalElement element;  // sum of sign * dim_perp * e^{exponent}
  std::vector<SingularTerm> selected;
  size_t orbit_size = 0;
  std::optional<int> cutoff;
};

SingularElement build_singular_element(const Embedding& emb,
                                       const OrthogonalPair& orth,
                                       const Weight& mu,
                                       std::optional<int> cutoff);

}  // namespace liebranch
