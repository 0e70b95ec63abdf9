#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liebranch/rootdata.hpp"

namespace liebranch {

struct EmbeddingSpec {
  enum class Kind { Regular, Special };
  Kind kind = Kind::Regular;
  AlgebraSpec g_spec;
  AlgebraSpec a_spec;
  // Regular: nodes of the extended diagram to delete (0 = the lowest-root
  // node).  An empty list is accepted only for a = g.
  std::vector<int> drop;
  // Special: simple roots of a in the epsilon coordinates of g.
  std::vector<std::vector<Rat>> embedded_simple_roots;
  // Special, optional: the projector onto the embedded span, as a square
  // matrix on the g coordinates.  Validated against the one derived from
  // the embedded roots.
  std::optional<Mat> projection;
};

EmbeddingSpec regular_embedding(const AlgebraSpec& g, std::vector<int> drop,
                                const AlgebraSpec& a);
EmbeddingSpec special_embedding(const AlgebraSpec& g, const AlgebraSpec& a,
                                std::vector<std::vector<Rat>> roots);
EmbeddingSpec embedding_from_json(const std::string& text);
std::string embedding_to_json(const EmbeddingSpec& spec);

struct Embedding {
  EmbeddingSpec spec;
  RootSystem g;
  // Root data of a inside g's ambient space; simple roots are stored in the
  // node order of the standard a diagram.  Affine iff g is affine.
  RootSystem a;
  Mat pi;   // classical projector onto span(a)
  Rat x_e;  // embedding index: a-level = x_e * g-level

  Weight project(const Weight& w) const;
};

Embedding resolve_embedding(const EmbeddingSpec& spec);

std::vector<Rat> a_labels(const Embedding& emb, const Weight& w);

struct OrthogonalPair {
  RootSystem a_perp;            // roots of g killed by the projection
  std::vector<Weight> h_perp;   // Cartan directions orthogonal to both parts
  Weight defect_perp;           // rho(a_perp) - proj_perp rho(g)
  Weight defect_a;              // rho(a) - proj_a rho(g)
};

OrthogonalPair orthogonal_pair(const Embedding& emb);

}  // namespace liebranch
