#pragma once

#include <optional>
#include <vector>

#include "liebranch/embed.hpp"
#include "liebranch/formal.hpp"

namespace liebranch {

// Total order organizing the recurrence: grade ascending, then sum of
// a-Dynkin labels ascending, then finite coordinates lexicographically,
// then level.  Additive in the weight, so it orders shift vectors and
// absolute weights consistently.
struct FanKey {
  Rat grade;
  Rat height;
  std::vector<Rat> finite;
  Rat level;
};

FanKey fan_key(const Embedding& emb, const Weight& w);
int fan_key_cmp(const FanKey& x, const FanKey& y);

struct FanKeyLess {
  const Embedding* emb = nullptr;
  bool operator()(const Weight& x, const Weight& y) const {
    return fan_key_cmp(fan_key(*emb, x), fan_key(*emb, y)) < 0;
  }
};

// The projected product over the positive roots of g outside the orthogonal
// complement, divided exactly by the full a-side denominator, negated.
// Exponent weights in the result are the negated fan shifts; for affine
// systems cutoff (>= 0) truncates at exponent grade -cutoff and is required.
FormalElement fan_product(const Embedding& emb, const OrthogonalPair& orth,
                          std::optional<int> cutoff);

struct FanTerm {
  Weight gamma;  // shift relative to gamma0; nonzero
  Int s;         // coefficient at gamma0 + gamma
};

struct Fan {
  Weight gamma0;  // order-minimal support point
  Int s_gamma0;
  std::vector<FanTerm> terms;  // ascending in the fan order
  std::optional<int> cutoff;
};

Fan extract_fan(const Embedding& emb, const FormalElement& product);

}  // namespace liebranch
