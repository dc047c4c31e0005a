// Cocircuit enumeration and weighted cogirth. Cocircuits of a represented
// matroid are the minimal supports of nonzero row-space vectors of the
// representing matrix; the weighted cogirth is the minimum weighted support,
// which positive weights force to be attained on a cocircuit.
#pragma once

#include <cstdint>
#include <vector>

#include "cogirth/geometry.hpp"
#include "cogirth/matroid.hpp"

namespace cogirth {

enum class Cotype { untyped, type_one, type_two };

struct Cocircuit {
  std::vector<int> support;     // ascending element labels
  std::int64_t weight = 0;
  std::vector<int> hyperplane;  // E(M) - support: the complementary flat, by label
  Cotype cotype = Cotype::untyped;

  bool operator==(const Cocircuit& o) const {
    return support == o.support && weight == o.weight && hyperplane == o.hyperplane &&
           cotype == o.cotype;
  }
};

// All cocircuits, each once, in lexicographic support order. Desk scale:
// materializes all projective row-space supports and sieves out the
// non-minimal ones. Throws on rank 0.
std::vector<Cocircuit> cocircuits(const WeightedMatroid& m);

struct CogirthResult {
  std::int64_t value = 0;
  Cocircuit witness;  // lexicographically least minimum-weight cocircuit
};

// Weighted cogirth by streaming the row-space supports. Throws on rank 0.
CogirthResult weighted_cogirth(const WeightedMatroid& m, int threads = 0);

// Independent verification path: enumerate the rank-(r-1) flats as closures
// of (r-1)-subsets of parallel-class representatives and minimize the weight
// of their complements. Shares no code with the row-space scan.
// Caps: n <= 14 representatives, rank <= 6.
std::int64_t cogirth_oracle(const WeightedMatroid& m);

// Tag each cocircuit as type one (its ambient hyperplane contains the
// embedding's complement) or type two. If the complement is not a flat, all
// cocircuits come back untyped.
std::vector<Cocircuit> classify_cocircuits(const WeightedMatroid& m, const Embedding& emb);

}  // namespace cogirth
