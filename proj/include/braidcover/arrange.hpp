#ifndef BRAIDCOVER_ARRANGE_HPP
#define BRAIDCOVER_ARRANGE_HPP

#include <string>
#include <vector>

#include "braidcover/arcword.hpp"

namespace braidcover {

// Simultaneous normal-position realization of a family of reduced words:
// orders the crossings along every reference arc, derives the fan order of
// the word ends at every marked point, and checks that all strands can be
// drawn pairwise disjoint (away from shared endpoints).
struct Arrangement {
  bool ok = false;
  std::string violation;                 // first geometric obstruction
  DissectionSkeleton skeleton;           // derived skeleton (ambient from chart)
};

Arrangement arrange(const Chart& chart, const std::vector<CrossingWord>& words);

bool embedded(const Chart& chart, const ArcClass& cls);

struct PairGeometry {
  bool realizable = false;
  std::string violation;
  struct Shared {
    int point = 0;
    bool first_precedes_ccw = false;
  };
  std::vector<Shared> shared_points;
};

// Geometry of a pair of distinct non-loop classes: disjoint realizability
// plus ccw precedence at each shared endpoint.
PairGeometry pair_geometry(const Chart& chart, const ArcClass& a, const ArcClass& b);

struct DissectionValidation {
  std::vector<std::string> violations;
  DissectionSkeleton skeleton;
  bool skeleton_ok = false;
  bool valid() const { return violations.empty(); }
};

// Full dissection validity of an ordered family of classes: embeddedness,
// pairwise disjointness, the derived skeleton and all its conditions.
DissectionValidation validate_words(const Chart& chart, const std::vector<ArcClass>& arcs);

}  // namespace braidcover

#endif
