#ifndef BRAIDCOVER_QUIVER_HPP
#define BRAIDCOVER_QUIVER_HPP

#include <map>
#include <string>
#include <vector>

#include "braidcover/mutation.hpp"

namespace braidcover {

// Elementary boundary paths between ccw-consecutive arc ends at a marked
// point, oriented so that the surface interior stays on the right.
struct Arrow {
  int source = 0, target = 0;  // arc indices (0-based)
  int point = 0;               // marked point (0-based)
  int pos = 0;                 // ccw position of the source end in the fan
  ArcEndRef source_end, target_end;
  int degree = 0;
  std::string name;
};

// Integer degrees for the arrows of one skeleton, keyed by (point, ccw pos).
struct GradingData {
  std::map<std::pair<int, int>, int> degrees;
  int degree_of(int point, int pos) const {
    auto it = degrees.find({point, pos});
    return it == degrees.end() ? 0 : it->second;
  }
  bool empty() const { return degrees.empty(); }
};

struct GradedQuiver {
  int vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::pair<int, int>> relations;  // arrow index pairs (a then b) that compose to zero
};

GradedQuiver quiver_of(const DissectionSkeleton& skel, const GradingData& grading);
GradedQuiver quiver_of(const Dissection& d, const GradingData& grading);

struct HomDim {
  bool infinite = false;
  int total = 0;
  std::map<int, int> by_degree;
};

// Graded dimension of Hom(arc i, arc j) by boundary-path counting; the self
// case adds the identity.  i, j are 0-based.
HomDim hom_dim(const DissectionSkeleton& skel, const GradingData& grading, int i, int j);
HomDim hom_dim(const Dissection& d, int i, int j);

struct ExceptionalCheck {
  bool ok = false;
  std::string first_violation;
};

// Embedded, pairwise interior-disjoint, no backward boundary paths, full.
ExceptionalCheck is_exceptional_sequence(const Chart& chart, const std::vector<ArcClass>& arcs);

inline bool index_symmetry_check(int idx1, int idx2) { return idx1 + idx2 == 1; }

// Degree data for the mutated skeleton: stable arrows are copied, arrows
// merged across a removed end add up, and the path connecting the mutated
// arc to its partner gets the negated degree of the smoothing path.
GradingData transport_grading(const Dissection& before, const GradingData& grading, int signed_gen,
                              const Dissection& after);

std::string quiver_dot(const GradedQuiver& q);
std::string quiver_text(const GradedQuiver& q);

}  // namespace braidcover

#endif
