#ifndef BRAIDCOVER_SURFACE_HPP
#define BRAIDCOVER_SURFACE_HPP

#include <array>
#include <string>
#include <vector>

#include "braidcover/hurwitz.hpp"

namespace braidcover {

// Compact oriented surface with boundary and marked points on the boundary.
// Equality is by genus and the multiset of per-component mark counts.
struct MarkedSurface {
  int genus = 0;
  std::vector<int> boundary_marks;  // one entry >= 1 per boundary component

  int b() const { return static_cast<int>(boundary_marks.size()); }
  int m() const;
  int expected_arcs() const { return m() + b() + 2 * genus - 2; }
  bool same_surface(const MarkedSurface& o) const;
  std::string str() const;
};

struct ArcEndRef {
  int arc = 0;  // 0-based arc index
  int end = 0;  // 0 or 1
  bool operator==(const ArcEndRef&) const = default;
};

// Ribbon structure of an ordered arc system.
//
// Orientation conventions, used consistently everywhere:
//  * bcycles lists each boundary component's marked points in the direction
//    in which the dissection order condition reads fans as increasing
//    ("ccw" below); for a skeleton induced by a Hurwitz system this direction
//    is x -> product(x).
//  * fans[v] lists the arc-ends at point v in internal rotation order, which
//    is the REVERSE of ccw.  Files store fans in ccw order; the reader flips.
//  * The order condition therefore requires arc indices to strictly DECREASE
//    along fans[v].
struct DissectionSkeleton {
  int genus = 0;
  std::vector<std::vector<int>> bcycles;        // marked point labels (1-based)
  std::vector<std::array<int, 2>> arc_ends;     // arc -> its two endpoint labels
  std::vector<std::vector<ArcEndRef>> fans;     // per point (index label-1), rotation order

  int n_arcs() const { return static_cast<int>(arc_ends.size()); }
  int m_points() const;
  MarkedSurface surface() const;
};

// Combinatorial map of a skeleton.  Darts are 2*edge+side; edges [0,n) are
// arcs, [n, n+m) boundary segments.  Arc dart 2i is based at arc_ends[i][0].
// Segment s runs from bcycles[c][t] to the next point in storage order; its
// even dart is based at the start point.
//
// Rotation at a vertex is the full cyclic dart order
//   (tau_out, fan..., tau_back)
// where tau_out points along the boundary toward the storage-previous point
// and tau_back toward the storage-next point.  Faces are the orbits of
// next(d) = rotation_next(alpha(d)); each boundary component contributes one
// outer orbit consisting of its odd segment darts.
class CombMap {
public:
  explicit CombMap(const DissectionSkeleton& skel);

  int n_arcs() const { return n_; }
  int m_points() const { return m_; }
  int dart_count() const { return static_cast<int>(dart_base_.size()); }

  static int alpha(int d) { return d ^ 1; }
  int edge_of(int d) const { return d / 2; }
  bool is_arc_dart(int d) const { return d / 2 < n_; }
  int arc_of(int d) const { return d / 2; }
  int base_vertex(int d) const { return dart_base_[d]; }   // 0-based point
  int head_vertex(int d) const { return dart_base_[alpha(d)]; }
  int rotation_next(int d) const { return rot_next_[d]; }
  int next_in_face(int d) const { return rot_next_[alpha(d)]; }

  int tau_out(int v) const { return tau_out_[v]; }
  int tau_back(int v) const { return tau_back_[v]; }
  const std::vector<int>& fan_darts(int v) const { return fan_darts_[v]; }

private:
  int n_ = 0, m_ = 0;
  std::vector<int> dart_base_;
  std::vector<int> rot_next_;
  std::vector<int> tau_out_, tau_back_;
  std::vector<std::vector<int>> fan_darts_;  // rotation order, arc-end darts only
};

struct Face {
  std::vector<int> darts;  // cyclic, in traversal order
  int boundary_edges = 0;  // segment darts contained
  bool outer = false;
};

// Walks every face orbit.  Throws domain_error on structurally inconsistent
// input (an arc-end missing from its fan, bad labels, ...).
std::vector<Face> face_traversal(const DissectionSkeleton& skel);

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate_skeleton(const DissectionSkeleton& skel);

// tau_i = transposition of arc i's endpoints.  Requires distinct endpoints.
HurwitzSystem hurwitz_of(const DissectionSkeleton& skel);

// Boundary components from the cycles of product(h), genus from
// n = m + b + 2g - 2.
MarkedSurface surface_from_hurwitz(const HurwitzSystem& h);

// surface_from_hurwitz(hurwitz_of(skel)) equals the declared surface.
bool roundtrip_check(const DissectionSkeleton& skel);

// Cut-and-glue skeleton of a Hurwitz system: arc i joins the two labels of
// tau_i, fans hold the incident arcs in decreasing index order (rotation
// order), boundary cycles follow the product permutation.
DissectionSkeleton skeleton_from_hurwitz(const HurwitzSystem& h);

// Deterministic generating tuple realizing the signature: per-component
// cycle factorizations, a doubled bridge transposition between consecutive
// components, and g doubled (1 2) pairs.
HurwitzSystem standard_system(const MarkedSurface& surface);

}  // namespace braidcover

#endif
