#ifndef BRAIDCOVER_CHART_HPP
#define BRAIDCOVER_CHART_HPP

#include <memory>
#include <vector>

#include "braidcover/surface.hpp"

namespace braidcover {

// A corner is an angular sector at a marked point, indexed in rotation order:
// corner j at point v sits between rotation entries j and j+1, where entry 0
// is tau_out, entries 1..K are the fan darts and entry K+1 is tau_back.
struct Corner {
  int point = 0;  // 0-based
  int idx = 0;
  bool operator==(const Corner&) const = default;
  auto operator<=>(const Corner&) const = default;
};

// A valid reference dissection with precomputed face polygons and corner
// tables.  Every arc must separate two distinct faces; the charts built by
// standard() always do.
//
// Face polygons are stored in orbit order.  Position keys: the t-th dart of
// a polygon sits at position 2t, the corner following it at 2t+1.
class Chart {
public:
  explicit Chart(DissectionSkeleton skel);
  static Chart standard(const MarkedSurface& surface);

  const DissectionSkeleton& skeleton() const { return skel_; }
  const CombMap& map() const { return map_; }
  int n_arcs() const { return map_.n_arcs(); }
  int m_points() const { return map_.m_points(); }

  int face_of(int dart) const { return face_of_[dart]; }  // -1 for outer orbits
  int face_size(int f) const { return static_cast<int>(face_darts_[f].size()); }
  const std::vector<int>& face_darts(int f) const { return face_darts_[f]; }

  int corner_count(int v) const { return static_cast<int>(map_.fan_darts(v).size()) + 1; }
  int corner_face(Corner c) const { return corner_face_[corner_id(c)]; }

  // rotation entry j at v: 0 = tau_out, 1..K fan darts, K+1 = tau_back
  int rotation_entry(int v, int j) const;
  // delimiters of corner (v,j): entries j and j+1; -1 when the delimiter is a
  // boundary direction
  int delim_below(Corner c) const;
  int delim_above(Corner c) const;

  // cyclic polygon positions (see above); both darts and corners
  int poly_pos_of_dart(int dart) const { return dart_pos_[dart]; }
  int poly_pos_of_corner(Corner c) const { return corner_pos_[corner_id(c)]; }

  // corners flanking an arc-dart occurrence d in face_of(d): the corner just
  // before d in the polygon and the one just after
  Corner corner_before(int dart) const;
  Corner corner_after(int dart) const;

  // rotation position of an arc-end dart at its base vertex (1..K)
  int fan_position(int dart) const { return fan_pos_[dart]; }

  int corner_id(Corner c) const { return corner_base_[c.point] + c.idx; }
  int total_corners() const { return corner_base_[map_.m_points()]; }

private:
  DissectionSkeleton skel_;
  CombMap map_;
  std::vector<int> face_of_;                  // dart -> interior face id or -1
  std::vector<std::vector<int>> face_darts_;  // interior faces only
  std::vector<int> dart_pos_;
  std::vector<int> corner_base_;              // per vertex, prefix sums; size m+1
  std::vector<int> corner_face_;
  std::vector<int> corner_pos_;
  std::vector<int> fan_pos_;                  // arc-end dart -> rotation index
};

using ChartPtr = std::shared_ptr<const Chart>;

// Sheet exchange of the double cover charts (m = 2, every tau_i = (1 2)).
// Maps each reference arc to itself with flipped orientation and swaps the
// two marked points; corners map index-preservingly.
struct DeckInvolution {
  std::vector<int> dart_map;
  int point_map(int v) const { return 1 - v; }
};

DeckInvolution make_deck_involution(const Chart& chart);

}  // namespace braidcover

#endif
