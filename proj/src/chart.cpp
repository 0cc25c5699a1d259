#include "braidcover/chart.hpp"

namespace braidcover {

Chart::Chart(DissectionSkeleton skel) : skel_(std::move(skel)), map_(skel_) {
  {
    auto rep = validate_skeleton(skel_);
    if (!rep.valid()) throw domain_error("chart skeleton invalid: " + rep.violations.front());
  }
  const int D = map_.dart_count();
  face_of_.assign(D, -1);
  dart_pos_.assign(D, -1);
  fan_pos_.assign(D, -1);

  std::vector<char> seen(D, 0);
  for (int d0 = 0; d0 < D; ++d0) {
    if (seen[d0]) continue;
    std::vector<int> orbit;
    bool outer = true;
    int d = d0;
    do {
      seen[d] = 1;
      orbit.push_back(d);
      if (map_.is_arc_dart(d) || (d & 1) == 0) outer = false;
      d = map_.next_in_face(d);
    } while (d != d0);
    if (outer) continue;
    const int f = static_cast<int>(face_darts_.size());
    for (size_t t = 0; t < orbit.size(); ++t) {
      face_of_[orbit[t]] = f;
      dart_pos_[orbit[t]] = 2 * static_cast<int>(t);
    }
    face_darts_.push_back(std::move(orbit));
  }

  for (int a = 0; a < map_.n_arcs(); ++a)
    if (face_of_[2 * a] == face_of_[2 * a + 1])
      throw domain_error("chart arc bounds the same face twice (unsupported chart)");

  corner_base_.assign(map_.m_points() + 1, 0);
  for (int v = 0; v < map_.m_points(); ++v) corner_base_[v + 1] = corner_base_[v] + corner_count(v);
  corner_face_.assign(total_corners(), -1);
  corner_pos_.assign(total_corners(), -1);

  for (int v = 0; v < map_.m_points(); ++v) {
    const auto& fan = map_.fan_darts(v);
    for (int k = 0; k < static_cast<int>(fan.size()); ++k) fan_pos_[fan[k]] = k + 1;
    // face of corner j is the face of rotation entry j+1 (a dart based at v)
    for (int j = 0; j <= static_cast<int>(fan.size()); ++j) {
      const int entry_above = rotation_entry(v, j + 1);
      corner_face_[corner_id({v, j})] = face_of_[entry_above];
    }
  }

  // polygon positions of corners: the corner between consecutive polygon
  // darts d_t, d_{t+1} lives at the head of d_t and has rotation index equal
  // to the rotation position of alpha(d_t)
  for (int f = 0; f < static_cast<int>(face_darts_.size()); ++f) {
    const auto& darts = face_darts_[f];
    for (size_t t = 0; t < darts.size(); ++t) {
      const int d = darts[t];
      const int v = map_.head_vertex(d);
      const int a = CombMap::alpha(d);
      int j;
      if (a == map_.tau_out(v))
        j = 0;
      else if (a == map_.tau_back(v))
        throw domain_error("interior face wraps through the boundary");
      else
        j = fan_pos_[a];
      const int cid = corner_id({v, j});
      if (corner_face_[cid] != f) throw domain_error("corner/face table mismatch");
      corner_pos_[cid] = 2 * static_cast<int>(t) + 1;
    }
  }
}

Chart Chart::standard(const MarkedSurface& surface) {
  return Chart(skeleton_from_hurwitz(standard_system(surface)));
}

int Chart::rotation_entry(int v, int j) const {
  const auto& fan = map_.fan_darts(v);
  const int K = static_cast<int>(fan.size());
  if (j == 0) return map_.tau_out(v);
  if (j == K + 1) return map_.tau_back(v);
  return fan[j - 1];
}

int Chart::delim_below(Corner c) const {
  return c.idx == 0 ? -1 : rotation_entry(c.point, c.idx);
}

int Chart::delim_above(Corner c) const {
  const int K = corner_count(c.point) - 1;
  return c.idx == K ? -1 : rotation_entry(c.point, c.idx + 1);
}

Corner Chart::corner_before(int dart) const {
  // polygon corner preceding edge occurrence `dart`: at base(dart), one
  // rotation step below the dart
  const int v = map_.base_vertex(dart);
  return Corner{v, fan_pos_[dart] - 1};
}

Corner Chart::corner_after(int dart) const {
  const int v = map_.head_vertex(dart);
  return Corner{v, fan_pos_[CombMap::alpha(dart)]};
}

DeckInvolution make_deck_involution(const Chart& chart) {
  const auto& skel = chart.skeleton();
  if (chart.m_points() != 2) throw domain_error("deck involution needs a two-sheeted chart");
  for (const auto& e : skel.arc_ends)
    if (!((e[0] == 1 && e[1] == 2) || (e[0] == 2 && e[1] == 1)))
      throw domain_error("deck involution needs every arc to join the two points");
  const auto& map = chart.map();
  DeckInvolution iota;
  iota.dart_map.assign(map.dart_count(), -1);
  for (int a = 0; a < map.n_arcs(); ++a) {
    iota.dart_map[2 * a] = 2 * a + 1;
    iota.dart_map[2 * a + 1] = 2 * a;
  }
  // segment darts: swap the segment based at point 1 with the one based at
  // point 2, matching dart parity (the involution is orientation preserving)
  const int s_at_1 = map.tau_back(0) / 2;
  const int s_at_2 = map.tau_back(1) / 2;
  iota.dart_map[2 * s_at_1] = 2 * s_at_2;
  iota.dart_map[2 * s_at_2] = 2 * s_at_1;
  iota.dart_map[2 * s_at_1 + 1] = 2 * s_at_2 + 1;
  iota.dart_map[2 * s_at_2 + 1] = 2 * s_at_1 + 1;
  // must be a chart automorphism
  for (int d = 0; d < map.dart_count(); ++d) {
    const int md = iota.dart_map[d];
    if (md < 0) throw domain_error("deck involution: unmapped dart");
    if (iota.dart_map[CombMap::alpha(d)] != CombMap::alpha(md))
      throw domain_error("deck involution does not commute with edge reversal");
    if (iota.dart_map[map.rotation_next(d)] != map.rotation_next(md))
      throw domain_error("deck involution does not preserve rotations");
    if (iota.dart_map[iota.dart_map[d]] != d) throw domain_error("deck involution is not an involution");
  }
  return iota;
}

}  // namespace braidcover
