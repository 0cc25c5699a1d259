#include "braidcover/arcword.hpp"

#include <algorithm>

#include "braidcover/arrange.hpp"

namespace braidcover {

bool composable(const Chart& chart, const CrossingWord& w) {
  auto corner_ok = [&](Corner c) {
    return c.point >= 0 && c.point < chart.m_points() && c.idx >= 0 &&
           c.idx < chart.corner_count(c.point);
  };
  if (!corner_ok(w.start) || !corner_ok(w.end)) return false;
  int face = chart.corner_face(w.start);
  for (int d : w.letters) {
    if (d < 0 || d >= 2 * chart.n_arcs()) return false;  // only arc crossings
    if (chart.face_of(d) != face) return false;
    face = chart.face_of(CombMap::alpha(d));
  }
  return face == chart.corner_face(w.end);
}

CrossingWord reversed(const Chart&, const CrossingWord& w) {
  CrossingWord r;
  r.start = w.end;
  r.end = w.start;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(CombMap::alpha(*it));
  return r;
}

CrossingWord reduce(const Chart& chart, CrossingWord w) {
  if (!composable(chart, w)) throw domain_error("word is not composable");
  bool changed = true;
  while (changed) {
    changed = false;
    // cancel adjacent back-and-forth crossings
    std::vector<int> out;
    out.reserve(w.letters.size());
    for (int d : w.letters) {
      if (!out.empty() && out.back() == CombMap::alpha(d)) {
        out.pop_back();
        changed = true;
      } else {
        out.push_back(d);
      }
    }
    w.letters = std::move(out);
    // slide the first crossing off an arc end at the start corner
    if (!w.letters.empty()) {
      const int below = chart.delim_below(w.start);
      const int above = chart.delim_above(w.start);
      if (below != -1 && w.letters.front() == CombMap::alpha(below)) {
        w.letters.erase(w.letters.begin());
        w.start.idx -= 1;
        changed = true;
      } else if (above != -1 && w.letters.front() == above) {
        w.letters.erase(w.letters.begin());
        w.start.idx += 1;
        changed = true;
      }
    }
    // and off the end corner
    if (!w.letters.empty()) {
      const int below = chart.delim_below(w.end);
      const int above = chart.delim_above(w.end);
      if (below != -1 && w.letters.back() == below) {
        w.letters.pop_back();
        w.end.idx -= 1;
        changed = true;
      } else if (above != -1 && w.letters.back() == CombMap::alpha(above)) {
        w.letters.pop_back();
        w.end.idx += 1;
        changed = true;
      }
    }
  }
  return w;
}

std::string word_key(const CrossingWord& w) {
  std::string s;
  s += std::to_string(w.start.point) + "." + std::to_string(w.start.idx) + "|";
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w.letters[i]);
  }
  s += "|" + std::to_string(w.end.point) + "." + std::to_string(w.end.idx);
  return s;
}

namespace {

// If `w` is an empty word whose corners flank a single arc-side occurrence,
// returns the word pushed across that arc.
std::optional<CrossingWord> pushed_realization(const Chart& chart, const CrossingWord& w) {
  if (!w.letters.empty()) return std::nullopt;
  const int f = chart.corner_face(w.start);
  for (int d : chart.face_darts(f)) {
    if (!chart.map().is_arc_dart(d)) continue;
    const Corner before = chart.corner_before(d);
    const Corner after = chart.corner_after(d);
    CrossingWord alt;
    const int a = CombMap::alpha(d);
    if (w.start == before && w.end == after) {
      alt.start = chart.corner_after(a);
      alt.end = chart.corner_before(a);
      return alt;
    }
    if (w.start == after && w.end == before) {
      alt.start = chart.corner_before(a);
      alt.end = chart.corner_after(a);
      return alt;
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<CrossingWord> realizations(const Chart& chart, const ArcClass& cls) {
  std::vector<CrossingWord> out{cls.word()};
  if (auto alt = pushed_realization(chart, cls.word())) out.push_back(*alt);
  return out;
}

ArcClass ArcClass::make(const Chart& chart, CrossingWord w) {
  w = reduce(chart, w);
  if (w.letters.empty() && w.start == w.end)
    throw domain_error("word collapses to a point (not an arc)");
  std::vector<CrossingWord> candidates{w, reversed(chart, w)};
  if (auto alt = pushed_realization(chart, w)) {
    candidates.push_back(*alt);
    candidates.push_back(reversed(chart, *alt));
  }
  ArcClass cls;
  cls.word_ = candidates.front();
  cls.key_ = word_key(candidates.front());
  for (size_t i = 1; i < candidates.size(); ++i) {
    std::string k = word_key(candidates[i]);
    if (k < cls.key_) {
      cls.key_ = std::move(k);
      cls.word_ = candidates[i];
    }
  }
  return cls;
}

std::pair<int, int> ArcClass::endpoints() const {
  int a = word_.start.point + 1, b = word_.end.point + 1;
  return {std::min(a, b), std::max(a, b)};
}

ArcClass reference_arc_class(const Chart& chart, int arc) {
  CrossingWord w;
  const int d = 2 * arc;
  w.start = chart.corner_before(d);
  w.end = chart.corner_after(d);
  return ArcClass::make(chart, w);
}

ArcClass deck_image(const Chart& chart, const DeckInvolution& iota, const ArcClass& cls) {
  CrossingWord w = cls.word();
  w.start.point = iota.point_map(w.start.point);
  w.end.point = iota.point_map(w.end.point);
  for (int& d : w.letters) d = iota.dart_map[d];
  return ArcClass::make(chart, w);
}

EndpointSharing shares_endpoint(const Chart& chart, const ArcClass& a, const ArcClass& b) {
  if (a == b) throw domain_error("shares_endpoint needs two distinct arcs");
  if (a.is_loop() || b.is_loop()) throw domain_error("shares_endpoint expects non-loop arcs");
  PairGeometry geo = pair_geometry(chart, a, b);
  if (!geo.realizable)
    throw domain_error("arcs are not disjointly realizable: " + geo.violation);
  EndpointSharing out;
  out.count = static_cast<int>(geo.shared_points.size());
  for (const auto& sp : geo.shared_points)
    out.points.push_back({sp.point, sp.first_precedes_ccw});
  return out;
}

}  // namespace braidcover
