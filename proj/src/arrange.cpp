#include "braidcover/arrange.hpp"

#include <algorithm>
#include <map>

namespace braidcover {

namespace {

struct forced_crossing : std::runtime_error {
  explicit forced_crossing(const std::string& m) : std::runtime_error(m) {}
};

// A ray walks away from an event of a word, face by face.  dir=+1 walks
// toward the end of the word, dir=-1 toward the start; `next` is the index
// of the next letter to be crossed.
struct Ray {
  const CrossingWord* w = nullptr;
  int next = 0;
  int dir = +1;
};

struct Exit {
  bool at_corner = false;
  int dart = -1;     // edge occurrence in the current face
  Corner corner{};   // when at_corner
};

Exit ray_exit(const Ray& r) {
  Exit e;
  const int len = static_cast<int>(r.w->letters.size());
  if (r.dir > 0) {
    if (r.next < len)
      e.dart = r.w->letters[r.next];
    else {
      e.at_corner = true;
      e.corner = r.w->end;
    }
  } else {
    if (r.next >= 0)
      e.dart = CombMap::alpha(r.w->letters[r.next]);
    else {
      e.at_corner = true;
      e.corner = r.w->start;
    }
  }
  return e;
}

void ray_advance(Ray& r) { r.next += r.dir; }

enum class Order { First, Second, Tie };

// Compares two parallel rays that currently share a face, entered at
// `entry_pos` (polygon position of the shared entry dart or corner).
// Returns which ray comes first along the entry entity's traversal
// direction; for a corner entry, "first" means first in rotation order.
// Both follow the same rule: at the divergence face the ray exiting at the
// larger cyclic offset from the entry is the earlier one.
Order compare_rays(const Chart& chart, Ray x, Ray y, int face, int entry_pos) {
  for (;;) {
    const Exit ex = ray_exit(x);
    const Exit ey = ray_exit(y);
    if (ex.at_corner && ey.at_corner && ex.corner == ey.corner) return Order::Tie;
    if (!ex.at_corner && !ey.at_corner && ex.dart == ey.dart) {
      const int gate = ex.dart;
      if (chart.face_of(gate) != face) throw domain_error("ray left its face");
      const int land = CombMap::alpha(gate);
      face = chart.face_of(land);
      entry_pos = chart.poly_pos_of_dart(land);
      ray_advance(x);
      ray_advance(y);
      continue;
    }
    const int cycle = 2 * chart.face_size(face);
    auto pos_of = [&](const Exit& e) {
      return e.at_corner ? chart.poly_pos_of_corner(e.corner) : chart.poly_pos_of_dart(e.dart);
    };
    const int cx = ((pos_of(ex) - entry_pos) % cycle + cycle) % cycle;
    const int cy = ((pos_of(ey) - entry_pos) % cycle + cycle) % cycle;
    if (cx == 0 || cy == 0 || cx == cy) throw domain_error("degenerate ray divergence");
    return cx > cy ? Order::First : Order::Second;
  }
}

struct CrossingId {
  int word = 0;
  int idx = 0;
  bool operator==(const CrossingId&) const = default;
};

// Order of two distinct crossings along their common reference arc,
// measured from the arc's first endpoint.  Walks both sides; opposite
// verdicts mean the strands cannot be drawn disjoint.
Order compare_crossings(const Chart& chart, const std::vector<CrossingWord>& words, int arc,
                        CrossingId a, CrossingId b) {
  auto side_ray = [&](CrossingId c, int side_dart) {
    const auto& w = words[c.word];
    Ray r;
    r.w = &w;
    if (w.letters[c.idx] == side_dart) {  // from-face of the letter is this side
      r.next = c.idx - 1;
      r.dir = -1;
    } else {
      r.next = c.idx + 1;
      r.dir = +1;
    }
    return r;
  };
  auto run_side = [&](int side_dart) {
    return compare_rays(chart, side_ray(a, side_dart), side_ray(b, side_dart),
                        chart.face_of(side_dart), chart.poly_pos_of_dart(side_dart));
  };
  const Order oa = run_side(2 * arc);
  Order ob = run_side(2 * arc + 1);
  if (ob != Order::Tie) ob = (ob == Order::First) ? Order::Second : Order::First;  // flip to arc direction
  if (oa == Order::Tie && ob == Order::Tie)
    throw domain_error("indistinguishable strands (duplicate arcs must be rejected first)");
  if (oa == Order::Tie) return ob;
  if (ob == Order::Tie) return oa;
  if (oa != ob) throw forced_crossing("strands of words " + std::to_string(a.word + 1) + " and " +
                                      std::to_string(b.word + 1) + " must cross over reference arc " +
                                      std::to_string(arc + 1));
  return oa;
}

struct EndRef {
  int word = 0;
  int which = 0;  // 0 start, 1 end
};

Ray end_ray(const std::vector<CrossingWord>& words, EndRef e) {
  const auto& w = words[e.word];
  Ray r;
  r.w = &w;
  if (e.which == 0) {
    r.next = 0;
    r.dir = +1;
  } else {
    r.next = static_cast<int>(w.letters.size()) - 1;
    r.dir = -1;
  }
  return r;
}

Corner end_corner(const std::vector<CrossingWord>& words, EndRef e) {
  return e.which == 0 ? words[e.word].start : words[e.word].end;
}

struct Builder {
  const Chart& chart;
  const std::vector<CrossingWord>& words;

  std::vector<std::vector<CrossingId>> along_arc;     // sorted along each arc
  std::vector<std::vector<int>> rank;                 // word,idx -> rank on its arc

  explicit Builder(const Chart& c, const std::vector<CrossingWord>& ws) : chart(c), words(ws) {
    along_arc.assign(chart.n_arcs(), {});
    rank.resize(words.size());
    for (size_t w = 0; w < words.size(); ++w) {
      if (!composable(chart, words[w])) throw domain_error("non-composable word in arrangement");
      rank[w].assign(words[w].letters.size(), -1);
      for (size_t i = 0; i < words[w].letters.size(); ++i)
        along_arc[chart.map().arc_of(words[w].letters[i])].push_back(
            {static_cast<int>(w), static_cast<int>(i)});
    }
    for (int r = 0; r < chart.n_arcs(); ++r) {
      auto& v = along_arc[r];
      std::sort(v.begin(), v.end(), [&](CrossingId a, CrossingId b) {
        if (a == b) return false;
        return compare_crossings(chart, words, r, a, b) == Order::First;
      });
      // re-verify pairwise (catches comparator inconsistency on bad input)
      for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
          if (compare_crossings(chart, words, r, v[i], v[j]) != Order::First)
            throw forced_crossing("inconsistent crossing order along reference arc " +
                                  std::to_string(r + 1));
      for (size_t i = 0; i < v.size(); ++i) rank[v[i].word][v[i].idx] = static_cast<int>(i);
    }
  }

  // rotation-order comparison of two word ends at a common corner
  bool end_sigma_before(EndRef a, EndRef b) {
    const Corner c = end_corner(words, a);
    const Order o = compare_rays(chart, end_ray(words, a), end_ray(words, b),
                                 chart.corner_face(c), chart.poly_pos_of_corner(c));
    if (o == Order::Tie) throw domain_error("indistinguishable word ends at a corner");
    return o == Order::First;
  }

  // fan of word ends at point v in rotation order
  std::vector<EndRef> fan_at(int v) {
    std::vector<EndRef> ends;
    for (size_t w = 0; w < words.size(); ++w) {
      if (words[w].start.point == v) ends.push_back({static_cast<int>(w), 0});
      if (words[w].end.point == v) ends.push_back({static_cast<int>(w), 1});
    }
    std::sort(ends.begin(), ends.end(), [&](EndRef a, EndRef b) {
      const Corner ca = end_corner(words, a), cb = end_corner(words, b);
      if (ca.idx != cb.idx) return ca.idx < cb.idx;
      return end_sigma_before(a, b);
    });
    return ends;
  }

  // Every strand through a face is a chord between two boundary points of
  // the face polygon; chords of disjoint arcs may not interleave.
  void check_faces() {
    struct Event {
      long key = 0;
      int word = 0, seg = 0;  // segment id within the word
    };
    std::map<int, std::vector<Event>> by_face;
    auto edge_key = [&](int occurrence, CrossingId c) {
      const int r = chart.map().arc_of(occurrence);
      const int K = static_cast<int>(along_arc[r].size());
      int rk = rank[c.word][c.idx];
      if (occurrence != 2 * r) rk = K - 1 - rk;  // traversal of the other dart
      return static_cast<long>(chart.poly_pos_of_dart(occurrence)) * 1000000L + rk + 1;
    };
    // within-corner ranks, per corner, in rotation order
    std::map<std::pair<int, int>, std::vector<EndRef>> corner_ends;
    for (size_t w = 0; w < words.size(); ++w) {
      corner_ends[{words[w].start.point, words[w].start.idx}].push_back({static_cast<int>(w), 0});
      corner_ends[{words[w].end.point, words[w].end.idx}].push_back({static_cast<int>(w), 1});
    }
    std::map<std::pair<int, int>, int> corner_rank;  // (word, which) -> rank
    for (auto& [key, ends] : corner_ends) {
      std::sort(ends.begin(), ends.end(),
                [&](EndRef a, EndRef b) { return end_sigma_before(a, b); });
      for (size_t i = 0; i < ends.size(); ++i)
        corner_rank[{ends[i].word, ends[i].which}] = static_cast<int>(i);
    }
    auto corner_key = [&](Corner c, EndRef e) {
      const int rk = corner_rank.at({e.word, e.which});
      return static_cast<long>(chart.poly_pos_of_corner(c)) * 1000000L + rk + 1;
    };

    for (size_t w = 0; w < words.size(); ++w) {
      const auto& wd = words[w];
      const int segs = static_cast<int>(wd.letters.size()) + 1;
      for (int s = 0; s < segs; ++s) {
        // segment s runs from event s-1 to event s (events: crossings)
        int face;
        long kin, kout;
        if (s == 0) {
          face = chart.corner_face(wd.start);
          kin = corner_key(wd.start, {static_cast<int>(w), 0});
        } else {
          const int d = wd.letters[s - 1];
          face = chart.face_of(CombMap::alpha(d));
          kin = edge_key(CombMap::alpha(d), {static_cast<int>(w), s - 1});
        }
        if (s == segs - 1) {
          kout = corner_key(wd.end, {static_cast<int>(w), 1});
        } else {
          const int d = wd.letters[s];
          kout = edge_key(d, {static_cast<int>(w), s});
        }
        by_face[face].push_back({kin, static_cast<int>(w), s});
        by_face[face].push_back({kout, static_cast<int>(w), s});
      }
    }
    for (auto& [face, events] : by_face) {
      std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.key < b.key; });
      const int N = static_cast<int>(events.size());
      std::map<std::pair<int, int>, std::pair<int, int>> span;  // (word,seg) -> circular index pair
      for (int i = 0; i < N; ++i) {
        auto key = std::make_pair(events[i].word, events[i].seg);
        if (!span.count(key))
          span[key] = {i, -1};
        else
          span[key].second = i;
      }
      std::vector<std::pair<int, int>> chords;
      for (auto& [k, v] : span) {
        if (v.second < 0) throw domain_error("unpaired strand event");
        chords.push_back(v);
      }
      for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
          auto [a1, b1] = chords[i];
          auto [a2, b2] = chords[j];
          const bool in1 = (a2 > a1 && a2 < b1);
          const bool in2 = (b2 > a1 && b2 < b1);
          if (in1 != in2)
            throw forced_crossing("strands interleave inside a face");
        }
    }
  }

  DissectionSkeleton skeleton() {
    DissectionSkeleton skel;
    skel.genus = chart.skeleton().genus;
    skel.bcycles = chart.skeleton().bcycles;
    for (const auto& w : words) skel.arc_ends.push_back({w.start.point + 1, w.end.point + 1});
    skel.fans.assign(chart.m_points(), {});
    for (int v = 0; v < chart.m_points(); ++v)
      for (const EndRef& e : fan_at(v)) skel.fans[v].push_back({e.word, e.which});
    return skel;
  }
};

}  // namespace

Arrangement arrange(const Chart& chart, const std::vector<CrossingWord>& words) {
  Arrangement out;
  try {
    Builder b(chart, words);
    b.check_faces();
    out.skeleton = b.skeleton();
    out.ok = true;
  } catch (const forced_crossing& e) {
    out.violation = e.what();
  }
  return out;
}

bool embedded(const Chart& chart, const ArcClass& cls) {
  return arrange(chart, {cls.word()}).ok;
}

PairGeometry pair_geometry(const Chart& chart, const ArcClass& a, const ArcClass& b) {
  PairGeometry out;
  Arrangement arr = arrange(chart, {a.word(), b.word()});
  if (!arr.ok) {
    out.violation = arr.violation;
    return out;
  }
  out.realizable = true;
  for (int v = 0; v < chart.m_points(); ++v) {
    int pos_a = -1, pos_b = -1;
    const auto& fan = arr.skeleton.fans[v];
    for (size_t k = 0; k < fan.size(); ++k) {
      if (fan[k].arc == 0) pos_a = static_cast<int>(k);
      if (fan[k].arc == 1) pos_b = static_cast<int>(k);
    }
    if (pos_a >= 0 && pos_b >= 0)
      // ccw order is the reverse of rotation order
      out.shared_points.push_back({v, pos_a > pos_b});
  }
  return out;
}

DissectionValidation validate_words(const Chart& chart, const std::vector<ArcClass>& arcs) {
  DissectionValidation out;
  for (size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].is_loop())
      out.violations.push_back("loop: arc " + std::to_string(i + 1) + " has equal endpoints");
    for (size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs[i] == arcs[j])
        out.violations.push_back("duplicate: arcs " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1) + " are isotopic");
  }
  if (!out.violations.empty()) return out;
  std::vector<CrossingWord> ws;
  for (const auto& a : arcs) ws.push_back(a.word());
  Arrangement arr = arrange(chart, ws);
  if (!arr.ok) {
    out.violations.push_back("crossing: " + arr.violation);
    return out;
  }
  out.skeleton = arr.skeleton;
  out.skeleton_ok = true;
  auto rep = validate_skeleton(out.skeleton);
  for (auto& v : rep.violations) out.violations.push_back(std::move(v));
  return out;
}

}  // namespace braidcover
