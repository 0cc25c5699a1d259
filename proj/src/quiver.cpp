#include "braidcover/quiver.hpp"

#include <algorithm>
#include <set>

namespace braidcover {

namespace {

// fans in ccw order (reverse of the stored rotation order)
std::vector<std::vector<ArcEndRef>> ccw_fans(const DissectionSkeleton& skel) {
  std::vector<std::vector<ArcEndRef>> fans = skel.fans;
  for (auto& f : fans) std::reverse(f.begin(), f.end());
  return fans;
}

}  // namespace

GradedQuiver quiver_of(const DissectionSkeleton& skel, const GradingData& grading) {
  GradedQuiver q;
  q.vertices = skel.n_arcs();
  const auto fans = ccw_fans(skel);
  const char* letters[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int v = 0; v < static_cast<int>(fans.size()); ++v) {
    for (int t = 0; t + 1 < static_cast<int>(fans[v].size()); ++t) {
      Arrow ar;
      ar.source = fans[v][t].arc;
      ar.target = fans[v][t + 1].arc;
      ar.source_end = fans[v][t];
      ar.target_end = fans[v][t + 1];
      ar.point = v;
      ar.pos = t;
      ar.degree = grading.degree_of(v, t);
      ar.name = std::string(letters[t % 8]) + std::to_string(v + 1);
      q.arrows.push_back(ar);
    }
  }
  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
    for (int b = 0; b < static_cast<int>(q.arrows.size()); ++b) {
      if (q.arrows[a].target != q.arrows[b].source) continue;
      // a composition is nonzero exactly when it continues along the same
      // boundary run, i.e. leaves through the end it arrived at
      const bool smooth = q.arrows[a].target_end == q.arrows[b].source_end;
      if (!smooth) q.relations.push_back({a, b});
    }
  return q;
}

GradedQuiver quiver_of(const Dissection& d, const GradingData& grading) {
  auto val = validate_dissection(d);
  if (!val.valid()) throw domain_error("quiver_of needs a valid dissection: " + val.violations.front());
  return quiver_of(val.skeleton, grading);
}

HomDim hom_dim(const DissectionSkeleton& skel, const GradingData& grading, int i, int j) {
  HomDim out;
  if (i == j) {
    out.total += 1;  // identity
    out.by_degree[0] += 1;
  }
  const auto fans = ccw_fans(skel);
  // boundary paths run along one fan in ccw direction; degrees add up over
  // the arrows passed.  The visited guard turns a directed cycle into an
  // Infinite verdict instead of nontermination.
  for (int v = 0; v < static_cast<int>(fans.size()); ++v) {
    const int K = static_cast<int>(fans[v].size());
    for (int s = 0; s < K; ++s) {
      if (fans[v][s].arc != i) continue;
      int deg = 0;
      std::set<int> visited{s};
      for (int t = s + 1; t < K; ++t) {
        deg += grading.degree_of(v, t - 1);
        if (!visited.insert(t).second) {
          out.infinite = true;
          return out;
        }
        if (fans[v][t].arc == j) {
          out.total += 1;
          out.by_degree[deg] += 1;
        }
      }
    }
  }
  return out;
}

HomDim hom_dim(const Dissection& d, int i, int j) {
  auto val = validate_dissection(d);
  if (!val.valid()) throw domain_error("hom_dim needs a valid dissection");
  return hom_dim(val.skeleton, GradingData{}, i, j);
}

ExceptionalCheck is_exceptional_sequence(const Chart& chart, const std::vector<ArcClass>& arcs) {
  ExceptionalCheck out;
  const int expected = chart.skeleton().surface().expected_arcs();
  auto val = validate_words(chart, arcs);
  if (val.valid()) {
    // literal backward-hom vanishing on the derived skeleton
    for (int j = 0; j < static_cast<int>(arcs.size()); ++j)
      for (int i = 0; i < j; ++i) {
        auto h = hom_dim(val.skeleton, GradingData{}, j, i);
        if (h.total != 0) {
          out.first_violation = "backward hom nonzero from arc " + std::to_string(j + 1) +
                                " to arc " + std::to_string(i + 1);
          return out;
        }
      }
    out.ok = true;
    return out;
  }
  const std::string& v = val.violations.front();
  if (v.rfind("order", 0) == 0)
    out.first_violation = "backward hom (" + v + ")";
  else if (static_cast<int>(arcs.size()) != expected)
    out.first_violation = "not full: " + std::to_string(arcs.size()) + " arcs, needs " +
                          std::to_string(expected);
  else
    out.first_violation = v;
  return out;
}

GradingData transport_grading(const Dissection& before, const GradingData& grading, int signed_gen,
                              const Dissection& after) {
  const int p = std::abs(signed_gen) - 1;
  const bool forward = signed_gen > 0;
  auto val_b = validate_dissection(before);
  auto val_a = validate_dissection(after);
  if (!val_b.valid() || !val_a.valid()) throw domain_error("transport needs valid dissections");
  const auto fans_old = ccw_fans(val_b.skeleton);
  const auto fans_new = ccw_fans(val_a.skeleton);

  const int removed_old = forward ? p : p + 1;
  const int partner_old = forward ? p + 1 : p;
  const int new_slot = forward ? p + 1 : p;
  const int partner_slot = forward ? p : p + 1;
  auto old_of = [&](int a) { return a == new_slot ? -1 : a == partner_slot ? partner_old : a; };

  // degree of the connecting path between the old pair at point v
  auto alpha_at = [&](int v) -> int {
    const auto& fan = fans_old[v];
    for (int t = 0; t + 1 < static_cast<int>(fan.size()); ++t)
      if (fan[t].arc == p && fan[t + 1].arc == p + 1) return grading.degree_of(v, t);
    return 0;
  };
  std::vector<int> shared;  // points where the old pair meets
  for (int v = 0; v < static_cast<int>(fans_old.size()); ++v) {
    bool has_a = false, has_b = false;
    for (const auto& e : fans_old[v]) {
      if (e.arc == p) has_a = true;
      if (e.arc == p + 1) has_b = true;
    }
    if (has_a && has_b) shared.push_back(v);
  }
  auto alpha_for = [&](int v) -> int {
    if (shared.empty()) return 0;
    for (int s : shared)
      if (s != v) return alpha_at(s);
    return alpha_at(shared.front());
  };

  GradingData out;
  for (int v = 0; v < static_cast<int>(fans_new.size()); ++v) {
    const auto& fn = fans_new[v];
    const auto& fo = fans_old[v];
    auto old_pos = [&](ArcEndRef e) -> int {
      int oa = old_of(e.arc);
      if (oa < 0) oa = removed_old;  // anchor the mutated arc in the removed slot
      for (int t = 0; t < static_cast<int>(fo.size()); ++t)
        if (fo[t].arc == oa && (old_of(e.arc) >= 0 ? fo[t].end == e.end : true)) return t;
      return -1;
    };
    auto interval = [&](int a, int b) {
      int deg = 0;
      for (int k = a; k < b; ++k) deg += grading.degree_of(v, k);
      return deg;
    };
    for (int t = 0; t + 1 < static_cast<int>(fn.size()); ++t) {
      const ArcEndRef X = fn[t], Y = fn[t + 1];
      const bool xn = X.arc == new_slot, yn = Y.arc == new_slot;
      int deg = 0;
      if ((xn && Y.arc == partner_slot) || (yn && X.arc == partner_slot)) {
        deg = -alpha_for(v);
      } else {
        const int px = old_pos(X), py = old_pos(Y);
        if (px >= 0 && py >= 0 && px < py)
          deg = interval(px, py);
        else if (px >= 0 && py >= 0 && px > py)
          // passes back across the partner slot: additivity with the
          // connecting degree
          deg = interval(py, px) + alpha_for(v);
      }
      if (deg != 0) out.degrees[{v, t}] = deg;
    }
  }
  return out;
}

std::string quiver_dot(const GradedQuiver& q) {
  std::string s = "digraph quiver {\n";
  for (int v = 1; v <= q.vertices; ++v) s += "  v" + std::to_string(v) + ";\n";
  for (const auto& a : q.arrows)
    s += "  v" + std::to_string(a.source + 1) + " -> v" + std::to_string(a.target + 1) +
         " [label=\"" + a.name + ":" + std::to_string(a.degree) + "\"];\n";
  s += "  # relations:\n";
  for (const auto& [a, b] : q.relations)
    s += "  # " + q.arrows[a].name + "*" + q.arrows[b].name + " = 0\n";
  s += "}\n";
  return s;
}

std::string quiver_text(const GradedQuiver& q) {
  std::string s = "vertices " + std::to_string(q.vertices) + "\n";
  for (const auto& a : q.arrows)
    s += "arrow " + a.name + " " + std::to_string(a.source + 1) + " -> " +
         std::to_string(a.target + 1) + " deg " + std::to_string(a.degree) + "\n";
  for (const auto& [a, b] : q.relations)
    s += "relation " + q.arrows[a].name + "*" + q.arrows[b].name + "\n";
  return s;
}

}  // namespace braidcover
