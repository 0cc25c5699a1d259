#include "braidcover/mutation.hpp"

#include <algorithm>

namespace braidcover {

std::string Dissection::key() const {
  std::string k;
  for (const auto& a : arcs) {
    k += a.key();
    k += ';';
  }
  return k;
}

Dissection seed_dissection(ChartPtr chart) {
  Dissection d;
  d.chart = chart;
  for (int i = 0; i < chart->n_arcs(); ++i) d.arcs.push_back(reference_arc_class(*chart, i));
  return d;
}

DissectionValidation validate_dissection(const Dissection& d) {
  return validate_words(*d.chart, d.arcs);
}

HurwitzSystem hurwitz_of(const Dissection& d) {
  HurwitzSystem h;
  h.m = d.chart->m_points();
  for (const auto& a : d.arcs) {
    auto [x, y] = a.endpoints();
    h.tuple.emplace_back(x, y);
  }
  if (!is_valid_system(h)) throw domain_error("dissection endpoints do not generate");
  return h;
}

namespace {

// crossings of the chart ends strictly between two corners at one point
std::vector<int> transit(const Chart& chart, int point, int from_idx, int to_idx) {
  std::vector<int> letters;
  if (from_idx < to_idx) {
    for (int j = from_idx + 1; j <= to_idx; ++j)
      letters.push_back(chart.rotation_entry(point, j));
  } else {
    for (int j = from_idx; j > to_idx; --j)
      letters.push_back(CombMap::alpha(chart.rotation_entry(point, j)));
  }
  return letters;
}

// w oriented so that the chosen end (0=start) sits at marked point q
CrossingWord orient_end_at(const Chart& chart, const CrossingWord& w, int q, bool as_end) {
  const bool end_there = w.end.point == q;
  const bool start_there = w.start.point == q;
  if (!end_there && !start_there) throw domain_error("arc does not touch the smoothing point");
  if (as_end) return end_there ? w : reversed(chart, w);
  return start_there ? w : reversed(chart, w);
}

CrossingWord concat(const Chart& chart, const CrossingWord& a, const std::vector<int>& mid,
                    const CrossingWord& b) {
  CrossingWord out;
  out.start = a.start;
  out.end = b.end;
  out.letters = a.letters;
  out.letters.insert(out.letters.end(), mid.begin(), mid.end());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return reduce(chart, out);
}

// Single-endpoint smoothing of the ordered pair (a1, a2) at their shared
// point q: run a1 into q, turn through the sector between the two ends,
// run out along a2.
CrossingWord smooth_at(const Chart& chart, const CrossingWord& w1, const CrossingWord& w2, int q) {
  const CrossingWord in = orient_end_at(chart, w1, q, true);
  const CrossingWord out = orient_end_at(chart, w2, q, false);
  return concat(chart, in, transit(chart, q, in.end.idx, out.start.idx), out);
}

struct PairInfo {
  EndpointSharing sharing;
  CrossingWord w1, w2;  // chosen realizations
};

PairInfo ordered_pair_info(const Chart& chart, const ArcClass& a1, const ArcClass& a2) {
  PairInfo info;
  info.sharing = shares_endpoint(chart, a1, a2);
  for (const auto& p : info.sharing.points)
    if (!p.first_before)
      throw domain_error("not an ordered exceptional pair: second arc precedes at point " +
                         std::to_string(p.point + 1));
  info.w1 = a1.word();
  info.w2 = a2.word();
  switch (info.sharing.count) {
    case 0: mutation_case_counters().disjoint += 1; break;
    case 1: mutation_case_counters().one_endpoint += 1; break;
    default: mutation_case_counters().two_endpoints += 1; break;
  }
  return info;
}

}  // namespace

MutationCaseCounters& mutation_case_counters() {
  static MutationCaseCounters counters;
  return counters;
}

ArcClass right_mutation(const Chart& chart, const ArcClass& a1, const ArcClass& a2) {
  PairInfo info = ordered_pair_info(chart, a1, a2);
  if (info.sharing.count == 0) return a1;
  if (info.sharing.count == 1) {
    const int q = info.sharing.points[0].point;
    return ArcClass::make(chart, smooth_at(chart, info.w1, info.w2, q));
  }
  // both endpoints shared: smooth at q1, then attach a2 beyond the other end
  auto build = [&](int q1, int q2) {
    CrossingWord mid = smooth_at(chart, info.w1, info.w2, q1);  // runs q2 -> q2
    CrossingWord rev = reversed(chart, mid);
    const CrossingWord out = orient_end_at(chart, info.w2, q2, false);
    return ArcClass::make(chart,
                          concat(chart, rev, transit(chart, q2, rev.end.idx, out.start.idx), out));
  };
  const int p0 = info.sharing.points[0].point;
  const int p1 = info.sharing.points[1].point;
  ArcClass r = build(p0, p1);
  if (!(build(p1, p0) == r))
    throw domain_error("double smoothing depends on the endpoint order (bug)");
  return r;
}

ArcClass left_mutation(const Chart& chart, const ArcClass& a1, const ArcClass& a2) {
  PairInfo info = ordered_pair_info(chart, a1, a2);
  if (info.sharing.count == 0) return a2;
  if (info.sharing.count == 1) {
    const int q = info.sharing.points[0].point;
    return ArcClass::make(chart, smooth_at(chart, info.w1, info.w2, q));
  }
  auto build = [&](int q1, int q2) {
    CrossingWord mid = smooth_at(chart, info.w1, info.w2, q2);  // runs q1 -> q1
    CrossingWord rev = reversed(chart, mid);
    const CrossingWord in = orient_end_at(chart, info.w1, q1, true);
    return ArcClass::make(chart,
                          concat(chart, in, transit(chart, q1, in.end.idx, rev.start.idx), rev));
  };
  const int p0 = info.sharing.points[0].point;
  const int p1 = info.sharing.points[1].point;
  ArcClass l = build(p0, p1);
  if (!(build(p1, p0) == l))
    throw domain_error("double smoothing depends on the endpoint order (bug)");
  return l;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord inv(w.rbegin(), w.rend());
  for (int& g : inv) g = -g;
  return inv;
}

Dissection apply_generator(const Dissection& d, int signed_gen) {
  const int i = std::abs(signed_gen);
  if (i < 1 || i > d.n() - 1) throw domain_error("braid generator out of range");
  Dissection out = d;
  const ArcClass& a = d.arcs[i - 1];
  const ArcClass& b = d.arcs[i];
  if (signed_gen > 0) {
    out.arcs[i - 1] = b;
    out.arcs[i] = right_mutation(*d.chart, a, b);
  } else {
    out.arcs[i - 1] = left_mutation(*d.chart, a, b);
    out.arcs[i] = a;
  }
  auto rep = validate_dissection(out);
  if (!rep.valid())
    throw domain_error("mutation produced an invalid dissection (bug): " + rep.violations.front());
  return out;
}

Dissection braid_act(const Dissection& d, const BraidWord& w) {
  Dissection cur = d;
  for (int g : w) cur = apply_generator(cur, g);
  return cur;
}

ArcClass boundary_twist_arc(const Chart& chart, const ArcClass& cls, int component, int sign) {
  const auto& cyc = chart.skeleton().bcycles[component];
  auto on_component = [&](int point) {
    for (int p : cyc)
      if (p - 1 == point) return true;
    return false;
  };
  auto stored_next = [&](int point) {
    for (size_t t = 0; t < cyc.size(); ++t)
      if (cyc[t] - 1 == point) return cyc[(t + 1) % cyc.size()] - 1;
    throw domain_error("point not on component");
  };
  auto stored_prev = [&](int point) {
    for (size_t t = 0; t < cyc.size(); ++t)
      if (cyc[t] - 1 == point) return cyc[(t + cyc.size() - 1) % cyc.size()] - 1;
    throw domain_error("point not on component");
  };
  // wraps the start of w once around the component collar
  auto collar_prefix = [&](CrossingWord w) {
    const int p = w.start.point;
    const int j = w.start.idx;
    std::vector<int> letters;
    if (sign > 0) {
      // walk toward the stored-next point, crossing each fan bottom-up
      for (int q = stored_next(p); q != p; q = stored_next(q))
        for (int k = 1; k <= chart.corner_count(q) - 1; ++k)
          letters.push_back(chart.rotation_entry(q, k));
      for (int k = 1; k <= j; ++k) letters.push_back(chart.rotation_entry(p, k));
      w.letters.insert(w.letters.begin(), letters.begin(), letters.end());
      w.start = Corner{p, chart.corner_count(p) - 1};
    } else {
      // against the stored direction, crossing fans top-down
      for (int q = stored_prev(p); q != p; q = stored_prev(q))
        for (int k = chart.corner_count(q) - 1; k >= 1; --k)
          letters.push_back(CombMap::alpha(chart.rotation_entry(q, k)));
      for (int k = chart.corner_count(p) - 1; k > j; --k)
        letters.push_back(CombMap::alpha(chart.rotation_entry(p, k)));
      w.letters.insert(w.letters.begin(), letters.begin(), letters.end());
      w.start = Corner{p, 0};
    }
    return w;
  };
  CrossingWord w = cls.word();
  if (on_component(w.start.point)) w = collar_prefix(w);
  if (on_component(w.end.point)) w = reversed(chart, collar_prefix(reversed(chart, w)));
  return ArcClass::make(chart, w);
}

Dissection boundary_twist(const Dissection& d, int component, int sign) {
  Dissection out = d;
  for (auto& a : out.arcs) a = boundary_twist_arc(*d.chart, a, component, sign);
  auto rep = validate_dissection(out);
  if (!rep.valid())
    throw domain_error("boundary twist produced an invalid dissection (bug): " +
                       rep.violations.front());
  return out;
}

}  // namespace braidcover
