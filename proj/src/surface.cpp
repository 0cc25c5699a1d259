#include "braidcover/surface.hpp"

#include <algorithm>
#include <numeric>

namespace braidcover {

int MarkedSurface::m() const {
  return std::accumulate(boundary_marks.begin(), boundary_marks.end(), 0);
}

bool MarkedSurface::same_surface(const MarkedSurface& o) const {
  if (genus != o.genus) return false;
  auto a = boundary_marks, b = o.boundary_marks;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string MarkedSurface::str() const {
  std::string s = "g=" + std::to_string(genus) + " marks=[";
  auto sorted = boundary_marks;
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sorted[i]);
  }
  return s + "]";
}

int DissectionSkeleton::m_points() const {
  int m = 0;
  for (const auto& c : bcycles) m += static_cast<int>(c.size());
  return m;
}

MarkedSurface DissectionSkeleton::surface() const {
  MarkedSurface s;
  s.genus = genus;
  for (const auto& c : bcycles) s.boundary_marks.push_back(static_cast<int>(c.size()));
  return s;
}

namespace {

void check_structure(const DissectionSkeleton& skel) {
  const int m = skel.m_points();
  const int n = skel.n_arcs();
  std::vector<char> label_seen(m, 0);
  for (const auto& cyc : skel.bcycles) {
    if (cyc.empty()) throw domain_error("empty boundary component");
    for (int p : cyc) {
      if (p < 1 || p > m || label_seen[p - 1]) throw domain_error("bad boundary labels");
      label_seen[p - 1] = 1;
    }
  }
  for (const auto& e : skel.arc_ends)
    if (e[0] < 1 || e[0] > m || e[1] < 1 || e[1] > m) throw domain_error("arc endpoint out of range");
  if (static_cast<int>(skel.fans.size()) != m) throw domain_error("fan table size mismatch");
  std::vector<std::array<char, 2>> end_seen(n, {0, 0});
  for (int v = 0; v < m; ++v) {
    for (const auto& ref : skel.fans[v]) {
      if (ref.arc < 0 || ref.arc >= n || (ref.end != 0 && ref.end != 1))
        throw domain_error("bad fan entry");
      if (skel.arc_ends[ref.arc][ref.end] != v + 1)
        throw domain_error("fan entry does not end at its point");
      if (end_seen[ref.arc][ref.end]) throw domain_error("arc-end listed twice");
      end_seen[ref.arc][ref.end] = 1;
    }
  }
  for (int a = 0; a < n; ++a)
    if (!end_seen[a][0] || !end_seen[a][1]) throw domain_error("arc-end missing from fans");
}

}  // namespace

CombMap::CombMap(const DissectionSkeleton& skel) {
  check_structure(skel);
  n_ = skel.n_arcs();
  m_ = skel.m_points();
  const int n_edges = n_ + m_;  // one boundary segment per marked point
  dart_base_.assign(2 * n_edges, -1);
  rot_next_.assign(2 * n_edges, -1);
  tau_out_.assign(m_, -1);
  tau_back_.assign(m_, -1);
  fan_darts_.assign(m_, {});

  for (int a = 0; a < n_; ++a) {
    dart_base_[2 * a] = skel.arc_ends[a][0] - 1;
    dart_base_[2 * a + 1] = skel.arc_ends[a][1] - 1;
  }
  int seg = n_;
  for (const auto& cyc : skel.bcycles) {
    const int k = static_cast<int>(cyc.size());
    for (int t = 0; t < k; ++t) {
      const int u = cyc[t] - 1;
      const int v = cyc[(t + 1) % k] - 1;
      dart_base_[2 * seg] = u;
      dart_base_[2 * seg + 1] = v;
      tau_back_[u] = 2 * seg;
      tau_out_[v] = 2 * seg + 1;
      ++seg;
    }
  }
  for (int v = 0; v < m_; ++v) {
    for (const auto& ref : skel.fans[v]) fan_darts_[v].push_back(2 * ref.arc + ref.end);
    std::vector<int> rot;
    rot.push_back(tau_out_[v]);
    for (int d : fan_darts_[v]) rot.push_back(d);
    rot.push_back(tau_back_[v]);
    for (size_t i = 0; i < rot.size(); ++i) rot_next_[rot[i]] = rot[(i + 1) % rot.size()];
  }
}

std::vector<Face> face_traversal(const DissectionSkeleton& skel) {
  CombMap map(skel);
  std::vector<Face> faces;
  std::vector<char> seen(map.dart_count(), 0);
  for (int d0 = 0; d0 < map.dart_count(); ++d0) {
    if (seen[d0]) continue;
    Face f;
    bool all_outer_darts = true;
    int d = d0;
    do {
      seen[d] = 1;
      f.darts.push_back(d);
      if (!map.is_arc_dart(d)) {
        ++f.boundary_edges;
        if ((d & 1) == 0) all_outer_darts = false;
      } else {
        all_outer_darts = false;
      }
      d = map.next_in_face(d);
    } while (d != d0);
    f.outer = all_outer_darts;
    faces.push_back(std::move(f));
  }
  return faces;
}

ValidationReport validate_skeleton(const DissectionSkeleton& skel) {
  ValidationReport rep;
  try {
    check_structure(skel);
  } catch (const domain_error& e) {
    rep.violations.push_back(std::string("structure: ") + e.what());
    return rep;
  }

  const int m = skel.m_points();
  const int n = skel.n_arcs();
  const int b = static_cast<int>(skel.bcycles.size());
  const int expected = m + b + 2 * skel.genus - 2;
  if (n != expected)
    rep.violations.push_back("arc-count: n=" + std::to_string(n) + " but m+b+2g-2=" +
                             std::to_string(expected));

  for (int a = 0; a < n; ++a)
    if (skel.arc_ends[a][0] == skel.arc_ends[a][1])
      rep.violations.push_back("loop: arc " + std::to_string(a + 1) + " has equal endpoints");

  // order condition: indices strictly decrease along the stored rotation
  // order (equivalently increase in ccw order)
  for (int v = 0; v < m; ++v) {
    for (size_t j = 1; j < skel.fans[v].size(); ++j) {
      if (skel.fans[v][j - 1].arc <= skel.fans[v][j].arc) {
        rep.violations.push_back("order: at point " + std::to_string(v + 1) + ", arc " +
                                 std::to_string(skel.fans[v][j].arc + 1) + " follows arc " +
                                 std::to_string(skel.fans[v][j - 1].arc + 1) + " ccw");
      }
    }
  }

  // connectivity of the underlying graph
  {
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : skel.arc_ends) parent[find(e[0] - 1)] = find(e[1] - 1);
    for (const auto& cyc : skel.bcycles)
      for (size_t t = 1; t < cyc.size(); ++t) parent[find(cyc[0] - 1)] = find(cyc[t] - 1);
    // components are joined by arcs only
    int root = find(0);
    for (int v = 1; v < m; ++v)
      if (find(v) != root) {
        rep.violations.push_back("connectivity: surface is disconnected");
        break;
      }
  }

  auto faces = face_traversal(skel);
  int interior = 0, outer = 0;
  for (const auto& f : faces) {
    if (f.outer) {
      ++outer;
      continue;
    }
    ++interior;
    if (f.boundary_edges != 1)
      rep.violations.push_back("face: a face has " + std::to_string(f.boundary_edges) +
                               " boundary edges (want exactly 1)");
  }
  if (outer != b)
    rep.violations.push_back("face: outer face count " + std::to_string(outer) + " != b=" +
                             std::to_string(b));

  // V - E + F = 2 - 2g - b with V = m, E = n + m, F = interior faces
  const int euler = m - (n + m) + interior;
  if (euler != 2 - 2 * skel.genus - b)
    rep.violations.push_back("euler: V-E+F=" + std::to_string(euler) + " but 2-2g-b=" +
                             std::to_string(2 - 2 * skel.genus - b));
  return rep;
}

HurwitzSystem hurwitz_of(const DissectionSkeleton& skel) {
  HurwitzSystem h;
  h.m = skel.m_points();
  for (const auto& e : skel.arc_ends) {
    if (e[0] == e[1]) throw domain_error("arc with equal endpoints has no transposition");
    h.tuple.emplace_back(e[0], e[1]);
  }
  if (!is_valid_system(h)) throw domain_error("endpoint tuple does not generate");
  return h;
}

MarkedSurface surface_from_hurwitz(const HurwitzSystem& h) {
  const SurfaceInvariants inv = surface_invariants(h);
  MarkedSurface s;
  s.genus = inv.genus;
  s.boundary_marks = inv.distribution.parts;
  return s;
}

bool roundtrip_check(const DissectionSkeleton& skel) {
  return surface_from_hurwitz(hurwitz_of(skel)).same_surface(skel.surface());
}

DissectionSkeleton skeleton_from_hurwitz(const HurwitzSystem& h) {
  if (!is_valid_system(h)) throw domain_error("not a Hurwitz system");
  DissectionSkeleton skel;
  skel.genus = surface_invariants(h).genus;
  skel.bcycles = cycles_of(product(h));
  for (const auto& t : h.tuple) skel.arc_ends.push_back({t.x, t.y});
  skel.fans.assign(h.m, {});
  for (int i = h.n() - 1; i >= 0; --i) {  // decreasing index = rotation order
    const auto& t = h.tuple[i];
    skel.fans[t.x - 1].push_back({i, 0});
    skel.fans[t.y - 1].push_back({i, 1});
  }
  return skel;
}

HurwitzSystem standard_system(const MarkedSurface& surface) {
  const int m = surface.m();
  const int n = surface.expected_arcs();
  if (n < 1) throw domain_error("surface admits no arcs (1-marked disk)");
  if (m < 2)
    throw domain_error("no dissection exists: a single marked point admits no transpositions");
  HurwitzSystem h;
  h.m = m;
  int base = 0;
  std::vector<int> comp_base;
  for (int k : surface.boundary_marks) {
    comp_base.push_back(base);
    for (int j = k - 1; j >= 1; --j) h.tuple.emplace_back(base + j, base + j + 1);
    base += k;
  }
  for (size_t c = 0; c + 1 < comp_base.size(); ++c) {
    const int u = comp_base[c] + surface.boundary_marks[c];  // last label of component c
    const int v = comp_base[c + 1] + 1;                      // first label of component c+1
    h.tuple.emplace_back(u, v);
    h.tuple.emplace_back(u, v);
  }
  for (int g = 0; g < surface.genus; ++g) {
    h.tuple.emplace_back(1, 2);
    h.tuple.emplace_back(1, 2);
  }
  if (h.n() != n) throw domain_error("internal: standard system has wrong length");
  return h;
}

}  // namespace braidcover
