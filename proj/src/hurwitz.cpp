#include "braidcover/hurwitz.hpp"

#include <deque>
#include <unordered_set>

namespace braidcover {

Permutation product(const HurwitzSystem& h) {
  Permutation p = Permutation::identity(h.m);
  for (const auto& t : h.tuple) p = compose(p, t.as_permutation(h.m));
  return p;
}

bool generates_full(const std::vector<Transposition>& tuple, int m) {
  if (tuple.empty()) return m == 1;
  // union-find on labels
  std::vector<int> parent(m);
  for (int i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<char> touched(m, 0);
  for (const auto& t : tuple) {
    if (t.y > m) throw domain_error("transposition exceeds label set");
    touched[t.x - 1] = touched[t.y - 1] = 1;
    parent[find(t.x - 1)] = find(t.y - 1);
  }
  for (int i = 0; i < m; ++i)
    if (!touched[i] && m > 1) return false;
  int root = find(0);
  for (int i = 1; i < m; ++i)
    if (find(i) != root) return false;
  return true;
}

bool is_valid_system(const HurwitzSystem& h) {
  if (h.m < 1 || h.n() < 1) return false;
  for (const auto& t : h.tuple)
    if (t.y > h.m) return false;
  return generates_full(h.tuple, h.m);
}

HurwitzSystem hurwitz_move(const HurwitzSystem& h, int i, MoveDir dir) {
  if (i < 1 || i > h.n() - 1) throw domain_error("move index out of range");
  HurwitzSystem out = h;
  const Transposition a = h.tuple[i - 1];
  const Transposition b = h.tuple[i];
  if (dir == MoveDir::Forward) {
    out.tuple[i - 1] = b;
    out.tuple[i] = conjugate(a, b);
  } else {
    out.tuple[i - 1] = conjugate(b, a);
    out.tuple[i] = a;
  }
  return out;
}

SurfaceInvariants surface_invariants(const HurwitzSystem& h) {
  SurfaceInvariants inv;
  inv.distribution = cycle_type(product(h));
  inv.boundary_count = static_cast<int>(inv.distribution.parts.size());
  const int twice_g = h.n() - h.m - inv.boundary_count + 2;
  if (twice_g < 0 || twice_g % 2 != 0)
    throw domain_error("unrealizable invariants: n - m - b + 2 = " + std::to_string(twice_g));
  inv.genus = twice_g / 2;
  return inv;
}

std::string canonical_key(const HurwitzSystem& h) {
  std::string key;
  key.reserve(2 + 2 * h.tuple.size());
  key.push_back(static_cast<char>(h.m));
  key.push_back(static_cast<char>(h.n()));
  for (const auto& t : h.tuple) {
    key.push_back(static_cast<char>(t.x));
    key.push_back(static_cast<char>(t.y));
  }
  return key;
}

HurwitzOrbit hurwitz_orbit(const HurwitzSystem& h, std::size_t limit) {
  HurwitzOrbit orbit;
  std::unordered_set<std::string> seen;
  std::deque<HurwitzSystem> frontier;
  seen.insert(canonical_key(h));
  orbit.systems.push_back(h);
  frontier.push_back(h);
  while (!frontier.empty()) {
    HurwitzSystem cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= cur.n() - 1; ++i) {
      for (MoveDir dir : {MoveDir::Forward, MoveDir::Inverse}) {
        HurwitzSystem next = hurwitz_move(cur, i, dir);
        std::string key = canonical_key(next);
        if (seen.insert(std::move(key)).second) {
          if (orbit.systems.size() >= limit) {
            orbit.complete = false;
            return orbit;
          }
          orbit.systems.push_back(next);
          frontier.push_back(next);
        }
      }
    }
  }
  return orbit;
}

std::vector<HurwitzSystem> all_generating_systems(int m, int n) {
  std::vector<Transposition> alphabet;
  for (int x = 1; x <= m; ++x)
    for (int y = x + 1; y <= m; ++y) alphabet.emplace_back(x, y);
  std::vector<HurwitzSystem> out;
  std::vector<Transposition> cur;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      if (generates_full(cur, m)) out.push_back(HurwitzSystem{m, cur});
      return;
    }
    for (const auto& t : alphabet) {
      cur.push_back(t);
      self(self, depth + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace braidcover
