#ifndef BRAIDCOVER_HURWITZ_HPP
#define BRAIDCOVER_HURWITZ_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidcover/perm.hpp"

namespace braidcover {

// Ordered tuple of transpositions of {1..m} that generates the full
// symmetric group.  Products are evaluated left to right: tau_1 acts first.
struct HurwitzSystem {
  int m = 0;
  std::vector<Transposition> tuple;

  int n() const { return static_cast<int>(tuple.size()); }
  bool operator==(const HurwitzSystem&) const = default;
};

// tau_1 tau_2 ... tau_n, applying tau_1 first.
Permutation product(const HurwitzSystem& h);

// Equivalent to generation of the full symmetric group: the graph on the
// labels with an edge {x,y} per transposition is connected and covers all
// labels.
bool generates_full(const std::vector<Transposition>& tuple, int m);

bool is_valid_system(const HurwitzSystem& h);

enum class MoveDir { Forward, Inverse };

// Forward move at i (1-based, 1 <= i <= n-1):
//   (.., tau_i, tau_{i+1}, ..) -> (.., tau_{i+1}, tau_{i+1} tau_i tau_{i+1}, ..)
// Inverse move:
//   (.., tau_i, tau_{i+1}, ..) -> (.., tau_i tau_{i+1} tau_i, tau_i, ..)
HurwitzSystem hurwitz_move(const HurwitzSystem& h, int i, MoveDir dir);

struct SurfaceInvariants {
  int genus = 0;
  int boundary_count = 0;
  CycleType distribution;
};

// b = #cycles of product(h), g from n = m + b + 2g - 2.  Throws domain_error
// when the genus would be negative or non-integral (unrealizable data).
SurfaceInvariants surface_invariants(const HurwitzSystem& h);

// Canonical byte key: m, n, then the normalized pairs in order.
std::string canonical_key(const HurwitzSystem& h);

struct HurwitzOrbit {
  std::vector<HurwitzSystem> systems;  // in BFS discovery order
  bool complete = true;
};

// Breadth-first closure under all forward/inverse moves, deduplicated by
// canonical key.  Stops (complete=false) once more than `limit` states exist.
HurwitzOrbit hurwitz_orbit(const HurwitzSystem& h, std::size_t limit);

// All generating tuples of n transpositions over {1..m}.
std::vector<HurwitzSystem> all_generating_systems(int m, int n);

}  // namespace braidcover

#endif
