#ifndef BRAIDCOVER_ORBIT_HPP
#define BRAIDCOVER_ORBIT_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "braidcover/quiver.hpp"

namespace braidcover {

struct OrbitState {
  Dissection dissection;
  BraidWord path;  // replays from the seed to this state
  int depth = 0;
};

struct OrbitReport {
  Dissection seed;
  std::vector<OrbitState> visited;  // deterministic discovery order
  std::map<std::string, int> index_of;
  int depth_reached = 0;
  bool complete = false;
  // per-state invariant log: hurwitz canonical key, and for double-cover
  // charts the deck invariance flag
  std::vector<std::string> hurwitz_keys;
  std::vector<char> deck_invariant;
  bool has_deck = false;
};

struct ExploreLimits {
  int max_depth = 4;
  std::size_t max_states = 100000;
  int threads = 1;
  bool log_invariants = true;
};

OrbitReport explore(const Dissection& seed, const ExploreLimits& limits);

// every arc fixed by the sheet exchange
bool deck_invariant(const Dissection& d, const DeckInvolution& iota);

struct SeparationCertificate {
  enum class Kind { Path, Witness, Inconclusive } kind = Kind::Inconclusive;
  BraidWord path;       // d1 -> d2, replay-verified
  std::string witness_name;
  std::string value_at_d1, value_at_d2;
  int depth = 0;
  std::string str() const;
};

SeparationCertificate separate(const Dissection& d1, const Dissection& d2, std::size_t budget);

struct TransitivityReport {
  bool ok = false;
  int expected_total = -1;     // number of dissections found by enumeration
  int reached = 0;             // of those, how many the orbit search visited
  int orbit_size = 0;
  int word_bound = 0;
  std::string detail;
};

// Exhaustively enumerates the dissections of the m-marked disk whose arcs
// have words of at most `word_bound` letters, explores from the fan seed and
// checks containment.
TransitivityReport genus0_transitivity_check(int m, int word_bound, const ExploreLimits& limits);

struct CounterexampleReport {
  bool witness_separates = false;   // base deck-invariant, twisted not
  bool same_hurwitz = false;
  bool bfs_reached_twisted = false; // corroboration only; expected false
  bool witness_preserved = true;    // deck invariance along the whole orbit ball
  int states_explored = 0;
  int depth = 0;
  std::string text;                 // human-readable report
};

CounterexampleReport counterexample_g1b2(int depth, std::size_t max_states, int threads);

}  // namespace braidcover

#endif
