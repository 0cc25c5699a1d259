#include "braidcover/orbit.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <thread>

namespace braidcover {

namespace {

std::vector<std::pair<int, Dissection>> expand(const Dissection& d) {
  std::vector<std::pair<int, Dissection>> out;
  for (int i = 1; i <= d.n() - 1; ++i) {
    out.emplace_back(i, apply_generator(d, i));
    out.emplace_back(-i, apply_generator(d, -i));
  }
  return out;
}

}  // namespace

bool deck_invariant(const Dissection& d, const DeckInvolution& iota) {
  for (const auto& a : d.arcs)
    if (!(deck_image(*d.chart, iota, a) == a)) return false;
  return true;
}

OrbitReport explore(const Dissection& seed, const ExploreLimits& limits) {
  OrbitReport rep;
  rep.seed = seed;
  {
    auto val = validate_dissection(seed);
    if (!val.valid()) throw domain_error("explore: seed invalid: " + val.violations.front());
  }
  DeckInvolution iota;
  try {
    iota = make_deck_involution(*seed.chart);
    rep.has_deck = true;
  } catch (const domain_error&) {
    rep.has_deck = false;
  }

  auto admit = [&](const Dissection& d, const BraidWord& path, int depth) {
    const std::string key = d.key();
    if (rep.index_of.count(key)) return false;
    rep.index_of.emplace(key, static_cast<int>(rep.visited.size()));
    rep.visited.push_back({d, path, depth});
    if (limits.log_invariants) {
      rep.hurwitz_keys.push_back(canonical_key(hurwitz_of(d)));
      rep.deck_invariant.push_back(rep.has_deck && deck_invariant(d, iota) ? 1 : 0);
    }
    return true;
  };

  admit(seed, {}, 0);
  std::size_t frontier_begin = 0;
  rep.complete = true;
  for (int depth = 1; depth <= limits.max_depth; ++depth) {
    const std::size_t frontier_end = rep.visited.size();
    if (frontier_begin == frontier_end) break;
    // expand the frontier (optionally in parallel), then admit sequentially
    // in frontier order so the result is independent of the thread count
    std::vector<std::vector<std::pair<int, Dissection>>> produced(frontier_end - frontier_begin);
    const int T = std::max(1, limits.threads);
    if (T == 1) {
      for (std::size_t s = frontier_begin; s < frontier_end; ++s)
        produced[s - frontier_begin] = expand(rep.visited[s].dissection);
    } else {
      std::vector<std::thread> pool;
      std::mutex next_mutex;
      std::size_t next = frontier_begin;
      std::exception_ptr worker_error;
      for (int t = 0; t < T; ++t)
        pool.emplace_back([&]() {
          try {
            for (;;) {
              std::size_t s;
              {
                std::lock_guard<std::mutex> lock(next_mutex);
                if (next >= frontier_end) return;
                s = next++;
              }
              produced[s - frontier_begin] = expand(rep.visited[s].dissection);
            }
          } catch (...) {
            std::lock_guard<std::mutex> lock(next_mutex);
            next = frontier_end;  // stop the other workers
            if (!worker_error) worker_error = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      if (worker_error) std::rethrow_exception(worker_error);
    }
    for (std::size_t s = frontier_begin; s < frontier_end; ++s) {
      for (auto& [gen, d] : produced[s - frontier_begin]) {
        if (rep.visited.size() >= limits.max_states) {
          rep.complete = false;
          rep.depth_reached = depth;
          return rep;
        }
        BraidWord path = rep.visited[s].path;
        path.push_back(gen);
        admit(d, path, depth);
      }
    }
    rep.depth_reached = depth;
    if (rep.visited.size() == frontier_end) {  // no growth: closure reached
      rep.complete = true;
      return rep;
    }
    frontier_begin = frontier_end;
  }
  // ran out of depth with growth still happening
  rep.complete = false;
  {
    // closure check: if the last level added nothing we are complete
    const std::size_t last = rep.visited.size();
    bool closed = true;
    for (std::size_t s = frontier_begin; s < last && closed; ++s)
      for (auto& [gen, d] : expand(rep.visited[s].dissection))
        if (!rep.index_of.count(d.key())) {
          closed = false;
          break;
        }
    rep.complete = closed;
  }
  return rep;
}

std::string SeparationCertificate::str() const {
  switch (kind) {
    case Kind::Path: {
      std::string s = "certificate=path word=";
      for (size_t i = 0; i < path.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(path[i]);
      }
      return s;
    }
    case Kind::Witness:
      return "certificate=witness invariant=" + witness_name + " d1=" + value_at_d1 +
             " d2=" + value_at_d2;
    default:
      return "certificate=inconclusive depth=" + std::to_string(depth);
  }
}

SeparationCertificate separate(const Dissection& d1, const Dissection& d2, std::size_t budget) {
  SeparationCertificate cert;
  if (!(d1.chart->skeleton().surface().same_surface(d2.chart->skeleton().surface())))
    throw domain_error("separate: different ambient surfaces");
  if (d1.chart.get() != d2.chart.get() && !(d1.chart->skeleton().bcycles == d2.chart->skeleton().bcycles))
    throw domain_error("separate: dissections live on different charts");

  // registered braid-invariant witnesses first
  const Permutation p1 = product(hurwitz_of(d1));
  const Permutation p2 = product(hurwitz_of(d2));
  if (!(p1 == p2)) {
    cert.kind = SeparationCertificate::Kind::Witness;
    cert.witness_name = "hurwitz_class";
    cert.value_at_d1 = cycle_type(p1).str();
    cert.value_at_d2 = cycle_type(p2).str();
    return cert;
  }
  try {
    DeckInvolution iota = make_deck_involution(*d1.chart);
    const bool i1 = deck_invariant(d1, iota);
    const bool i2 = deck_invariant(d2, iota);
    if (i1 != i2) {
      cert.kind = SeparationCertificate::Kind::Witness;
      cert.witness_name = "deck_invariance";
      cert.value_at_d1 = i1 ? "true" : "false";
      cert.value_at_d2 = i2 ? "true" : "false";
      return cert;
    }
  } catch (const domain_error&) {
    // not a double-cover chart; no deck witness available
  }

  // bidirectional search, expanding the smaller side first
  struct Side {
    std::map<std::string, BraidWord> seen;
    std::deque<std::pair<Dissection, BraidWord>> frontier;
  };
  Side a, b;
  a.seen.emplace(d1.key(), BraidWord{});
  a.frontier.push_back({d1, {}});
  b.seen.emplace(d2.key(), BraidWord{});
  b.frontier.push_back({d2, {}});
  if (d1.key() == d2.key()) {
    cert.kind = SeparationCertificate::Kind::Path;
    cert.path = {};
    return cert;
  }
  std::size_t expanded = 0;
  int depth = 0;
  while (!a.frontier.empty() && !b.frontier.empty() && expanded < budget) {
    Side& small = a.frontier.size() <= b.frontier.size() ? a : b;
    Side& other = (&small == &a) ? b : a;
    const bool from_d1 = (&small == &a);
    std::deque<std::pair<Dissection, BraidWord>> next;
    for (auto& [d, path] : small.frontier) {
      for (auto& [gen, nd] : expand(d)) {
        ++expanded;
        const std::string key = nd.key();
        if (small.seen.count(key)) continue;
        BraidWord npath = path;
        npath.push_back(gen);
        small.seen.emplace(key, npath);
        auto hit = other.seen.find(key);
        if (hit != other.seen.end()) {
          // splice: d1 -> meet -> d2
          BraidWord w_from_d1 = from_d1 ? npath : hit->second;
          BraidWord w_from_d2 = from_d1 ? hit->second : npath;
          BraidWord full = w_from_d1;
          BraidWord back = inverse_word(w_from_d2);
          full.insert(full.end(), back.begin(), back.end());
          // replay before certifying
          Dissection replay = braid_act(d1, full);
          if (!(replay == d2)) throw domain_error("path certificate failed replay (bug)");
          cert.kind = SeparationCertificate::Kind::Path;
          cert.path = full;
          return cert;
        }
        next.push_back({nd, npath});
        if (expanded >= budget) break;
      }
      if (expanded >= budget) break;
    }
    small.frontier = std::move(next);
    ++depth;
  }
  cert.kind = SeparationCertificate::Kind::Inconclusive;
  cert.depth = depth;
  return cert;
}

TransitivityReport genus0_transitivity_check(int m, int word_bound, const ExploreLimits& limits) {
  TransitivityReport rep;
  rep.word_bound = word_bound;
  auto chart = std::make_shared<const Chart>(Chart::standard(MarkedSurface{0, {m}}));
  const int n = chart->n_arcs();

  // enumerate every embedded arc class with at most word_bound letters
  std::set<std::string> class_keys;
  std::vector<ArcClass> classes;
  for (int v = 0; v < chart->m_points(); ++v)
    for (int c = 0; c < chart->corner_count(v); ++c) {
      std::deque<CrossingWord> queue;
      CrossingWord w0;
      w0.start = {v, c};
      queue.push_back(w0);
      while (!queue.empty()) {
        CrossingWord w = queue.front();
        queue.pop_front();
        // close off at every corner of the current face
        const int face = w.letters.empty() ? chart->corner_face(w.start)
                                           : chart->face_of(CombMap::alpha(w.letters.back()));
        for (int v2 = 0; v2 < chart->m_points(); ++v2)
          for (int c2 = 0; c2 < chart->corner_count(v2); ++c2) {
            if (chart->corner_face({v2, c2}) != face) continue;
            CrossingWord done = w;
            done.end = {v2, c2};
            if (done.letters.empty() && done.start == done.end) continue;
            try {
              ArcClass cls = ArcClass::make(*chart, done);
              if (static_cast<int>(cls.word().letters.size()) > word_bound) continue;
              if (!embedded(*chart, cls)) continue;
              if (class_keys.insert(cls.key()).second) classes.push_back(cls);
            } catch (const domain_error&) {
            }
          }
        if (static_cast<int>(w.letters.size()) < word_bound) {
          for (int d : chart->face_darts(face)) {
            if (!chart->map().is_arc_dart(d)) continue;
            if (!w.letters.empty() && d == CombMap::alpha(w.letters.back())) continue;  // bigon
            CrossingWord longer = w;
            longer.letters.push_back(d);
            queue.push_back(longer);
          }
        }
      }
    }

  // assemble candidate dissections: ordered n-tuples that validate
  std::set<std::string> all_valid;
  std::vector<int> idx(n, 0);
  std::vector<ArcClass> tuple;
  const Permutation pi0 = product(hurwitz_of(seed_dissection(chart)));
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      HurwitzSystem h;
      h.m = chart->m_points();
      for (const auto& a : tuple) {
        auto [x, y] = a.endpoints();
        if (x == y) return;
        h.tuple.emplace_back(x, y);
      }
      if (!generates_full(h.tuple, h.m)) return;
      if (!(product(h) == pi0)) return;
      Dissection d{chart, tuple};
      if (validate_dissection(d).valid()) all_valid.insert(d.key());
      return;
    }
    for (const auto& cls : classes) {
      if (cls.is_loop()) continue;
      tuple.push_back(cls);
      self(self, depth + 1);
      tuple.pop_back();
    }
  };
  rec(rec, 0);
  rep.expected_total = static_cast<int>(all_valid.size());

  auto orbit = explore(seed_dissection(chart), limits);
  rep.orbit_size = static_cast<int>(orbit.visited.size());
  for (const auto& key : all_valid)
    if (orbit.index_of.count(key)) ++rep.reached;
  rep.ok = (rep.reached == rep.expected_total);
  rep.detail = "m=" + std::to_string(m) + " enumerated=" + std::to_string(rep.expected_total) +
               " reached=" + std::to_string(rep.reached) + " orbit=" + std::to_string(rep.orbit_size) +
               (orbit.complete ? " (orbit complete)" : " (orbit truncated)");
  return rep;
}

CounterexampleReport counterexample_g1b2(int depth, std::size_t max_states, int threads) {
  CounterexampleReport rep;
  rep.depth = depth;
  auto chart = std::make_shared<const Chart>(Chart::standard(MarkedSurface{1, {1, 1}}));
  DeckInvolution iota = make_deck_involution(*chart);
  Dissection base = seed_dissection(chart);
  Dissection twisted = boundary_twist(base, 0, +1);

  const bool base_inv = deck_invariant(base, iota);
  const bool twisted_inv = deck_invariant(twisted, iota);
  rep.witness_separates = base_inv && !twisted_inv;
  rep.same_hurwitz = canonical_key(hurwitz_of(base)) == canonical_key(hurwitz_of(twisted));

  ExploreLimits lim;
  lim.max_depth = depth;
  lim.max_states = max_states;
  lim.threads = threads;
  lim.log_invariants = true;
  auto orbit = explore(base, lim);
  rep.states_explored = static_cast<int>(orbit.visited.size());
  rep.bfs_reached_twisted = orbit.index_of.count(twisted.key()) > 0;
  for (char c : orbit.deck_invariant)
    if (!c) rep.witness_preserved = false;

  auto cert = separate(base, twisted, 1);
  std::string s;
  s += "counterexample g1b2: genus-1 surface, two boundary components, one marked point each\n";
  s += "base dissection: four parallel arcs (hurwitz (1 2)x4)\n";
  s += "twisted dissection: image under a Dehn twist about boundary component 1\n";
  s += "deck invariance: base=" + std::string(base_inv ? "true" : "false") +
       " twisted=" + std::string(twisted_inv ? "true" : "false") + "\n";
  s += "same hurwitz system: " + std::string(rep.same_hurwitz ? "yes" : "no") + "\n";
  s += "bounded search (corroboration only): depth=" + std::to_string(depth) +
       " states=" + std::to_string(rep.states_explored) +
       " reached_twisted=" + std::string(rep.bfs_reached_twisted ? "yes" : "no") + "\n";
  s += "deck invariance preserved on every explored state: " +
       std::string(rep.witness_preserved ? "yes" : "no") + "\n";
  s += cert.str() + "\n";
  rep.text = s;
  return rep;
}

}  // namespace braidcover
