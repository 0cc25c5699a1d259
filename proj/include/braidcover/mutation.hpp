#ifndef BRAIDCOVER_MUTATION_HPP
#define BRAIDCOVER_MUTATION_HPP

#include <atomic>
#include <memory>
#include <vector>

#include "braidcover/arrange.hpp"

namespace braidcover {

// Ordered arc system on a fixed chart, intended to be a valid dissection.
struct Dissection {
  ChartPtr chart;
  std::vector<ArcClass> arcs;

  int n() const { return static_cast<int>(arcs.size()); }
  std::string key() const;
  bool operator==(const Dissection& o) const { return key() == o.key(); }
};

Dissection seed_dissection(ChartPtr chart);  // the reference arcs themselves

DissectionValidation validate_dissection(const Dissection& d);
HurwitzSystem hurwitz_of(const Dissection& d);

// Right mutation R_{a2} a1 of an ordered exceptional pair (a1, a2):
// nothing when disjoint, the smoothing through the shared corner when one
// endpoint is shared, and the double smoothing when both are.
ArcClass right_mutation(const Chart& chart, const ArcClass& a1, const ArcClass& a2);
// Left mutation L_{a1} a2, the inverse surgery.
ArcClass left_mutation(const Chart& chart, const ArcClass& a1, const ArcClass& a2);

// Counts how often each intersection case has been exercised, so test runs
// can assert that all of them were.  Atomic: mutations run on orbit worker
// threads.
struct MutationCaseCounters {
  std::atomic<long> disjoint{0};
  std::atomic<long> one_endpoint{0};
  std::atomic<long> two_endpoints{0};
};
MutationCaseCounters& mutation_case_counters();

// Signed generator indices: +i applies sigma_i, -i applies sigma_i^{-1}.
using BraidWord = std::vector<int>;

BraidWord inverse_word(const BraidWord& w);

// Applies the word generator by generator, revalidating each intermediate
// dissection; an invalid intermediate is an internal error, not a data
// condition.
Dissection braid_act(const Dissection& d, const BraidWord& w);
Dissection apply_generator(const Dissection& d, int signed_gen);

// Dehn twist about one boundary component, as a rewrite wrapping every arc
// end on that component once around the collar.  sign=+1 wraps along the
// stored cycle direction, sign=-1 against it; the two are inverse.
Dissection boundary_twist(const Dissection& d, int component, int sign);
ArcClass boundary_twist_arc(const Chart& chart, const ArcClass& cls, int component, int sign);

}  // namespace braidcover

#endif
