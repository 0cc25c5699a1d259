#ifndef BRAIDCOVER_ARCWORD_HPP
#define BRAIDCOVER_ARCWORD_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidcover/chart.hpp"

namespace braidcover {

// Crossing sequence of an embedded arc relative to the chart.  A letter d
// crosses the reference arc arc_of(d), entering from face_of(d) and landing
// in face_of(alpha(d)).  Start and end are corners of the chart.
struct CrossingWord {
  Corner start, end;
  std::vector<int> letters;

  bool operator==(const CrossingWord&) const = default;
};

bool composable(const Chart& chart, const CrossingWord& w);

CrossingWord reversed(const Chart& chart, const CrossingWord& w);

// Removes immediate back-and-forth crossings and slides crossings off arc
// ends at the two endpoints until none remain.  Idempotent; preserves the
// isotopy class.
CrossingWord reduce(const Chart& chart, CrossingWord w);

// Serialization used for canonical keys (also the file payload).
std::string word_key(const CrossingWord& w);

// Isotopy class of an embedded arc: the reduced word, normalized over the
// traversal direction and, for arcs parallel to a reference arc, over the
// two flanking realizations.
class ArcClass {
public:
  // reduces and canonicalizes; throws domain_error on a non-composable word
  // or on a word that collapses to a point
  static ArcClass make(const Chart& chart, CrossingWord w);

  const CrossingWord& word() const { return word_; }
  const std::string& key() const { return key_; }
  int start_point() const { return word_.start.point; }
  int end_point() const { return word_.end.point; }
  bool is_loop() const { return start_point() == end_point(); }
  // endpoint labels (1-based), unordered
  std::pair<int, int> endpoints() const;

  bool operator==(const ArcClass& o) const { return key_ == o.key_; }
  bool operator<(const ArcClass& o) const { return key_ < o.key_; }

private:
  CrossingWord word_;
  std::string key_;
};

// Class of the reference arc itself (the chord flanking it).
ArcClass reference_arc_class(const Chart& chart, int arc);

// Both reduced realizations of a class: the stored word plus, for reference
// parallels, the word pushed across the arc.
std::vector<CrossingWord> realizations(const Chart& chart, const ArcClass& cls);

// Applies the sheet exchange letterwise and re-canonicalizes.
ArcClass deck_image(const Chart& chart, const DeckInvolution& iota, const ArcClass& cls);

struct EndpointSharing {
  int count = 0;  // 0, 1 or 2 shared marked points
  struct PointData {
    int point = 0;            // 0-based
    bool first_before = true;  // first arc's end precedes ccw at this point
  };
  std::vector<PointData> points;
};

// Shared endpoints of two distinct arc classes, with ccw precedence at each
// shared point.  Requires distinct classes and pairwise realizability.
EndpointSharing shares_endpoint(const Chart& chart, const ArcClass& a, const ArcClass& b);

}  // namespace braidcover

#endif
