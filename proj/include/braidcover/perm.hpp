#ifndef BRAIDCOVER_PERM_HPP
#define BRAIDCOVER_PERM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcover {

struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Labels are 1..m.  All permutations over the same label set are stored as
// image arrays indexed by label-1.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int m);
  // image[i] = image of label i+1
  explicit Permutation(std::vector<int> image);

  int degree() const { return static_cast<int>(image_.size()); }
  int apply(int label) const { return image_[label - 1]; }

  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation& o) const = default;

private:
  std::vector<int> image_;
};

// apply p first, then q
Permutation compose(const Permutation& p, const Permutation& q);

struct Transposition {
  int x = 1, y = 2;  // normalized x < y

  Transposition() = default;
  Transposition(int a, int b);

  int apply(int label) const { return label == x ? y : label == y ? x : label; }
  Permutation as_permutation(int m) const;

  bool operator==(const Transposition&) const = default;
  auto operator<=>(const Transposition&) const = default;
};

// conjugate of t by s: maps s(x) <-> s(y)
Transposition conjugate(const Transposition& t, const Transposition& s);

// Multiset of cycle lengths, stored descending; parts sum to m.
struct CycleType {
  std::vector<int> parts;
  bool operator==(const CycleType&) const = default;
  std::string str() const;
};

CycleType cycle_type(const Permutation& p);
std::vector<std::vector<int>> cycles_of(const Permutation& p);  // each cycle starts at its min label

}  // namespace braidcover

#endif
