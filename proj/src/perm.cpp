#include "braidcover/perm.hpp"

#include <algorithm>
#include <functional>

namespace braidcover {

Permutation Permutation::identity(int m) {
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
      throw domain_error("not a bijection");
    seen[v - 1] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[image_[i] - 1] = i + 1;
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw domain_error("compose: mismatched label sets");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = q.apply(p.apply(i + 1));
  return Permutation(std::move(img));
}

Transposition::Transposition(int a, int b) {
  if (a == b) throw domain_error("transposition needs two distinct labels");
  x = std::min(a, b);
  y = std::max(a, b);
  if (x < 1) throw domain_error("labels are 1-based");
}

Permutation Transposition::as_permutation(int m) const {
  if (y > m) throw domain_error("transposition exceeds label set");
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = apply(i + 1);
  return Permutation(std::move(img));
}

Transposition conjugate(const Transposition& t, const Transposition& s) {
  return Transposition(s.apply(t.x), s.apply(t.y));
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  for (const auto& c : cycles_of(p)) ct.parts.push_back(static_cast<int>(c.size()));
  std::sort(ct.parts.begin(), ct.parts.end(), std::greater<int>());
  return ct;
}

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.degree(), 0);
  for (int s = 1; s <= p.degree(); ++s) {
    if (seen[s - 1]) continue;
    std::vector<int> cyc;
    int v = s;
    do {
      cyc.push_back(v);
      seen[v - 1] = 1;
      v = p.apply(v);
    } while (v != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string CycleType::str() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += "+";
    s += std::to_string(parts[i]);
  }
  return s;
}

}  // namespace braidcover
