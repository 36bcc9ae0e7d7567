#pragma once

#include <compare>
#include <string>
#include <vector>

namespace digroups {

// A permutation of {0, ..., degree-1} stored in one-line notation: the image
// of point i is images()[i].  The product p * q is the composite "p following
// q", i.e. (p * q)(i) = p(q(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // The transposition of a and b on the given degree.
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int order() const;
  Permutation inverse() const;

  // Space-separated one-line form, e.g. "1 0 2".
  std::string one_line() const;
  // Cycle form for display, e.g. "(0 1)(2 4)"; "()" for the identity.
  std::string cycles() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace digroups
