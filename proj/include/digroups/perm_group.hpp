#pragma once

#include <span>
#include <vector>

#include "digroups/perm.hpp"

namespace digroups {

inline constexpr int kSymmetricGroupGuard = 6;

// A finite permutation group stored as its full, sorted element set together
// with a generating set.  Intended for catalog-scale groups where exhaustive
// quantification over elements is the point.
class PermGroup {
 public:
  static PermGroup trivial(int degree);
  // Smallest group containing the generators, by breadth-first closure.
  static PermGroup closure(int degree, const std::vector<Permutation>& generators);
  static PermGroup symmetric(int degree, int guard = kSymmetricGroupGuard);
  // Wraps an explicit element set; verifies closure under product and inverse
  // and that the generators generate the whole set.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements,
                                 std::vector<Permutation> generators);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(int idx) const { return elements_[idx]; }
  const Permutation& identity() const;

  bool contains(const Permutation& p) const;
  // Position of p in the sorted element list, or -1.
  int index_of(const Permutation& p) const;

  std::vector<Permutation> center() const;
  bool is_subgroup_of(const PermGroup& g) const;

  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

 private:
  PermGroup(int degree, std::vector<Permutation> elements,
            std::vector<Permutation> generators);

  int degree_;
  std::vector<Permutation> elements_;   // sorted ascending
  std::vector<Permutation> generators_;
};

// True iff every permutation in the set fixes the point s.
bool fixes_point(std::span<const Permutation> perms, int s);

// Every subgroup of g, by closure propagation from the trivial subgroup.
// Sorted by (order, element list).  Exhaustive, so only for small groups.
std::vector<PermGroup> all_subgroups(const PermGroup& g);

// A small deterministic generating set for g (greedy, <= log2 |G| members).
std::vector<Permutation> minimal_generating_set(const PermGroup& g);

}  // namespace digroups
