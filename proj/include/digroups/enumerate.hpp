#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "digroups/digroup.hpp"
#include "digroups/perm_group.hpp"

namespace digroups {

inline constexpr int kBruteGuard = 4;
inline constexpr int kConstructiveGuard = 12;

// One isomorphism class representative plus how it was produced.
struct CatalogEntry {
  Digroup digroup;
  std::string provenance;
};

struct Catalog {
  int order = 0;
  std::string method;  // "brute" or "constructive"
  std::vector<CatalogEntry> classes;
};

// Isomorphism-invariant key: an invariant vector (order, halo size, identity
// count, center sizes, sorted element profiles) plus, when small enough to
// compute, the lexicographically minimal relabeled table serialization.
// Equal keys never decide isomorphism; unequal keys do decide
// non-isomorphism.
struct CanonicalKey {
  std::vector<long long> invariants;
  std::string table_form;  // empty when the minimization was skipped

  auto operator<=>(const CanonicalKey&) const = default;
};
CanonicalKey canonical_key(const Digroup& d);

// One representative per isomorphism class of digroups of order n, found by
// backtracking over both tables with incremental law checking.
Catalog brute_enumerate(int n);
// Same, but gives up and returns nullopt once the budget is exhausted.
std::optional<Catalog> brute_enumerate_within(int n,
                                              std::chrono::milliseconds budget);

// One representative per class reachable from the construction data
// (|Delta|, H, theta) over all factorizations n = |Delta| * |H|, all groups H
// of order |H| from the built-in catalog, and all homomorphisms theta.
Catalog constructive_enumerate(int n, int guard = kConstructiveGuard);

struct CrossCheck {
  int order = 0;
  bool matched = false;
  std::size_t brute_count = 0;
  std::size_t constructive_count = 0;
  // (brute class index, constructive class index) pairs.
  std::vector<std::pair<int, int>> matching;
  std::string mismatch;  // description when !matched
};
// Runs both methods and pairs up their classes by isomorphism.
CrossCheck cross_check(int n);

// Named permutation groups covering every group of order <= 12, listed by
// (order, name).  Cyclic, dihedral and product groups act naturally; groups
// without a small faithful natural action use their regular representation.
struct NamedGroup {
  std::string name;
  PermGroup group;
};
const std::vector<NamedGroup>& small_groups();
std::vector<const NamedGroup*> small_groups_of_order(int m);

// The digroup with both products equal to the group product.
Digroup group_digroup(const PermGroup& g);

}  // namespace digroups
