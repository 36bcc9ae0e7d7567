#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "digroups/perm.hpp"

namespace digroups {

// Dense element index in [0, n).  Labels, when present, are display-only.
using ElementId = int;

inline constexpr int kSubdigroupGuard = 16;

// A total n-by-n operation table: at(x, y) is the product of row element x
// and column element y.
class OpTable {
 public:
  // Validates shape and range; throws ParseError otherwise (a structural
  // error, as opposed to an algebra that fails the digroup laws).
  static OpTable from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  ElementId at(ElementId x, ElementId y) const { return cells_[x * n_ + y]; }
  std::vector<std::vector<int>> rows() const;

  bool operator==(const OpTable&) const = default;

 private:
  OpTable(int n, std::vector<ElementId> cells)
      : n_(n), cells_(std::move(cells)) {}

  int n_;
  std::vector<ElementId> cells_;  // row-major
};

// One failed law instance.  law is one of "1.1a", "1.1b", "1.2", "1.3a",
// "1.3b" (witness = the triple x,y,z), "bar-unit" (no witness), or
// "left-inverse"/"right-inverse" (witness = the element without one).
struct Violation {
  std::string law;
  std::vector<ElementId> witness;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;  // first witness per law
  std::vector<ElementId> halo;        // ascending

  bool operator==(const ValidationReport&) const = default;
};

// Checks the five diassociativity identities over all triples, bar-unit
// existence, and one-sided inverse existence for every element.
ValidationReport validate_digroup(const OpTable& left, const OpTable& right);

// Thrown when tables that fail the laws are used where a digroup is required.
struct InvalidDigroup : std::runtime_error {
  explicit InvalidDigroup(ValidationReport r);
  ValidationReport report;
};

// A finite digroup: a carrier {0..n-1} with a left product table (x > y) and
// a right product table (x < y).  Instances are only created after
// validate_digroup succeeds, so every Digroup value satisfies the laws.
class Digroup {
 public:
  // Throws InvariantViolation carrying the violation list when the tables do
  // not form a digroup.
  static Digroup from_tables(OpTable left, OpTable right,
                             std::vector<std::string> labels = {});

  int order() const { return left_.size(); }
  ElementId lp(ElementId x, ElementId y) const { return left_.at(x, y); }
  ElementId rp(ElementId x, ElementId y) const { return right_.at(x, y); }
  const OpTable& left_table() const { return left_; }
  const OpTable& right_table() const { return right_; }

  const std::vector<ElementId>& halo() const { return halo_; }
  bool is_bar_unit(ElementId a) const;
  ElementId least_bar_unit() const { return halo_.front(); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(ElementId x) const;

  bool operator==(const Digroup& other) const {
    return left_ == other.left_ && right_ == other.right_;
  }

 private:
  Digroup(OpTable left, OpTable right, std::vector<ElementId> halo,
          std::vector<std::string> labels)
      : left_(std::move(left)),
        right_(std::move(right)),
        halo_(std::move(halo)),
        labels_(std::move(labels)) {}

  OpTable left_;
  OpTable right_;
  std::vector<ElementId> halo_;
  std::vector<std::string> labels_;
};

// The unique solutions of left_inv > x = wrt = x < right_inv.
struct InversePair {
  ElementId left_inv;
  ElementId right_inv;
  ElementId wrt;

  bool operator==(const InversePair&) const = default;
};

// Requires bar_unit in halo(d).  Uniqueness of both solutions is asserted.
InversePair inverses(const Digroup& d, ElementId x, ElementId bar_unit);

// Bar-units e with e > x = x < e for all x.  Also computed through the
// inverse characterization (left and right inverses coincide) and the two
// must agree.
std::vector<ElementId> identities(const Digroup& d);

struct CentersPair {
  std::vector<ElementId> target;  // z with z < x = x > z for all x
  std::vector<ElementId> source;  // z with x < z = z > x for all x

  bool operator==(const CentersPair&) const = default;
};
CentersPair centers(const Digroup& d);

// True iff subset meets the halo, is closed under both products, and the
// restricted tables again pass validate_digroup.
bool is_subdigroup(const Digroup& d, const std::vector<ElementId>& subset);

// All subdigroups, by closure propagation from each halo element.  Sorted by
// (size, elements).  Guarded against large carriers.
std::vector<std::vector<ElementId>> all_subdigroups(const Digroup& d,
                                                    int guard = kSubdigroupGuard);

// A bijection preserving both tables (result[x] is the image of x), or
// nullopt.  Deterministic: first map found under lexicographic backtracking.
std::optional<std::vector<ElementId>> find_isomorphism(const Digroup& a,
                                                       const Digroup& b);

// The partition of the carrier by the kernel of g -> e > g.  Fibers are
// ascending and ordered by their least member; representative_of[i] is the
// common value e > g over fibers[i].
struct FiberPartition {
  ElementId wrt;
  std::vector<std::vector<ElementId>> fibers;
  std::vector<ElementId> representative_of;
  std::vector<int> fiber_index;  // element -> fiber position

  int fiber_of(ElementId x) const { return fiber_index[x]; }
};
FiberPartition fiber_partition(const Digroup& d, ElementId bar_unit);

// The permutation of fiber indices induced by x -> f < x.  Asserts that each
// fiber lands inside a single fiber and that the induced map is a bijection.
Permutation left_translation(const Digroup& d, ElementId f,
                             const FiberPartition& p);

// x -> f < x > f_inv, using the left inverse of f w.r.t. the least bar-unit.
// Asserts the right-inverse variant gives the same map and that the halo is
// carried onto itself.
std::vector<ElementId> psi_map(const Digroup& d, ElementId f);

// The restriction of psi_map to the halo, as a permutation of halo positions
// in ascending element order.
Permutation psi(const Digroup& d, ElementId f);

// x written as halo_factor > rest with halo_factor a bar-unit, via
// halo_factor = x > left_inverse_of(x) and rest = e > x.  Asserts the
// factorization and that no other bar-unit admits one.
struct Decomposition {
  ElementId halo_factor;
  ElementId rest;

  bool operator==(const Decomposition&) const = default;
};
Decomposition decompose(const Digroup& d, ElementId x, ElementId bar_unit);

// Isomorphism-invariant data of a single element, used for search pruning
// and canonical keys.  index/period describe the cyclic sub-semigroup the
// element generates under each product.
struct ElementProfile {
  int left_index = 0;
  int left_period = 0;
  int right_index = 0;
  int right_period = 0;
  bool in_halo = false;
  bool is_identity = false;
  bool in_target_center = false;
  bool in_source_center = false;

  auto operator<=>(const ElementProfile&) const = default;
};
std::vector<ElementProfile> element_profiles(const Digroup& d);

}  // namespace digroups
