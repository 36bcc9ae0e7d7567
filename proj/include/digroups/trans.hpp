#pragma once

#include <string>
#include <utility>
#include <vector>

#include "digroups/digroup.hpp"
#include "digroups/hom.hpp"
#include "digroups/perm.hpp"
#include "digroups/perm_group.hpp"

namespace digroups {

inline constexpr int kMaterializationGuard = 5000;

// A point of the product set Delta x Gamma: (k, i) with k in Delta, i in
// Gamma.
using ProductPoint = std::pair<int, int>;

// The non-bijective self-map of Delta x Gamma sending every (k, i) to
// (s, f(i)); determined uniquely by the pair (s, f).
struct LMap {
  int s;          // target point in Delta
  Permutation f;  // group part, a permutation of Gamma

  auto operator<=>(const LMap&) const = default;
};

// (s, f(i)) for any k; throws on out-of-range points.
ProductPoint lmap_apply(const LMap& m, ProductPoint p, int delta_size);

// Function composition collapses to composition of group parts with the
// left target winning: l_{s,f} l_{t,g} = l_{s,fg}.
LMap lmap_compose(const LMap& a, const LMap& b);

// The bijection of Delta x Gamma sending (k, i) to (theta(f)(k), f(i)),
// with the flattened action indexed as k * gamma_size + i.
struct ThetaPermutation {
  Permutation f;       // the inducing group element
  Permutation action;  // on flattened Delta x Gamma
};

struct FormulaReport {
  std::vector<LMap> halo;
  std::vector<LMap> identities;
  std::vector<LMap> target_center;
  std::vector<LMap> source_center;
};

// Candidate subdigroup data: a nonempty subset of Delta that every theta(h)
// maps onto itself, together with a subgroup of the acting group.
struct SubdigroupSpec {
  std::vector<int> omega;
  PermGroup subgroup;
};

// The construction data of a transformation digroup: a group G of
// permutations of Gamma, a homomorphism theta from G into Sym(Delta), and a
// base point of Delta whose l_{base,1} serves as the reference bar-unit.
class TransDigroupSpec {
 public:
  TransDigroupSpec(int gamma_size, int delta_size, PermGroup group,
                   GroupHomomorphism theta, int base_point = 0);

  int gamma_size() const { return gamma_size_; }
  int delta_size() const { return delta_size_; }
  int base_point() const { return base_point_; }
  const PermGroup& group() const { return group_; }
  const GroupHomomorphism& theta() const { return theta_; }

  int order() const { return delta_size_ * group_.order(); }

  // Elements are indexed group-part-major: index = g_idx * |Delta| + s.
  int index_of(const LMap& m) const;
  LMap lmap_at(int idx) const;
  std::string label_of(int idx) const;  // "l[s, one-line f]"

  // x > y and x < y on l-maps (both verified against pointwise composition
  // where the defining equations assert one).
  LMap left_product(const LMap& a, const LMap& b) const;
  LMap right_product(const LMap& a, const LMap& b) const;

  // The theta-permutation induced by f; multiplicativity of f -> action is
  // asserted against every group element at construction.
  ThetaPermutation theta_perm(const Permutation& f) const;

  // theta_perm(f) following b, and a following theta_perm(g); both checked
  // pointwise against actual function composition.
  LMap mixed_compose_left(const Permutation& f, const LMap& b) const;
  LMap mixed_compose_right(const LMap& a, const Permutation& g) const;

  // Closed-form one-sided inverses w.r.t. the bar-unit l_{base,1}.
  struct LMapInverses {
    LMap left_inv;
    LMap right_inv;
  };
  LMapInverses inverse_formulas(const LMap& x) const;

  // Tabulates both products into a Digroup of order |Delta| * |G| (with
  // l-map labels) and validates it.
  Digroup build(int guard = kMaterializationGuard) const;

  // The halo, identities and centers from their closed-form descriptions --
  // no table scans.
  FormulaReport analyze_formulaic() const;

  // Element indices of { l_{s,h} : s in omega, h in sub.subgroup }.
  std::vector<ElementId> materialize_sub(const SubdigroupSpec& sub) const;

  // Decides by materializing and running is_subdigroup; also evaluates the
  // closed-form criterion (omega nonempty and setwise theta(H)-invariant,
  // H a subgroup) and raises InvariantViolation if the two ever disagree.
  bool subdigroup_spec_check(const SubdigroupSpec& sub) const;

 private:
  void check_membership(const LMap& m) const;

  int gamma_size_;
  int delta_size_;
  int base_point_;
  PermGroup group_;
  GroupHomomorphism theta_;
};

}  // namespace digroups
