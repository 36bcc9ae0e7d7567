#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "digroups/digroup.hpp"
#include "digroups/enumerate.hpp"
#include "digroups/errors.hpp"
#include "digroups/trans.hpp"
#include "support.hpp"

using namespace digroups;
using namespace testsupport;

namespace {

// Gamma = Delta = {0,1}, G = Sym2, theta the isomorphism, base 0.
TransDigroupSpec ex4_spec() {
  const PermGroup sym2 = PermGroup::symmetric(2);
  GroupHomomorphism theta = GroupHomomorphism::from_generator_images(
      sym2, 2, {Permutation({1, 0})});
  return TransDigroupSpec(2, 2, sym2, std::move(theta), 0);
}

const Permutation kId2 = Permutation::identity(2);
const Permutation kSwap = Permutation({1, 0});

}  // namespace

TEST_CASE("lmap_apply") {
  // The target component wins regardless of k.
  for (int k = 0; k < 2; ++k) {
    CHECK(lmap_apply(LMap{0, kId2}, {k, 0}, 2) == ProductPoint{0, 0});
    CHECK(lmap_apply(LMap{0, kId2}, {k, 1}, 2) == ProductPoint{0, 1});
  }
  CHECK(lmap_apply(LMap{0, kSwap}, {1, 1}, 2) == ProductPoint{0, 0});
  CHECK(lmap_apply(LMap{1, kSwap}, {0, 0}, 2) == ProductPoint{1, 1});
  CHECK_THROWS_AS(lmap_apply(LMap{0, kId2}, {2, 0}, 2), PreconditionError);
  CHECK_THROWS_AS(lmap_apply(LMap{0, kId2}, {0, 5}, 2), PreconditionError);
}

TEST_CASE("lmap_compose examples and pointwise agreement") {
  CHECK(lmap_compose(LMap{0, kSwap}, LMap{1, kSwap}) == LMap{0, kId2});
  CHECK(lmap_compose(LMap{1, kId2}, LMap{0, kSwap}) == LMap{1, kSwap});
  CHECK(lmap_compose(LMap{1, kSwap}, LMap{0, kId2}) == LMap{1, kSwap});

  const std::vector<LMap> all = {LMap{0, kId2}, LMap{1, kId2}, LMap{0, kSwap},
                                 LMap{1, kSwap}};
  for (const LMap& a : all) {
    for (const LMap& b : all) {
      const LMap c = lmap_compose(a, b);
      for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < 2; ++i) {
          CHECK(lmap_apply(c, {k, i}, 2) ==
                lmap_apply(a, lmap_apply(b, {k, i}, 2), 2));
        }
      }
    }
  }
}

TEST_CASE("theta permutations") {
  const TransDigroupSpec spec = ex4_spec();

  const ThetaPermutation tid = spec.theta_perm(kId2);
  CHECK(tid.action.is_identity());

  const ThetaPermutation tsw = spec.theta_perm(kSwap);
  // (0,1) -> (1,0): flattened 0*2+1 = 1 -> 1*2+0 = 2.
  CHECK(tsw.action(1) == 2);
  CHECK_THROWS_AS(spec.theta_perm(Permutation({0, 1, 2})), PreconditionError);

  // With trivial theta the Delta component never moves.
  const PermGroup sym2 = PermGroup::symmetric(2);
  const TransDigroupSpec triv(2, 2, sym2, GroupHomomorphism::trivial(sym2, 2), 0);
  const ThetaPermutation t = triv.theta_perm(kSwap);
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      CHECK(t.action(k * 2 + i) == k * 2 + kSwap(i));
    }
  }
}

TEST_CASE("mixed compositions") {
  const TransDigroupSpec spec = ex4_spec();
  CHECK(spec.mixed_compose_left(kSwap, LMap{1, kId2}) == LMap{0, kSwap});
  CHECK(spec.mixed_compose_right(LMap{0, kSwap}, kSwap) == LMap{0, kId2});
  CHECK(spec.mixed_compose_left(kId2, LMap{1, kSwap}) == LMap{1, kSwap});
}

TEST_CASE("left and right products") {
  const TransDigroupSpec spec = ex4_spec();
  CHECK(spec.left_product(LMap{0, kSwap}, LMap{1, kSwap}) == LMap{0, kId2});
  CHECK(spec.right_product(LMap{0, kSwap}, LMap{0, kId2}) == LMap{1, kSwap});
  // Bar-unit law: l[s,1] < x = x.
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      for (const Permutation& g : {kId2, kSwap}) {
        CHECK(spec.right_product(LMap{s, kId2}, LMap{t, g}) == LMap{t, g});
      }
    }
  }
}

TEST_CASE("build materializes the frozen ex4 tables") {
  const Digroup d = ex4_spec().build();
  auto [l, r] = ex4_tables();
  CHECK(d.left_table() == l);
  CHECK(d.right_table() == r);
  CHECK(d.halo().size() == 2);
  CHECK(identities(d).empty());
  CHECK(d.label(3) == "l[1, 1 0]");
}

TEST_CASE("build guard") {
  CHECK_THROWS_AS(ex4_spec().build(3), GuardError);
}

TEST_CASE("single-point Delta collapses to the group") {
  const PermGroup sym3 = PermGroup::symmetric(3);
  const TransDigroupSpec spec(3, 1, sym3, GroupHomomorphism::trivial(sym3, 1), 0);
  const Digroup d = spec.build();
  CHECK(d.left_table() == d.right_table());
  CHECK(d.left_table() == group_digroup(sym3).left_table());
  CHECK(find_isomorphism(d, group_digroup(sym3)).has_value());
}

TEST_CASE("trivial group gives the projection digroup") {
  const PermGroup triv = PermGroup::trivial(1);
  const TransDigroupSpec spec(1, 3, triv, GroupHomomorphism::trivial(triv, 3), 0);
  const Digroup d = spec.build();
  CHECK(d.left_table() == projection_digroup(3).left_table());
  CHECK(d.right_table() == projection_digroup(3).right_table());
}

TEST_CASE("inverse formulas") {
  const TransDigroupSpec spec = ex4_spec();

  for (int s = 0; s < 2; ++s) {
    const auto inv = spec.inverse_formulas(LMap{s, kId2});
    CHECK(inv.left_inv == LMap{0, kId2});
    CHECK(inv.right_inv == LMap{0, kId2});
  }
  const auto inv = spec.inverse_formulas(LMap{0, kSwap});
  CHECK(inv.left_inv == LMap{0, kSwap});
  CHECK(inv.right_inv == LMap{1, kSwap});

  // They satisfy the defining equations and match the table scan.
  const Digroup d = spec.build();
  const ElementId e = spec.index_of(LMap{spec.base_point(), kId2});
  for (int idx = 0; idx < spec.order(); ++idx) {
    const LMap x = spec.lmap_at(idx);
    const auto pair = spec.inverse_formulas(x);
    CHECK(spec.index_of(spec.left_product(pair.left_inv, x)) == e);
    CHECK(spec.index_of(spec.right_product(x, pair.right_inv)) == e);
    const InversePair scanned = inverses(d, idx, e);
    CHECK(spec.index_of(pair.left_inv) == scanned.left_inv);
    CHECK(spec.index_of(pair.right_inv) == scanned.right_inv);
  }

  // Trivial theta: both inverses coincide for every element.
  const PermGroup sym2 = PermGroup::symmetric(2);
  const TransDigroupSpec triv(2, 2, sym2, GroupHomomorphism::trivial(sym2, 2), 0);
  for (int idx = 0; idx < triv.order(); ++idx) {
    const auto p = triv.inverse_formulas(triv.lmap_at(idx));
    CHECK(p.left_inv == p.right_inv);
    CHECK(p.left_inv.s == 0);
  }
}

TEST_CASE("formulaic analysis of ex4") {
  const FormulaReport rep = ex4_spec().analyze_formulaic();
  CHECK(rep.halo == std::vector<LMap>{LMap{0, kId2}, LMap{1, kId2}});
  CHECK(rep.identities.empty());
  CHECK(rep.target_center == rep.halo);
  CHECK(rep.source_center.empty());
}

TEST_CASE("formulaic analysis degenerate cases") {
  // Trivial theta on an abelian group: identities = halo, centers = all.
  const PermGroup c4 = PermGroup::closure(4, {Permutation({1, 2, 3, 0})});
  const TransDigroupSpec spec(4, 2, c4, GroupHomomorphism::trivial(c4, 2), 0);
  const FormulaReport rep = spec.analyze_formulaic();
  CHECK(rep.identities == rep.halo);
  CHECK(rep.target_center.size() == static_cast<std::size_t>(spec.order()));
  CHECK(rep.source_center.size() == static_cast<std::size_t>(spec.order()));

  // |Delta| = 1: the halo is a single l-map and both centers come from the
  // group center.
  const PermGroup sym3 = PermGroup::symmetric(3);
  const TransDigroupSpec line(3, 1, sym3, GroupHomomorphism::trivial(sym3, 1), 0);
  const FormulaReport lrep = line.analyze_formulaic();
  CHECK(lrep.halo.size() == 1);
  CHECK(lrep.target_center.size() == 1);  // Z(S3) is trivial
  CHECK(lrep.target_center == lrep.source_center);
}

TEST_CASE("formulaic analysis equals the table scans") {
  // A small sweep; the acceptance suite runs the full matrix.
  for (int gamma = 1; gamma <= 2; ++gamma) {
    const PermGroup sym = PermGroup::symmetric(gamma);
    for (const PermGroup& g : all_subgroups(sym)) {
      for (int delta = 1; delta <= 3; ++delta) {
        for (const GroupHomomorphism& theta : all_homomorphisms(g, delta)) {
          const TransDigroupSpec spec(gamma, delta, g, theta, 0);
          const Digroup d = spec.build();
          const FormulaReport rep = spec.analyze_formulaic();
          auto to_ids = [&](const std::vector<LMap>& ms) {
            std::vector<ElementId> ids;
            for (const LMap& m : ms) ids.push_back(spec.index_of(m));
            std::sort(ids.begin(), ids.end());
            return ids;
          };
          CHECK(to_ids(rep.halo) == d.halo());
          CHECK(to_ids(rep.identities) == identities(d));
          const CentersPair c = centers(d);
          CHECK(to_ids(rep.target_center) == c.target);
          CHECK(to_ids(rep.source_center) == c.source);
        }
      }
    }
  }
}

TEST_CASE("subdigroup specs") {
  const TransDigroupSpec spec = ex4_spec();
  const PermGroup whole = spec.group();
  const PermGroup unit = PermGroup::trivial(2);

  CHECK(spec.subdigroup_spec_check({{0, 1}, whole}));   // everything
  CHECK_FALSE(spec.subdigroup_spec_check({{0}, whole}));  // theta moves 0
  CHECK(spec.subdigroup_spec_check({{0, 1}, unit}));    // the halo
  CHECK(spec.subdigroup_spec_check({{0}, unit}));
  CHECK_FALSE(spec.subdigroup_spec_check({{}, whole}));

  CHECK(spec.materialize_sub({{0, 1}, unit}) == std::vector<ElementId>{0, 1});
  CHECK(spec.materialize_sub({{0, 1}, whole}) ==
        std::vector<ElementId>{0, 1, 2, 3});
}

TEST_CASE("subdigroups are exactly the block-times-subgroup sets") {
  // Both directions of the correspondence, exhaustively over every
  // construction with |Gamma| <= 3, |Delta| <= 3, every subgroup of
  // Sym(Gamma) and every theta: the subsets passing the subdigroup search
  // coincide with the materializations of the valid (omega, H) pairs.
  // subdigroup_spec_check itself raises if the block criterion ever
  // disagrees with the materialized check.
  int specs_checked = 0;
  for (int gamma = 1; gamma <= 3; ++gamma) {
    const PermGroup sym = PermGroup::symmetric(gamma);
    for (const PermGroup& g : all_subgroups(sym)) {
      for (int delta = 1; delta <= 3; ++delta) {
        for (const GroupHomomorphism& theta : all_homomorphisms(g, delta)) {
          const TransDigroupSpec spec(gamma, delta, g, theta, 0);
          const Digroup d = spec.build();
          std::set<std::vector<ElementId>> from_specs;
          for (const PermGroup& h : all_subgroups(spec.group())) {
            for (int mask = 1; mask < (1 << spec.delta_size()); ++mask) {
              std::vector<int> omega;
              for (int s = 0; s < spec.delta_size(); ++s) {
                if (mask & (1 << s)) omega.push_back(s);
              }
              const SubdigroupSpec sub{omega, h};
              if (spec.subdigroup_spec_check(sub)) {
                from_specs.insert(spec.materialize_sub(sub));
              }
            }
          }
          const auto found = all_subdigroups(d, /*guard=*/spec.order());
          const std::set<std::vector<ElementId>> from_search(found.begin(),
                                                             found.end());
          CHECK(from_specs == from_search);
          ++specs_checked;
        }
      }
    }
  }
  CHECK(specs_checked == 55);
}

TEST_CASE("spec construction rejects inconsistent data") {
  const PermGroup sym2 = PermGroup::symmetric(2);
  GroupHomomorphism theta = GroupHomomorphism::trivial(sym2, 2);
  CHECK_THROWS_AS(TransDigroupSpec(3, 2, sym2, theta, 0), PreconditionError);
  CHECK_THROWS_AS(TransDigroupSpec(2, 3, sym2, theta, 0), PreconditionError);
  CHECK_THROWS_AS(TransDigroupSpec(2, 2, sym2, theta, 2), PreconditionError);
}
