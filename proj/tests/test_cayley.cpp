#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "digroups/cayley.hpp"
#include "digroups/digroup.hpp"
#include "digroups/enumerate.hpp"
#include "digroups/errors.hpp"
#include "support.hpp"

using namespace digroups;
using namespace testsupport;

TEST_CASE("translation group of a group digroup is regular") {
  for (int n : {2, 3, 5}) {
    const Digroup d = cyclic_digroup(n);
    const TranslationGroup t = translation_group(d, 0);
    CHECK(static_cast<int>(t.partition.fibers.size()) == n);
    CHECK(t.group.order() == n);
    for (ElementId f = 0; f < n; ++f) {
      for (int x = 0; x < n; ++x) CHECK(t.rep[f](x) == (f + x) % n);
    }
  }
}

TEST_CASE("translation group of a projection digroup is trivial") {
  const Digroup p4 = projection_digroup(4);
  const TranslationGroup t = translation_group(p4, 0);
  CHECK(t.partition.fibers.size() == 1);
  CHECK(t.group.order() == 1);
}

TEST_CASE("translation group of ex4") {
  const TranslationGroup t = translation_group(ex4_digroup(), 0);
  CHECK(t.partition.fibers.size() == 2);
  CHECK(t.group.order() == 2);
  CHECK(t.halo_order == std::vector<ElementId>{0, 1});
  CHECK(t.rep[0].is_identity());
  CHECK(t.rep[2] == Permutation({1, 0}));
}

TEST_CASE("theta maps translations to halo permutations") {
  // Group: everything lands on the trivial permutation of the one-point halo.
  const TranslationGroup tg = translation_group(cyclic_digroup(4), 0);
  const GroupHomomorphism th = theta_hom(tg);
  CHECK(th.codomain_degree() == 1);
  for (const Permutation& p : th.image()) CHECK(p.is_identity());

  // ex4: the non-identity translation swaps the two bar-units.
  const TranslationGroup te = translation_group(ex4_digroup(), 0);
  const GroupHomomorphism the = theta_hom(te);
  CHECK(the(te.rep[2]) == Permutation({1, 0}));
  CHECK(the(te.rep[0]).is_identity());

  // Projection: trivial group, trivial theta, halo of full size.
  const TranslationGroup tp = translation_group(projection_digroup(3), 0);
  const GroupHomomorphism thp = theta_hom(tp);
  CHECK(thp.domain().order() == 1);
  CHECK(thp.codomain_degree() == 3);
}

TEST_CASE("embedding a group digroup recovers the regular representation") {
  const PermGroup s3 = PermGroup::symmetric(3);
  const Digroup d = group_digroup(s3);
  const Embedding e = embed(d, 0);
  CHECK(e.spec.delta_size() == 1);
  CHECK(e.spec.gamma_size() == 6);
  CHECK(e.verified.all_passed());
  for (ElementId x = 0; x < d.order(); ++x) {
    CHECK(e.map[x].s == 0);
    // The group part is left multiplication by x on element indices.
    for (int g = 0; g < d.order(); ++g) {
      CHECK(e.map[x].f(g) == d.lp(x, g));
    }
  }
}

TEST_CASE("embedding ex4") {
  const Digroup ex4 = ex4_digroup();
  const Embedding e = embed(ex4, 0);
  CHECK(e.spec.delta_size() == 2);
  CHECK(e.spec.gamma_size() == 2);
  CHECK(e.verified.all_passed());

  // The reference bar-unit lands on the target's bar-unit l[0, 1].
  CHECK(e.map[0] == LMap{0, Permutation::identity(2)});
  // l[1,swap] decomposes over the bar-unit indexed 1 with a swapping
  // translation.
  CHECK(e.map[3] == LMap{1, Permutation({1, 0})});
}

TEST_CASE("embedding a projection digroup") {
  const Digroup p2 = projection_digroup(2);
  const Embedding e = embed(p2, 0);
  CHECK(e.spec.gamma_size() == 1);
  CHECK(e.spec.delta_size() == 2);
  CHECK(e.verified.all_passed());
}

TEST_CASE("verify_embedding re-runs cleanly") {
  const Digroup ex4 = ex4_digroup();
  const Embedding e = embed(ex4, 0);
  const EmbeddingEvidence ev = verify_embedding(ex4, e);
  CHECK(ev.all_passed());
  CHECK(ev.failure.empty());
}

TEST_CASE("embedding with any bar-unit gives isomorphic targets") {
  for (const Digroup& d : {ex4_digroup(), projection_digroup(3),
                           trivial_theta4_digroup()}) {
    const Embedding base = embed(d, d.halo().front());
    const Digroup base_target = base.spec.build();
    for (ElementId e : d.halo()) {
      const Embedding other = embed(d, e);
      CHECK(other.verified.all_passed());
      CHECK(find_isomorphism(other.spec.build(), base_target).has_value());
    }
  }
}

TEST_CASE("order factorization holds on the small catalog") {
  for (int n = 1; n <= 4; ++n) {
    for (const CatalogEntry& entry : constructive_enumerate(n).classes) {
      const Digroup& d = entry.digroup;
      const Embedding e = embed(d, d.least_bar_unit());
      CHECK(e.verified.all_passed());
      CHECK(d.order() ==
            static_cast<int>(d.halo().size()) * e.spec.group().order());
    }
  }
}
