#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "digroups/errors.hpp"
#include "digroups/hom.hpp"
#include "digroups/perm.hpp"
#include "digroups/perm_group.hpp"

using namespace digroups;

namespace {

Permutation perm(std::vector<int> im) { return Permutation(std::move(im)); }

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK(perm({1, 0}).degree() == 2);
  CHECK_THROWS_AS(perm({0, 0}), ParseError);
  CHECK_THROWS_AS(perm({0, 2}), ParseError);
  CHECK_THROWS_AS(perm({}), ParseError);

  CHECK(Permutation::identity(3).is_identity());
  CHECK(perm({1, 2, 0}).order() == 3);
  CHECK(perm({1, 0}).order() == 2);
}

TEST_CASE("composition follows function application") {
  const Permutation swap = perm({1, 0});
  CHECK((swap * swap).is_identity());

  const Permutation c3 = perm({1, 2, 0});
  CHECK(c3 * c3 == perm({2, 0, 1}));
  CHECK(c3 * Permutation::identity(3) == c3);
  CHECK_THROWS_AS(swap * c3, PreconditionError);

  // (p * q)(i) = p(q(i)) on a non-commuting pair.
  const Permutation t01 = Permutation::transposition(3, 0, 1);
  const Permutation pq = t01 * c3;
  for (int i = 0; i < 3; ++i) CHECK(pq(i) == t01(c3(i)));
}

TEST_CASE("inverse") {
  CHECK(Permutation::identity(4).inverse().is_identity());
  CHECK(perm({1, 2, 0}).inverse() == perm({2, 0, 1}));
  CHECK(perm({1, 0}).inverse() == perm({1, 0}));

  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> im(6);
    for (int i = 0; i < 6; ++i) im[i] = i;
    std::shuffle(im.begin(), im.end(), rng);
    const Permutation p(im);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("one-line and cycle rendering") {
  CHECK(perm({1, 0, 2}).one_line() == "1 0 2");
  CHECK(perm({1, 0, 2}).cycles() == "(0 1)");
  CHECK(Permutation::identity(2).cycles() == "()");
  CHECK(perm({1, 2, 0, 4, 3}).cycles() == "(0 1 2)(3 4)");
}

TEST_CASE("closure") {
  CHECK(PermGroup::closure(2, {}).order() == 1);
  CHECK(PermGroup::closure(3, {perm({1, 2, 0})}).order() == 3);
  CHECK(PermGroup::closure(3, {perm({1, 0, 2}), perm({1, 2, 0})}).order() == 6);
  CHECK_THROWS_AS(PermGroup::closure(3, {perm({1, 0})}), PreconditionError);

  // Idempotent: closing the closed element set changes nothing.
  const PermGroup s3 = PermGroup::closure(3, {perm({1, 0, 2}), perm({1, 2, 0})});
  const PermGroup again = PermGroup::closure(3, s3.elements());
  CHECK(again.elements() == s3.elements());
}

TEST_CASE("symmetric group sizes and guard") {
  CHECK(PermGroup::symmetric(1).order() == 1);
  CHECK(PermGroup::symmetric(3).order() == 6);
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK_THROWS_AS(PermGroup::symmetric(7), GuardError);
}

TEST_CASE("subgroup order divides the symmetric group order") {
  for (int degree = 2; degree <= 4; ++degree) {
    const PermGroup sym = PermGroup::symmetric(degree);
    for (const PermGroup& h : all_subgroups(sym)) {
      CHECK(factorial(degree) % h.order() == 0);
      CHECK(h.is_subgroup_of(sym));
    }
  }
}

TEST_CASE("all_subgroups of S3") {
  const PermGroup s3 = PermGroup::symmetric(3);
  const std::vector<PermGroup> subs = all_subgroups(s3);
  REQUIRE(subs.size() == 6);
  std::vector<int> orders;
  for (const PermGroup& h : subs) orders.push_back(h.order());
  CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("center") {
  const PermGroup s3 = PermGroup::symmetric(3);
  const auto zs3 = s3.center();
  REQUIRE(zs3.size() == 1);
  CHECK(zs3[0].is_identity());

  const PermGroup c4 = PermGroup::closure(4, {perm({1, 2, 3, 0})});
  CHECK(c4.center().size() == 4);

  CHECK(PermGroup::trivial(2).center().size() == 1);
}

TEST_CASE("fixes_point") {
  const std::vector<Permutation> just_id = {Permutation::identity(3)};
  CHECK(fixes_point(just_id, 0));
  CHECK(fixes_point(just_id, 2));

  const std::vector<Permutation> sw01 = {Permutation::transposition(3, 0, 1)};
  CHECK_FALSE(fixes_point(sw01, 0));
  const std::vector<Permutation> sw12 = {Permutation::transposition(3, 1, 2)};
  CHECK(fixes_point(sw12, 0));
}

TEST_CASE("minimal generating set") {
  const PermGroup s3 = PermGroup::symmetric(3);
  const auto gens = minimal_generating_set(s3);
  CHECK(gens.size() <= 2);
  CHECK(PermGroup::closure(3, gens).order() == 6);

  CHECK(minimal_generating_set(PermGroup::trivial(4)).empty());
}

TEST_CASE("hom: trivial and sign") {
  const PermGroup s3 = PermGroup::closure(3, {perm({1, 0, 2}), perm({1, 2, 0})});

  const GroupHomomorphism triv = GroupHomomorphism::trivial(s3, 2);
  CHECK(triv.kernel().size() == 6);
  CHECK(triv.image().size() == 1);

  // (0 1) -> swap, (0 1 2) -> identity extends to the sign homomorphism.
  const GroupHomomorphism sign = GroupHomomorphism::from_generator_images(
      s3, 2, {perm({1, 0}), Permutation::identity(2)});
  CHECK(sign.kernel().size() == 3);  // the rotation subgroup
  CHECK(sign.image().size() == 2);
  for (const Permutation& f : s3.elements()) {
    for (const Permutation& g : s3.elements()) {
      CHECK(sign(f * g) == sign(f) * sign(g));
    }
  }
}

TEST_CASE("hom: inconsistent images are rejected") {
  const PermGroup c2 = PermGroup::closure(2, {perm({1, 0})});
  // An order-2 generator cannot land on a 3-cycle.
  CHECK_THROWS_AS(
      GroupHomomorphism::from_generator_images(c2, 3, {perm({1, 2, 0})}),
      HomomorphismError);
}

TEST_CASE("hom: kernel and image are subgroups") {
  const PermGroup s3 = PermGroup::symmetric(3);
  for (const GroupHomomorphism& theta : all_homomorphisms(s3, 3)) {
    const auto ker = theta.kernel();
    const PermGroup ker_group = PermGroup::closure(3, ker);
    CHECK(ker_group.order() == static_cast<int>(ker.size()));
    const auto im = theta.image();
    const PermGroup im_group = PermGroup::closure(3, im);
    CHECK(im_group.order() == static_cast<int>(im.size()));
  }
}

TEST_CASE("all_homomorphisms counts") {
  const PermGroup c2 = PermGroup::closure(2, {perm({1, 0})});
  // C2 -> Sym2: trivial and the isomorphism.
  CHECK(all_homomorphisms(c2, 2).size() == 2);
  // C2 -> Sym3: trivial plus one per transposition.
  CHECK(all_homomorphisms(c2, 3).size() == 4);
  // S3 -> Sym3: trivial, three sign-like maps, six embeddings.
  CHECK(all_homomorphisms(PermGroup::symmetric(3), 3).size() == 10);
  // Trivial domain has exactly the trivial map, even past the Sym guard.
  CHECK(all_homomorphisms(PermGroup::trivial(1), 12).size() == 1);
}

TEST_CASE("injective hom has trivial kernel") {
  const PermGroup c3 = PermGroup::closure(3, {perm({1, 2, 0})});
  const GroupHomomorphism emb = GroupHomomorphism::from_generator_images(
      c3, 3, {perm({1, 2, 0})});
  CHECK(emb.kernel().size() == 1);
  CHECK(emb.image().size() == 3);
}
