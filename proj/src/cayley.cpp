#include "digroups/cayley.hpp"

#include <set>
#include <sstream>

#include "digroups/errors.hpp"

namespace digroups {

TranslationGroup translation_group(const Digroup& d, ElementId bar_unit) {
  TranslationGroup t{d, fiber_partition(d, bar_unit), PermGroup::trivial(1),
                     {}, {}};
  t.rep.reserve(d.order());
  std::set<Permutation> distinct;
  for (ElementId f = 0; f < d.order(); ++f) {
    Permutation lt = left_translation(d, f, t.partition);
    distinct.insert(lt);
    t.rep.push_back(std::move(lt));
  }
  const int degree = static_cast<int>(t.partition.fibers.size());
  std::vector<Permutation> elems(distinct.begin(), distinct.end());
  // The translations are closed under composition (translation by f < g), so
  // they form a group; from_elements picks a small generating set for it.
  t.group = PermGroup::from_elements(degree, std::move(elems), {});

  t.halo_order.push_back(bar_unit);
  for (ElementId a : d.halo()) {
    if (a != bar_unit) t.halo_order.push_back(a);
  }
  return t;
}

GroupHomomorphism theta_hom(const TranslationGroup& t) {
  const Digroup& d = t.source;
  const int h = static_cast<int>(t.halo_order.size());
  std::vector<int> halo_pos(d.order(), -1);
  for (int i = 0; i < h; ++i) halo_pos[t.halo_order[i]] = i;

  auto psi_on_halo = [&](ElementId f) {
    const std::vector<ElementId> full = psi_map(d, f);
    std::vector<int> im(h);
    for (int i = 0; i < h; ++i) {
      const int j = halo_pos[full[t.halo_order[i]]];
      if (j < 0) {
        throw InvariantViolation("psi image left the halo");
      }
      im[i] = j;
    }
    return Permutation(std::move(im));
  };

  // Well-definedness: elements sharing a translation must share psi on the
  // halo.  h >= 1 since a valid digroup always has a bar-unit.
  std::vector<Permutation> images(t.group.order(), Permutation::identity(h));
  std::vector<bool> assigned(t.group.order(), false);
  for (ElementId f = 0; f < d.order(); ++f) {
    const int idx = t.group.index_of(t.rep[f]);
    Permutation p = psi_on_halo(f);
    if (!assigned[idx]) {
      images[idx] = std::move(p);
      assigned[idx] = true;
    } else if (images[idx] != p) {
      throw InvariantViolation(
          "theta is not well-defined: elements with equal translations "
          "induce different halo permutations (element " + std::to_string(f) +
          ")");
    }
  }
  // from_element_images re-verifies multiplicativity over the full table.
  return GroupHomomorphism::from_element_images(t.group, h, std::move(images));
}

Embedding embed(const Digroup& d, ElementId bar_unit) {
  TranslationGroup t = translation_group(d, bar_unit);
  GroupHomomorphism theta = theta_hom(t);

  const int h = static_cast<int>(t.halo_order.size());
  std::vector<int> halo_pos(d.order(), -1);
  for (int i = 0; i < h; ++i) halo_pos[t.halo_order[i]] = i;

  TransDigroupSpec spec(static_cast<int>(t.partition.fibers.size()), h,
                        t.group, std::move(theta), /*base_point=*/0);

  std::vector<LMap> map;
  map.reserve(d.order());
  for (ElementId x = 0; x < d.order(); ++x) {
    const Decomposition dec = decompose(d, x, bar_unit);
    map.push_back(LMap{halo_pos[dec.halo_factor], t.rep[dec.rest]});
  }

  Embedding e{std::move(spec), std::move(map), t.halo_order, {}};
  e.verified = verify_embedding(d, e);
  if (!e.verified.all_passed()) {
    throw InvariantViolation("embedding verification failed: " +
                             e.verified.failure);
  }
  return e;
}

EmbeddingEvidence verify_embedding(const Digroup& d, const Embedding& e) {
  EmbeddingEvidence ev;
  std::ostringstream fail;

  // (a) Injectivity.
  std::set<LMap> seen;
  ev.injective = true;
  for (ElementId x = 0; x < d.order(); ++x) {
    if (!seen.insert(e.map[x]).second) {
      ev.injective = false;
      fail << "duplicate image at element " << x << "; ";
      break;
    }
  }

  // (b) Both products are preserved.
  ev.left_product_preserved = true;
  ev.right_product_preserved = true;
  for (ElementId x = 0; x < d.order() && ev.left_product_preserved &&
                        ev.right_product_preserved;
       ++x) {
    for (ElementId y = 0; y < d.order(); ++y) {
      if (e.spec.left_product(e.map[x], e.map[y]) != e.map[d.lp(x, y)]) {
        ev.left_product_preserved = false;
        fail << "left product not preserved at (" << x << ", " << y << "); ";
        break;
      }
      if (e.spec.right_product(e.map[x], e.map[y]) != e.map[d.rp(x, y)]) {
        ev.right_product_preserved = false;
        fail << "right product not preserved at (" << x << ", " << y << "); ";
        break;
      }
    }
  }

  // (c) The image is the whole constructed transformation digroup, checked
  // explicitly rather than inferred from cardinality.
  ev.surjective = true;
  for (int idx = 0; idx < e.spec.order(); ++idx) {
    if (seen.find(e.spec.lmap_at(idx)) == seen.end()) {
      ev.surjective = false;
      fail << "image misses " << e.spec.label_of(idx) << "; ";
      break;
    }
  }

  // (d) |G| = |halo| * |translation group|.
  ev.order_factorization =
      d.order() == static_cast<int>(d.halo().size()) * e.spec.group().order();
  if (!ev.order_factorization) {
    fail << "order " << d.order() << " != " << d.halo().size() << " * "
         << e.spec.group().order() << "; ";
  }

  ev.failure = fail.str();
  return ev;
}

}  // namespace digroups
