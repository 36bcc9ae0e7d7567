#pragma once

#include <string>
#include <vector>

#include "digroups/digroup.hpp"
#include "digroups/hom.hpp"
#include "digroups/perm_group.hpp"
#include "digroups/trans.hpp"

namespace digroups {

// The left translations x -> f < x of a digroup, acting on the fibers of its
// partition w.r.t. a chosen bar-unit.  halo_order lists the halo with the
// chosen bar-unit first; it is the Delta ordering every downstream
// construction uses.
struct TranslationGroup {
  Digroup source;
  FiberPartition partition;
  PermGroup group;               // distinct translations, on fiber indices
  std::vector<Permutation> rep;  // rep[x] = translation by element x
  std::vector<ElementId> halo_order;
};

TranslationGroup translation_group(const Digroup& d, ElementId bar_unit);

// theta: translation -> psi restricted to the halo (in halo_order).  Asserts
// well-definedness (elements with equal translations induce equal psi maps)
// and verifies multiplicativity exhaustively.
GroupHomomorphism theta_hom(const TranslationGroup& t);

struct EmbeddingEvidence {
  bool injective = false;
  bool left_product_preserved = false;
  bool right_product_preserved = false;
  bool surjective = false;
  bool order_factorization = false;
  std::string failure;  // witness description when a check fails

  bool all_passed() const {
    return injective && left_product_preserved && right_product_preserved &&
           surjective && order_factorization;
  }
};

// The map x -> l_{position of halo factor, translation of x} onto the
// transformation digroup built from the translation group.  verified holds
// complete evidence: an Embedding is only returned once every check ran.
struct Embedding {
  TransDigroupSpec spec;
  std::vector<LMap> map;               // map[x] = image of element x
  std::vector<ElementId> delta_order;  // Delta index -> halo element
  EmbeddingEvidence verified;
};

Embedding embed(const Digroup& d, ElementId bar_unit);

// Re-runs all checks: injectivity, preservation of both products,
// surjectivity onto the materialized target, and the order factorization
// |G| = |halo| * |translation group|.
EmbeddingEvidence verify_embedding(const Digroup& d, const Embedding& e);

}  // namespace digroups
