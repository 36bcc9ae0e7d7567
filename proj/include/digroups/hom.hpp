#pragma once

#include <vector>

#include "digroups/perm.hpp"
#include "digroups/perm_group.hpp"

namespace digroups {

// A group homomorphism from an explicit-element permutation group into the
// symmetric group on {0, ..., codomain_degree-1}, stored as the full
// element-to-image table.  The multiplicative law map(fg) = map(f) map(g) is
// verified over the whole multiplication table at construction time.
class GroupHomomorphism {
 public:
  // Extends generator images multiplicatively to the whole group.  Throws
  // HomomorphismError if the same element is reached by two words with
  // different images, or if the extension fails the full-table check.
  static GroupHomomorphism from_generator_images(
      const PermGroup& domain, int codomain_degree,
      const std::vector<Permutation>& generator_images);

  // Wraps a complete mapping (parallel to domain.elements()), verifying it.
  static GroupHomomorphism from_element_images(PermGroup domain,
                                               int codomain_degree,
                                               std::vector<Permutation> images);

  static GroupHomomorphism trivial(PermGroup domain, int codomain_degree);

  const PermGroup& domain() const { return domain_; }
  int codomain_degree() const { return codomain_degree_; }

  const Permutation& operator()(const Permutation& g) const;
  const Permutation& image_at(int element_index) const {
    return images_[element_index];
  }

  std::vector<Permutation> kernel() const;
  std::vector<Permutation> image() const;

  bool operator==(const GroupHomomorphism& other) const {
    return domain_ == other.domain_ &&
           codomain_degree_ == other.codomain_degree_ &&
           images_ == other.images_;
  }

 private:
  GroupHomomorphism(PermGroup domain, int codomain_degree,
                    std::vector<Permutation> images);

  PermGroup domain_;
  int codomain_degree_;
  std::vector<Permutation> images_;  // images_[i] = image of domain.element(i)
};

// Every homomorphism from the domain into Sym(codomain_degree), enumerated by
// assigning each generator of a small generating set an image whose order
// divides the generator's order, then verifying the extension.  Deterministic
// order.
std::vector<GroupHomomorphism> all_homomorphisms(const PermGroup& domain,
                                                 int codomain_degree);

}  // namespace digroups
