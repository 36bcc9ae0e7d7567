#include "digroups/hom.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "digroups/errors.hpp"

namespace digroups {

namespace {

// Multiplicative extension of generator images across the whole group.
// Returns nullopt when two words for the same element disagree.
std::optional<std::vector<Permutation>> extend_images(
    const PermGroup& domain, const std::vector<Permutation>& gens,
    const std::vector<Permutation>& gen_images, int codomain_degree) {
  std::vector<std::optional<Permutation>> img(domain.order());
  const int id_idx = domain.index_of(Permutation::identity(domain.degree()));
  img[id_idx] = Permutation::identity(codomain_degree);
  std::deque<int> todo = {id_idx};
  while (!todo.empty()) {
    int wi = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Permutation u = domain.element(wi) * gens[k];
      int ui = domain.index_of(u);
      Permutation proposed = *img[wi] * gen_images[k];
      if (!img[ui].has_value()) {
        img[ui] = std::move(proposed);
        todo.push_back(ui);
      } else if (*img[ui] != proposed) {
        return std::nullopt;
      }
    }
  }
  std::vector<Permutation> out;
  out.reserve(domain.order());
  for (auto& o : img) {
    if (!o.has_value()) return std::nullopt;  // gens do not reach this element
    out.push_back(std::move(*o));
  }
  return out;
}

bool full_table_check(const PermGroup& domain,
                      const std::vector<Permutation>& images) {
  for (int i = 0; i < domain.order(); ++i) {
    for (int j = 0; j < domain.order(); ++j) {
      int k = domain.index_of(domain.element(i) * domain.element(j));
      if (images[k] != images[i] * images[j]) return false;
    }
  }
  return true;
}

}  // namespace

GroupHomomorphism::GroupHomomorphism(PermGroup domain, int codomain_degree,
                                     std::vector<Permutation> images)
    : domain_(std::move(domain)),
      codomain_degree_(codomain_degree),
      images_(std::move(images)) {}

GroupHomomorphism GroupHomomorphism::from_generator_images(
    const PermGroup& domain, int codomain_degree,
    const std::vector<Permutation>& generator_images) {
  if (generator_images.size() != domain.generators().size()) {
    throw PreconditionError("expected one image per generator");
  }
  for (const Permutation& p : generator_images) {
    if (p.degree() != codomain_degree) {
      throw PreconditionError("generator image degree mismatch");
    }
  }
  auto images = extend_images(domain, domain.generators(), generator_images,
                              codomain_degree);
  if (!images.has_value()) {
    throw HomomorphismError(
        "generator images are inconsistent: the same element is reached by "
        "words with different images");
  }
  if (!full_table_check(domain, *images)) {
    throw HomomorphismError("extension fails the homomorphism law");
  }
  return GroupHomomorphism(domain, codomain_degree, std::move(*images));
}

GroupHomomorphism GroupHomomorphism::from_element_images(
    PermGroup domain, int codomain_degree, std::vector<Permutation> images) {
  if (static_cast<int>(images.size()) != domain.order()) {
    throw PreconditionError("expected one image per group element");
  }
  for (const Permutation& p : images) {
    if (p.degree() != codomain_degree) {
      throw PreconditionError("image degree mismatch");
    }
  }
  if (!full_table_check(domain, images)) {
    throw HomomorphismError("mapping fails the homomorphism law");
  }
  return GroupHomomorphism(std::move(domain), codomain_degree, std::move(images));
}

GroupHomomorphism GroupHomomorphism::trivial(PermGroup domain,
                                             int codomain_degree) {
  std::vector<Permutation> images(domain.order(),
                                  Permutation::identity(codomain_degree));
  return GroupHomomorphism(std::move(domain), codomain_degree, std::move(images));
}

const Permutation& GroupHomomorphism::operator()(const Permutation& g) const {
  int idx = domain_.index_of(g);
  if (idx < 0) throw PreconditionError("element is not in the domain");
  return images_[idx];
}

std::vector<Permutation> GroupHomomorphism::kernel() const {
  std::vector<Permutation> ker;
  for (int i = 0; i < domain_.order(); ++i) {
    if (images_[i].is_identity()) ker.push_back(domain_.element(i));
  }
  return ker;
}

std::vector<Permutation> GroupHomomorphism::image() const {
  std::vector<Permutation> im = images_;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

std::vector<GroupHomomorphism> all_homomorphisms(const PermGroup& domain,
                                                 int codomain_degree) {
  const std::vector<Permutation> gens = minimal_generating_set(domain);
  if (gens.empty()) {
    return {GroupHomomorphism::trivial(domain, codomain_degree)};
  }
  const PermGroup target = PermGroup::symmetric(codomain_degree);

  // Candidate images per generator: order must divide the generator's order.
  std::vector<std::vector<Permutation>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const int gen_order = gens[k].order();
    for (const Permutation& p : target.elements()) {
      if (gen_order % p.order() == 0) candidates[k].push_back(p);
    }
  }

  std::vector<GroupHomomorphism> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<Permutation> gen_images;
    gen_images.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      gen_images.push_back(candidates[k][pick[k]]);
    }
    auto images = extend_images(domain, gens, gen_images, codomain_degree);
    if (images.has_value() && full_table_check(domain, *images)) {
      out.push_back(GroupHomomorphism::from_element_images(
          domain, codomain_degree, std::move(*images)));
    }
    // Odometer step.
    std::size_t k = 0;
    for (; k < gens.size(); ++k) {
      if (++pick[k] < candidates[k].size()) break;
      pick[k] = 0;
    }
    if (k == gens.size()) break;  // wrapped around (or no generators at all)
  }
  return out;
}

}  // namespace digroups
