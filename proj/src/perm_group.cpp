#include "digroups/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "digroups/errors.hpp"

namespace digroups {

PermGroup::PermGroup(int degree, std::vector<Permutation> elements,
                     std::vector<Permutation> generators)
    : degree_(degree),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {Permutation::identity(degree)}, {});
}

PermGroup PermGroup::closure(int degree, const std::vector<Permutation>& generators) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw PreconditionError("generator degree " + std::to_string(g.degree()) +
                              " does not match group degree " + std::to_string(degree));
    }
  }
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  for (const Permutation& g : generators) {
    if (seen.insert(g).second) todo.push_back(g);
  }
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    for (const Permutation& g : generators) {
      Permutation prod = cur * g;
      if (seen.insert(prod).second) todo.push_back(std::move(prod));
    }
  }
  return PermGroup(degree, std::vector<Permutation>(seen.begin(), seen.end()),
                   generators);
}

PermGroup PermGroup::symmetric(int degree, int guard) {
  if (degree < 1) throw PreconditionError("symmetric group needs degree >= 1");
  if (degree > guard) {
    throw GuardError("symmetric group of degree " + std::to_string(degree) +
                     " exceeds guard " + std::to_string(guard));
  }
  std::vector<int> im(degree);
  for (int i = 0; i < degree; ++i) im[i] = i;
  std::vector<Permutation> all;
  do {
    all.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  std::sort(all.begin(), all.end());
  std::vector<Permutation> gens;
  if (degree >= 2) gens.push_back(Permutation::transposition(degree, 0, 1));
  if (degree >= 3) {
    std::vector<int> cyc(degree);
    for (int i = 0; i < degree; ++i) cyc[i] = (i + 1) % degree;
    gens.emplace_back(std::move(cyc));
  }
  return PermGroup(degree, std::move(all), std::move(gens));
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g(degree, std::move(elements), generators);
  for (const Permutation& p : g.elements_) {
    if (p.degree() != degree) throw PreconditionError("element degree mismatch");
    if (!g.contains(p.inverse())) {
      throw PreconditionError("element set is not closed under inverse");
    }
  }
  for (const Permutation& p : g.elements_) {
    for (const Permutation& q : g.elements_) {
      if (!g.contains(p * q)) {
        throw PreconditionError("element set is not closed under product");
      }
    }
  }
  if (generators.empty() && g.order() > 1) {
    g.generators_ = minimal_generating_set(g);
  }
  PermGroup regenerated = closure(degree, g.generators_);
  if (regenerated.elements_ != g.elements_) {
    throw PreconditionError("generators do not generate the given element set");
  }
  return g;
}

const Permutation& PermGroup::identity() const {
  for (const Permutation& p : elements_) {
    if (p.is_identity()) return p;
  }
  throw InvariantViolation("group without identity element");
}

bool PermGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

std::vector<Permutation> PermGroup::center() const {
  std::vector<Permutation> z;
  for (const Permutation& c : elements_) {
    bool central = true;
    for (const Permutation& g : elements_) {
      if (c * g != g * c) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(c);
  }
  return z;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  return std::includes(g.elements_.begin(), g.elements_.end(),
                       elements_.begin(), elements_.end());
}

bool fixes_point(std::span<const Permutation> perms, int s) {
  for (const Permutation& p : perms) {
    if (s < 0 || s >= p.degree()) throw PreconditionError("point out of range");
    if (p(s) != s) return false;
  }
  return true;
}

namespace {

std::vector<Permutation> product_closure(std::vector<Permutation> seed) {
  // In a finite group, a nonempty subset closed under products is a subgroup.
  std::set<Permutation> seen(seed.begin(), seed.end());
  std::deque<Permutation> todo(seed.begin(), seed.end());
  while (!todo.empty()) {
    Permutation cur = todo.front();
    todo.pop_front();
    std::vector<Permutation> snapshot(seen.begin(), seen.end());
    for (const Permutation& p : snapshot) {
      for (Permutation prod : {cur * p, p * cur}) {
        if (seen.insert(prod).second) todo.push_back(std::move(prod));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Permutation> minimal_generating_set(const PermGroup& g) {
  // Greedy: repeatedly adjoin the least element not yet generated.  Each step
  // at least doubles the generated subgroup, so the result has <= log2 |G|
  // members (not necessarily minimum-cardinality, but small and deterministic).
  std::vector<Permutation> gens;
  PermGroup have = PermGroup::trivial(g.degree());
  while (have.order() < g.order()) {
    for (const Permutation& x : g.elements()) {
      if (!have.contains(x)) {
        gens.push_back(x);
        break;
      }
    }
    have = PermGroup::closure(g.degree(), gens);
  }
  return gens;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  std::set<std::vector<Permutation>> closed;
  std::deque<std::vector<Permutation>> frontier;
  std::vector<Permutation> base = {g.identity()};
  closed.insert(base);
  frontier.push_back(base);
  while (!frontier.empty()) {
    std::vector<Permutation> cur = frontier.front();
    frontier.pop_front();
    for (const Permutation& x : g.elements()) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      std::vector<Permutation> seed = cur;
      seed.push_back(x);
      std::vector<Permutation> next = product_closure(std::move(seed));
      if (closed.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<PermGroup> out;
  out.reserve(closed.size());
  for (const auto& elems : closed) {
    out.push_back(PermGroup::from_elements(g.degree(), elems, elems));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace digroups
