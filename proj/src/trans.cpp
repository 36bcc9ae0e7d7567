#include "digroups/trans.hpp"

#include <algorithm>

#include "digroups/errors.hpp"

namespace digroups {

ProductPoint lmap_apply(const LMap& m, ProductPoint p, int delta_size) {
  const auto [k, i] = p;
  if (k < 0 || k >= delta_size || i < 0 || i >= m.f.degree()) {
    throw PreconditionError("point (" + std::to_string(k) + ", " +
                            std::to_string(i) + ") is out of range");
  }
  if (m.s < 0 || m.s >= delta_size) {
    throw PreconditionError("l-map target out of range");
  }
  return {m.s, m.f(i)};
}

LMap lmap_compose(const LMap& a, const LMap& b) {
  if (a.f.degree() != b.f.degree()) {
    throw PreconditionError("l-maps act on different sets");
  }
  return LMap{a.s, a.f * b.f};
}

TransDigroupSpec::TransDigroupSpec(int gamma_size, int delta_size,
                                   PermGroup group, GroupHomomorphism theta,
                                   int base_point)
    : gamma_size_(gamma_size),
      delta_size_(delta_size),
      base_point_(base_point),
      group_(std::move(group)),
      theta_(std::move(theta)) {
  if (gamma_size_ < 1 || delta_size_ < 1) {
    throw PreconditionError("gamma and delta must be nonempty");
  }
  if (group_.degree() != gamma_size_) {
    throw PreconditionError("group degree does not match gamma size");
  }
  if (!(theta_.domain() == group_)) {
    throw PreconditionError("theta domain is not the acting group");
  }
  if (theta_.codomain_degree() != delta_size_) {
    throw PreconditionError("theta codomain degree does not match delta size");
  }
  if (base_point_ < 0 || base_point_ >= delta_size_) {
    throw PreconditionError("base point out of range");
  }
}

void TransDigroupSpec::check_membership(const LMap& m) const {
  if (m.s < 0 || m.s >= delta_size_) {
    throw PreconditionError("l-map target " + std::to_string(m.s) +
                            " out of range");
  }
  if (!group_.contains(m.f)) {
    throw PreconditionError("l-map group part is not in the acting group");
  }
}

int TransDigroupSpec::index_of(const LMap& m) const {
  check_membership(m);
  return group_.index_of(m.f) * delta_size_ + m.s;
}

LMap TransDigroupSpec::lmap_at(int idx) const {
  if (idx < 0 || idx >= order()) {
    throw PreconditionError("element index out of range");
  }
  return LMap{idx % delta_size_, group_.element(idx / delta_size_)};
}

std::string TransDigroupSpec::label_of(int idx) const {
  const LMap m = lmap_at(idx);
  return "l[" + std::to_string(m.s) + ", " + m.f.one_line() + "]";
}

LMap TransDigroupSpec::left_product(const LMap& a, const LMap& b) const {
  check_membership(a);
  check_membership(b);
  return LMap{a.s, a.f * b.f};
}

LMap TransDigroupSpec::right_product(const LMap& a, const LMap& b) const {
  check_membership(a);
  check_membership(b);
  return LMap{theta_(a.f)(b.s), a.f * b.f};
}

ThetaPermutation TransDigroupSpec::theta_perm(const Permutation& f) const {
  if (!group_.contains(f)) {
    throw PreconditionError("element is not in the acting group");
  }
  auto flat_action = [this](const Permutation& g) {
    const Permutation& moved = theta_(g);
    std::vector<int> im(static_cast<std::size_t>(delta_size_) * gamma_size_);
    for (int k = 0; k < delta_size_; ++k) {
      for (int i = 0; i < gamma_size_; ++i) {
        im[k * gamma_size_ + i] = moved(k) * gamma_size_ + g(i);
      }
    }
    return Permutation(std::move(im));
  };
  ThetaPermutation result{f, flat_action(f)};
  // The induced map g -> action(g) must be multiplicative against every
  // group element.
  for (const Permutation& g : group_.elements()) {
    if (result.action * flat_action(g) != flat_action(f * g)) {
      throw InvariantViolation(
          "theta-permutation map is not multiplicative at f = " + f.one_line() +
          ", g = " + g.one_line());
    }
  }
  return result;
}

LMap TransDigroupSpec::mixed_compose_left(const Permutation& f,
                                          const LMap& b) const {
  if (!group_.contains(f)) {
    throw PreconditionError("element is not in the acting group");
  }
  check_membership(b);
  const LMap result{theta_(f)(b.s), f * b.f};
  // Pointwise: theta_perm(f) after b must equal the stated l-map.
  const ThetaPermutation tp = theta_perm(f);
  for (int k = 0; k < delta_size_; ++k) {
    for (int i = 0; i < gamma_size_; ++i) {
      const ProductPoint via_b = lmap_apply(b, {k, i}, delta_size_);
      const int flat = tp.action(via_b.first * gamma_size_ + via_b.second);
      const ProductPoint composed{flat / gamma_size_, flat % gamma_size_};
      if (composed != lmap_apply(result, {k, i}, delta_size_)) {
        throw InvariantViolation("mixed composition (theta side) mismatch");
      }
    }
  }
  return result;
}

LMap TransDigroupSpec::mixed_compose_right(const LMap& a,
                                           const Permutation& g) const {
  if (!group_.contains(g)) {
    throw PreconditionError("element is not in the acting group");
  }
  check_membership(a);
  const LMap result{a.s, a.f * g};
  const ThetaPermutation tp = theta_perm(g);
  for (int k = 0; k < delta_size_; ++k) {
    for (int i = 0; i < gamma_size_; ++i) {
      const int flat = tp.action(k * gamma_size_ + i);
      const ProductPoint via_tp{flat / gamma_size_, flat % gamma_size_};
      if (lmap_apply(a, via_tp, delta_size_) !=
          lmap_apply(result, {k, i}, delta_size_)) {
        throw InvariantViolation("mixed composition (l-map side) mismatch");
      }
    }
  }
  return result;
}

TransDigroupSpec::LMapInverses TransDigroupSpec::inverse_formulas(
    const LMap& x) const {
  check_membership(x);
  const Permutation f_inv = x.f.inverse();
  return LMapInverses{LMap{base_point_, f_inv},
                      LMap{theta_(f_inv)(base_point_), f_inv}};
}

Digroup TransDigroupSpec::build(int guard) const {
  const int n = order();
  if (n > guard) {
    throw GuardError("materialization of order " + std::to_string(n) +
                     " exceeds guard " + std::to_string(guard));
  }
  std::vector<std::vector<int>> lrows(n, std::vector<int>(n));
  std::vector<std::vector<int>> rrows(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = label_of(i);
  for (int i = 0; i < n; ++i) {
    const LMap a = lmap_at(i);
    for (int j = 0; j < n; ++j) {
      const LMap b = lmap_at(j);
      lrows[i][j] = index_of(left_product(a, b));
      rrows[i][j] = index_of(right_product(a, b));
    }
  }
  return Digroup::from_tables(OpTable::from_rows(lrows),
                              OpTable::from_rows(rrows), std::move(labels));
}

FormulaReport TransDigroupSpec::analyze_formulaic() const {
  FormulaReport rep;
  const Permutation one = Permutation::identity(gamma_size_);
  const std::vector<Permutation> im = theta_.image();
  const std::vector<Permutation> ker = theta_.kernel();
  const std::vector<Permutation> zg = group_.center();

  for (int s = 0; s < delta_size_; ++s) {
    rep.halo.push_back(LMap{s, one});
    if (fixes_point(im, s)) rep.identities.push_back(LMap{s, one});
  }
  for (const Permutation& f : zg) {
    const bool in_kernel = std::binary_search(ker.begin(), ker.end(), f);
    for (int s = 0; s < delta_size_; ++s) {
      if (in_kernel) rep.target_center.push_back(LMap{s, f});
      if (fixes_point(im, s)) rep.source_center.push_back(LMap{s, f});
    }
  }
  auto canonical = [](std::vector<LMap>& v) { std::sort(v.begin(), v.end()); };
  canonical(rep.halo);
  canonical(rep.identities);
  canonical(rep.target_center);
  canonical(rep.source_center);
  return rep;
}

std::vector<ElementId> TransDigroupSpec::materialize_sub(
    const SubdigroupSpec& sub) const {
  std::vector<ElementId> out;
  for (int s : sub.omega) {
    if (s < 0 || s >= delta_size_) {
      throw PreconditionError("omega point out of range");
    }
    for (const Permutation& h : sub.subgroup.elements()) {
      out.push_back(index_of(LMap{s, h}));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool TransDigroupSpec::subdigroup_spec_check(const SubdigroupSpec& sub) const {
  if (!sub.subgroup.is_subgroup_of(group_)) {
    throw PreconditionError("candidate subgroup is not contained in the group");
  }
  // Closed-form reading: omega nonempty and mapped onto itself by every
  // theta(h).
  bool formulaic = !sub.omega.empty();
  for (const Permutation& h : sub.subgroup.elements()) {
    if (!formulaic) break;
    const Permutation& moved = theta_(h);
    for (int s : sub.omega) {
      if (std::find(sub.omega.begin(), sub.omega.end(), moved(s)) ==
          sub.omega.end()) {
        formulaic = false;
        break;
      }
    }
  }

  const Digroup d = build();
  const bool brute = is_subdigroup(d, materialize_sub(sub));
  if (brute != formulaic) {
    throw InvariantViolation(
        "subdigroup criterion disagreement: materialized check says " +
        std::string(brute ? "yes" : "no") + " but the block condition says " +
        std::string(formulaic ? "yes" : "no"));
  }
  return brute;
}

}  // namespace digroups
