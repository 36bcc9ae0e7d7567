#include "digroups/digroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "digroups/errors.hpp"

namespace digroups {

OpTable OpTable::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw ParseError("operation table must have size >= 1");
  std::vector<ElementId> cells;
  cells.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("operation table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw ParseError("table entry " + std::to_string(v) +
                         " out of range for size " + std::to_string(n));
      }
      cells.push_back(v);
    }
  }
  return OpTable(n, std::move(cells));
}

std::vector<std::vector<int>> OpTable::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) out[x][y] = at(x, y);
  }
  return out;
}

namespace {

std::vector<ElementId> compute_halo(const OpTable& left, const OpTable& right) {
  const int n = left.size();
  std::vector<ElementId> halo;
  for (ElementId a = 0; a < n; ++a) {
    bool unit = true;
    for (ElementId x = 0; x < n && unit; ++x) {
      if (left.at(x, a) != x || right.at(a, x) != x) unit = false;
    }
    if (unit) halo.push_back(a);
  }
  return halo;
}

}  // namespace

ValidationReport validate_digroup(const OpTable& left, const OpTable& right) {
  if (left.size() != right.size()) {
    throw ParseError("left and right tables have different sizes");
  }
  const int n = left.size();
  ValidationReport rep;

  auto record = [&rep](const char* law, std::vector<ElementId> witness) {
    for (const Violation& v : rep.violations) {
      if (v.law == law) return;  // keep the first witness per law
    }
    rep.violations.push_back(Violation{law, std::move(witness)});
  };

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        const ElementId l_yz = left.at(y, z);
        const ElementId r_yz = right.at(y, z);
        const ElementId l_xy = left.at(x, y);
        const ElementId r_xy = right.at(x, y);
        if (left.at(x, l_yz) != left.at(l_xy, z)) record("1.1a", {x, y, z});
        if (left.at(x, l_yz) != left.at(x, r_yz)) record("1.1b", {x, y, z});
        if (left.at(r_xy, z) != right.at(x, l_yz)) record("1.2", {x, y, z});
        if (right.at(l_xy, z) != right.at(r_xy, z)) record("1.3a", {x, y, z});
        if (right.at(r_xy, z) != right.at(x, r_yz)) record("1.3b", {x, y, z});
      }
    }
  }

  rep.halo = compute_halo(left, right);
  if (rep.halo.empty()) {
    record("bar-unit", {});
  } else {
    // Definition of a digroup part (iii): both inverses w.r.t. one bar-unit.
    for (ElementId x = 0; x < n; ++x) {
      bool left_ok = false, right_ok = false, both_ok = false;
      for (ElementId a : rep.halo) {
        bool l = false, r = false;
        for (ElementId y = 0; y < n; ++y) {
          if (left.at(y, x) == a) l = true;
          if (right.at(x, y) == a) r = true;
        }
        left_ok |= l;
        right_ok |= r;
        both_ok |= (l && r);
      }
      if (!both_ok) {
        if (!left_ok) record("left-inverse", {x});
        if (!right_ok) record("right-inverse", {x});
        if (left_ok && right_ok) record("left-inverse", {x});
      }
    }
  }

  rep.valid = rep.violations.empty();
  return rep;
}

InvalidDigroup::InvalidDigroup(ValidationReport r)
    : std::runtime_error("tables do not satisfy the digroup laws (" +
                         std::to_string(r.violations.size()) +
                         " law(s) violated, first: " +
                         (r.violations.empty() ? std::string("none")
                                               : r.violations.front().law) +
                         ")"),
      report(std::move(r)) {}

Digroup Digroup::from_tables(OpTable left, OpTable right,
                             std::vector<std::string> labels) {
  ValidationReport rep = validate_digroup(left, right);
  if (!rep.valid) throw InvalidDigroup(std::move(rep));
  if (!labels.empty() && static_cast<int>(labels.size()) != left.size()) {
    throw ParseError("label count does not match carrier size");
  }
  return Digroup(std::move(left), std::move(right), std::move(rep.halo),
                 std::move(labels));
}

bool Digroup::is_bar_unit(ElementId a) const {
  return std::binary_search(halo_.begin(), halo_.end(), a);
}

std::string Digroup::label(ElementId x) const {
  if (!labels_.empty()) return labels_[x];
  return std::to_string(x);
}

InversePair inverses(const Digroup& d, ElementId x, ElementId bar_unit) {
  if (!d.is_bar_unit(bar_unit)) {
    throw PreconditionError("element " + std::to_string(bar_unit) +
                            " is not a bar-unit");
  }
  const int n = d.order();
  std::vector<ElementId> lefts, rights;
  for (ElementId y = 0; y < n; ++y) {
    if (d.lp(y, x) == bar_unit) lefts.push_back(y);
    if (d.rp(x, y) == bar_unit) rights.push_back(y);
  }
  if (lefts.size() != 1 || rights.size() != 1) {
    throw InvariantViolation(
        "inverse of " + std::to_string(x) + " w.r.t. " +
        std::to_string(bar_unit) + " is not unique (left solutions: " +
        std::to_string(lefts.size()) + ", right solutions: " +
        std::to_string(rights.size()) + ")");
  }
  return InversePair{lefts[0], rights[0], bar_unit};
}

std::vector<ElementId> identities(const Digroup& d) {
  const int n = d.order();
  std::vector<ElementId> direct;
  for (ElementId e : d.halo()) {
    bool id = true;
    for (ElementId x = 0; x < n && id; ++x) {
      if (d.lp(e, x) != d.rp(x, e)) id = false;
    }
    if (id) direct.push_back(e);
  }
  // Cross-check: e is an identity iff every element's left and right
  // inverses w.r.t. e coincide.
  std::vector<ElementId> via_inverses;
  for (ElementId e : d.halo()) {
    bool id = true;
    for (ElementId x = 0; x < n && id; ++x) {
      InversePair p = inverses(d, x, e);
      if (p.left_inv != p.right_inv) id = false;
    }
    if (id) via_inverses.push_back(e);
  }
  if (direct != via_inverses) {
    throw InvariantViolation(
        "identity characterizations disagree (direct vs inverse-based)");
  }
  return direct;
}

CentersPair centers(const Digroup& d) {
  const int n = d.order();
  CentersPair c;
  for (ElementId z = 0; z < n; ++z) {
    bool target = true, source = true;
    for (ElementId x = 0; x < n; ++x) {
      if (d.rp(z, x) != d.lp(x, z)) target = false;
      if (d.rp(x, z) != d.lp(z, x)) source = false;
      if (!target && !source) break;
    }
    if (target) c.target.push_back(z);
    if (source) c.source.push_back(z);
  }
  return c;
}

bool is_subdigroup(const Digroup& d, const std::vector<ElementId>& subset) {
  std::vector<ElementId> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) return false;
  if (s.front() < 0 || s.back() >= d.order()) {
    throw PreconditionError("subset element out of range");
  }

  bool meets_halo = false;
  for (ElementId x : s) {
    if (d.is_bar_unit(x)) {
      meets_halo = true;
      break;
    }
  }
  if (!meets_halo) return false;

  const int k = static_cast<int>(s.size());
  std::vector<int> pos(d.order(), -1);
  for (int i = 0; i < k; ++i) pos[s[i]] = i;

  std::vector<std::vector<int>> lrows(k, std::vector<int>(k));
  std::vector<std::vector<int>> rrows(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const ElementId l = d.lp(s[i], s[j]);
      const ElementId r = d.rp(s[i], s[j]);
      if (pos[l] < 0 || pos[r] < 0) return false;  // not closed
      lrows[i][j] = pos[l];
      rrows[i][j] = pos[r];
    }
  }
  return validate_digroup(OpTable::from_rows(lrows), OpTable::from_rows(rrows))
      .valid;
}

namespace {

std::vector<ElementId> product_closure(const Digroup& d,
                                       std::vector<ElementId> seed) {
  std::set<ElementId> in(seed.begin(), seed.end());
  std::deque<ElementId> todo(seed.begin(), seed.end());
  while (!todo.empty()) {
    ElementId x = todo.front();
    todo.pop_front();
    std::vector<ElementId> snapshot(in.begin(), in.end());
    for (ElementId y : snapshot) {
      for (ElementId p : {d.lp(x, y), d.lp(y, x), d.rp(x, y), d.rp(y, x)}) {
        if (in.insert(p).second) todo.push_back(p);
      }
    }
  }
  return {in.begin(), in.end()};
}

}  // namespace

std::vector<std::vector<ElementId>> all_subdigroups(const Digroup& d,
                                                    int guard) {
  if (d.order() > guard) {
    throw GuardError("subdigroup search on order " + std::to_string(d.order()) +
                     " exceeds guard " + std::to_string(guard));
  }
  // Every subdigroup contains a bar-unit, so every one is reachable from a
  // halo singleton by repeatedly adjoining one element and closing.
  std::set<std::vector<ElementId>> closed;
  std::deque<std::vector<ElementId>> frontier;
  for (ElementId h : d.halo()) {
    std::vector<ElementId> c = product_closure(d, {h});
    if (closed.insert(c).second) frontier.push_back(std::move(c));
  }
  while (!frontier.empty()) {
    std::vector<ElementId> cur = frontier.front();
    frontier.pop_front();
    for (ElementId x = 0; x < d.order(); ++x) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      std::vector<ElementId> seed = cur;
      seed.push_back(x);
      std::vector<ElementId> next = product_closure(d, std::move(seed));
      if (closed.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<std::vector<ElementId>> out;
  for (const auto& c : closed) {
    if (is_subdigroup(d, c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<ElementProfile> element_profiles(const Digroup& d) {
  const int n = d.order();
  const CentersPair c = centers(d);
  const std::vector<ElementId> ids = identities(d);

  auto index_period = [n](ElementId x, auto&& step) {
    // Position and cycle length of the eventually-periodic power sequence
    // x, x*x, (x*x)*x, ...
    std::vector<int> seen_at(n, 0);
    ElementId cur = x;
    int k = 1;
    while (seen_at[cur] == 0) {
      seen_at[cur] = k;
      cur = step(cur, x);
      ++k;
    }
    const int first = seen_at[cur];
    return std::pair<int, int>{first, k - first};
  };

  std::vector<ElementProfile> out(n);
  for (ElementId x = 0; x < n; ++x) {
    ElementProfile& p = out[x];
    std::tie(p.left_index, p.left_period) =
        index_period(x, [&d](ElementId a, ElementId b) { return d.lp(a, b); });
    std::tie(p.right_index, p.right_period) =
        index_period(x, [&d](ElementId a, ElementId b) { return d.rp(a, b); });
    p.in_halo = d.is_bar_unit(x);
    p.is_identity = std::binary_search(ids.begin(), ids.end(), x);
    p.in_target_center =
        std::binary_search(c.target.begin(), c.target.end(), x);
    p.in_source_center =
        std::binary_search(c.source.begin(), c.source.end(), x);
  }
  return out;
}

namespace {

struct IsoSearch {
  const Digroup& a;
  const Digroup& b;
  const std::vector<ElementProfile>& pa;
  const std::vector<ElementProfile>& pb;
  std::vector<int> map;   // a-element -> b-element, -1 unassigned
  std::vector<bool> used;

  bool consistent(int upto) const {
    // Both products must commute with the partial map wherever all three
    // participants are assigned.
    for (int i = 0; i <= upto; ++i) {
      for (int j = 0; j <= upto; ++j) {
        const int l = a.lp(i, j);
        if (l <= upto && b.lp(map[i], map[j]) != map[l]) return false;
        const int r = a.rp(i, j);
        if (r <= upto && b.rp(map[i], map[j]) != map[r]) return false;
      }
    }
    return true;
  }

  bool extend(int x) {
    if (x == a.order()) return true;
    for (int y = 0; y < b.order(); ++y) {
      if (used[y] || pa[x] != pb[y]) continue;
      map[x] = y;
      used[y] = true;
      if (consistent(x) && extend(x + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<ElementId>> find_isomorphism(const Digroup& a,
                                                       const Digroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.halo().size() != b.halo().size()) return std::nullopt;
  if (identities(a).size() != identities(b).size()) return std::nullopt;
  const CentersPair ca = centers(a), cb = centers(b);
  if (ca.target.size() != cb.target.size() ||
      ca.source.size() != cb.source.size()) {
    return std::nullopt;
  }
  const std::vector<ElementProfile> pa = element_profiles(a);
  const std::vector<ElementProfile> pb = element_profiles(b);
  std::vector<ElementProfile> sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  IsoSearch search{a, b, pa, pb,
                   std::vector<int>(a.order(), -1),
                   std::vector<bool>(b.order(), false)};
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

FiberPartition fiber_partition(const Digroup& d, ElementId bar_unit) {
  if (!d.is_bar_unit(bar_unit)) {
    throw PreconditionError("element " + std::to_string(bar_unit) +
                            " is not a bar-unit");
  }
  FiberPartition p;
  p.wrt = bar_unit;
  p.fiber_index.assign(d.order(), -1);
  std::map<ElementId, int> fiber_of_rep;
  for (ElementId g = 0; g < d.order(); ++g) {
    const ElementId rep = d.lp(bar_unit, g);
    auto it = fiber_of_rep.find(rep);
    if (it == fiber_of_rep.end()) {
      it = fiber_of_rep.emplace(rep, static_cast<int>(p.fibers.size())).first;
      p.fibers.emplace_back();
      p.representative_of.push_back(rep);
    }
    p.fibers[it->second].push_back(g);
    p.fiber_index[g] = it->second;
  }
  return p;
}

Permutation left_translation(const Digroup& d, ElementId f,
                             const FiberPartition& p) {
  const int k = static_cast<int>(p.fibers.size());
  std::vector<int> im(k, -1);
  for (int i = 0; i < k; ++i) {
    for (ElementId x : p.fibers[i]) {
      const int j = p.fiber_of(d.rp(f, x));
      if (im[i] < 0) {
        im[i] = j;
      } else if (im[i] != j) {
        throw InvariantViolation(
            "left translation by " + std::to_string(f) + " maps fiber " +
            std::to_string(i) + " into two different fibers (" +
            std::to_string(im[i]) + " and " + std::to_string(j) +
            "); the input is not a digroup");
      }
    }
  }
  std::vector<bool> hit(k, false);
  for (int j : im) {
    if (hit[j]) {
      throw InvariantViolation("left translation by " + std::to_string(f) +
                               " is not a bijection on fibers");
    }
    hit[j] = true;
  }
  return Permutation(std::move(im));
}

std::vector<ElementId> psi_map(const Digroup& d, ElementId f) {
  const ElementId e = d.least_bar_unit();
  const InversePair inv = inverses(d, f, e);
  const int n = d.order();
  std::vector<ElementId> out(n);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId via_left = d.lp(d.rp(f, x), inv.left_inv);
    const ElementId via_right = d.lp(d.rp(f, x), inv.right_inv);
    if (via_left != via_right) {
      throw InvariantViolation(
          "psi_" + std::to_string(f) + "(" + std::to_string(x) +
          ") differs between the left- and right-inverse forms");
    }
    out[x] = via_left;
  }
  for (ElementId a : d.halo()) {
    if (!d.is_bar_unit(out[a])) {
      throw InvariantViolation("psi_" + std::to_string(f) +
                               " does not map the halo into itself");
    }
  }
  return out;
}

Permutation psi(const Digroup& d, ElementId f) {
  const std::vector<ElementId> full = psi_map(d, f);
  const std::vector<ElementId>& halo = d.halo();
  const int h = static_cast<int>(halo.size());
  std::vector<int> im(h, -1);
  for (int i = 0; i < h; ++i) {
    const auto it = std::lower_bound(halo.begin(), halo.end(), full[halo[i]]);
    im[i] = static_cast<int>(it - halo.begin());
  }
  // Permutation construction rejects repeats, i.e. non-injectivity on halo.
  return Permutation(std::move(im));
}

Decomposition decompose(const Digroup& d, ElementId x, ElementId bar_unit) {
  if (!d.is_bar_unit(bar_unit)) {
    throw PreconditionError("element " + std::to_string(bar_unit) +
                            " is not a bar-unit");
  }
  const InversePair inv = inverses(d, x, bar_unit);
  const ElementId alpha = d.lp(x, inv.left_inv);
  const ElementId rest = d.lp(bar_unit, x);
  if (!d.is_bar_unit(alpha)) {
    throw InvariantViolation("decomposition of " + std::to_string(x) +
                             ": halo factor " + std::to_string(alpha) +
                             " is not a bar-unit");
  }
  if (d.lp(alpha, rest) != x) {
    throw InvariantViolation("decomposition of " + std::to_string(x) +
                             " does not multiply back");
  }
  int halo_factorizations = 0;
  for (ElementId beta : d.halo()) {
    for (ElementId g = 0; g < d.order(); ++g) {
      if (d.lp(beta, g) == x) {
        ++halo_factorizations;
        if (beta != alpha) {
          throw InvariantViolation(
              "element " + std::to_string(x) +
              " factors over two distinct bar-units (" + std::to_string(alpha) +
              " and " + std::to_string(beta) + ")");
        }
        break;
      }
    }
  }
  if (halo_factorizations == 0) {
    throw InvariantViolation("element " + std::to_string(x) +
                             " admits no halo factorization");
  }
  return Decomposition{alpha, rest};
}

}  // namespace digroups
