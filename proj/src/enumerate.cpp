#include "digroups/enumerate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "digroups/errors.hpp"
#include "digroups/hom.hpp"
#include "digroups/trans.hpp"

namespace digroups {

// ---------------------------------------------------------------------------
// Canonical key
// ---------------------------------------------------------------------------

namespace {

constexpr long long kRelabelCap = 50000;

void append_profile(std::vector<long long>& v, const ElementProfile& p) {
  v.push_back(p.left_index);
  v.push_back(p.left_period);
  v.push_back(p.right_index);
  v.push_back(p.right_period);
  v.push_back(p.in_halo);
  v.push_back(p.is_identity);
  v.push_back(p.in_target_center);
  v.push_back(p.in_source_center);
}

std::string relabeled_tables(const Digroup& d, const std::vector<int>& to_new) {
  const int n = d.order();
  std::string s(static_cast<std::size_t>(2) * n * n, '\0');
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      s[to_new[x] * n + to_new[y]] = static_cast<char>(to_new[d.lp(x, y)]);
      s[n * n + to_new[x] * n + to_new[y]] =
          static_cast<char>(to_new[d.rp(x, y)]);
    }
  }
  return s;
}

// Lexicographically minimal serialization over all relabelings that map each
// profile class onto its (profile-sorted) block of new indices.  Isomorphisms
// preserve profiles, so the minimum is a class invariant.
std::string minimal_table_form(const Digroup& d,
                               const std::vector<ElementProfile>& profiles) {
  const int n = d.order();
  std::map<ElementProfile, std::vector<int>> classes;
  for (int x = 0; x < n; ++x) classes[profiles[x]].push_back(x);

  long long combos = 1;
  for (const auto& [prof, members] : classes) {
    for (std::size_t k = 2; k <= members.size(); ++k) {
      combos *= static_cast<long long>(k);
      if (combos > kRelabelCap) return "";
    }
  }

  std::vector<std::vector<int>> orderings;
  std::vector<int> block_start;
  int next = 0;
  for (const auto& [prof, members] : classes) {
    orderings.push_back(members);
    block_start.push_back(next);
    next += static_cast<int>(members.size());
  }

  std::string best;
  std::vector<int> to_new(n, -1);
  auto search = [&](auto&& self, std::size_t ci) -> void {
    if (ci == orderings.size()) {
      std::string s = relabeled_tables(d, to_new);
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    std::vector<int>& members = orderings[ci];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t k = 0; k < members.size(); ++k) {
        to_new[members[k]] = block_start[ci] + static_cast<int>(k);
      }
      self(self, ci + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  search(search, 0);
  return best;
}

}  // namespace

CanonicalKey canonical_key(const Digroup& d) {
  const std::vector<ElementProfile> profiles = element_profiles(d);
  CanonicalKey key;
  key.invariants.push_back(d.order());
  key.invariants.push_back(static_cast<long long>(d.halo().size()));
  key.invariants.push_back(static_cast<long long>(identities(d).size()));
  const CentersPair c = centers(d);
  key.invariants.push_back(static_cast<long long>(c.target.size()));
  key.invariants.push_back(static_cast<long long>(c.source.size()));
  std::vector<ElementProfile> sorted = profiles;
  std::sort(sorted.begin(), sorted.end());
  for (const ElementProfile& p : sorted) append_profile(key.invariants, p);
  key.table_form = minimal_table_form(d, profiles);
  return key;
}

// ---------------------------------------------------------------------------
// Catalog assembly
// ---------------------------------------------------------------------------

namespace {

// Adds the candidate unless it is isomorphic to a present representative.
// Unequal keys prove non-isomorphism; equal keys still require a full
// isomorphism search.
void dedupe_insert(Catalog& cat, std::vector<CanonicalKey>& keys,
                   Digroup candidate, std::string provenance) {
  const CanonicalKey key = canonical_key(candidate);
  for (std::size_t i = 0; i < cat.classes.size(); ++i) {
    if (keys[i] == key &&
        find_isomorphism(cat.classes[i].digroup, candidate).has_value()) {
      return;
    }
  }
  cat.classes.push_back(CatalogEntry{std::move(candidate), std::move(provenance)});
  keys.push_back(key);
}

}  // namespace

// ---------------------------------------------------------------------------
// Brute-force table search
// ---------------------------------------------------------------------------

namespace {

struct BruteTimeout {};

class BruteSearch {
 public:
  BruteSearch(int n, std::optional<std::chrono::steady_clock::time_point> deadline)
      : n_(n),
        cells_(static_cast<std::size_t>(2) * n * n, -1),
        deadline_(deadline) {
    catalog_.order = n;
    catalog_.method = "brute";
  }

  void run() { fill(0); }
  Catalog take_catalog() { return std::move(catalog_); }

 private:
  // Cell layout: the left table row-major, then the right table row-major.
  int lp(int x, int y) const { return cells_[x * n_ + y]; }
  int rp(int x, int y) const { return cells_[n_ * n_ + x * n_ + y]; }

  // Table lookup where either operand may come from an inner evaluation
  // that is still undetermined (-1).
  int chain_l(int x, int y) const { return (x < 0 || y < 0) ? -1 : lp(x, y); }
  int chain_r(int x, int y) const { return (x < 0 || y < 0) ? -1 : rp(x, y); }

  // Every law instance whose operands happen to be fully assigned must hold.
  bool laws_consistent() const {
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        const int l_xy = lp(x, y);
        const int r_xy = rp(x, y);
        for (int z = 0; z < n_; ++z) {
          const int l_yz = lp(y, z);
          const int r_yz = rp(y, z);
          // 1.1a: x > (y > z) = (x > y) > z
          const int a1 = chain_l(x, l_yz);
          const int a2 = chain_l(l_xy, z);
          if (a1 >= 0 && a2 >= 0 && a1 != a2) return false;
          // 1.1b: x > (y > z) = x > (y < z)
          const int b2 = chain_l(x, r_yz);
          if (a1 >= 0 && b2 >= 0 && a1 != b2) return false;
          // 1.2: (x < y) > z = x < (y > z)
          const int c1 = chain_l(r_xy, z);
          const int c2 = chain_r(x, l_yz);
          if (c1 >= 0 && c2 >= 0 && c1 != c2) return false;
          // 1.3a: (x > y) < z = (x < y) < z
          const int d1 = chain_r(l_xy, z);
          const int d2 = chain_r(r_xy, z);
          if (d1 >= 0 && d2 >= 0 && d1 != d2) return false;
          // 1.3b: (x < y) < z = x < (y < z)
          const int e2 = chain_r(x, r_yz);
          if (d2 >= 0 && e2 >= 0 && d2 != e2) return false;
        }
      }
    }
    return true;
  }

  // Some candidate bar-unit must still be achievable: a column of the left
  // table and row of the right table that can both become the identity.
  bool bar_unit_possible() const {
    for (int a = 0; a < n_; ++a) {
      bool ok = true;
      for (int x = 0; x < n_ && ok; ++x) {
        const int la = lp(x, a);
        const int ra = rp(a, x);
        if ((la >= 0 && la != x) || (ra >= 0 && ra != x)) ok = false;
      }
      if (ok) return true;
    }
    return false;
  }

  void leaf() {
    std::vector<std::vector<int>> lrows(n_, std::vector<int>(n_));
    std::vector<std::vector<int>> rrows(n_, std::vector<int>(n_));
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        lrows[x][y] = lp(x, y);
        rrows[x][y] = rp(x, y);
      }
    }
    const OpTable left = OpTable::from_rows(lrows);
    const OpTable right = OpTable::from_rows(rrows);
    if (!validate_digroup(left, right).valid) return;
    dedupe_insert(catalog_, keys_, Digroup::from_tables(left, right),
                  "table search");
  }

  void fill(std::size_t cell) {
    if (deadline_ && (++nodes_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > *deadline_) {
      throw BruteTimeout{};
    }
    if (cell == cells_.size()) {
      leaf();
      return;
    }
    for (int v = 0; v < n_; ++v) {
      cells_[cell] = v;
      if (laws_consistent() && bar_unit_possible()) fill(cell + 1);
    }
    cells_[cell] = -1;
  }

  int n_;
  std::vector<int> cells_;
  Catalog catalog_;
  std::vector<CanonicalKey> keys_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::size_t nodes_ = 0;
};

}  // namespace

Catalog brute_enumerate(int n) {
  if (n < 1) throw PreconditionError("order must be positive");
  if (n > kBruteGuard) {
    throw GuardError("brute search guard is order " +
                     std::to_string(kBruteGuard));
  }
  BruteSearch search(n, std::nullopt);
  search.run();
  return search.take_catalog();
}

std::optional<Catalog> brute_enumerate_within(int n,
                                              std::chrono::milliseconds budget) {
  if (n < 1) throw PreconditionError("order must be positive");
  if (n > kBruteGuard) {
    throw GuardError("brute search guard is order " +
                     std::to_string(kBruteGuard));
  }
  BruteSearch search(n, std::chrono::steady_clock::now() + budget);
  try {
    search.run();
  } catch (const BruteTimeout&) {
    return std::nullopt;
  }
  return search.take_catalog();
}

// ---------------------------------------------------------------------------
// Constructive enumeration
// ---------------------------------------------------------------------------

namespace {

std::string theta_description(const PermGroup& g, const GroupHomomorphism& theta) {
  if (g.generators().empty()) return "trivial";
  std::ostringstream out;
  bool first = true;
  for (const Permutation& gen : g.generators()) {
    if (!first) out << ", ";
    first = false;
    out << gen.one_line() << " -> " << theta(gen).one_line();
  }
  return out.str();
}

}  // namespace

Catalog constructive_enumerate(int n, int guard) {
  if (n < 1) throw PreconditionError("order must be positive");
  if (n > guard) {
    throw GuardError("constructive enumeration guard is order " +
                     std::to_string(guard));
  }
  int max_group_order = 0;
  for (const NamedGroup& g : small_groups()) {
    max_group_order = std::max(max_group_order, g.group.order());
  }
  Catalog cat;
  cat.order = n;
  cat.method = "constructive";
  std::vector<CanonicalKey> keys;
  for (int delta = 1; delta <= n; ++delta) {
    if (n % delta != 0) continue;
    const int m = n / delta;
    if (m > 1 && m > max_group_order) {
      // Silently skipping the factorization would drop classes.
      throw GuardError("no built-in groups of order " + std::to_string(m) +
                       "; enumeration above order " +
                       std::to_string(max_group_order) + " would be incomplete");
    }
    for (const NamedGroup* named : small_groups_of_order(m)) {
      for (const GroupHomomorphism& theta :
           all_homomorphisms(named->group, delta)) {
        TransDigroupSpec spec(named->group.degree(), delta, named->group,
                              theta, 0);
        std::ostringstream prov;
        prov << "delta=" << delta << ", group=" << named->name
             << ", theta: " << theta_description(named->group, theta);
        dedupe_insert(cat, keys, spec.build(), prov.str());
      }
    }
  }
  return cat;
}

CrossCheck cross_check(int n) {
  const Catalog brute = brute_enumerate(n);
  const Catalog constructive = constructive_enumerate(n);
  CrossCheck r;
  r.order = n;
  r.brute_count = brute.classes.size();
  r.constructive_count = constructive.classes.size();

  std::vector<bool> used(constructive.classes.size(), false);
  std::ostringstream mismatch;
  bool ok = true;
  for (std::size_t i = 0; i < brute.classes.size(); ++i) {
    int match = -1;
    for (std::size_t j = 0; j < constructive.classes.size(); ++j) {
      if (used[j]) continue;
      if (find_isomorphism(brute.classes[i].digroup,
                           constructive.classes[j].digroup)
              .has_value()) {
        match = static_cast<int>(j);
        break;
      }
    }
    if (match < 0) {
      ok = false;
      mismatch << "brute class " << i << " has no constructive partner; ";
    } else {
      used[match] = true;
      r.matching.emplace_back(static_cast<int>(i), match);
    }
  }
  for (std::size_t j = 0; j < used.size(); ++j) {
    if (!used[j]) {
      ok = false;
      mismatch << "constructive class " << j << " ("
               << constructive.classes[j].provenance
               << ") has no brute partner; ";
    }
  }
  r.matched = ok && r.brute_count == r.constructive_count;
  r.mismatch = mismatch.str();
  return r;
}

// ---------------------------------------------------------------------------
// Built-in groups of order <= 12
// ---------------------------------------------------------------------------

namespace {

// Disjoint cycles of the given lengths, one generator per cycle; the closure
// is the direct product of the corresponding cyclic groups.
PermGroup disjoint_cyclics(const std::vector<int>& lengths) {
  int degree = 0;
  for (int len : lengths) degree += len;
  if (degree == 0) return PermGroup::trivial(1);
  std::vector<Permutation> gens;
  int offset = 0;
  for (int len : lengths) {
    if (len > 1) {
      std::vector<int> im(degree);
      for (int i = 0; i < degree; ++i) im[i] = i;
      for (int i = 0; i < len; ++i) im[offset + i] = offset + (i + 1) % len;
      gens.emplace_back(std::move(im));
    }
    offset += len;
  }
  return PermGroup::closure(degree, gens);
}

PermGroup dihedral(int k) {
  std::vector<int> rot(k), ref(k);
  for (int i = 0; i < k; ++i) {
    rot[i] = (i + 1) % k;
    ref[i] = (k - i) % k;
  }
  return PermGroup::closure(k, {Permutation(rot), Permutation(ref)});
}

PermGroup alternating4() {
  return PermGroup::closure(
      4, {Permutation({1, 2, 0, 3}), Permutation({1, 0, 3, 2})});
}

// The dicyclic group of order 4k presented by a^(2k) = 1, b^2 = a^k,
// b a b^-1 = a^-1, materialized through its regular representation.
// k = 2 is the quaternion group.
PermGroup dicyclic(int k) {
  const int order = 4 * k;
  auto idx = [k](int i, int j) { return i * 2 + j; };
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (int i = 0; i < 2 * k; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int u = 0; u < 2 * k; ++u) {
        for (int v = 0; v < 2; ++v) {
          int r_i, r_j;
          if (j == 0) {
            r_i = (i + u) % (2 * k);
            r_j = v;
          } else if (v == 0) {
            r_i = ((i - u) % (2 * k) + 2 * k) % (2 * k);
            r_j = 1;
          } else {
            r_i = ((i - u + k) % (2 * k) + 2 * k) % (2 * k);
            r_j = 0;
          }
          mul[idx(i, j)][idx(u, v)] = idx(r_i, r_j);
        }
      }
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          throw InvariantViolation("dicyclic table is not associative");
        }
      }
    }
  }
  std::vector<Permutation> rows;
  rows.reserve(order);
  for (int g = 0; g < order; ++g) rows.emplace_back(mul[g]);
  return PermGroup::from_elements(order, rows, {});
}

}  // namespace

const std::vector<NamedGroup>& small_groups() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> g;
    g.push_back({"C1", PermGroup::trivial(1)});
    g.push_back({"C2", disjoint_cyclics({2})});
    g.push_back({"C3", disjoint_cyclics({3})});
    g.push_back({"C4", disjoint_cyclics({4})});
    g.push_back({"V4", disjoint_cyclics({2, 2})});
    g.push_back({"C5", disjoint_cyclics({5})});
    g.push_back({"C6", disjoint_cyclics({6})});
    g.push_back({"S3", dihedral(3)});
    g.push_back({"C7", disjoint_cyclics({7})});
    g.push_back({"C8", disjoint_cyclics({8})});
    g.push_back({"C4xC2", disjoint_cyclics({4, 2})});
    g.push_back({"C2xC2xC2", disjoint_cyclics({2, 2, 2})});
    g.push_back({"D4", dihedral(4)});
    g.push_back({"Q8", dicyclic(2)});
    g.push_back({"C9", disjoint_cyclics({9})});
    g.push_back({"C3xC3", disjoint_cyclics({3, 3})});
    g.push_back({"C10", disjoint_cyclics({10})});
    g.push_back({"D5", dihedral(5)});
    g.push_back({"C11", disjoint_cyclics({11})});
    g.push_back({"C12", disjoint_cyclics({12})});
    g.push_back({"C6xC2", disjoint_cyclics({6, 2})});
    g.push_back({"D6", dihedral(6)});
    g.push_back({"A4", alternating4()});
    g.push_back({"Dic3", dicyclic(3)});
    return g;
  }();
  return groups;
}

std::vector<const NamedGroup*> small_groups_of_order(int m) {
  std::vector<const NamedGroup*> out;
  for (const NamedGroup& g : small_groups()) {
    if (g.group.order() == m) out.push_back(&g);
  }
  return out;
}

Digroup group_digroup(const PermGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.element(i).one_line();
    for (int j = 0; j < n; ++j) {
      rows[i][j] = g.index_of(g.element(i) * g.element(j));
    }
  }
  const OpTable table = OpTable::from_rows(rows);
  return Digroup::from_tables(table, table, std::move(labels));
}

}  // namespace digroups
