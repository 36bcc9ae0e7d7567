#pragma once

// Shared fixtures and independent oracles for the test suites.  The oracles
// here deliberately re-derive everything from first principles (pair
// arithmetic, literal law scans) so they stay independent of the library
// code paths they are used to check.

#include <random>
#include <utility>
#include <vector>

#include "digroups/digroup.hpp"
#include "digroups/perm_group.hpp"

namespace testsupport {

using digroups::Digroup;
using digroups::ElementId;
using digroups::OpTable;

// x > y = x, x < y = y.
inline std::pair<OpTable, OpTable> projection_tables(int n) {
  std::vector<std::vector<int>> l(n, std::vector<int>(n));
  std::vector<std::vector<int>> r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      l[x][y] = x;
      r[x][y] = y;
    }
  }
  return {OpTable::from_rows(l), OpTable::from_rows(r)};
}

inline Digroup projection_digroup(int n) {
  auto [l, r] = projection_tables(n);
  return Digroup::from_tables(l, r);
}

// Both products equal addition mod n.
inline OpTable cyclic_table(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) rows[x][y] = (x + y) % n;
  }
  return OpTable::from_rows(rows);
}

inline Digroup cyclic_digroup(int n) {
  OpTable t = cyclic_table(n);
  return Digroup::from_tables(t, t);
}

// The four-element transformation digroup on two points with the full
// symmetric group acting and theta the isomorphism onto the swap of Delta,
// evaluated directly from its defining pair arithmetic.  Elements are
// indexed group-part-major: 0 = l[0,id], 1 = l[1,id], 2 = l[0,swap],
// 3 = l[1,swap].
inline std::pair<OpTable, OpTable> ex4_tables() {
  const int delta = 2;
  auto mul = [](int f, int g) { return f ^ g; };         // Sym2 product
  auto theta = [](int f, int k) { return f ? 1 - k : k; };
  auto idx = [delta](int s, int f) { return f * delta + s; };
  std::vector<std::vector<int>> l(4, std::vector<int>(4));
  std::vector<std::vector<int>> r(4, std::vector<int>(4));
  for (int s = 0; s < delta; ++s) {
    for (int f = 0; f < 2; ++f) {
      for (int t = 0; t < delta; ++t) {
        for (int g = 0; g < 2; ++g) {
          l[idx(s, f)][idx(t, g)] = idx(s, mul(f, g));
          r[idx(s, f)][idx(t, g)] = idx(theta(f, t), mul(f, g));
        }
      }
    }
  }
  return {OpTable::from_rows(l), OpTable::from_rows(r)};
}

inline Digroup ex4_digroup() {
  auto [l, r] = ex4_tables();
  return Digroup::from_tables(l, r);
}

// The order-4 construction with the same data as ex4 except that theta is
// trivial; distinguishable from ex4 by its identity count.
inline Digroup trivial_theta4_digroup() {
  const int delta = 2;
  auto mul = [](int f, int g) { return f ^ g; };
  auto idx = [delta](int s, int f) { return f * delta + s; };
  std::vector<std::vector<int>> l(4, std::vector<int>(4));
  std::vector<std::vector<int>> r(4, std::vector<int>(4));
  for (int s = 0; s < delta; ++s) {
    for (int f = 0; f < 2; ++f) {
      for (int t = 0; t < delta; ++t) {
        for (int g = 0; g < 2; ++g) {
          l[idx(s, f)][idx(t, g)] = idx(s, mul(f, g));
          r[idx(s, f)][idx(t, g)] = idx(t, mul(f, g));
        }
      }
    }
  }
  return Digroup::from_tables(OpTable::from_rows(l), OpTable::from_rows(r));
}

// Literal transcription of the definition: the five identities, bar-unit
// existence, and one-sided inverses.  No shortcuts, no shared code with
// validate_digroup.
struct NaiveCheck {
  bool valid = false;
  std::vector<ElementId> halo;
};

inline NaiveCheck naive_digroup_check(const std::vector<std::vector<int>>& l,
                                      const std::vector<std::vector<int>>& r) {
  const int n = static_cast<int>(l.size());
  NaiveCheck out;
  bool laws = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (l[x][l[y][z]] != l[l[x][y]][z]) laws = false;
        if (l[x][l[y][z]] != l[x][r[y][z]]) laws = false;
        if (l[r[x][y]][z] != r[x][l[y][z]]) laws = false;
        if (r[l[x][y]][z] != r[r[x][y]][z]) laws = false;
        if (r[r[x][y]][z] != r[x][r[y][z]]) laws = false;
      }
    }
  }
  for (int e = 0; e < n; ++e) {
    bool unit = true;
    for (int x = 0; x < n; ++x) {
      if (l[x][e] != x || r[e][x] != x) unit = false;
    }
    if (unit) out.halo.push_back(e);
  }
  bool inverses_ok = !out.halo.empty();
  for (int x = 0; x < n && inverses_ok; ++x) {
    bool has = false;
    for (int e : out.halo) {
      bool left = false, right = false;
      for (int y = 0; y < n; ++y) {
        if (l[y][x] == e) left = true;
        if (r[x][y] == e) right = true;
      }
      if (left && right) has = true;
    }
    if (!has) inverses_ok = false;
  }
  out.valid = laws && inverses_ok;
  return out;
}

// Applies the relabeling to both tables: new_table[p(x)][p(y)] = p(old).
inline Digroup relabel(const Digroup& d, const std::vector<int>& p) {
  const int n = d.order();
  std::vector<std::vector<int>> l(n, std::vector<int>(n));
  std::vector<std::vector<int>> r(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      l[p[x]][p[y]] = p[d.lp(x, y)];
      r[p[x]][p[y]] = p[d.rp(x, y)];
    }
  }
  return Digroup::from_tables(OpTable::from_rows(l), OpTable::from_rows(r));
}

inline std::vector<int> random_relabeling(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testsupport
