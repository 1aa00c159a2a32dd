// Finite bounded lattices over element ids 0..n-1 with bitmask order rows.
#ifndef LIA_LATTICE_HPP
#define LIA_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lia/report.hpp"
#include "lia/term.hpp"

namespace lia {

struct FinLattice {
  std::vector<std::string> names;
  std::vector<std::uint64_t> up;    // up[a] = { b : a <= b }
  std::vector<std::uint64_t> down;  // down[a] = { b : b <= a }
  std::vector<std::vector<int>> meet_table, join_table;  // -1 when absent
  int top = -1, bottom = -1;

  int size() const { return static_cast<int>(names.size()); }
  std::uint64_t all_mask() const {
    int n = size();
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  }
  bool leq(int a, int b) const { return (up[a] >> b) & 1; }
  int meet(int a, int b) const { return meet_table[a][b]; }
  int join(int a, int b) const { return join_table[a][b]; }

  // Meet of an arbitrary element set; the empty meet is top.
  int meet_mask(std::uint64_t mask) const {
    int acc = top;
    for (int i = 0; i < size(); ++i)
      if ((mask >> i) & 1) {
        if (acc < 0) return -1;
        acc = meet_table[acc][i];
      }
    return acc;
  }
  int join_mask(std::uint64_t mask) const {
    int acc = bottom;
    for (int i = 0; i < size(); ++i)
      if ((mask >> i) & 1) {
        if (acc < 0) return -1;
        acc = join_table[acc][i];
      }
    return acc;
  }

  const std::string& name(int a) const { return names[a]; }
  int index_of(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == nm) return i;
    throw Error("unknown element: " + nm);
  }

  // Builds the reflexive-transitive closure of the given pairs and derives
  // bounds and meet/join tables (entries left -1 where no glb/lub exists).
  static FinLattice from_order(std::vector<std::string> names,
                               const std::vector<std::pair<int, int>>& leq_pairs) {
    FinLattice L;
    L.names = std::move(names);
    int n = L.size();
    if (n < 1 || n > 63) throw Error("lattice size must be in [1, 63]");
    L.up.assign(n, 0);
    for (int i = 0; i < n; ++i) L.up[i] |= std::uint64_t{1} << i;
    for (auto [a, b] : leq_pairs) L.up[a] |= std::uint64_t{1} << b;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if ((L.up[i] >> k) & 1) L.up[i] |= L.up[k];
    L.derive();
    return L;
  }

  void derive() {
    int n = size();
    down.assign(n, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (leq(b, a)) down[a] |= std::uint64_t{1} << b;
    top = bottom = -1;
    for (int a = 0; a < n; ++a) {
      if (down[a] == all_mask()) top = a;
      if (up[a] == all_mask()) bottom = a;
    }
    meet_table.assign(n, std::vector<int>(n, -1));
    join_table.assign(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::uint64_t lower = down[a] & down[b];
        for (int g = 0; g < n; ++g)
          if (((lower >> g) & 1) && (lower & ~down[g]) == 0) {
            meet_table[a][b] = g;
            break;
          }
        std::uint64_t upper = up[a] & up[b];
        for (int g = 0; g < n; ++g)
          if (((upper >> g) & 1) && (upper & ~up[g]) == 0) {
            join_table[a][b] = g;
            break;
          }
      }
  }
};

inline Report verify_lattice(const FinLattice& L) {
  Report r;
  int n = L.size();
  bool refl = true, antisym = true, trans = true;
  std::string w_refl, w_anti, w_trans;
  for (int a = 0; a < n && refl; ++a)
    if (!L.leq(a, a)) {
      refl = false;
      w_refl = L.name(a);
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && L.leq(a, b) && L.leq(b, a) && antisym) {
        antisym = false;
        w_anti = L.name(a) + "," + L.name(b);
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.leq(a, b) && L.leq(b, c) && !L.leq(a, c) && trans) {
          trans = false;
          w_trans = L.name(a) + "," + L.name(b) + "," + L.name(c);
        }
  r.add("order.reflexive", refl, w_refl);
  r.add("order.antisymmetric", antisym, w_anti);
  r.add("order.transitive", trans, w_trans);
  r.add("bounds.top", L.top >= 0);
  r.add("bounds.bottom", L.bottom >= 0);

  bool meets = true, joins = true;
  std::string w_meet, w_join;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = L.meet_table[a][b];
      if (m < 0) {
        if (meets) {
          meets = false;
          w_meet = L.name(a) + "," + L.name(b) + ": no glb";
        }
        continue;
      }
      std::uint64_t lower = L.down[a] & L.down[b];
      if (!(((lower >> m) & 1) && (lower & ~L.down[m]) == 0) && meets) {
        meets = false;
        w_meet = L.name(a) + "," + L.name(b);
      }
      int j = L.join_table[a][b];
      if (j < 0) {
        if (joins) {
          joins = false;
          w_join = L.name(a) + "," + L.name(b) + ": no lub";
        }
        continue;
      }
      std::uint64_t upper = L.up[a] & L.up[b];
      if (!(((upper >> j) & 1) && (upper & ~L.up[j]) == 0) && joins) {
        joins = false;
        w_join = L.name(a) + "," + L.name(b);
      }
    }
  r.add("lattice.meets", meets, w_meet);
  r.add("lattice.joins", joins, w_join);
  return r;
}

}  // namespace lia

#endif  // LIA_LATTICE_HPP
