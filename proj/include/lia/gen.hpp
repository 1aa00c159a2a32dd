// Fixture structures and seeded random generation of linear terms and
// small complete lattices.
#ifndef LIA_GEN_HPP
#define LIA_GEN_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lia/implicative.hpp"
#include "lia/lattice.hpp"
#include "lia/term.hpp"

namespace lia {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
  bool chance(int num, int den) { return below(den) < num; }
};

// ---------------------------------------------------------------------------
// Fixture lattices. All use a residuated (Heyting) arrow when one exists.

inline bool heyting_arrow(const FinLattice& L, std::vector<std::vector<int>>& imp) {
  int n = L.size();
  imp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::uint64_t cand = 0;
      for (int c = 0; c < n; ++c)
        if (L.leq(L.meet(c, a), b)) cand |= std::uint64_t{1} << c;
      int j = L.join_mask(cand);
      if (j < 0 || !((cand >> j) & 1)) return false;  // no maximum
      imp[a][b] = j;
    }
  return true;
}

// Fallback arrow: a -> b = b (valid for the variance and meet axioms).
inline void projection_arrow(const FinLattice& L, std::vector<std::vector<int>>& imp) {
  int n = L.size();
  imp.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) imp[a][b] = b;
}

inline std::vector<int> identity_bang(int n) {
  std::vector<int> b(n);
  for (int i = 0; i < n; ++i) b[i] = i;
  return b;
}

inline ImpStructure make_heyting(FinLattice L) {
  ImpStructure A;
  A.lat = std::move(L);
  if (!heyting_arrow(A.lat, A.imp)) projection_arrow(A.lat, A.imp);
  A.bang = identity_bang(A.lat.size());
  return A;
}

// Two-point Boolean lattice: 0 < 1.
inline ImpStructure fixture_bool2() {
  return make_heyting(FinLattice::from_order({"0", "1"}, {{0, 1}}));
}

inline ImpStructure fixture_bool2_const_bang() {
  ImpStructure A = fixture_bool2();
  A.bang.assign(A.size(), A.lat.top);
  return A;
}

// Four-point chain c0 < c1 < c2 < c3.
inline ImpStructure fixture_chain4() {
  return make_heyting(
      FinLattice::from_order({"c0", "c1", "c2", "c3"}, {{0, 1}, {1, 2}, {2, 3}}));
}

// Diamond: bot < x, y < top.
inline ImpStructure fixture_m2() {
  return make_heyting(FinLattice::from_order(
      {"bot", "x", "y", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

// Powerset of {0,1,2}; element i is the subset with mask i.
inline ImpStructure fixture_pow3() {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 8; ++i) {
    std::string nm = "{";
    for (int k = 0; k < 3; ++k)
      if ((i >> k) & 1) nm += std::to_string(k);
    nm += "}";
    names.push_back(nm);
    for (int j = 0; j < 8; ++j)
      if ((i & ~j) == 0) pairs.emplace_back(i, j);
  }
  ImpStructure A = make_heyting(FinLattice::from_order(std::move(names), pairs));
  // Compatible record pair: l keeps coordinate 0, r keeps coordinate 1.
  std::vector<int> l(8), r(8);
  for (int i = 0; i < 8; ++i) {
    l[i] = (i & 1) | 6;  // (a n {0}) u {1,2}
    r[i] = (i & 2) | 5;  // (a n {1}) u {0,2}
  }
  A.records["l"] = l;
  A.records["r"] = r;
  return A;
}

inline std::vector<ImpStructure> fixture_battery() {
  return {fixture_bool2(), fixture_chain4(), fixture_m2(), fixture_pow3()};
}

inline std::vector<std::string> fixture_names() {
  return {"bool2", "chain4", "m2", "pow3"};
}

// ---------------------------------------------------------------------------
// Random closed linear lambda-terms.

namespace detail {

// Builds a term of size about `budget` whose free variables are exactly
// `vars`, each occurring once.
inline Term random_linear_body(Rng& rng, int budget,
                               std::vector<std::string> vars, int& counter) {
  if (vars.size() == 1 && (budget <= 1 || rng.chance(1, 4)))
    return var(vars[0]);
  if (vars.empty() || (budget > 2 && rng.chance(1, 2))) {
    std::string x = "v" + std::to_string(counter++);
    vars.push_back(x);
    return lam(x, random_linear_body(rng, budget - 1, std::move(vars), counter));
  }
  if (vars.size() == 1) return var(vars[0]);
  // Application: split the variables between function and argument.
  std::vector<std::string> left, right;
  for (auto& v : vars) (rng.chance(1, 2) ? left : right).push_back(v);
  if (left.empty()) left.push_back(right.back()), right.pop_back();
  if (right.empty()) right.push_back(left.back()), left.pop_back();
  int lb = std::max(1, (budget - 1) / 2);
  Term f = random_linear_body(rng, lb, std::move(left), counter);
  Term a = random_linear_body(rng, budget - 1 - lb, std::move(right), counter);
  return app(f, a);
}

}  // namespace detail

inline Term random_linear_term(Rng& rng, int max_size) {
  int counter = 0;
  int budget = 2 + rng.below(std::max(1, max_size - 2));
  Term t = detail::random_linear_body(rng, budget, {}, counter);
  while (term_size(t) > max_size) {
    counter = 0;
    t = detail::random_linear_body(rng, budget / 2 + 1, {}, counter);
  }
  return t;
}

namespace detail {

// Linear-! terms: `lin` variables must be used exactly once outside any !;
// `bng` variables (bound by a !-abstraction) may be used freely.
inline Term random_bang_body(Rng& rng, int budget, std::vector<std::string> lin,
                             std::vector<std::string> bng, int& counter,
                             bool under_bang) {
  if (lin.size() == 1 && (budget <= 1 || rng.chance(1, 4))) return var(lin[0]);
  if (lin.empty() && budget <= 1 && !bng.empty()) return var(bng[rng.below((int)bng.size())]);
  if (lin.empty() && budget <= 1) {
    std::string x = "v" + std::to_string(counter++);
    return lam(x, var(x));
  }
  int pick = lin.size() > 1 && budget <= 1 ? 0 : rng.below(6);
  if (lin.empty() && pick == 5 && !under_bang) {
    // ! t with no pending linear variables inside.
    return bang(random_bang_body(rng, budget - 1, {}, bng, counter, true));
  }
  if (pick == 4) {
    std::string x = "b" + std::to_string(counter++);
    bng.push_back(x);
    return blam(x, random_bang_body(rng, budget - 1, std::move(lin),
                                    std::move(bng), counter, under_bang));
  }
  if (pick >= 2 || lin.empty()) {
    std::string x = "v" + std::to_string(counter++);
    lin.push_back(x);
    return lam(x, random_bang_body(rng, budget - 1, std::move(lin),
                                   std::move(bng), counter, under_bang));
  }
  std::vector<std::string> left, right;
  for (auto& v : lin) (rng.chance(1, 2) ? left : right).push_back(v);
  int lb = std::max(1, (budget - 1) / 2);
  Term f = random_bang_body(rng, lb, std::move(left), bng, counter, under_bang);
  Term a = random_bang_body(rng, budget - 1 - lb, std::move(right), bng, counter,
                            under_bang);
  return app(f, a);
}

}  // namespace detail

inline Term random_linear_bang_term(Rng& rng, int max_size) {
  int counter = 0;
  int budget = 2 + rng.below(std::max(1, max_size - 2));
  Term t = detail::random_bang_body(rng, budget, {}, {}, counter, false);
  while (term_size(t) > max_size || !is_linear_bang(t).ok) {
    counter = 0;
    budget = std::max(2, budget - 1);
    t = detail::random_bang_body(rng, budget, {}, {}, counter, false);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Random complete lattices via the cut completion of a random poset.

namespace detail {

inline FinLattice dedekind_macneille(int k, const std::vector<std::uint64_t>& up) {
  // A cut is L(U(S)) for S a subset; order cuts by inclusion.
  auto upper = [&](std::uint64_t S) {
    std::uint64_t u = (std::uint64_t{1} << k) - 1;
    for (int i = 0; i < k; ++i)
      if ((S >> i) & 1) u &= up[i];
    return u;
  };
  auto lower = [&](std::uint64_t S) {
    std::uint64_t l = 0;
    for (int j = 0; j < k; ++j) {
      bool below_all = true;
      for (int i = 0; i < k && below_all; ++i)
        if (((S >> i) & 1) && !((up[j] >> i) & 1)) below_all = false;
      if (below_all) l |= std::uint64_t{1} << j;
    }
    return l;
  };
  std::set<std::uint64_t> cuts;
  for (std::uint64_t S = 0; S < (std::uint64_t{1} << k); ++S)
    cuts.insert(lower(upper(S)));
  std::vector<std::uint64_t> elems(cuts.begin(), cuts.end());
  int n = static_cast<int>(elems.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((elems[a] & ~elems[b]) == 0) pairs.emplace_back(a, b);
  return FinLattice::from_order(std::move(names), pairs);
}

}  // namespace detail

inline ImpStructure random_lattice_structure(Rng& rng, int max_size = 8) {
  while (true) {
    int k = 2 + rng.below(3);  // poset of 2..4 points
    std::vector<std::uint64_t> up(k);
    for (int i = 0; i < k; ++i) up[i] = std::uint64_t{1} << i;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (rng.chance(1, 2)) up[i] |= std::uint64_t{1} << j;
    for (int m = 0; m < k; ++m)  // transitive closure
      for (int i = 0; i < k; ++i)
        if ((up[i] >> m) & 1) up[i] |= up[m];
    FinLattice L = detail::dedekind_macneille(k, up);
    if (L.size() > max_size) continue;
    return make_heyting(std::move(L));
  }
}

}  // namespace lia

#endif  // LIA_GEN_HPP
