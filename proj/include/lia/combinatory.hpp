// Combinator bases {I,B,C} / exponential group, permutation terms, and
// bracket abstraction from lambda terms to combinatory words.
#ifndef LIA_COMBINATORY_HPP
#define LIA_COMBINATORY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "lia/term.hpp"

namespace lia {

// ---------------------------------------------------------------------------
// Combinatory terms

enum class CombKind { Base, FreeVar, CApp, CBang };

struct CombNode;
using Comb = std::shared_ptr<const CombNode>;

struct CombNode {
  CombKind kind;
  std::string name;  // Base combinator name or FreeVar name
  Comb a, b;
};

inline Comb cbase(std::string name) {
  return std::make_shared<CombNode>(CombNode{CombKind::Base, std::move(name), nullptr, nullptr});
}
inline Comb cvar(std::string name) {
  return std::make_shared<CombNode>(CombNode{CombKind::FreeVar, std::move(name), nullptr, nullptr});
}
inline Comb capp(Comb f, Comb x) {
  return std::make_shared<CombNode>(CombNode{CombKind::CApp, {}, std::move(f), std::move(x)});
}
inline Comb capp(Comb f, Comb x, Comb y) { return capp(capp(std::move(f), std::move(x)), std::move(y)); }
inline Comb cbang(Comb body) {
  return std::make_shared<CombNode>(CombNode{CombKind::CBang, {}, std::move(body), nullptr});
}

inline const std::vector<std::string>& base_names() {
  static const std::vector<std::string> names = {"I", "B", "C", "K", "W", "S",
                                                 "K!", "W!", "F", "D", "delta"};
  return names;
}

// The defining lambda terms of the base combinators.
inline Term base_term(const std::string& name) {
  if (name == "I") return lam("x", var("x"));
  if (name == "B") return lam("x", lam("y", lam("z", app(var("x"), app(var("y"), var("z"))))));
  if (name == "C") return lam("x", lam("y", lam("z", app(var("x"), var("z"), var("y")))));
  if (name == "K") return lam("x", lam("y", var("x")));
  if (name == "W") return lam("x", lam("y", app(var("x"), var("y"), var("y"))));
  if (name == "S")
    return lam("x", lam("y", lam("z", app(app(var("x"), var("z")), app(var("y"), var("z"))))));
  if (name == "K!") return lam("x", blam("y", var("x")));
  if (name == "W!") return lam("x", blam("y", app(var("x"), bang(var("y")), bang(var("y")))));
  if (name == "F") return blam("x", blam("y", bang(app(var("x"), var("y")))));
  if (name == "D") return blam("x", var("x"));
  if (name == "delta") return blam("x", bang(bang(var("x"))));
  throw Error("unknown combinator: " + name);
}

inline Term comb_to_term(const Comb& c) {
  switch (c->kind) {
    case CombKind::Base: return base_term(c->name);
    case CombKind::FreeVar: return var(c->name);
    case CombKind::CApp: return app(comb_to_term(c->a), comb_to_term(c->b));
    case CombKind::CBang: return bang(comb_to_term(c->a));
  }
  throw Error("unreachable");
}

inline bool is_linear_comb(const Comb& c) {
  switch (c->kind) {
    case CombKind::Base: return c->name == "I" || c->name == "B" || c->name == "C";
    case CombKind::FreeVar: return true;
    case CombKind::CApp: return is_linear_comb(c->a) && is_linear_comb(c->b);
    case CombKind::CBang: return false;
  }
  return false;
}

inline bool is_exponential_comb(const Comb& c) {
  switch (c->kind) {
    case CombKind::Base:
      return c->name == "I" || c->name == "B" || c->name == "C" || c->name == "K!" ||
             c->name == "W!" || c->name == "F" || c->name == "D" || c->name == "delta";
    case CombKind::FreeVar: return true;
    case CombKind::CApp: return is_exponential_comb(c->a) && is_exponential_comb(c->b);
    case CombKind::CBang: return is_exponential_comb(c->a);
  }
  return false;
}

inline void comb_free_vars(const Comb& c, std::set<std::string>& out) {
  if (c->kind == CombKind::FreeVar) out.insert(c->name);
  if (c->a) comb_free_vars(c->a, out);
  if (c->b) comb_free_vars(c->b, out);
}

inline int comb_var_count(const Comb& c, const std::string& x) {
  if (c->kind == CombKind::FreeVar) return c->name == x ? 1 : 0;
  int n = 0;
  if (c->a) n += comb_var_count(c->a, x);
  if (c->b) n += comb_var_count(c->b, x);
  return n;
}

inline std::string comb_to_string(const Comb& c, bool arg = false) {
  switch (c->kind) {
    case CombKind::Base:
    case CombKind::FreeVar:
      return c->name;
    case CombKind::CApp: {
      std::string s = comb_to_string(c->a) + " " + comb_to_string(c->b, true);
      return arg ? "(" + s + ")" : s;
    }
    case CombKind::CBang:
      return "!" + comb_to_string(c->a, true);
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Permutations

// Permutation of {1..n} stored 0-based: map[i] = sigma(i+1)-1; normalized by
// dropping trailing fixed points (least support).
struct Perm {
  std::vector<int> map;

  static Perm identity() { return Perm{}; }

  static Perm transposition(int i, int j) {  // 1-based points
    Perm p;
    int n = std::max(i, j);
    p.map.resize(n);
    std::iota(p.map.begin(), p.map.end(), 0);
    std::swap(p.map[i - 1], p.map[j - 1]);
    p.normalize();
    return p;
  }

  static Perm of_images(std::vector<int> images_1based) {
    Perm p;
    for (int v : images_1based) p.map.push_back(v - 1);
    p.normalize();
    return p;
  }

  int size() const { return static_cast<int>(map.size()); }
  int apply(int i) const {  // 1-based
    if (i <= size()) return map[i - 1] + 1;
    return i;
  }

  void normalize() {
    while (!map.empty() && map.back() == static_cast<int>(map.size()) - 1) map.pop_back();
  }

  Perm inverse() const {
    Perm p;
    p.map.resize(map.size());
    for (int i = 0; i < size(); ++i) p.map[map[i]] = i;
    return p;
  }

  // Composition: (this o other)(x) = this(other(x)).
  Perm compose(const Perm& other) const {
    int n = std::max(size(), other.size());
    Perm p;
    p.map.resize(n);
    for (int i = 1; i <= n; ++i) p.map[i - 1] = apply(other.apply(i)) - 1;
    p.normalize();
    return p;
  }

  bool operator==(const Perm& o) const { return map == o.map; }
};

// lambda_sigma = \x y1..yn. x y_{sigma^-1(1)} ... y_{sigma^-1(n)}
inline Term perm_term(const Perm& sigma) {
  int n = sigma.size();
  if (n == 0) return lam("x", var("x"));
  Perm inv = sigma.inverse();
  Term body = var("x");
  for (int j = 1; j <= n; ++j) body = app(body, var("y" + std::to_string(inv.apply(j))));
  for (int j = n; j >= 1; --j) body = lam("y" + std::to_string(j), body);
  return lam("x", body);
}

// ---------------------------------------------------------------------------
// Combinator families

inline Comb family_I(int n) {
  if (n < 1) throw Error("family I_n requires n >= 1");
  Comb c = cbase("I");
  for (int i = 1; i < n; ++i) c = capp(cbase("B"), c);
  return c;
}
inline Comb family_B(int n) {
  if (n < 1) throw Error("family B_n requires n >= 1");
  Comb c = cbase("B");
  for (int i = 1; i < n; ++i) c = capp(cbase("B"), c);
  return c;
}
inline Comb family_C(int n) {
  if (n < 1) throw Error("family C_n requires n >= 1");
  Comb c = cbase("C");
  for (int i = 1; i < n; ++i) c = capp(cbase("B"), c);
  return c;
}

// C_{l,k} = B C_l (B C_{l+1} ... C_k); reduces to lambda_{(k+1,k,...,l)}.
inline Comb family_C2(int l, int k) {
  if (!(1 <= l && l <= k)) throw Error("family C_{l,k} requires 1 <= l <= k");
  Comb c = family_C(k);
  for (int i = k - 1; i >= l; --i) c = capp(capp(cbase("B"), family_C(i)), c);
  return c;
}

// B_{k,n}: composition of n-k copies of B_k; reduces to
// \x y1..yn. x y1..y_{k-1} (y_k ... y_n).  B_{k,k} degenerates to I_{k+1}.
inline Comb family_B2(int k, int n) {
  if (!(1 <= k && k <= n)) throw Error("family B_{k,n} requires 1 <= k <= n");
  if (n == k) return family_I(k + 1);
  Comb c = family_B(k);
  for (int i = 0; i < n - k - 1; ++i) c = capp(capp(cbase("B"), family_B(k)), c);
  return c;
}

// A_{k,n} = C_{2,k+1} B_{k+1,n+1}; reduces to
// \x y z1..zn. x z1..zk (y z_{k+1} ... z_n).  Edge cases: all arguments on
// one side degenerate to a grouping (k=0) or a rotation (k=n).
inline Comb family_A(int k, int n) {
  if (!(0 <= k && k <= n && n >= 1)) throw Error("family A_{k,n} requires 0 <= k <= n, n >= 1");
  if (k == 0) return family_B2(1, n + 1);
  if (k == n) return family_C2(1, n);
  return capp(family_C2(2, k + 1), family_B2(k + 1, n + 1));
}

// ---------------------------------------------------------------------------
// Permutations as combinatory words

// Closed {I,B,C} word reducing to perm_term(sigma).  Decomposes sigma into
// adjacent transpositions (bubble sort) and chains them with B, using
// B lambda_s lambda_t --> lambda_{t o s}.
inline Comb perm_to_comb(const Perm& sigma) {
  std::vector<int> p(sigma.map);
  std::vector<int> swaps;  // 1-based positions, in the order applied
  // Sorting sigma's one-line form by adjacent swaps expresses sigma as the
  // composition of those swaps applied first-to-last.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        swaps.push_back(i + 1);
        changed = true;
      }
    }
  }
  if (swaps.empty()) return cbase("I");
  Comb c = family_C(swaps.back());
  for (int i = static_cast<int>(swaps.size()) - 2; i >= 0; --i)
    c = capp(capp(cbase("B"), family_C(swaps[i])), c);
  return c;
}

// ---------------------------------------------------------------------------
// Bracket abstraction (linear)

struct NonLinearInput : Error {
  explicit NonLinearInput(const std::string& why) : Error("NonLinearInput: " + why) {}
};
struct NonLinearBangInput : Error {
  explicit NonLinearBangInput(const std::string& why) : Error("NonLinearBangInput: " + why) {}
};

namespace detail {

// One-variable linear abstraction over combinatory terms:
//   \x.x = I;  \x.(u v) = C (\x.u) v  if x in u,  B u (\x.v)  if x in v.
inline Comb abs_plain(const std::string& x, const Comb& c) {
  if (c->kind == CombKind::FreeVar && c->name == x) return cbase("I");
  if (c->kind == CombKind::CApp) {
    int in_fun = comb_var_count(c->a, x), in_arg = comb_var_count(c->b, x);
    if (in_fun + in_arg != 1) throw NonLinearInput("variable " + x + " not used exactly once");
    if (in_fun == 1) return capp(capp(cbase("C"), abs_plain(x, c->a)), c->b);
    return capp(capp(cbase("B"), c->a), abs_plain(x, c->b));
  }
  if (c->kind == CombKind::CBang) throw NonLinearBangInput("plain binder " + x + " occurs under !");
  throw NonLinearInput("variable " + x + " not used exactly once");
}

}  // namespace detail

// Theorem-level translation: any linear lambda term to an {I,B,C} word whose
// lambda reading normalizes to the input's normal form.
inline Comb abstract_linear_unchecked(const Term& t) {
  switch (t->kind) {
    case TermKind::Var: return cvar(t->name);
    case TermKind::App: return capp(abstract_linear_unchecked(t->a), abstract_linear_unchecked(t->b));
    case TermKind::Lam: return detail::abs_plain(t->name, abstract_linear_unchecked(t->a));
    default: throw NotPlainLambda{};
  }
}

inline Comb abstract_linear(const Term& t) {
  auto v = is_linear(t);
  if (!v) throw NonLinearInput(v.issues.empty() ? "not linear" : v.issues.front());
  return abstract_linear_unchecked(t);
}

// ---------------------------------------------------------------------------
// Multi-variable abstraction following the inductive construction:
// variables map to I, applications split the variable list with a permutation
// prefix and an A_{k,n} joint.

namespace detail {

inline Comb to_comb_literal(const Term& t) {
  if (t->kind == TermKind::Var) return cvar(t->name);
  if (t->kind == TermKind::App) return capp(to_comb_literal(t->a), to_comb_literal(t->b));
  for (const auto& n : {"I", "B", "C"})
    if (alpha_equal(t, base_term(n))) return cbase(n);
  throw NonLinearInput("not a linear combinatory term (as a lambda term)");
}

inline Comb abstract_multi_comb(const Comb& c, const std::vector<std::string>& vars) {
  int n = static_cast<int>(vars.size());
  if (n == 0) return c;
  if (c->kind == CombKind::FreeVar) {
    if (n == 1 && c->name == vars[0]) return cbase("I");
    throw NonLinearInput("variable list does not match term");
  }
  if (c->kind != CombKind::CApp) throw NonLinearInput("cannot abstract over this term");
  std::set<std::string> fv_u, fv_v;
  comb_free_vars(c->a, fv_u);
  comb_free_vars(c->b, fv_v);
  std::vector<std::string> us, vs;
  std::vector<int> sorted_pos;  // 1-based positions of the u-block then v-block
  for (int i = 0; i < n; ++i) {
    bool in_u = fv_u.count(vars[i]), in_v = fv_v.count(vars[i]);
    if (in_u && in_v) throw NonLinearInput("variable " + vars[i] + " used on both sides");
    if (!in_u && !in_v) throw NonLinearInput("variable " + vars[i] + " unused");
    if (in_u) {
      us.push_back(vars[i]);
      sorted_pos.push_back(i + 1);
    }
  }
  for (int i = 0; i < n; ++i)
    if (fv_v.count(vars[i])) {
      vs.push_back(vars[i]);
      sorted_pos.push_back(i + 1);
    }
  int k = static_cast<int>(us.size());
  Comb u0 = abstract_multi_comb(c->a, us);
  Comb v0 = abstract_multi_comb(c->b, vs);
  Comb core = capp(capp(family_A(k, n), u0), v0);
  // sorted_pos is sigma^{-1} in one-line form; a lambda_sigma prefix restores
  // the requested binder order.
  Perm sigma = Perm::of_images(sorted_pos).inverse();
  if (sigma == Perm::identity()) return core;
  return capp(perm_to_comb(sigma), core);
}

}  // namespace detail

inline Comb abstract_multi(const Term& t, const std::vector<std::string>& vars) {
  auto fv = free_variables(t);
  for (const auto& x : vars)
    if (!fv.count(x)) throw NonLinearInput("variable " + x + " not free in term");
  return detail::abstract_multi_comb(detail::to_comb_literal(t), vars);
}

// ---------------------------------------------------------------------------
// Exponential bracket abstraction

namespace detail {

inline Comb abs_bang(const std::string& x, const Comb& c);

// Exponential abstraction of a plain (non-!) binder; the binder may occur
// inside residual !-abstractions only via already-eliminated structure, so
// the {I,B,C} cases suffice, with CBang ruled out by linearity.
inline Comb abs_plain_exp(const std::string& x, const Comb& c) {
  if (c->kind == CombKind::FreeVar && c->name == x) return cbase("I");
  if (c->kind == CombKind::CApp) {
    int in_fun = comb_var_count(c->a, x), in_arg = comb_var_count(c->b, x);
    if (in_fun + in_arg != 1) throw NonLinearBangInput("binder " + x + " not used exactly once");
    if (in_fun == 1) return capp(capp(cbase("C"), abs_plain_exp(x, c->a)), c->b);
    return capp(capp(cbase("B"), c->a), abs_plain_exp(x, c->b));
  }
  if (c->kind == CombKind::CBang) throw NonLinearBangInput("binder " + x + " occurs under !");
  throw NonLinearBangInput("binder " + x + " not used exactly once");
}

inline Comb rename_comb(const Comb& c, const std::string& from, const std::string& to) {
  switch (c->kind) {
    case CombKind::FreeVar: return c->name == from ? cvar(to) : c;
    case CombKind::Base: return c;
    case CombKind::CApp: return capp(rename_comb(c->a, from, to), rename_comb(c->b, from, to));
    case CombKind::CBang: return cbang(rename_comb(c->a, from, to));
  }
  throw Error("unreachable");
}

// Abstraction of a !-binder:
//   no occurrence        K! c
//   duplicated use       W! (\!x1.\!x2. c split)
//   head occurrence      D,  or C/B descent through applications
//   under a single !     F !(\x.d)
//   under nested !       B (F !(\!x.d)) delta
inline Comb abs_bang(const std::string& x, const Comb& c) {
  int count = comb_var_count(c, x);
  if (count == 0) return capp(cbase("K!"), c);
  if (c->kind == CombKind::FreeVar) return cbase("D");
  if (c->kind == CombKind::CApp) {
    int in_fun = comb_var_count(c->a, x), in_arg = comb_var_count(c->b, x);
    if (in_fun > 0 && in_arg > 0) {
      std::string x1 = x + "#1", x2 = x + "#2";
      Comb split = capp(rename_comb(c->a, x, x1), rename_comb(c->b, x, x2));
      Comb inner = abs_bang(x2, split);
      Comb g = abs_bang(x1, inner);
      return capp(cbase("W!"), g);
    }
    if (in_fun > 0) return capp(capp(cbase("C"), abs_bang(x, c->a)), c->b);
    return capp(capp(cbase("B"), c->a), abs_bang(x, c->b));
  }
  if (c->kind == CombKind::CBang) {
    const Comb& d = c->a;
    bool plain_once = comb_var_count(d, x) == 1 && [&] {
      // occurrence not under a nested CBang
      std::vector<Comb> stack = {d};
      while (!stack.empty()) {
        Comb cur = stack.back();
        stack.pop_back();
        if (cur->kind == CombKind::CBang) {
          if (comb_var_count(cur, x) > 0) return false;
          continue;
        }
        if (cur->a) stack.push_back(cur->a);
        if (cur->b) stack.push_back(cur->b);
      }
      return true;
    }();
    if (plain_once) return capp(cbase("F"), cbang(abs_plain_exp(x, d)));
    Comb g = abs_bang(x, d);
    return capp(capp(cbase("B"), capp(cbase("F"), cbang(g))), cbase("delta"));
  }
  throw NonLinearBangInput("cannot abstract !-binder here");
}

inline Comb expo(const Term& t) {
  static const std::vector<std::string> expo_bases = {"I", "B",  "C", "K!",
                                                      "W!", "F", "D", "delta"};
  for (const auto& n : expo_bases)
    if (alpha_equal(t, base_term(n))) return cbase(n);
  switch (t->kind) {
    case TermKind::Var: return cvar(t->name);
    case TermKind::App: return capp(expo(t->a), expo(t->b));
    case TermKind::Bang: return cbang(expo(t->a));
    case TermKind::Lam: return abs_plain_exp(t->name, expo(t->a));
    case TermKind::BangLam: return abs_bang(t->name, expo(t->a));
    default: throw NotBangLambda{};
  }
}

}  // namespace detail

inline Comb abstract_exponential(const Term& t) {
  auto v = is_linear_bang(t);
  if (!v) throw NonLinearBangInput(v.issues.empty() ? "not linear" : v.issues.front());
  return detail::expo(t);
}

}  // namespace lia

#endif  // LIA_COMBINATORY_HPP
