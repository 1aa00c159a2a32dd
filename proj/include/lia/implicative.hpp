// Implicative and applicative structures on finite lattices, the adjunction
// between them, and interpretation of lambda terms as elements.
#ifndef LIA_IMPLICATIVE_HPP
#define LIA_IMPLICATIVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lia/combinatory.hpp"
#include "lia/lattice.hpp"
#include "lia/report.hpp"
#include "lia/term.hpp"

namespace lia {

struct ImpStructure {
  FinLattice lat;
  std::vector<std::vector<int>> imp;           // imp[a][b] = a -> b
  std::vector<int> bang;                       // empty when absent
  std::map<std::string, std::vector<int>> records;  // label -> table

  int size() const { return lat.size(); }
  int arrow(int a, int b) const { return imp[a][b]; }
  bool has_bang() const { return !bang.empty(); }
  int bang_of(int a) const {
    if (!has_bang()) throw Error("no ! table in this structure");
    return bang[a];
  }
  const std::vector<int>& record_map(const std::string& label) const {
    auto it = records.find(label);
    if (it == records.end()) throw Error("no record table for label " + label);
    return it->second;
  }

  // extract_l(a) = meet { b : a <= l(b) }
  int extract(const std::string& label, int a) const {
    const auto& tbl = record_map(label);
    std::uint64_t mask = 0;
    for (int b = 0; b < size(); ++b)
      if (lat.leq(a, tbl[b])) mask |= std::uint64_t{1} << b;
    return lat.meet_mask(mask);
  }

  // a.b = meet { c : a <= b -> c }
  int app(int a, int b) const {
    std::uint64_t mask = 0;
    for (int c = 0; c < size(); ++c)
      if (lat.leq(a, imp[b][c])) mask |= std::uint64_t{1} << c;
    return lat.meet_mask(mask);
  }
};

struct AppStructure {
  FinLattice lat;
  std::vector<std::vector<int>> app;  // app[a][b] = a . b

  int size() const { return lat.size(); }

  // a ~> b = join { c : c . a <= b }
  int arrow(int a, int b) const {
    std::uint64_t mask = 0;
    for (int c = 0; c < size(); ++c)
      if (lat.leq(app[c][a], b)) mask |= std::uint64_t{1} << c;
    return lat.join_mask(mask);
  }
};

// ---------------------------------------------------------------------------
// Axiom verification

inline Report verify_implicative(const ImpStructure& A) {
  Report r = verify_lattice(A.lat);
  int n = A.size();
  bool variance = true;
  std::string wv;
  for (int a = 0; a < n && variance; ++a)
    for (int a2 = 0; a2 < n && variance; ++a2)
      for (int b = 0; b < n && variance; ++b)
        for (int b2 = 0; b2 < n && variance; ++b2)
          if (A.lat.leq(a2, a) && A.lat.leq(b, b2) &&
              !A.lat.leq(A.imp[a][b], A.imp[a2][b2])) {
            variance = false;
            wv = A.lat.name(a) + "," + A.lat.name(a2) + "," + A.lat.name(b) + "," +
                 A.lat.name(b2);
          }
  r.add("imp.variance", variance, wv);

  bool dist = true;
  std::string wd;
  for (int a = 0; a < n && dist; ++a) {
    if (A.imp[a][A.lat.top] != A.lat.top) {  // empty meet case
      dist = false;
      wd = A.lat.name(a) + " -> top != top";
    }
    for (int b = 0; b < n && dist; ++b)
      for (int c = 0; c < n && dist; ++c)
        if (A.imp[a][A.lat.meet(b, c)] != A.lat.meet(A.imp[a][b], A.imp[a][c])) {
          dist = false;
          wd = A.lat.name(a) + "," + A.lat.name(b) + "," + A.lat.name(c);
        }
  }
  r.add("imp.meet_distribution", dist, wd);

  if (A.has_bang()) {
    bool mono = true;
    std::string wm;
    for (int a = 0; a < n && mono; ++a)
      for (int b = 0; b < n && mono; ++b)
        if (A.lat.leq(a, b) && !A.lat.leq(A.bang[a], A.bang[b])) {
          mono = false;
          wm = A.lat.name(a) + "," + A.lat.name(b);
        }
    r.add("bang.monotone", mono, wm);
  }
  return r;
}

inline Report verify_applicative(const AppStructure& A) {
  Report r = verify_lattice(A.lat);
  int n = A.size();
  bool mono = true;
  std::string wm;
  for (int a = 0; a < n && mono; ++a)
    for (int a2 = 0; a2 < n && mono; ++a2)
      for (int b = 0; b < n && mono; ++b)
        for (int b2 = 0; b2 < n && mono; ++b2)
          if (A.lat.leq(a, a2) && A.lat.leq(b, b2) &&
              !A.lat.leq(A.app[a][b], A.app[a2][b2])) {
            mono = false;
            wm = A.lat.name(a) + "," + A.lat.name(a2) + "," + A.lat.name(b) + "," +
                 A.lat.name(b2);
          }
  r.add("app.monotone", mono, wm);

  bool dist = true;
  std::string wd;
  for (int b = 0; b < n && dist; ++b) {
    if (A.app[A.lat.bottom][b] != A.lat.bottom) {  // empty join case
      dist = false;
      wd = "bottom . " + A.lat.name(b) + " != bottom";
    }
    for (int a = 0; a < n && dist; ++a)
      for (int a2 = 0; a2 < n && dist; ++a2)
        if (A.app[A.lat.join(a, a2)][b] != A.lat.join(A.app[a][b], A.app[a2][b])) {
          dist = false;
          wd = A.lat.name(a) + "," + A.lat.name(a2) + "," + A.lat.name(b);
        }
  }
  r.add("app.join_distribution", dist, wd);
  return r;
}

// ---------------------------------------------------------------------------
// Interdefinition and round trips

inline AppStructure app_of_imp(const ImpStructure& A) {
  AppStructure R;
  R.lat = A.lat;
  int n = A.size();
  R.app.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) R.app[a][b] = A.app(a, b);
  return R;
}

inline ImpStructure imp_of_app(const AppStructure& A) {
  ImpStructure R;
  R.lat = A.lat;
  int n = A.size();
  R.imp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) R.imp[a][b] = A.arrow(a, b);
  return R;
}

inline Report roundtrip_check(const ImpStructure& A) {
  Report r;
  int n = A.size();
  AppStructure ap = app_of_imp(A);
  ImpStructure back = imp_of_app(ap);
  bool same = back.imp == A.imp;
  std::string w;
  if (!same)
    for (int a = 0; a < n && w.empty(); ++a)
      for (int b = 0; b < n && w.empty(); ++b)
        if (back.imp[a][b] != A.imp[a][b]) w = A.lat.name(a) + "," + A.lat.name(b);
  r.add("roundtrip.imp_app_imp", same, w);

  bool adj = true;
  std::string wa;
  for (int a = 0; a < n && adj; ++a)
    for (int b = 0; b < n && adj; ++b)
      for (int c = 0; c < n && adj; ++c)
        if (A.lat.leq(ap.app[a][b], c) != A.lat.leq(a, ap.arrow(b, c))) {
          adj = false;
          wa = A.lat.name(a) + "," + A.lat.name(b) + "," + A.lat.name(c);
        }
  r.add("roundtrip.adjunction", adj, wa);

  // a <= b ~> a.b  and  (a ~> b).a <= b
  bool unit = true;
  std::string wu;
  for (int a = 0; a < n && unit; ++a)
    for (int b = 0; b < n && unit; ++b) {
      if (!A.lat.leq(a, ap.arrow(b, ap.app[a][b]))) {
        unit = false;
        wu = "unit " + A.lat.name(a) + "," + A.lat.name(b);
      } else if (!A.lat.leq(ap.app[ap.arrow(a, b)][a], b)) {
        unit = false;
        wu = "counit " + A.lat.name(a) + "," + A.lat.name(b);
      }
    }
  r.add("roundtrip.unit_counit", unit, wu);
  return r;
}

inline Report roundtrip_check_app(const AppStructure& A) {
  Report r;
  AppStructure back = app_of_imp(imp_of_app(A));
  bool same = back.app == A.app;
  std::string w;
  if (!same)
    for (int a = 0; a < A.size() && w.empty(); ++a)
      for (int b = 0; b < A.size() && w.empty(); ++b)
        if (back.app[a][b] != A.app[a][b]) w = A.lat.name(a) + "," + A.lat.name(b);
  r.add("roundtrip.app_imp_app", same, w);
  return r;
}

// ---------------------------------------------------------------------------
// Interpretation

using Env = std::map<std::string, int>;

struct InterpOptions {
  int max_binder_depth = 6;  // nesting cap on the exhaustive meets
};

namespace detail {

struct InterpCtx {
  const ImpStructure& A;
  InterpOptions opt;
  std::map<const TermNode*, std::set<std::string>> fv_cache;
  std::map<std::pair<const TermNode*, std::vector<std::pair<std::string, int>>>, int> memo;

  const std::set<std::string>& fv(const Term& t) {
    auto it = fv_cache.find(t.get());
    if (it == fv_cache.end()) it = fv_cache.emplace(t.get(), free_variables(t)).first;
    return it->second;
  }

  int go(const Term& t, const Env& env, int depth) {
    std::vector<std::pair<std::string, int>> key_env;
    for (const auto& x : fv(t)) {
      auto it = env.find(x);
      if (it == env.end()) throw Error("unresolved free variable: " + x);
      key_env.emplace_back(x, it->second);
    }
    auto key = std::make_pair(t.get(), std::move(key_env));
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    int v = compute(t, env, depth);
    memo.emplace(std::move(key), v);
    return v;
  }

  int compute(const Term& t, const Env& env, int depth) {
    const FinLattice& L = A.lat;
    switch (t->kind) {
      case TermKind::Var:
        return env.at(t->name);
      case TermKind::Param:
        return L.index_of(t->name);
      case TermKind::App: {
        int f = go(t->a, env, depth);
        int x = go(t->b, env, depth);
        return A.app(f, x);
      }
      case TermKind::Lam:
      case TermKind::BangLam: {
        if (depth >= opt.max_binder_depth)
          throw Error("binder nesting exceeds the configured depth cap");
        int acc = L.top;
        Env e2 = env;
        for (int a = 0; a < L.size(); ++a) {
          e2[t->name] = a;
          int body = go(t->a, e2, depth + 1);
          int dom = t->kind == TermKind::Lam ? a : A.bang_of(a);
          acc = L.meet(acc, A.imp[dom][body]);
        }
        return acc;
      }
      case TermKind::Bang:
        return A.bang_of(go(t->a, env, depth));
      case TermKind::EmptyRecord:
        return L.top;
      case TermKind::RecordExt: {
        int base = go(t->a, env, depth);
        int field = go(t->b, env, depth);
        const auto& tbl = A.record_map(t->name);
        int acc = tbl[field];
        for (const auto& [label, other] : A.records)
          if (label != t->name) acc = L.meet(acc, other[A.extract(label, base)]);
        return acc;
      }
      case TermKind::Select:
        return A.extract(t->name, go(t->a, env, depth));
    }
    throw Error("unreachable");
  }
};

}  // namespace detail

inline int interpret(const Term& t, const Env& env, const ImpStructure& A,
                     InterpOptions opt = {}) {
  detail::InterpCtx ctx{A, opt, {}, {}};
  return ctx.go(t, env, 0);
}

// Re-usable interpreter that keeps its memo across calls (same structure).
// Retains evaluated terms so memo keys never dangle.
struct Interpreter {
  detail::InterpCtx ctx;
  std::vector<Term> roots;
  explicit Interpreter(const ImpStructure& A, InterpOptions opt = {}) : ctx{A, opt, {}, {}} {}
  int operator()(const Term& t, const Env& env = {}) {
    roots.push_back(t);
    return ctx.go(t, env, 0);
  }
};

// Gamma |- t : a  iff  fv(t) included in dom(Gamma) and t[Gamma] <= a.
inline bool check_typing(const Env& env, const Term& t, int a, const ImpStructure& A,
                         InterpOptions opt = {}) {
  return A.lat.leq(interpret(t, env, A, opt), a);
}

// ---------------------------------------------------------------------------
// Closed-form combinator values

// The closed-form meet for each base combinator, folded exhaustively.
inline int combinator_closed_form(const std::string& name, const ImpStructure& A) {
  const FinLattice& L = A.lat;
  int n = L.size();
  auto arr = [&](int a, int b) { return A.imp[a][b]; };
  int acc = L.top;
  if (name == "I") {
    for (int a = 0; a < n; ++a) acc = L.meet(acc, arr(a, a));
  } else if (name == "B") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          acc = L.meet(acc, arr(arr(b, c), arr(arr(a, b), arr(a, c))));
  } else if (name == "C") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          acc = L.meet(acc, arr(arr(a, arr(b, c)), arr(b, arr(a, c))));
  } else if (name == "K") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) acc = L.meet(acc, arr(a, arr(b, a)));
  } else if (name == "W") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        acc = L.meet(acc, arr(arr(a, arr(a, b)), arr(a, b)));
  } else if (name == "S") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          acc = L.meet(acc, arr(arr(a, arr(b, c)), arr(arr(a, b), arr(a, c))));
  } else if (name == "K!") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) acc = L.meet(acc, arr(a, arr(A.bang_of(b), a)));
  } else if (name == "W!") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        acc = L.meet(acc,
                     arr(arr(A.bang_of(a), arr(A.bang_of(a), b)), arr(A.bang_of(a), b)));
  } else if (name == "F") {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        acc = L.meet(acc, arr(A.bang_of(arr(a, b)), arr(A.bang_of(a), A.bang_of(b))));
  } else if (name == "D") {
    for (int a = 0; a < n; ++a) acc = L.meet(acc, arr(A.bang_of(a), a));
  } else if (name == "delta") {
    for (int a = 0; a < n; ++a)
      acc = L.meet(acc, arr(A.bang_of(a), A.bang_of(A.bang_of(a))));
  } else {
    throw Error("no closed form for combinator " + name);
  }
  return acc;
}

// Interpretation of the defining lambda term, cross-checked against the
// closed form; the flag reports agreement.
inline std::pair<int, bool> combinator_value(const std::string& name, const ImpStructure& A) {
  int closed = combinator_closed_form(name, A);
  int interp = interpret(base_term(name), {}, A);
  return {interp, interp == closed};
}

// ---------------------------------------------------------------------------
// Kleisli construction: a ->' b = !a -> b

inline ImpStructure kleisli(const ImpStructure& A) {
  if (!A.has_bang()) throw Error("kleisli requires a ! table");
  ImpStructure R;
  R.lat = A.lat;
  int n = A.size();
  R.imp.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) R.imp[a][b] = A.imp[A.bang[a]][b];
  R.bang = A.bang;
  return R;
}

}  // namespace lia

#endif  // LIA_IMPLICATIVE_HPP
