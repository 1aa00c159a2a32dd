// Lambda-calculus kernel: syntax with `!` and records, linearity analysis,
// capture-avoiding substitution, leftmost-outermost reduction.
#ifndef LIA_TERM_HPP
#define LIA_TERM_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lia {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FuelExhausted : Error {
  FuelExhausted() : Error("fuel exhausted during normalization") {}
};

enum class TermKind {
  Var,
  App,
  Lam,
  Bang,
  BangLam,
  EmptyRecord,
  RecordExt,
  Select,
  Param,
};

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var name, Lam/BangLam binder, record label, Param id
  Term a, b;         // App(fun=a, arg=b); Lam/BangLam/Bang body=a;
                     // RecordExt(base=a, field=b); Select(base=a)
};

inline Term var(std::string x) {
  return std::make_shared<TermNode>(TermNode{TermKind::Var, std::move(x), nullptr, nullptr});
}
inline Term app(Term f, Term x) {
  return std::make_shared<TermNode>(TermNode{TermKind::App, {}, std::move(f), std::move(x)});
}
inline Term app(Term f, Term x, Term y) { return app(app(std::move(f), std::move(x)), std::move(y)); }
inline Term app(Term f, Term x, Term y, Term z) {
  return app(app(std::move(f), std::move(x), std::move(y)), std::move(z));
}
inline Term lam(std::string x, Term body) {
  return std::make_shared<TermNode>(TermNode{TermKind::Lam, std::move(x), std::move(body), nullptr});
}
inline Term blam(std::string x, Term body) {
  return std::make_shared<TermNode>(TermNode{TermKind::BangLam, std::move(x), std::move(body), nullptr});
}
inline Term bang(Term body) {
  return std::make_shared<TermNode>(TermNode{TermKind::Bang, {}, std::move(body), nullptr});
}
inline Term rec_empty() {
  return std::make_shared<TermNode>(TermNode{TermKind::EmptyRecord, {}, nullptr, nullptr});
}
inline Term rec_ext(Term base, std::string label, Term field) {
  return std::make_shared<TermNode>(
      TermNode{TermKind::RecordExt, std::move(label), std::move(base), std::move(field)});
}
inline Term select(Term base, std::string label) {
  return std::make_shared<TermNode>(
      TermNode{TermKind::Select, std::move(label), std::move(base), nullptr});
}
inline Term param(std::string id) {
  return std::make_shared<TermNode>(TermNode{TermKind::Param, std::move(id), nullptr, nullptr});
}

inline std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  if (t->a) n += term_size(t->a);
  if (t->b) n += term_size(t->b);
  return n;
}

inline void collect_free(const Term& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      break;
    case TermKind::Lam:
    case TermKind::BangLam: {
      bool fresh = bound.insert(t->name).second;
      collect_free(t->a, bound, out);
      if (fresh) bound.erase(t->name);
      break;
    }
    default:
      if (t->a) collect_free(t->a, bound, out);
      if (t->b) collect_free(t->b, bound, out);
  }
}

inline std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Linearity

struct LinearVerdict {
  bool ok = true;
  std::vector<std::string> issues;
  explicit operator bool() const { return ok; }
  void fail(std::string msg) {
    ok = false;
    issues.push_back(std::move(msg));
  }
};

namespace detail {

struct Occ {
  int count = 0;
  bool under_bang = false;
};
using OccMap = std::map<std::string, Occ>;

inline void merge(OccMap& into, const OccMap& from) {
  for (auto& [k, v] : from) {
    auto& o = into[k];
    o.count += v.count;
    o.under_bang = o.under_bang || v.under_bang;
  }
}

// Occurrence counts of free variables, with a flag for occurrences under `!`.
inline OccMap occurrences(const Term& t, LinearVerdict& v, bool allow_bang) {
  OccMap m;
  switch (t->kind) {
    case TermKind::Var:
      m[t->name] = Occ{1, false};
      break;
    case TermKind::Param:
      break;
    case TermKind::App: {
      m = occurrences(t->a, v, allow_bang);
      merge(m, occurrences(t->b, v, allow_bang));
      break;
    }
    case TermKind::Lam: {
      m = occurrences(t->a, v, allow_bang);
      auto it = m.find(t->name);
      if (it == m.end() || it->second.count == 0)
        v.fail("binder " + t->name + " is unused");
      else {
        if (it->second.count > 1)
          v.fail("binder " + t->name + " used " + std::to_string(it->second.count) + " times");
        if (it->second.under_bang) v.fail("binder " + t->name + " occurs under !");
      }
      m.erase(t->name);
      break;
    }
    case TermKind::BangLam: {
      if (!allow_bang) v.fail("!-abstraction present in a plain lambda term");
      m = occurrences(t->a, v, allow_bang);
      m.erase(t->name);  // !-bound variables are exempt from single use
      break;
    }
    case TermKind::Bang: {
      if (!allow_bang) v.fail("! present in a plain lambda term");
      m = occurrences(t->a, v, allow_bang);
      for (auto& [k, o] : m) o.under_bang = true;
      break;
    }
    case TermKind::EmptyRecord:
    case TermKind::RecordExt:
    case TermKind::Select:
      v.fail("record construct not allowed here");
      if (t->a) m = occurrences(t->a, v, allow_bang);
      if (t->b) merge(m, occurrences(t->b, v, allow_bang));
      break;
  }
  return m;
}

}  // namespace detail

struct NotPlainLambda : Error {
  NotPlainLambda() : Error("NotPlainLambda: term contains ! or record constructs") {}
};
struct NotBangLambda : Error {
  NotBangLambda() : Error("NotBangLambda: term contains record constructs") {}
};

inline bool contains_kind(const Term& t, std::initializer_list<TermKind> ks) {
  for (auto k : ks)
    if (t->kind == k) return true;
  return (t->a && contains_kind(t->a, ks)) || (t->b && contains_kind(t->b, ks));
}

// Every lambda binds exactly one occurrence, free variables occur at most once.
inline LinearVerdict is_linear(const Term& t) {
  if (contains_kind(t, {TermKind::Bang, TermKind::BangLam, TermKind::EmptyRecord,
                        TermKind::RecordExt, TermKind::Select}))
    throw NotPlainLambda{};
  LinearVerdict v;
  auto free = detail::occurrences(t, v, false);
  for (auto& [k, o] : free)
    if (o.count > 1) v.fail("free variable " + k + " used " + std::to_string(o.count) + " times");
  return v;
}

// Linearity for lambda-!-terms: plain binders single-use and never under !,
// !-bound binders exempt, free variables at most once.
inline LinearVerdict is_linear_bang(const Term& t) {
  if (contains_kind(t, {TermKind::EmptyRecord, TermKind::RecordExt, TermKind::Select}))
    throw NotBangLambda{};
  LinearVerdict v;
  auto free = detail::occurrences(t, v, true);
  for (auto& [k, o] : free)
    if (o.count > 1) v.fail("free variable " + k + " used " + std::to_string(o.count) + " times");
  return v;
}

// ---------------------------------------------------------------------------
// Substitution

inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += "'";
  return n;
}

inline Term substitute(const Term& t, const std::string& x, const Term& u) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == x ? u : t;
    case TermKind::Param:
    case TermKind::EmptyRecord:
      return t;
    case TermKind::App:
      return app(substitute(t->a, x, u), substitute(t->b, x, u));
    case TermKind::Bang:
      return bang(substitute(t->a, x, u));
    case TermKind::RecordExt:
      return rec_ext(substitute(t->a, x, u), t->name, substitute(t->b, x, u));
    case TermKind::Select:
      return select(substitute(t->a, x, u), t->name);
    case TermKind::Lam:
    case TermKind::BangLam: {
      if (t->name == x) return t;
      auto body_free = free_variables(t->a);
      if (!body_free.count(x)) return t;
      Term body = t->a;
      std::string binder = t->name;
      auto u_free = free_variables(u);
      if (u_free.count(binder)) {
        auto avoid = u_free;
        avoid.insert(body_free.begin(), body_free.end());
        avoid.insert(x);
        std::string b2 = fresh_name(binder, avoid);
        body = substitute(body, binder, var(b2));
        binder = b2;
      }
      body = substitute(body, x, u);
      return t->kind == TermKind::Lam ? lam(binder, body) : blam(binder, body);
    }
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Reduction

enum class RedexKind { Beta, BangRed, IotaHit, IotaMiss };

struct Redex {
  RedexKind kind;
  std::vector<int> position;  // child indices from the root (0 = a, 1 = b)
};

namespace detail {

inline std::optional<RedexKind> redex_at(const Term& t) {
  if (t->kind == TermKind::App) {
    if (t->a->kind == TermKind::Lam) return RedexKind::Beta;
    if (t->a->kind == TermKind::BangLam && t->b->kind == TermKind::Bang) return RedexKind::BangRed;
  }
  if (t->kind == TermKind::Select && t->a->kind == TermKind::RecordExt)
    return t->a->name == t->name ? RedexKind::IotaHit : RedexKind::IotaMiss;
  return std::nullopt;
}

inline bool find_redex(const Term& t, std::vector<int>& path, RedexKind& kind) {
  if (auto k = redex_at(t)) {
    kind = *k;
    return true;
  }
  if (t->a) {
    path.push_back(0);
    if (find_redex(t->a, path, kind)) return true;
    path.pop_back();
  }
  if (t->b) {
    path.push_back(1);
    if (find_redex(t->b, path, kind)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

inline std::optional<Redex> find_redex(const Term& t) {
  Redex r;
  if (detail::find_redex(t, r.position, r.kind)) return r;
  return std::nullopt;
}

inline Term contract(const Term& t) {
  switch (*detail::redex_at(t)) {
    case RedexKind::Beta:
      return substitute(t->a->a, t->a->name, t->b);
    case RedexKind::BangRed:
      return substitute(t->a->a, t->a->name, t->b->a);
    case RedexKind::IotaHit:
      return t->a->b;
    case RedexKind::IotaMiss:
      return select(t->a->a, t->name);
  }
  throw Error("unreachable");
}

// One leftmost-outermost step; nullopt when in normal form.
inline std::optional<Term> reduce_step(const Term& t) {
  if (detail::redex_at(t)) return contract(t);
  if (t->a) {
    if (auto s = reduce_step(t->a)) {
      switch (t->kind) {
        case TermKind::App: return app(*s, t->b);
        case TermKind::Lam: return lam(t->name, *s);
        case TermKind::BangLam: return blam(t->name, *s);
        case TermKind::Bang: return bang(*s);
        case TermKind::RecordExt: return rec_ext(*s, t->name, t->b);
        case TermKind::Select: return select(*s, t->name);
        default: break;
      }
    }
  }
  if (t->b) {
    if (auto s = reduce_step(t->b)) {
      if (t->kind == TermKind::App) return app(t->a, *s);
      if (t->kind == TermKind::RecordExt) return rec_ext(t->a, t->name, *s);
    }
  }
  return std::nullopt;
}

constexpr std::size_t kDefaultFuel = 100000;

inline Term normalize(Term t, std::size_t fuel = kDefaultFuel) {
  for (std::size_t i = 0; i < fuel; ++i) {
    auto s = reduce_step(t);
    if (!s) return t;
    t = *s;
  }
  if (!reduce_step(t)) return t;
  throw FuelExhausted{};
}

// ---------------------------------------------------------------------------
// Alpha equivalence

namespace detail {

inline bool alpha_eq(const Term& s, const Term& t, std::map<std::string, int>& ls,
                     std::map<std::string, int>& lt, int& next) {
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case TermKind::Var: {
      auto is = ls.find(s->name), it = lt.find(t->name);
      if ((is == ls.end()) != (it == lt.end())) return false;
      if (is == ls.end()) return s->name == t->name;  // both free
      return is->second == it->second;
    }
    case TermKind::Param:
      return s->name == t->name;
    case TermKind::EmptyRecord:
      return true;
    case TermKind::Lam:
    case TermKind::BangLam: {
      int lvl = next++;
      auto olds = ls.count(s->name) ? std::optional<int>(ls[s->name]) : std::nullopt;
      auto oldt = lt.count(t->name) ? std::optional<int>(lt[t->name]) : std::nullopt;
      ls[s->name] = lvl;
      lt[t->name] = lvl;
      bool r = alpha_eq(s->a, t->a, ls, lt, next);
      if (olds) ls[s->name] = *olds; else ls.erase(s->name);
      if (oldt) lt[t->name] = *oldt; else lt.erase(t->name);
      return r;
    }
    case TermKind::RecordExt:
    case TermKind::Select:
      if (s->name != t->name) return false;
      [[fallthrough]];
    default:
      if (!!s->a != !!t->a || !!s->b != !!t->b) return false;
      if (s->a && !alpha_eq(s->a, t->a, ls, lt, next)) return false;
      if (s->b && !alpha_eq(s->b, t->b, ls, lt, next)) return false;
      return true;
  }
}

}  // namespace detail

inline bool alpha_equal(const Term& s, const Term& t) {
  std::map<std::string, int> ls, lt;
  int next = 0;
  return detail::alpha_eq(s, t, ls, lt, next);
}

inline bool alpha_beta_equal(const Term& s, const Term& t, std::size_t fuel = kDefaultFuel) {
  return alpha_equal(normalize(s, fuel), normalize(t, fuel));
}

// ---------------------------------------------------------------------------
// Printer (concrete syntax; inverse of parse_term)

namespace detail {

// prec: 0 = top, 1 = application argument position, 2 = head position
inline void print_term(const Term& t, std::string& out, int prec) {
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      break;
    case TermKind::Param:
      out += "#" + t->name;
      break;
    case TermKind::Lam:
    case TermKind::BangLam: {
      bool paren = prec > 0;
      if (paren) out += "(";
      out += t->kind == TermKind::Lam ? "\\" : "\\!";
      out += t->name + ".";
      print_term(t->a, out, 0);
      if (paren) out += ")";
      break;
    }
    case TermKind::App: {
      bool paren = prec > 1;
      if (paren) out += "(";
      print_term(t->a, out, 1);
      out += " ";
      print_term(t->b, out, 2);
      if (paren) out += ")";
      break;
    }
    case TermKind::Bang:
      out += "!";
      print_term(t->a, out, 2);
      break;
    case TermKind::EmptyRecord:
      out += "<>";
      break;
    case TermKind::RecordExt:
      out += "<";
      print_term(t->a, out, 0);
      out += "; " + t->name + "=";
      print_term(t->b, out, 0);
      out += ">";
      break;
    case TermKind::Select:
      print_term(t->a, out, 2);
      out += "." + t->name;
      break;
  }
}

}  // namespace detail

inline std::string to_string(const Term& t) {
  std::string out;
  detail::print_term(t, out, 0);
  return out;
}

}  // namespace lia

#endif  // LIA_TERM_HPP
