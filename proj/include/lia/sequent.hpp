// IMLL/IMELL formulas and sequent proofs: checking, term extraction,
// interpretation and soundness.
#ifndef LIA_SEQUENT_HPP
#define LIA_SEQUENT_HPP

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lia/parse.hpp"
#include "lia/separators.hpp"

namespace lia {

// ---------------------------------------------------------------------------
// Formulas

enum class FKind { Atom, Bot, Lolli, Tensor, OfCourse, Par };

struct FNode;
using Formula = std::shared_ptr<const FNode>;

struct FNode {
  FKind kind;
  std::string name;
  Formula a, b;
};

inline Formula fatom(std::string name) {
  return std::make_shared<FNode>(FNode{FKind::Atom, std::move(name), nullptr, nullptr});
}
inline Formula fbot() { return std::make_shared<FNode>(FNode{FKind::Bot, {}, nullptr, nullptr}); }
inline Formula flolli(Formula a, Formula b) {
  return std::make_shared<FNode>(FNode{FKind::Lolli, {}, std::move(a), std::move(b)});
}
inline Formula ftensor(Formula a, Formula b) {
  return std::make_shared<FNode>(FNode{FKind::Tensor, {}, std::move(a), std::move(b)});
}
inline Formula fbang(Formula a) {
  return std::make_shared<FNode>(FNode{FKind::OfCourse, {}, std::move(a), nullptr});
}
inline Formula fpar(Formula a, Formula b) {
  return std::make_shared<FNode>(FNode{FKind::Par, {}, std::move(a), std::move(b)});
}
inline Formula fone() { return flolli(fbot(), fbot()); }
inline Formula fneg(Formula a) { return flolli(std::move(a), fbot()); }

inline bool formula_equal(const Formula& s, const Formula& t) {
  if (s->kind != t->kind || s->name != t->name) return false;
  if (!!s->a != !!t->a || !!s->b != !!t->b) return false;
  if (s->a && !formula_equal(s->a, t->a)) return false;
  if (s->b && !formula_equal(s->b, t->b)) return false;
  return true;
}

inline std::string formula_to_string(const Formula& f, int prec = 0) {
  // prec: 0 top (lolli ok), 1 tensor operand, 2 unary operand
  switch (f->kind) {
    case FKind::Atom: return f->name;
    case FKind::Bot: return "bot";
    case FKind::OfCourse: return "!" + formula_to_string(f->a, 2);
    case FKind::Lolli: {
      std::string s = formula_to_string(f->a, 1) + " -o " + formula_to_string(f->b, 0);
      return prec > 0 ? "(" + s + ")" : s;
    }
    case FKind::Tensor: {
      std::string s = formula_to_string(f->a, 1) + " * " + formula_to_string(f->b, 2);
      return prec > 1 ? "(" + s + ")" : s;
    }
    case FKind::Par: {
      std::string s = formula_to_string(f->a, 1) + " @ " + formula_to_string(f->b, 2);
      return prec > 1 ? "(" + s + ")" : s;
    }
  }
  throw Error("unreachable");
}

inline int interpret_formula(const Formula& f, const std::map<std::string, int>& val,
                             const ImpStructure& A) {
  const FinLattice& L = A.lat;
  switch (f->kind) {
    case FKind::Atom: {
      auto it = val.find(f->name);
      if (it == val.end()) throw Error("no valuation for atom " + f->name);
      return it->second;
    }
    case FKind::Bot:
      return L.bottom;
    case FKind::Lolli:
      return A.imp[interpret_formula(f->a, val, A)][interpret_formula(f->b, val, A)];
    case FKind::Tensor: {
      int a = interpret_formula(f->a, val, A), b = interpret_formula(f->b, val, A);
      int acc = L.top;
      for (int c = 0; c < L.size(); ++c)
        acc = L.meet(acc, A.imp[A.imp[a][A.imp[b][c]]][c]);
      return acc;
    }
    case FKind::OfCourse:
      return A.bang_of(interpret_formula(f->a, val, A));
    case FKind::Par: {
      int a = interpret_formula(f->a, val, A), b = interpret_formula(f->b, val, A);
      int acc = L.top;
      for (int c = 0; c < L.size(); ++c)
        acc = L.meet(acc, A.imp[A.imp[a][c]][A.imp[A.imp[b][c]][c]]);
      return acc;
    }
  }
  throw Error("unreachable");
}

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f->kind == FKind::Atom) out.insert(f->name);
  if (f->a) collect_atoms(f->a, out);
  if (f->b) collect_atoms(f->b, out);
}

// ---------------------------------------------------------------------------
// Sequents and proofs

struct Sequent {
  std::vector<Formula> ctx;
  Formula rhs;
};

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;

struct ProofNode {
  std::string rule;
  Sequent seq;
  std::vector<Proof> premises;
};

inline Proof proof_node(std::string rule, Sequent seq, std::vector<Proof> premises = {}) {
  return std::make_shared<ProofNode>(
      ProofNode{std::move(rule), std::move(seq), std::move(premises)});
}

inline std::string sequent_to_string(const Sequent& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.ctx.size(); ++i) {
    if (i) out += ", ";
    out += formula_to_string(s.ctx[i]);
  }
  out += "] |- " + formula_to_string(s.rhs);
  return out;
}

// ---------------------------------------------------------------------------
// Proof checking

struct ProofCheck {
  bool ok = true;
  std::string path;     // e.g. "/1/0"
  std::string message;
};

namespace detail {

inline bool ctx_equal(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!formula_equal(a[i], b[i])) return false;
  return true;
}

inline std::vector<Formula> drop_last(const std::vector<Formula>& v, int k = 1) {
  return {v.begin(), v.end() - k};
}

inline std::vector<Formula> cat(std::vector<Formula> a, const std::vector<Formula>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline bool check_node(const ProofNode& p, std::string path, ProofCheck& out) {
  auto fail = [&](const std::string& msg) {
    out.ok = false;
    out.path = path;
    out.message = msg;
    return false;
  };
  auto arity = [&](std::size_t n) { return p.premises.size() == n; };
  const Sequent& c = p.seq;
  const std::string& r = p.rule;

  if (r == "ax") {
    if (!arity(0)) return fail("ax expects no premises");
    if (c.ctx.size() != 1 || !formula_equal(c.ctx[0], c.rhs))
      return fail("ax must be [A] |- A");
  } else if (r == "cut") {
    if (!arity(2)) return fail("cut expects two premises");
    const Sequent& p1 = p.premises[0]->seq;
    const Sequent& p2 = p.premises[1]->seq;
    if (p2.ctx.empty()) return fail("cut: second premise has empty context");
    const Formula& A = p2.ctx.back();
    if (!formula_equal(p1.rhs, A)) return fail("cut: cut formulas differ");
    if (!formula_equal(c.rhs, p2.rhs)) return fail("cut: conclusion formula mismatch");
    if (!ctx_equal(c.ctx, cat(p1.ctx, drop_last(p2.ctx))))
      return fail("cut: context must be premise1 ++ premise2 minus cut formula");
  } else if (r == "*R") {
    if (!arity(2)) return fail("*R expects two premises");
    if (c.rhs->kind != FKind::Tensor) return fail("*R conclusion must be a tensor");
    const Sequent& p1 = p.premises[0]->seq;
    const Sequent& p2 = p.premises[1]->seq;
    if (!formula_equal(p1.rhs, c.rhs->a) || !formula_equal(p2.rhs, c.rhs->b))
      return fail("*R premises must prove the components");
    if (!ctx_equal(c.ctx, cat(p1.ctx, p2.ctx)))
      return fail("*R context must be the premise concatenation");
  } else if (r == "*L") {
    if (!arity(1)) return fail("*L expects one premise");
    if (c.ctx.empty() || c.ctx.back()->kind != FKind::Tensor)
      return fail("*L principal formula (last) must be a tensor");
    const Formula& t = c.ctx.back();
    const Sequent& p1 = p.premises[0]->seq;
    std::vector<Formula> want = drop_last(c.ctx);
    want.push_back(t->a);
    want.push_back(t->b);
    if (!ctx_equal(p1.ctx, want)) return fail("*L premise context mismatch");
    if (!formula_equal(p1.rhs, c.rhs)) return fail("*L conclusion formula mismatch");
  } else if (r == "-oR") {
    if (!arity(1)) return fail("-oR expects one premise");
    if (c.rhs->kind != FKind::Lolli) return fail("-oR conclusion must be a lolli");
    const Sequent& p1 = p.premises[0]->seq;
    std::vector<Formula> want = c.ctx;
    want.push_back(c.rhs->a);
    if (!ctx_equal(p1.ctx, want)) return fail("-oR premise context mismatch");
    if (!formula_equal(p1.rhs, c.rhs->b)) return fail("-oR premise formula mismatch");
  } else if (r == "-oL") {
    if (!arity(2)) return fail("-oL expects two premises");
    if (c.ctx.empty() || c.ctx.back()->kind != FKind::Lolli)
      return fail("-oL principal formula (last) must be a lolli");
    const Formula& l = c.ctx.back();
    const Sequent& p1 = p.premises[0]->seq;
    const Sequent& p2 = p.premises[1]->seq;
    if (!formula_equal(p1.rhs, l->a)) return fail("-oL first premise must prove the argument");
    if (p2.ctx.empty() || !formula_equal(p2.ctx.back(), l->b))
      return fail("-oL second premise must end with the result formula");
    if (!formula_equal(c.rhs, p2.rhs)) return fail("-oL conclusion formula mismatch");
    std::vector<Formula> want = cat(p1.ctx, drop_last(p2.ctx));
    want.push_back(l);
    if (!ctx_equal(c.ctx, want)) return fail("-oL context mismatch");
  } else if (r == "ex") {
    // Adjacent exchange: contexts are multisets in the rule set, lists here.
    if (!arity(1)) return fail("ex expects one premise");
    const Sequent& p1 = p.premises[0]->seq;
    if (!formula_equal(p1.rhs, c.rhs)) return fail("ex conclusion formula mismatch");
    if (p1.ctx.size() != c.ctx.size() || c.ctx.size() < 2)
      return fail("ex needs two context formulas to swap");
    std::size_t i = 0;
    while (i < c.ctx.size() && formula_equal(c.ctx[i], p1.ctx[i])) ++i;
    if (i + 1 >= c.ctx.size() || !formula_equal(c.ctx[i], p1.ctx[i + 1]) ||
        !formula_equal(c.ctx[i + 1], p1.ctx[i]))
      return fail("ex must swap two adjacent context formulas");
    for (std::size_t j = i + 2; j < c.ctx.size(); ++j)
      if (!formula_equal(c.ctx[j], p1.ctx[j])) return fail("ex context mismatch after swap");
  } else if (r == "!wL") {
    if (!arity(1)) return fail("!wL expects one premise");
    if (c.ctx.empty() || c.ctx.back()->kind != FKind::OfCourse)
      return fail("!wL principal formula (last) must be banged");
    const Sequent& p1 = p.premises[0]->seq;
    if (!ctx_equal(p1.ctx, drop_last(c.ctx))) return fail("!wL premise context mismatch");
    if (!formula_equal(p1.rhs, c.rhs)) return fail("!wL conclusion formula mismatch");
  } else if (r == "!cL") {
    if (!arity(1)) return fail("!cL expects one premise");
    if (c.ctx.empty() || c.ctx.back()->kind != FKind::OfCourse)
      return fail("!cL principal formula (last) must be banged");
    const Sequent& p1 = p.premises[0]->seq;
    std::vector<Formula> want = drop_last(c.ctx);
    want.push_back(c.ctx.back());
    want.push_back(c.ctx.back());
    if (!ctx_equal(p1.ctx, want)) return fail("!cL premise context mismatch");
    if (!formula_equal(p1.rhs, c.rhs)) return fail("!cL conclusion formula mismatch");
  } else if (r == "!dL") {
    if (!arity(1)) return fail("!dL expects one premise");
    if (c.ctx.empty() || c.ctx.back()->kind != FKind::OfCourse)
      return fail("!dL principal formula (last) must be banged");
    const Sequent& p1 = p.premises[0]->seq;
    std::vector<Formula> want = drop_last(c.ctx);
    want.push_back(c.ctx.back()->a);
    if (!ctx_equal(p1.ctx, want)) return fail("!dL premise context mismatch");
    if (!formula_equal(p1.rhs, c.rhs)) return fail("!dL conclusion formula mismatch");
  } else if (r == "!R") {
    if (!arity(1)) return fail("!R expects one premise");
    if (c.rhs->kind != FKind::OfCourse) return fail("!R conclusion must be banged");
    const Sequent& p1 = p.premises[0]->seq;
    if (!formula_equal(p1.rhs, c.rhs->a)) return fail("!R premise formula mismatch");
    if (!ctx_equal(p1.ctx, c.ctx)) return fail("!R context mismatch");
    for (const auto& f : c.ctx)
      if (f->kind != FKind::OfCourse) return fail("!R requires a fully banged context");
  } else {
    return fail("unknown rule: " + r);
  }
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    if (!check_node(*p.premises[i], path + "/" + std::to_string(i), out)) return false;
  return true;
}

}  // namespace detail

inline ProofCheck check_proof(const Proof& p) {
  ProofCheck out;
  detail::check_node(*p, "", out);
  return out;
}

// ---------------------------------------------------------------------------
// Term extraction

namespace detail {

struct Extraction {
  Term term;
  std::vector<std::string> vars;  // aligned with the conclusion context
};

// Binder for a context variable: ! formulas always bind with \! (statements
// of the form !x : !a).
inline Term ctx_lam(const Formula& f, const std::string& x, Term body) {
  return f->kind == FKind::OfCourse ? blam(x, std::move(body)) : lam(x, std::move(body));
}

inline Extraction extract_node(const ProofNode& p, int& fresh) {
  auto freshv = [&] { return "v" + std::to_string(fresh++); };
  const std::string& r = p.rule;

  if (r == "ax") {
    std::string x = freshv();
    return {var(x), {x}};
  }
  if (r == "cut") {
    Extraction e1 = extract_node(*p.premises[0], fresh);
    Extraction e2 = extract_node(*p.premises[1], fresh);
    const Formula& A = p.premises[1]->seq.ctx.back();
    std::string x = e2.vars.back();
    e2.vars.pop_back();
    Term t = app(ctx_lam(A, x, e2.term), e1.term);
    std::vector<std::string> vars = e1.vars;
    vars.insert(vars.end(), e2.vars.begin(), e2.vars.end());
    return {t, vars};
  }
  if (r == "*R") {
    Extraction e1 = extract_node(*p.premises[0], fresh);
    Extraction e2 = extract_node(*p.premises[1], fresh);
    std::string z = freshv();
    Term t = lam(z, app(app(var(z), e1.term), e2.term));
    std::vector<std::string> vars = e1.vars;
    vars.insert(vars.end(), e2.vars.begin(), e2.vars.end());
    return {t, vars};
  }
  if (r == "*L") {
    Extraction e = extract_node(*p.premises[0], fresh);
    const Formula& tens = p.seq.ctx.back();
    std::string y = e.vars.back();
    e.vars.pop_back();
    std::string x = e.vars.back();
    e.vars.pop_back();
    std::string z = freshv();
    Term t = app(var(z), ctx_lam(tens->a, x, ctx_lam(tens->b, y, e.term)));
    e.vars.push_back(z);
    return {t, e.vars};
  }
  if (r == "-oR") {
    Extraction e = extract_node(*p.premises[0], fresh);
    std::string x = e.vars.back();
    e.vars.pop_back();
    return {ctx_lam(p.seq.rhs->a, x, e.term), e.vars};
  }
  if (r == "-oL") {
    Extraction e1 = extract_node(*p.premises[0], fresh);
    Extraction e2 = extract_node(*p.premises[1], fresh);
    const Formula& l = p.seq.ctx.back();
    std::string x = e2.vars.back();
    e2.vars.pop_back();
    std::string y = freshv();
    Term t = app(ctx_lam(l->b, x, e2.term), app(var(y), e1.term));
    std::vector<std::string> vars = e1.vars;
    vars.insert(vars.end(), e2.vars.begin(), e2.vars.end());
    vars.push_back(y);
    return {t, vars};
  }
  if (r == "ex") {
    Extraction e = extract_node(*p.premises[0], fresh);
    const auto& cc = p.seq.ctx;
    const auto& pc = p.premises[0]->seq.ctx;
    std::size_t i = 0;
    while (i < cc.size() && formula_equal(cc[i], pc[i])) ++i;
    std::swap(e.vars[i], e.vars[i + 1]);
    return e;
  }
  if (r == "!wL") {
    Extraction e = extract_node(*p.premises[0], fresh);
    std::string x = freshv();
    Term t = app(app(base_term("K!"), e.term), bang(var(x)));
    e.vars.push_back(x);
    return {t, e.vars};
  }
  if (r == "!cL") {
    Extraction e = extract_node(*p.premises[0], fresh);
    std::string y = e.vars.back();
    e.vars.pop_back();
    std::string x = e.vars.back();
    e.vars.pop_back();
    std::string z = freshv();
    Term t = app(app(base_term("W!"), blam(x, blam(y, e.term))), bang(var(z)));
    e.vars.push_back(z);
    return {t, e.vars};
  }
  if (r == "!dL") {
    Extraction e = extract_node(*p.premises[0], fresh);
    std::string x = e.vars.back();
    e.vars.pop_back();
    std::string x2 = freshv();
    Term t = app(lam(x, e.term), app(base_term("D"), bang(var(x2))));
    e.vars.push_back(x2);
    return {t, e.vars};
  }
  if (r == "!R") {
    Extraction e = extract_node(*p.premises[0], fresh);
    Term g = e.term;
    for (auto it = e.vars.rbegin(); it != e.vars.rend(); ++it) g = blam(*it, g);
    Term t = bang(g);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < e.vars.size(); ++i) {
      std::string y = freshv();
      t = app(app(base_term("F"), t), bang(var(y)));
      vars.push_back(y);
    }
    return {t, vars};
  }
  throw Error("extract: unknown rule " + r);
}

}  // namespace detail

inline Term extract(const Proof& p) {
  ProofCheck c = check_proof(p);
  if (!c.ok) throw Error("invalid proof at " + c.path + ": " + c.message);
  int fresh = 0;
  return detail::extract_node(*p, fresh).term;
}

// ---------------------------------------------------------------------------
// Core classification by rules used

enum class CoreKind { LCore, ElemCore, ECore };

inline void rules_used(const ProofNode& p, std::set<std::string>& out) {
  out.insert(p.rule);
  for (const auto& q : p.premises) rules_used(*q, out);
}

// Dereliction forces the exponential core; the other ! rules only the
// elementary one.
inline CoreKind core_requirement(const Proof& p) {
  std::set<std::string> rules;
  rules_used(*p, rules);
  if (rules.count("!dL")) return CoreKind::ECore;
  if (rules.count("!wL") || rules.count("!cL") || rules.count("!R")) return CoreKind::ElemCore;
  return CoreKind::LCore;
}

inline SepKind core_sep_kind(CoreKind k) {
  switch (k) {
    case CoreKind::LCore: return SepKind::Linear;
    case CoreKind::ElemCore: return SepKind::Elementary;
    case CoreKind::ECore: return SepKind::Exponential;
  }
  return SepKind::Linear;
}

inline std::string core_name(CoreKind k) {
  switch (k) {
    case CoreKind::LCore: return "lcore";
    case CoreKind::ElemCore: return "elemcore";
    case CoreKind::ECore: return "ecore";
  }
  return "?";
}

inline bool proof_uses_bang(const Proof& p) {
  return core_requirement(p) != CoreKind::LCore;
}

// ---------------------------------------------------------------------------
// Soundness

inline Report soundness_check(const Proof& p, const ImpStructure& A,
                              const std::map<std::string, int>& valuation,
                              InterpOptions opt = {}) {
  Report r;
  ProofCheck c = check_proof(p);
  r.add("proof.valid", c.ok, c.ok ? "" : c.path + ": " + c.message);
  if (!c.ok) return r;
  r.add("proof.closed", p->seq.ctx.empty());
  if (!p->seq.ctx.empty()) return r;

  Term t = extract(p);
  CoreKind core = core_requirement(p);
  // A proof may avoid the ! rules while its formulas still mention !: the
  // extracted term then carries \! binders, so judge it by its constructs.
  bool plain = !contains_kind(t, {TermKind::Bang, TermKind::BangLam});
  if (core == CoreKind::LCore && plain) {
    auto lv = is_linear(t);
    r.add("extract.linear", static_cast<bool>(lv), lv ? "" : lv.issues.front());
  } else {
    auto lv = is_linear_bang(t);
    r.add("extract.linear_bang", static_cast<bool>(lv), lv ? "" : lv.issues.front());
  }

  int vt = interpret(t, {}, A, opt);
  int vf = interpret_formula(p->seq.rhs, valuation, A);
  r.add("soundness.term_below_formula", A.lat.leq(vt, vf),
        A.lat.name(vt) + " <= " + A.lat.name(vf));
  Separator S = generate_separator(0, A, core_sep_kind(core));
  r.add("soundness.formula_in_" + core_name(core), S.contains(vf), A.lat.name(vf));
  return r;
}

// ---------------------------------------------------------------------------
// Parsing: formulas and proof files

namespace detail {

class ProofParser {
 public:
  explicit ProofParser(std::string src) : s_(std::move(src)) {}

  Formula parse_formula_only() {
    Formula f = formula();
    skip_ws();
    if (i_ < s_.size()) throw ParseError("trailing input", i_);
    return f;
  }

  Proof parse_proof_only() {
    Proof p = proof();
    skip_ws();
    if (i_ < s_.size()) throw ParseError("trailing input", i_);
    return p;
  }

 private:
  std::string s_;
  std::size_t i_ = 0;

  void skip_ws() {
    for (;;) {
      while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ < s_.size() && s_[i_] == '#') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
        continue;
      }
      break;
    }
  }
  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i_);
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s_.compare(i_, w.size(), w) == 0) {
      i_ += w.size();
      return true;
    }
    return false;
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                              s_[i_] == '_' || s_[i_] == '\''))
      ++i_;
    if (start == i_) throw ParseError("expected identifier", i_);
    return s_.substr(start, i_ - start);
  }

  Formula formula() {
    Formula left = tensor_chain();
    skip_ws();
    if (eat_word("-o")) return flolli(left, formula());  // right associative
    return left;
  }

  Formula tensor_chain() {
    Formula f = unary();
    for (;;) {
      skip_ws();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        f = ftensor(f, unary());
      } else if (i_ < s_.size() && s_[i_] == '@') {
        ++i_;
        f = fpar(f, unary());
      } else {
        return f;
      }
    }
  }

  Formula unary() {
    skip_ws();
    if (eat('!')) return fbang(unary());
    if (eat('~')) return fneg(unary());
    if (eat('(')) {
      Formula f = formula();
      expect(')');
      return f;
    }
    if (i_ < s_.size() && s_[i_] == '1') {
      ++i_;
      return fone();
    }
    std::string n = ident();
    if (n == "bot") return fbot();
    return fatom(n);
  }

  Sequent sequent() {
    Sequent s;
    expect('[');
    if (!peek(']'))
      do {
        s.ctx.push_back(formula());
      } while (eat(','));
    expect(']');
    skip_ws();
    if (!eat_word("|-")) throw ParseError("expected '|-'", i_);
    s.rhs = formula();
    return s;
  }

  Proof proof() {
    expect('(');
    skip_ws();
    std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) &&
           s_[i_] != '(' && s_[i_] != ')' && s_[i_] != '[')
      ++i_;
    std::string rule = s_.substr(start, i_ - start);
    if (rule.empty()) throw ParseError("expected rule name", i_);
    Sequent s = sequent();
    std::vector<Proof> premises;
    while (peek('(')) premises.push_back(proof());
    expect(')');
    return proof_node(rule, std::move(s), std::move(premises));
  }
};

}  // namespace detail

inline Formula parse_formula(const std::string& src) {
  return detail::ProofParser(src).parse_formula_only();
}
inline Proof parse_proof(const std::string& src) {
  return detail::ProofParser(src).parse_proof_only();
}

inline std::string proof_to_string(const Proof& p, int indent = 0) {
  std::string pad(indent, ' ');
  std::string out = pad + "(" + p->rule + " " + sequent_to_string(p->seq);
  if (p->premises.empty()) return out + ")";
  out += "\n";
  for (std::size_t i = 0; i < p->premises.size(); ++i) {
    out += proof_to_string(p->premises[i], indent + 2);
    out += i + 1 < p->premises.size() ? "\n" : "";
  }
  return out + ")";
}

}  // namespace lia

#endif  // LIA_SEQUENT_HPP
