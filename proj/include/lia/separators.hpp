// Separators: verification and least-fixpoint generation for the linear,
// intuitionistic, elementary and exponential kinds.
#ifndef LIA_SEPARATORS_HPP
#define LIA_SEPARATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lia/implicative.hpp"
#include "lia/report.hpp"

namespace lia {

enum class SepKind { Linear, Intuitionistic, Elementary, Exponential };

inline std::string sep_kind_name(SepKind k) {
  switch (k) {
    case SepKind::Linear: return "linear";
    case SepKind::Intuitionistic: return "intuitionistic";
    case SepKind::Elementary: return "elementary";
    case SepKind::Exponential: return "exponential";
  }
  return "?";
}

inline std::vector<std::string> sep_generators(SepKind k) {
  switch (k) {
    case SepKind::Linear: return {"I", "B", "C"};
    case SepKind::Intuitionistic: return {"K", "S"};
    case SepKind::Elementary: return {"I", "B", "C", "K!", "W!", "F"};
    case SepKind::Exponential: return {"I", "B", "C", "K!", "W!", "F", "D", "delta"};
  }
  return {};
}

inline bool sep_kind_uses_bang(SepKind k) {
  return k == SepKind::Elementary || k == SepKind::Exponential;
}

struct Separator {
  std::uint64_t carrier = 0;
  SepKind kind = SepKind::Linear;

  bool contains(int a) const { return (carrier >> a) & 1; }
  std::vector<int> elements(int n) const {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (contains(i)) v.push_back(i);
    return v;
  }
};

inline bool is_consistent(const Separator& S, const ImpStructure& A) {
  return !S.contains(A.lat.bottom);
}

inline Report verify_separator(const Separator& S, const ImpStructure& A) {
  Report r;
  int n = A.size();
  bool up = true;
  std::string wu;
  for (int a = 0; a < n && up; ++a)
    if (S.contains(a))
      for (int b = 0; b < n && up; ++b)
        if (A.lat.leq(a, b) && !S.contains(b)) {
          up = false;
          wu = A.lat.name(a) + " <= " + A.lat.name(b);
        }
  r.add("sep.upward_closed", up, wu);

  bool mp = true;
  std::string wm;
  for (int a = 0; a < n && mp; ++a)
    for (int b = 0; b < n && mp; ++b)
      if (S.contains(a) && S.contains(b) && !S.contains(A.app(a, b))) {
        mp = false;
        wm = A.lat.name(a) + " . " + A.lat.name(b);
      }
  r.add("sep.modus_ponens", mp, wm);

  for (const auto& g : sep_generators(S.kind)) {
    int v = interpret(base_term(g), {}, A);
    r.add("sep.generator." + g, S.contains(v), A.lat.name(v));
  }
  if (sep_kind_uses_bang(S.kind)) {
    bool cl = true;
    std::string wc;
    for (int a = 0; a < n && cl; ++a)
      if (S.contains(a) && !S.contains(A.bang_of(a))) {
        cl = false;
        wc = A.lat.name(a);
      }
    r.add("sep.bang_closed", cl, wc);
  }
  return r;
}

// Least separator of the given kind containing X: worklist saturation of
// upward closure, pairwise application, generators, and ! image.
inline Separator generate_separator(std::uint64_t X, const ImpStructure& A, SepKind kind) {
  Separator S;
  S.kind = kind;
  int n = A.size();
  std::uint64_t cur = X;
  for (const auto& g : sep_generators(kind))
    cur |= std::uint64_t{1} << interpret(base_term(g), {}, A);
  bool changed = true;
  while (changed) {
    changed = false;
    std::uint64_t next = cur;
    for (int a = 0; a < n; ++a)
      if ((cur >> a) & 1) {
        next |= A.lat.up[a];
        if (sep_kind_uses_bang(kind)) next |= std::uint64_t{1} << A.bang_of(a);
        for (int b = 0; b < n; ++b)
          if ((cur >> b) & 1) next |= std::uint64_t{1} << A.app(a, b);
      }
    if (next != cur) {
      cur = next;
      changed = true;
    }
  }
  S.carrier = cur;
  return S;
}

inline Separator lsep(std::uint64_t X, const ImpStructure& A) {
  return generate_separator(X, A, SepKind::Linear);
}

// (t{x := a})^A in S for closed-after-substitution linear terms with
// parameters drawn from S.
inline Report lambda_closure_check(const Separator& S, const ImpStructure& A,
                                   const std::vector<std::pair<Term, Env>>& samples,
                                   InterpOptions opt = {}) {
  Report r;
  bool ok = true;
  std::string w;
  for (const auto& [t, env] : samples) {
    int v = interpret(t, env, A, opt);
    if (!S.contains(v)) {
      ok = false;
      w = to_string(t) + " -> " + A.lat.name(v);
      break;
    }
  }
  r.add("sep.lambda_closure", ok, w);
  return r;
}

// a -o b in S implies b in lsep(S + {a}).
inline bool deduction_check(const Separator& S, const ImpStructure& A, int a, int b) {
  if (!S.contains(A.imp[a][b])) return true;  // nothing to check
  Separator ext = generate_separator(S.carrier | (std::uint64_t{1} << a), A, S.kind);
  return ext.contains(b);
}

// Exponential separator becomes an intuitionistic separator in the
// Kleisli structure; also checks the two witness inequalities.
inline Report intuitionistic_transfer_check(const ImpStructure& A, const Separator& S) {
  Report r;
  Report exp_check = verify_separator(S, A);
  r.add("transfer.exponential_premise", exp_check.ok(),
        exp_check.ok() ? "" : exp_check.first_failure()->id);
  if (!exp_check.ok()) {
    r.skip("transfer.kleisli", "premise failed; transfer refused");
    return r;
  }
  ImpStructure K = kleisli(A);
  Report imp_check = verify_implicative(K);
  r.add("transfer.kleisli_implicative", imp_check.ok());

  Separator SK;
  SK.carrier = S.carrier;
  SK.kind = SepKind::Intuitionistic;
  Report sv = verify_separator(SK, K);
  r.add("transfer.intuitionistic_separator", sv.ok(), sv.ok() ? "" : sv.first_failure()->id);

  int k_prime = interpret(base_term("K"), {}, K);
  int s_prime = interpret(base_term("S"), {}, K);
  int wit_k = interpret(app(app(base_term("B"), base_term("K!")), base_term("D")), {}, A);
  Term s_wit = blam("x", blam("y", blam("z", app(app(var("x"), bang(var("z"))),
                                                bang(app(var("y"), bang(var("z"))))))));
  int wit_s = interpret(s_wit, {}, A);
  r.add("transfer.witness_K", A.lat.leq(wit_k, k_prime),
        A.lat.name(wit_k) + " <= " + A.lat.name(k_prime));
  r.add("transfer.witness_S", A.lat.leq(wit_s, s_prime),
        A.lat.name(wit_s) + " <= " + A.lat.name(s_prime));
  r.add("transfer.K_in_S", SK.contains(k_prime));
  r.add("transfer.S_in_S", SK.contains(s_prime));
  return r;
}

}  // namespace lia

#endif  // LIA_SEPARATORS_HPP
