// Entailment preorder a |-_S b, the quotient algebra, and the residuated
// property suite checked both semantically and through witness terms.
#ifndef LIA_QUOTIENT_HPP
#define LIA_QUOTIENT_HPP

#include <string>
#include <vector>

#include "lia/parse.hpp"
#include "lia/separators.hpp"

namespace lia {

inline bool entails(const ImpStructure& A, const Separator& S, int a, int b) {
  return S.contains(A.imp[a][b]);
}

// a (x) b = meet_c ((a -> b -> c) -> c)
inline int elem_tensor(const ImpStructure& A, int a, int b) {
  int acc = A.lat.top;
  for (int c = 0; c < A.size(); ++c)
    acc = A.lat.meet(acc, A.imp[A.imp[a][A.imp[b][c]]][c]);
  return acc;
}

struct QuotientAlgebra {
  ImpStructure A;
  Separator S;
  std::vector<int> class_of;             // element -> class id
  std::vector<std::vector<int>> members; // class -> sorted elements
  std::vector<int> repr;                 // class -> minimum element id
  std::vector<std::vector<int>> class_imp, class_tensor;

  int classes() const { return static_cast<int>(members.size()); }
  bool entail_class(int ci, int cj) const {
    return S.contains(A.imp[repr[ci]][repr[cj]]);
  }
  bool class_equiv(int ci, int cj) const { return ci == cj; }
};

inline QuotientAlgebra build_quotient(const ImpStructure& A, const Separator& S) {
  QuotientAlgebra Q;
  Q.A = A;
  Q.S = S;
  int n = A.size();
  Q.class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (Q.class_of[a] >= 0) continue;
    int id = Q.classes();
    Q.members.push_back({});
    Q.repr.push_back(a);
    for (int b = a; b < n; ++b)
      if (Q.class_of[b] < 0 && entails(A, S, a, b) && entails(A, S, b, a)) {
        Q.class_of[b] = id;
        Q.members[id].push_back(b);
      }
  }
  int k = Q.classes();
  Q.class_imp.assign(k, std::vector<int>(k, -1));
  Q.class_tensor.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Q.class_imp[i][j] = Q.class_of[A.imp[Q.repr[i]][Q.repr[j]]];
      Q.class_tensor[i][j] = Q.class_of[elem_tensor(A, Q.repr[i], Q.repr[j])];
    }
  return Q;
}

// Representative independence of the quotient tables, with the appendix
// tensor witness interpreted as a membership certificate.
inline Report quotient_welldef_check(const QuotientAlgebra& Q, InterpOptions opt = {8}) {
  Report r;
  const ImpStructure& A = Q.A;
  bool imp_ok = true, tens_ok = true, preorder_ok = true;
  std::string wi, wt, wp;
  int n = A.size();
  for (int a = 0; a < n; ++a) {
    if (!entails(A, Q.S, a, a) && preorder_ok) {
      preorder_ok = false;
      wp = "not reflexive at " + A.lat.name(a);
    }
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (entails(A, Q.S, a, b) && entails(A, Q.S, b, c) && !entails(A, Q.S, a, c) &&
            preorder_ok) {
          preorder_ok = false;
          wp = A.lat.name(a) + "," + A.lat.name(b) + "," + A.lat.name(c);
        }
  }
  r.add("quotient.entail_preorder", preorder_ok, wp);

  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (Q.class_of[a] != Q.class_of[a2]) continue;
      for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2) {
          if (Q.class_of[b] != Q.class_of[b2]) continue;
          if (Q.class_of[A.imp[a][b]] != Q.class_of[A.imp[a2][b2]] && imp_ok) {
            imp_ok = false;
            wi = A.lat.name(a) + "," + A.lat.name(b);
          }
          if (Q.class_of[elem_tensor(A, a, b)] != Q.class_of[elem_tensor(A, a2, b2)] &&
              tens_ok) {
            tens_ok = false;
            wt = A.lat.name(a) + "," + A.lat.name(b);
          }
        }
    }
  r.add("quotient.imp_welldefined", imp_ok, wi);
  r.add("quotient.tensor_welldefined", tens_ok, wt);

  // Witness: T = \x.x(\y z t.t(#p y)(#q z)) with p = a -o a', q = b -o b'.
  bool cert_ok = true;
  std::string wc;
  for (int a = 0; a < n && cert_ok; ++a)
    for (int a2 = 0; a2 < n && cert_ok; ++a2) {
      if (!entails(A, Q.S, a, a2)) continue;
      for (int b = 0; b < n && cert_ok; ++b)
        for (int b2 = 0; b2 < n && cert_ok; ++b2) {
          if (!entails(A, Q.S, b, b2)) continue;
          Term T = lam(
              "x", app(var("x"),
                       lam("y", lam("z", lam("t", app(app(var("t"),
                                                          app(param(A.lat.name(A.imp[a][a2])),
                                                              var("y"))),
                                                      app(param(A.lat.name(A.imp[b][b2])),
                                                          var("z"))))))));
          int v = interpret(T, {}, A, opt);
          int target = A.imp[elem_tensor(A, a, b)][elem_tensor(A, a2, b2)];
          if (!Q.S.contains(v) || !A.lat.leq(v, target)) {
            cert_ok = false;
            wc = A.lat.name(a) + "->" + A.lat.name(a2) + "," + A.lat.name(b) + "->" +
                 A.lat.name(b2);
          }
        }
    }
  r.add("quotient.tensor_certificate", cert_ok, wc);
  return r;
}

// ---------------------------------------------------------------------------
// Residuated suite: the eight laws, checked (i) on class tables and (ii) by
// interpreting the witness lambda terms below the stated implications.

inline Report residuated_suite(const QuotientAlgebra& Q, InterpOptions opt = {8}) {
  Report r;
  const ImpStructure& A = Q.A;
  const Separator& S = Q.S;
  int n = A.size();
  auto arr = [&](int a, int b) { return A.imp[a][b]; };
  auto tens = [&](int a, int b) { return elem_tensor(A, a, b); };
  auto ent = [&](int a, int b) { return entails(A, S, a, b); };
  int I = interpret(base_term("I"), {}, A);

  // The witness terms are closed, so each interprets to a single element;
  // the per-instance check is membership in S plus lying below the law's
  // implication element.
  bool sem[9] = {true, true, true, true, true, true, true, true, true};
  bool wit[9] = {true, true, true, true, true, true, true, true, true};
  std::string sw[9], ww[9];

  auto wval = [&](const char* src) { return interpret(parse_term(src), {}, A, opt); };
  int v_comm = wval("\\x.x(\\a.\\b.\\y.y b a)");
  int v_assoc1 = wval("\\x.x(\\y.\\c.y(\\a.\\b.\\t.t a (\\u.u b c)))");
  int v_assoc2 = wval("\\x.x(\\a.\\y.y(\\b.\\c.\\t.t (\\u.u a b) c))");
  int v_neut1 = wval("\\x.x(\\a.\\i.i a)");
  int v_neut2 = wval("\\a.\\x.x a (\\q.q)");
  int v_curry1 = wval("\\x.\\a.\\b.x(\\y.y a b)");
  int v_curry2 = wval("\\x.\\y.y(\\a.\\b.x a b)");
  int v_mp = wval("\\x.x(\\y.\\a.y a)");
  int v_pair = wval("\\a.\\b.\\x.x a b");
  int v_trans = wval("\\x.\\a.x(\\y.\\z.z(y a))");
  int v_tensor = wval("\\x.\\y.x(\\u.\\v.y(\\a.\\c.\\t.t(u a)(v c)))");
  auto check_witness = [&](int v, int target, std::string& out) {
    if (!S.contains(v) || !A.lat.leq(v, target)) {
      out = "witness " + A.lat.name(v) + " vs " + A.lat.name(target);
      return false;
    }
    return true;
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // 1. commutativity
      if (!(ent(tens(a, b), tens(b, a)) && ent(tens(b, a), tens(a, b)))) {
        if (sem[1]) sw[1] = A.lat.name(a) + "," + A.lat.name(b);
        sem[1] = false;
      }
      if (wit[1] && !check_witness(v_comm, arr(tens(a, b), tens(b, a)), ww[1])) wit[1] = false;
      // 3. identity neutral
      if (!(ent(tens(a, I), a) && ent(a, tens(a, I)))) {
        if (sem[3]) sw[3] = A.lat.name(a);
        sem[3] = false;
      }
      if (wit[3] && b == 0) {
        if (!check_witness(v_neut1, arr(tens(a, I), a), ww[3])) wit[3] = false;
        if (wit[3] && !check_witness(v_neut2, arr(a, tens(a, I)), ww[3])) wit[3] = false;
      }
      // 5. modus ponens
      if (!ent(tens(arr(a, b), a), b)) {
        if (sem[5]) sw[5] = A.lat.name(a) + "," + A.lat.name(b);
        sem[5] = false;
      }
      if (wit[5] && !check_witness(v_mp, arr(tens(arr(a, b), a), b), ww[5])) wit[5] = false;
      // 6. pairing
      if (!ent(a, arr(b, tens(a, b)))) {
        if (sem[6]) sw[6] = A.lat.name(a) + "," + A.lat.name(b);
        sem[6] = false;
      }
      if (wit[6] && !check_witness(v_pair, arr(a, arr(b, tens(a, b))), ww[6])) wit[6] = false;
      for (int c = 0; c < n; ++c) {
        // 2. associativity
        if (!(ent(tens(tens(a, b), c), tens(a, tens(b, c))) &&
              ent(tens(a, tens(b, c)), tens(tens(a, b), c)))) {
          if (sem[2]) sw[2] = A.lat.name(a) + "," + A.lat.name(b) + "," + A.lat.name(c);
          sem[2] = false;
        }
        if (wit[2] &&
            !check_witness(v_assoc1, arr(tens(tens(a, b), c), tens(a, tens(b, c))), ww[2]))
          wit[2] = false;
        if (wit[2] &&
            !check_witness(v_assoc2, arr(tens(a, tens(b, c)), tens(tens(a, b), c)), ww[2]))
          wit[2] = false;
        // 4. currying
        if (!(ent(arr(tens(a, b), c), arr(a, arr(b, c))) &&
              ent(arr(a, arr(b, c)), arr(tens(a, b), c)))) {
          if (sem[4]) sw[4] = A.lat.name(a) + "," + A.lat.name(b) + "," + A.lat.name(c);
          sem[4] = false;
        }
        if (wit[4] &&
            !check_witness(v_curry1, arr(arr(tens(a, b), c), arr(a, arr(b, c))), ww[4]))
          wit[4] = false;
        if (wit[4] &&
            !check_witness(v_curry2, arr(arr(a, arr(b, c)), arr(tens(a, b), c)), ww[4]))
          wit[4] = false;
        // 7. transitivity
        if (!ent(tens(arr(a, b), arr(b, c)), arr(a, c))) {
          if (sem[7]) sw[7] = A.lat.name(a) + "," + A.lat.name(b) + "," + A.lat.name(c);
          sem[7] = false;
        }
        if (wit[7] &&
            !check_witness(v_trans, arr(tens(arr(a, b), arr(b, c)), arr(a, c)), ww[7]))
          wit[7] = false;
        for (int d = 0; d < n; ++d) {
          // 8. tensor rule
          if (!ent(tens(arr(a, b), arr(c, d)), arr(tens(a, c), tens(b, d)))) {
            if (sem[8])
              sw[8] = A.lat.name(a) + "," + A.lat.name(b) + "," + A.lat.name(c) + "," +
                      A.lat.name(d);
            sem[8] = false;
          }
          if (wit[8] &&
              !check_witness(v_tensor,
                             arr(tens(arr(a, b), arr(c, d)), arr(tens(a, c), tens(b, d))),
                             ww[8]))
            wit[8] = false;
        }
      }
    }

  static const char* law_names[9] = {"",         "commutativity", "associativity",
                                     "identity", "currying",      "modus_ponens",
                                     "pairing",  "transitivity",  "tensor_rule"};
  for (int i = 1; i <= 8; ++i) {
    r.add(std::string("residuated.") + law_names[i] + ".semantic", sem[i], sw[i]);
    r.add(std::string("residuated.") + law_names[i] + ".witness", wit[i], ww[i]);
  }

  // Joins on the quotient exist only sometimes; report what we find.
  int k = Q.classes();
  int missing = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool found = false;
      for (int u = 0; u < k && !found; ++u) {
        if (!(Q.entail_class(i, u) && Q.entail_class(j, u))) continue;
        bool least = true;
        for (int v = 0; v < k && least; ++v)
          if (Q.entail_class(i, v) && Q.entail_class(j, v) && !Q.entail_class(u, v))
            least = false;
        found = least;
      }
      if (!found) ++missing;
    }
  if (missing == 0)
    r.add("quotient.joins_exist", true, "all pairwise joins present");
  else
    r.skip("quotient.joins_exist", std::to_string(missing) + " class pairs lack a join");
  return r;
}

}  // namespace lia

#endif  // LIA_QUOTIENT_HPP
