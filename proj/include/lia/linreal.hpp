// Finite linear realisability situations: programs with an associative
// execution and a 2-cocycle measurement, projects over a cyclic coefficient
// group, biorthogonal types, and the export to an implicative structure with
// the non-empty types as a linear separator.
#ifndef LIA_LINREAL_HPP
#define LIA_LINREAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "lia/implicative.hpp"
#include "lia/lattice.hpp"
#include "lia/report.hpp"
#include "lia/separators.hpp"

namespace lia {

struct Situation {
  int theta_k = 2;                      // coefficient group Z/k
  std::vector<std::string> prog_names;  // programs 0..n-1
  std::vector<std::vector<int>> ex;     // ex[p][q] in P
  std::vector<std::vector<int>> m;      // m[p][q] in Z/k
  std::uint64_t pole = 0;               // subset of Z/k (bit i = value i)
  int id = -1, tau = -1;                // optional distinguished programs

  int num_progs() const { return static_cast<int>(prog_names.size()); }
  int num_projects() const { return theta_k * num_progs(); }
  int theta_add(int a, int b) const { return (a + b) % theta_k; }
  bool in_pole(int v) const { return (pole >> v) & 1; }
  int prog_of(const std::string& nm) const {
    for (int i = 0; i < num_progs(); ++i)
      if (prog_names[i] == nm) return i;
    throw Error("unknown program: " + nm);
  }
};

// A project (alpha, p) is encoded as the index alpha * |P| + p.
struct Project {
  int alpha = 0;
  int prog = 0;
};

inline int project_index(const Situation& S, Project pr) {
  return pr.alpha * S.num_progs() + pr.prog;
}

inline Project project_of_index(const Situation& S, int idx) {
  int n = S.num_progs();
  return {idx / n, idx % n};
}

inline std::string project_name(const Situation& S, int idx) {
  Project pr = project_of_index(S, idx);
  return "(" + std::to_string(pr.alpha) + "," + S.prog_names[pr.prog] + ")";
}

inline Project ex_proj(const Situation& S, Project a, Project b) {
  return {S.theta_add(S.theta_add(a.alpha, b.alpha), S.m[a.prog][b.prog]),
          S.ex[a.prog][b.prog]};
}

inline int meas_proj(const Situation& S, Project a, Project b) {
  return S.theta_add(S.theta_add(a.alpha, b.alpha), S.m[a.prog][b.prog]);
}

inline Report verify_situation(const Situation& S) {
  Report r;
  int n = S.num_progs();
  bool shape = n >= 1 && static_cast<int>(S.ex.size()) == n &&
               static_cast<int>(S.m.size()) == n && S.theta_k >= 1;
  for (int p = 0; p < n && shape; ++p) {
    shape = static_cast<int>(S.ex[p].size()) == n &&
            static_cast<int>(S.m[p].size()) == n;
    for (int q = 0; q < n && shape; ++q)
      shape = S.ex[p][q] >= 0 && S.ex[p][q] < n && S.m[p][q] >= 0 &&
              S.m[p][q] < S.theta_k;
  }
  r.add("situation.tables", shape);
  if (!shape) return r;

  bool assoc = true;
  std::string wa;
  for (int p = 0; p < n && assoc; ++p)
    for (int q = 0; q < n && assoc; ++q)
      for (int t = 0; t < n && assoc; ++t)
        if (S.ex[S.ex[p][q]][t] != S.ex[p][S.ex[q][t]]) {
          assoc = false;
          wa = S.prog_names[p] + "," + S.prog_names[q] + "," + S.prog_names[t];
        }
  r.add("situation.ex_associative", assoc, wa);

  bool tre = true;
  std::string wt;
  for (int p = 0; p < n && tre; ++p)
    for (int q = 0; q < n && tre; ++q)
      for (int t = 0; t < n && tre; ++t)
        if (S.theta_add(S.m[S.ex[p][q]][t], S.m[p][q]) !=
            S.theta_add(S.m[p][S.ex[q][t]], S.m[q][t])) {
          tre = false;
          wt = S.prog_names[p] + "," + S.prog_names[q] + "," + S.prog_names[t];
        }
  r.add("situation.trefoil", tre, wt);

  bool sym = true;
  std::string ws;
  for (int p = 0; p < n && sym; ++p)
    for (int q = 0; q < n && sym; ++q)
      if (S.m[p][q] != S.m[q][p]) {
        sym = false;
        ws = S.prog_names[p] + "," + S.prog_names[q];
      }
  r.add("situation.m_symmetric", sym, ws);

  if (S.id < 0) {
    r.skip("situation.id_neutral", "no id declared");
    r.skip("situation.id_measure_zero", "no id declared");
  } else {
    bool neu = true, mz = true;
    std::string wn, wm;
    for (int p = 0; p < n; ++p) {
      if (neu && S.ex[S.id][p] != p) {
        neu = false;
        wn = S.prog_names[p];
      }
      if (mz && S.m[S.id][p] != 0) {
        mz = false;
        wm = S.prog_names[p];
      }
    }
    r.add("situation.id_neutral", neu, wn);
    r.add("situation.id_measure_zero", mz, wm);
  }

  if (S.tau < 0) {
    r.skip("situation.tau_swap_outer", "no tau declared");
    r.skip("situation.tau_swap_inner", "no tau declared");
    r.skip("situation.tau_measure_zero", "no tau declared");
  } else {
    // Two published variants of the swap law; each is reported on its own.
    bool outer = true, inner = true, mz = true;
    std::string wo, wi, wm;
    for (int p = 0; p < n; ++p) {
      if (mz && S.m[S.tau][p] != 0) {
        mz = false;
        wm = S.prog_names[p];
      }
      for (int q = 0; q < n; ++q) {
        if (outer && S.ex[S.tau][S.ex[p][q]] != S.ex[q][p]) {
          outer = false;
          wo = S.prog_names[p] + "," + S.prog_names[q];
        }
        if (inner && S.ex[S.ex[S.tau][p]][q] != S.ex[q][p]) {
          inner = false;
          wi = S.prog_names[p] + "," + S.prog_names[q];
        }
      }
    }
    r.add("situation.tau_swap_outer", outer, wo);  // ex(tau, ex(p,q)) = ex(q,p)
    r.add("situation.tau_swap_inner", inner, wi);  // ex(ex(tau,p), q) = ex(q,p)
    r.add("situation.tau_measure_zero", mz, wm);
  }
  return r;
}

// Product cocycle m(p,q) = phi(p) * phi(q) over Z/n with phi a homomorphism
// into Z/k given by scaling: phi(x) = x * (k / gcd(n, k)).
inline Situation cocycle_zn(int n, int k, std::uint64_t pole) {
  Situation S;
  S.theta_k = k;
  int scale = k / std::gcd(n, k);
  for (int i = 0; i < n; ++i) S.prog_names.push_back("p" + std::to_string(i));
  S.ex.assign(n, std::vector<int>(n, 0));
  S.m.assign(n, std::vector<int>(n, 0));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      S.ex[p][q] = (p + q) % n;
      int fp = (p * scale) % k, fq = (q * scale) % k;
      S.m[p][q] = (fp * fq) % k;
    }
  S.pole = pole;
  S.id = S.tau = 0;
  return S;
}

// Z/2 x Z/2 with phi = first projection scaled into Z/k (k must be even).
inline Situation cocycle_klein(int k, std::uint64_t pole) {
  if (k % 2 != 0) throw Error("klein cocycle needs even theta");
  Situation S;
  S.theta_k = k;
  int scale = k / 2;
  S.prog_names = {"e", "a", "b", "ab"};
  S.ex.assign(4, std::vector<int>(4, 0));
  S.m.assign(4, std::vector<int>(4, 0));
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      S.ex[p][q] = p ^ q;  // componentwise Z/2 addition
      int fp = ((p >> 1) * scale) % k, fq = ((q >> 1) * scale) % k;
      S.m[p][q] = (fp * fq) % k;
    }
  S.pole = pole;
  S.id = S.tau = 0;
  return S;
}

inline Report jacobi_check(const Situation& S) {
  Report r;
  int total = S.num_projects();
  bool ok = true;
  std::string w;
  for (int i = 0; i < total && ok; ++i)
    for (int j = 0; j < total && ok; ++j)
      for (int l = 0; l < total && ok; ++l) {
        Project a = project_of_index(S, i), b = project_of_index(S, j),
                c = project_of_index(S, l);
        if (meas_proj(S, ex_proj(S, a, b), c) !=
            meas_proj(S, a, ex_proj(S, b, c))) {
          ok = false;
          w = project_name(S, i) + "," + project_name(S, j) + "," +
              project_name(S, l);
        }
      }
  r.add("projects.jacobi", ok, w);
  return r;
}

constexpr int kDefaultProjectCap = 16;

// Precomputed single-project orthogonals: orth1[q] = { p : <q, p> in pole }.
inline std::vector<std::uint64_t> orthogonal_rows(const Situation& S) {
  int total = S.num_projects();
  std::vector<std::uint64_t> rows(total, 0);
  for (int q = 0; q < total; ++q)
    for (int p = 0; p < total; ++p) {
      Project a = project_of_index(S, q), b = project_of_index(S, p);
      if (S.in_pole(meas_proj(S, a, b)))
        rows[q] |= std::uint64_t{1} << p;
    }
  return rows;
}

inline std::uint64_t full_project_mask(const Situation& S) {
  int total = S.num_projects();
  return total >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << total) - 1);
}

inline std::uint64_t orthogonal(const Situation& S,
                                const std::vector<std::uint64_t>& rows,
                                std::uint64_t X) {
  std::uint64_t acc = full_project_mask(S);
  int total = S.num_projects();
  for (int q = 0; q < total; ++q)
    if ((X >> q) & 1) acc &= rows[q];
  return acc;
}

inline std::uint64_t biorthogonal_closure(const Situation& S,
                                          const std::vector<std::uint64_t>& rows,
                                          std::uint64_t X) {
  return orthogonal(S, rows, orthogonal(S, rows, X));
}

inline bool is_type(const Situation& S, const std::vector<std::uint64_t>& rows,
                    std::uint64_t X) {
  return biorthogonal_closure(S, rows, X) == X;
}

// All sets of the form X^orth; these are exactly the intersections of
// single-project rows plus the full set (the empty intersection).
inline std::vector<std::uint64_t> enumerate_types(const Situation& S,
                                                  int cap = kDefaultProjectCap) {
  int total = S.num_projects();
  if (total > cap)
    throw Error("project count " + std::to_string(total) + " exceeds cap " +
                std::to_string(cap));
  auto rows = orthogonal_rows(S);
  std::set<std::uint64_t> types;
  types.insert(full_project_mask(S));
  bool changed = true;
  for (auto row : rows) types.insert(row);
  while (changed) {
    changed = false;
    std::vector<std::uint64_t> cur(types.begin(), types.end());
    for (auto a : cur)
      for (auto b : cur)
        if (types.insert(a & b).second) changed = true;
  }
  return {types.begin(), types.end()};
}

inline FinLattice type_lattice(const std::vector<std::uint64_t>& pi) {
  int n = static_cast<int>(pi.size());
  if (n > 63) throw Error("too many types for the lattice backend");
  std::vector<std::string> names;
  for (auto t : pi) names.push_back("T" + std::to_string(t));
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((pi[a] & ~pi[b]) == 0) pairs.emplace_back(a, b);
  return FinLattice::from_order(std::move(names), pairs);
}

inline std::uint64_t lolli(const Situation& S, std::uint64_t A, std::uint64_t B) {
  int total = S.num_projects();
  std::uint64_t out = 0;
  for (int p = 0; p < total; ++p) {
    bool good = true;
    for (int a = 0; a < total && good; ++a)
      if ((A >> a) & 1) {
        int e = project_index(S, ex_proj(S, project_of_index(S, p),
                                         project_of_index(S, a)));
        if (!((B >> e) & 1)) good = false;
      }
    if (good) out |= std::uint64_t{1} << p;
  }
  return out;
}

// Raw pointwise execution set, before any closure.
inline std::uint64_t ex_set(const Situation& S, std::uint64_t A, std::uint64_t B) {
  int total = S.num_projects();
  std::uint64_t out = 0;
  for (int a = 0; a < total; ++a)
    if ((A >> a) & 1)
      for (int b = 0; b < total; ++b)
        if ((B >> b) & 1)
          out |= std::uint64_t{1} << project_index(S, ex_proj(S, project_of_index(S, a),
                                                              project_of_index(S, b)));
  return out;
}

inline std::uint64_t tensor(const Situation& S,
                            const std::vector<std::uint64_t>& rows,
                            std::uint64_t A, std::uint64_t B) {
  return biorthogonal_closure(S, rows, ex_set(S, A, B));
}

struct Bridge {
  Situation situation;
  std::vector<std::uint64_t> rows;  // single-project orthogonals
  std::vector<std::uint64_t> pi;    // sorted type masks
  ImpStructure structure;           // (Pi, subset, lolli)
  Separator separator;              // non-empty types, linear kind
};

inline int type_index(const Bridge& br, std::uint64_t mask) {
  auto it = std::lower_bound(br.pi.begin(), br.pi.end(), mask);
  if (it == br.pi.end() || *it != mask) return -1;
  return static_cast<int>(it - br.pi.begin());
}

// Builds the exported structure; `out` collects the verification evidence
// demanded by the bridge theorem.
inline Bridge as_implicative(const Situation& S, Report& out,
                             int cap = kDefaultProjectCap) {
  Report sit = verify_situation(S);
  bool hyps = sit.ok() && S.id >= 0 && S.tau >= 0;
  out.add("bridge.hypotheses", hyps,
          hyps ? "" : (S.id < 0 ? "no id" : S.tau < 0 ? "no tau"
                                                      : sit.first_failure()->id));
  if (!hyps) throw Error("bridge refused: situation hypotheses fail");

  Bridge br;
  br.situation = S;
  br.rows = orthogonal_rows(S);
  br.pi = enumerate_types(S, cap);
  int n = static_cast<int>(br.pi.size());

  out.merge(jacobi_check(S));

  bool inter = true;
  std::string wi;
  for (int a = 0; a < n && inter; ++a)
    for (int b = 0; b < n && inter; ++b)
      if (type_index(br, br.pi[a] & br.pi[b]) < 0) {
        inter = false;
        wi = "T" + std::to_string(br.pi[a]) + ",T" + std::to_string(br.pi[b]);
      }
  out.add("bridge.pi_intersection_closed", inter, wi);

  br.structure.lat = type_lattice(br.pi);
  br.structure.imp.assign(n, std::vector<int>(n, -1));
  bool lol_type = true, lol_dual = true;
  std::string wl, wd;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::uint64_t l = lolli(S, br.pi[a], br.pi[b]);
      int idx = type_index(br, l);
      if (idx < 0 || !is_type(S, br.rows, l)) {
        if (lol_type) {
          lol_type = false;
          wl = "T" + std::to_string(br.pi[a]) + " -o T" + std::to_string(br.pi[b]);
        }
        idx = type_index(br, biorthogonal_closure(S, br.rows, l));
      }
      br.structure.imp[a][b] = idx;
      // A -o B = (A (x) B^orth)^orth.
      std::uint64_t dual = orthogonal(
          S, br.rows, ex_set(S, br.pi[a], orthogonal(S, br.rows, br.pi[b])));
      if (dual != l && lol_dual) {
        lol_dual = false;
        wd = "T" + std::to_string(br.pi[a]) + ",T" + std::to_string(br.pi[b]);
      }
    }
  out.add("bridge.lolli_is_type", lol_type, wl);
  out.add("bridge.lolli_tensor_dual", lol_dual, wd);

  Report imp_check = verify_implicative(br.structure);
  out.add("bridge.implicative", imp_check.ok(),
          imp_check.ok() ? "" : imp_check.first_failure()->id);

  // Lattice application vs. the pointwise execution set and its closure.
  bool app_closed = true, app_raw = true;
  std::string wc, wr;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ap = br.structure.app(a, b);
      std::uint64_t raw = ex_set(S, br.pi[a], br.pi[b]);
      std::uint64_t closed = biorthogonal_closure(S, br.rows, raw);
      if (closed != br.pi[ap] && app_closed) {
        app_closed = false;
        wc = "T" + std::to_string(br.pi[a]) + ",T" + std::to_string(br.pi[b]);
      }
      if (raw != br.pi[ap] && app_raw) {
        app_raw = false;
        wr = "T" + std::to_string(br.pi[a]) + " :: T" + std::to_string(br.pi[b]) +
             " = " + std::to_string(raw) + " vs " + std::to_string(br.pi[ap]);
      }
    }
  out.add("bridge.app_pointwise_closure", app_closed, wc);
  if (app_raw)
    out.add("bridge.app_pointwise_raw", true);
  else
    out.skip("bridge.app_pointwise_raw", "strict gap: " + wr);

  br.separator.kind = SepKind::Linear;
  br.separator.carrier = 0;
  for (int a = 0; a < n; ++a)
    if (br.pi[a] != 0) br.separator.carrier |= std::uint64_t{1} << a;
  Report sep_check = verify_separator(br.separator, br.structure);
  out.add("bridge.separator", sep_check.ok(),
          sep_check.ok() ? "" : sep_check.first_failure()->id);
  out.add("bridge.consistent", is_consistent(br.separator, br.structure));

  // Membership witnesses from the constructed projects (0,id) and (0,tau).
  int pid = project_index(S, {0, S.id});
  Project t{0, S.tau};
  int ptt = project_index(S, ex_proj(S, t, t));
  int iv = interpret(base_term("I"), {}, br.structure);
  int bv = interpret(base_term("B"), {}, br.structure);
  int cv = interpret(base_term("C"), {}, br.structure);
  out.add("bridge.witness_I", (br.pi[iv] >> pid) & 1, project_name(S, pid));
  out.add("bridge.witness_B", (br.pi[bv] >> pid) & 1, project_name(S, pid));
  out.add("bridge.witness_C", (br.pi[cv] >> ptt) & 1, project_name(S, ptt));
  return br;
}

}  // namespace lia

#endif  // LIA_LINREAL_HPP
