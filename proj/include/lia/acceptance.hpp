// The acceptance battery: ten self-contained property suites over the
// library, shared by the CLI `suite` verb and the stand-alone runner.
#ifndef LIA_ACCEPTANCE_HPP
#define LIA_ACCEPTANCE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lia/combinatory.hpp"
#include "lia/formats.hpp"
#include "lia/gen.hpp"
#include "lia/implicative.hpp"
#include "lia/linreal.hpp"
#include "lia/quotient.hpp"
#include "lia/records.hpp"
#include "lia/report.hpp"
#include "lia/separators.hpp"
#include "lia/sequent.hpp"
#include "lia/term.hpp"

namespace lia {

struct AcceptanceConfig {
  std::uint64_t seed = 12345;
  std::size_t fuel = kDefaultFuel;
  int cap = kDefaultProjectCap;
};

inline std::string source_dir() {
#ifdef LIA_SOURCE_DIR
  return LIA_SOURCE_DIR;
#else
  return ".";
#endif
}

// ---------------------------------------------------------------------------
// 1. Linear bracket abstraction: the {I,B,C} word reduces back to the input.

inline Report accept_abstraction(const AcceptanceConfig& cfg) {
  Report r;
  Rng rng(cfg.seed);
  const int kCount = 1000;
  bool base_ok = true, round_ok = true;
  std::string wb, wr;
  for (int i = 0; i < kCount; ++i) {
    Term t = random_linear_term(rng, 30);
    Comb c = abstract_linear(t);
    if (base_ok && !is_linear_comb(c)) {
      base_ok = false;
      wb = "#" + std::to_string(i) + ": " + to_string(t);
    }
    Term lhs = normalize(comb_to_term(c), cfg.fuel);
    Term rhs = normalize(t, cfg.fuel);
    if (round_ok && !alpha_equal(lhs, rhs)) {
      round_ok = false;
      wr = "#" + std::to_string(i) + ": " + to_string(t);
    }
  }
  r.add("accept1.base_only", base_ok, wb);
  r.add("accept1.normal_form", round_ok, wr);
  return r;
}

// ---------------------------------------------------------------------------
// 2. Permutation words compose under B: 576 pairs from the 4-point group.

inline Report accept_permutations(const AcceptanceConfig& cfg) {
  Report r;
  std::vector<std::vector<int>> all;
  std::vector<int> base{1, 2, 3, 4};
  do {
    all.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  bool ok = true, base_ok = true;
  std::string w, wb;
  int pairs = 0;
  for (const auto& si : all)
    for (const auto& ti : all) {
      ++pairs;
      Perm sp = Perm::of_images(si);
      Perm tp = Perm::of_images(ti);
      Comb word = capp(cbase("B"), perm_to_comb(sp), perm_to_comb(tp));
      if (base_ok && !is_linear_comb(word)) {
        base_ok = false;
        wb = comb_to_string(word);
      }
      int m = std::max(sp.size(), tp.size());
      std::vector<int> map0(m);
      for (int i = 1; i <= m; ++i) map0[i - 1] = tp.apply(sp.apply(i)) - 1;
      Perm target{map0};  // deliberately left un-normalized: the reduct of the
                          // word keeps the padded binder count
      Term lhs = normalize(comb_to_term(word), cfg.fuel);
      Term rhs = perm_term(target);
      if (ok && !alpha_equal(lhs, rhs)) {
        ok = false;
        std::ostringstream os;
        os << "sigma=";
        for (int v : si) os << v;
        os << " tau=";
        for (int v : ti) os << v;
        w = os.str();
      }
    }
  r.add("accept2.pair_count", pairs == 576, std::to_string(pairs));
  r.add("accept2.base_only", base_ok, wb);
  r.add("accept2.compose", ok, w);
  return r;
}

// ---------------------------------------------------------------------------
// 3. Closed-form combinator values agree with the interpreter.

inline Report accept_closed_forms(const AcceptanceConfig& cfg) {
  Report r;
  std::vector<std::pair<std::string, ImpStructure>> structs;
  auto names = fixture_names();
  auto battery = fixture_battery();
  for (std::size_t i = 0; i < battery.size(); ++i)
    structs.emplace_back(names[i], std::move(battery[i]));
  Rng rng(cfg.seed);
  for (int i = 0; i < 20; ++i)
    structs.emplace_back("random" + std::to_string(i), random_lattice_structure(rng));

  const std::vector<std::string> combs{"I", "B",  "C", "K", "W",    "S",
                                       "K!", "W!", "F", "D", "delta"};
  bool ok = true;
  std::string w;
  int checked = 0;
  for (const auto& [nm, A] : structs)
    for (const auto& cname : combs) {
      ++checked;
      auto [value, agree] = combinator_value(cname, A);
      (void)value;
      if (ok && !agree) {
        ok = false;
        w = nm + ": " + cname;
      }
    }
  r.add("accept3.agreement", ok, ok ? std::to_string(checked) + " values" : w);
  return r;
}

// ---------------------------------------------------------------------------
// 4. Implicative/applicative round trips and the adjunction.

inline Report accept_roundtrip(const AcceptanceConfig&) {
  Report r;
  auto names = fixture_names();
  auto battery = fixture_battery();
  for (std::size_t i = 0; i < battery.size(); ++i) {
    Report ri = roundtrip_check(battery[i]);
    ri.merge(roundtrip_check_app(app_of_imp(battery[i])));
    r.add("accept4." + names[i], ri.ok(),
          ri.ok() ? "" : ri.first_failure()->id);
  }
  return r;
}

// ---------------------------------------------------------------------------
// 5. Core generation on the two-point lattice.

inline Report accept_core(const AcceptanceConfig&) {
  Report r;
  ImpStructure A = fixture_bool2();
  Separator core = generate_separator(0, A, SepKind::Linear);
  std::uint64_t top_only = std::uint64_t{1} << A.lat.top;
  r.add("accept5.core_is_top", core.carrier == top_only,
        "carrier=" + std::to_string(core.carrier));
  r.add("accept5.core_consistent", is_consistent(core, A));
  Separator full =
      generate_separator(std::uint64_t{1} << A.lat.bottom, A, SepKind::Linear);
  r.add("accept5.bottom_generates_all", full.carrier == A.lat.all_mask(),
        "carrier=" + std::to_string(full.carrier));
  return r;
}

// ---------------------------------------------------------------------------
// 6. Proof corpus: validity, extraction shape, and semantic soundness.

inline std::vector<std::string> proof_corpus_paths() {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  fs::path dir = fs::path(source_dir()) / "fixtures" / "proofs";
  if (fs::exists(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".proof") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Report accept_soundness(const AcceptanceConfig&) {
  Report r;
  auto paths = proof_corpus_paths();
  r.add("accept6.corpus_size", paths.size() >= 50,
        std::to_string(paths.size()) + " proofs");

  auto names = fixture_names();
  auto battery = fixture_battery();
  InterpOptions opt;
  opt.max_binder_depth = 16;

  // One core separator per fixture and kind.
  std::map<std::pair<std::size_t, std::string>, Separator> cores;
  for (std::size_t i = 0; i < battery.size(); ++i)
    for (CoreKind k : {CoreKind::LCore, CoreKind::ElemCore, CoreKind::ECore})
      cores[{i, core_name(k)}] =
          generate_separator(0, battery[i], core_sep_kind(k));

  bool valid = true, shape = true, below = true, in_core = true;
  std::string wv, ws, wb, wc;
  for (const auto& path : paths) {
    std::string file = std::filesystem::path(path).filename().string();
    Proof p = parse_proof(read_file(path));
    ProofCheck c = check_proof(p);
    if (!c.ok || !p->seq.ctx.empty()) {
      if (valid) {
        valid = false;
        wv = file + (c.ok ? ": open sequent" : ": " + c.message);
      }
      continue;
    }
    Term t = extract(p);
    CoreKind core = core_requirement(p);
    bool plain = core == CoreKind::LCore &&
                 !contains_kind(t, {TermKind::Bang, TermKind::BangLam});
    LinearVerdict lv = plain ? is_linear(t) : is_linear_bang(t);
    if (!lv && shape) {
      shape = false;
      ws = file + ": " + lv.issues.front();
    }
    std::set<std::string> atom_set;
    collect_atoms(p->seq.rhs, atom_set);
    std::vector<std::string> atoms(atom_set.begin(), atom_set.end());

    for (std::size_t i = 0; i < battery.size(); ++i) {
      const ImpStructure& A = battery[i];
      int vt = interpret(t, {}, A, opt);
      const Separator& S = cores[{i, core_name(core)}];
      int n = A.size();
      std::size_t total = 1;
      for (std::size_t k = 0; k < atoms.size(); ++k) total *= n;
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::map<std::string, int> val;
        std::size_t rest = idx;
        for (const auto& at : atoms) {
          val[at] = static_cast<int>(rest % n);
          rest /= n;
        }
        int vf = interpret_formula(p->seq.rhs, val, A);
        if (below && !A.lat.leq(vt, vf)) {
          below = false;
          wb = file + " on " + names[i];
        }
        if (in_core && !S.contains(vf)) {
          in_core = false;
          wc = file + " on " + names[i] + " (" + core_name(core) + ")";
        }
      }
    }
  }
  r.add("accept6.proofs_valid", valid, wv);
  r.add("accept6.extract_shape", shape, ws);
  r.add("accept6.term_below_formula", below, wb);
  r.add("accept6.formula_in_core", in_core, wc);
  return r;
}

// ---------------------------------------------------------------------------
// 7. Quotient well-definedness and the residuated law suite.

inline Report accept_quotient(const AcceptanceConfig&) {
  Report r;
  auto names = fixture_names();
  auto battery = fixture_battery();
  bool ok = true;
  std::string w;
  int pairs = 0;
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const ImpStructure& A = battery[i];
    std::set<std::uint64_t> seen;
    std::vector<Separator> seps;
    for (int a = -1; a < A.size(); ++a) {
      std::uint64_t X = a < 0 ? 0 : std::uint64_t{1} << a;
      Separator S = lsep(X, A);
      if (seen.insert(S.carrier).second) seps.push_back(S);
    }
    for (const auto& S : seps) {
      ++pairs;
      QuotientAlgebra Q = build_quotient(A, S);
      Report rq = quotient_welldef_check(Q);
      rq.merge(residuated_suite(Q));
      if (ok && !rq.ok()) {
        ok = false;
        w = names[i] + " carrier=" + std::to_string(S.carrier) + ": " +
            rq.first_failure()->id;
      }
    }
  }
  r.add("accept7.suite", ok, ok ? std::to_string(pairs) + " pairs" : w);
  return r;
}

// ---------------------------------------------------------------------------
// 8. Realisability situations export verified structures.
//
// The grid runs every pole subset.  The improper pole (the whole coefficient
// group) makes every pair of projects orthogonal, so the only type is the
// full set and the resulting one-point algebra cannot be consistent; that
// degenerate corner is asserted as such and reported separately.

inline Report accept_linreal(const AcceptanceConfig& cfg) {
  Report r;
  struct Family {
    std::string name;
    std::function<Situation(int, std::uint64_t)> make;
  };
  std::vector<Family> fams{
      {"z2", [](int k, std::uint64_t pole) { return cocycle_zn(2, k, pole); }},
      {"z3", [](int k, std::uint64_t pole) { return cocycle_zn(3, k, pole); }},
      {"klein", [](int k, std::uint64_t pole) { return cocycle_klein(k, pole); }}};

  bool ok = true, degen_ok = true;
  std::string w, wd;
  int bridges = 0, degenerate = 0;
  long long worst_ms = 0;
  for (const auto& fam : fams)
    for (int k : {2, 4}) {
      std::uint64_t full = (std::uint64_t{1} << k) - 1;
      for (std::uint64_t pole = 0; pole <= full; ++pole) {
        auto start = std::chrono::steady_clock::now();
        Situation S = fam.make(k, pole);
        Report rb;
        as_implicative(S, rb, cfg.cap);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        worst_ms = std::max(worst_ms, static_cast<long long>(ms));
        std::string tag =
            fam.name + "/Z" + std::to_string(k) + "/pole=" + std::to_string(pole);
        if (pole != full) {
          ++bridges;
          if (ok && !rb.ok()) {
            ok = false;
            w = tag + ": " + rb.first_failure()->id;
          }
        } else {
          // Degenerate corner: exactly the consistency claim must fail.
          ++degenerate;
          bool good = !rb.ok();
          for (const auto& c : rb.checks)
            if (c.status == Status::Fail && c.id != "bridge.consistent")
              good = false;
            else if (c.id == "bridge.consistent" && c.status != Status::Fail)
              good = false;
          if (degen_ok && !good) {
            degen_ok = false;
            wd = tag;
          }
        }
      }
    }
  r.add("accept8.bridges", ok, ok ? std::to_string(bridges) + " bridges" : w);
  r.add("accept8.degenerate_pole_detected", degen_ok,
        degen_ok ? std::to_string(degenerate) + " corners" : wd);
  // keep the pass-side witness free of wall-clock noise so reports are
  // byte-identical across runs with the same seed
  bool in_budget = worst_ms < 60000;
  r.add("accept8.per_situation_budget", in_budget,
        in_budget ? "" : std::to_string(worst_ms) + " ms worst");
  return r;
}

// ---------------------------------------------------------------------------
// 9. Exponential separators transfer to the Kleisli structure.

inline Report accept_transfer(const AcceptanceConfig&) {
  Report r;
  for (auto [nm, A] : {std::pair<std::string, ImpStructure>{"bool2", fixture_bool2()},
                       {"m2", fixture_m2()}}) {
    Separator S;
    S.kind = SepKind::Exponential;
    S.carrier = std::uint64_t{1} << A.lat.top;
    Report rt = intuitionistic_transfer_check(A, S);
    r.add("accept9." + nm, rt.ok(), rt.ok() ? "" : rt.first_failure()->id);
  }
  // Negative control: with a constant-top !, the counit value drops to
  // bottom and must be rejected.
  ImpStructure C = fixture_bool2_const_bang();
  Separator SC;
  SC.kind = SepKind::Exponential;
  SC.carrier = std::uint64_t{1} << C.lat.top;
  Report rc = verify_separator(SC, C);
  bool d_fail = false;
  for (const auto& c : rc.checks)
    if (c.id == "sep.generator.D" && c.status == Status::Fail) d_fail = true;
  r.add("accept9.negative_control", d_fail, "sep.generator.D");
  return r;
}

// ---------------------------------------------------------------------------
// 10. Records, additives, and the fixpoint exponential.

inline Report accept_records(const AcceptanceConfig&) {
  Report r;
  ImpStructure A = fixture_pow3();
  RecordPair p =
      make_pair_tables(A.lat, A.records.at("l"), A.records.at("r"));
  Report rl = verify_record(p.l, A);
  Report rr = verify_record(p.r, A);
  r.add("accept10.record_l", rl.ok(), rl.ok() ? "" : rl.first_failure()->id);
  r.add("accept10.record_r", rr.ok(), rr.ok() ? "" : rr.first_failure()->id);
  std::string wc;
  r.add("accept10.compatible", compatible(p, A, &wc), wc);
  Report dm = demorgan_check(p, A);
  r.add("accept10.demorgan", dm.ok(), dm.ok() ? "" : dm.first_failure()->id);

  // The shipped pair admits no consistent additive separator on this small
  // lattice (the closure conditions drag singleton meets down to bottom), so
  // the law suite runs under the full-carrier separator and a consistent
  // candidate is kept as a negative control.
  Separator Sfull;
  Sfull.kind = SepKind::Linear;
  Sfull.carrier = A.lat.all_mask();
  Report suite = additive_suite(A, p, Sfull);
  r.add("accept10.additive_suite", suite.ok(),
        suite.ok() ? std::to_string(suite.checks.size()) + " laws"
                   : suite.first_failure()->id);

  Separator Stop;
  Stop.kind = SepKind::Linear;
  Stop.carrier = std::uint64_t{1} << A.lat.top;
  Report cond = verify_additive_separator(Stop, p, A);
  bool c2_fail = false;
  for (const auto& c : cond.checks)
    if (c.id == "additive.cond2_extract_intro" && c.status == Status::Fail)
      c2_fail = true;
  r.add("accept10.consistent_candidate_rejected", c2_fail,
        "additive.cond2_extract_intro");

  bool fix_ok = true;
  std::string wf;
  for (int X = 0; X < A.size() && fix_ok; ++X) {
    Report rf;
    try {
      fixpoint_bang(X, A, p, &rf);
      fixpoint_whynot(X, A, p, &rf);
    } catch (const Error& e) {
      fix_ok = false;
      wf = A.lat.name(X) + ": " + e.what();
      break;
    }
    if (!rf.ok()) {
      fix_ok = false;
      wf = A.lat.name(X) + ": " + rf.first_failure()->id;
    }
  }
  r.add("accept10.fixpoints", fix_ok, wf);

  Report ef = exponential_from_fixpoint_check(A, p, Sfull);
  r.add("accept10.fixpoint_exponential", ef.ok(),
        ef.ok() ? "" : ef.first_failure()->id);

  // Degenerate constant-top pair on the two-point lattice: ! collapses to
  // top everywhere and the counit combinator value must be rejected.
  ImpStructure B2 = fixture_bool2();
  std::vector<int> ctab(B2.size(), B2.lat.top);
  RecordPair cp = make_pair_tables(B2.lat, ctab, ctab);
  bool const_top = true;
  for (int X = 0; X < B2.size(); ++X)
    if (fixpoint_bang(X, B2, cp) != B2.lat.top) const_top = false;
  r.add("accept10.const_pair_collapses", const_top);
  Separator SB;
  SB.kind = SepKind::Linear;
  SB.carrier = std::uint64_t{1} << B2.lat.top;
  Report ec = exponential_from_fixpoint_check(B2, cp, SB);
  bool d_fail = false;
  for (const auto& c : ec.checks)
    if (c.id == "sep.generator.D" && c.status == Status::Fail) d_fail = true;
  r.add("accept10.const_pair_counit_rejected", d_fail, "sep.generator.D");
  return r;
}

// ---------------------------------------------------------------------------
// Registry

struct Criterion {
  std::string name;
  Report (*run)(const AcceptanceConfig&);
};

inline const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all{
      {"abstraction", accept_abstraction}, {"permutations", accept_permutations},
      {"closed-forms", accept_closed_forms}, {"roundtrip", accept_roundtrip},
      {"core", accept_core},               {"soundness", accept_soundness},
      {"quotient", accept_quotient},       {"linreal", accept_linreal},
      {"transfer", accept_transfer},       {"records", accept_records}};
  return all;
}

}  // namespace lia

#endif  // LIA_ACCEPTANCE_HPP
