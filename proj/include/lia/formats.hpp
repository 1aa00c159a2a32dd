// Line-oriented file formats for lattice structures and realisability
// situations, with printers that round-trip through the parsers.
#ifndef LIA_FORMATS_HPP
#define LIA_FORMATS_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lia/gen.hpp"
#include "lia/implicative.hpp"
#include "lia/linreal.hpp"
#include "lia/parse.hpp"

namespace lia {

namespace detail {

inline std::vector<std::string> format_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;  // comment to end of line
    out.push_back(tok);
  }
  return out;
}

inline ParseError format_error(int lineno, const std::string& msg) {
  return ParseError("line " + std::to_string(lineno) + ": " + msg, lineno);
}

}  // namespace detail

// Lattice files:
//   elements: a b c
//   leq: a <= b
//   heyting            (or explicit `imp: a b -> c` lines)
//   bang: a -> b       (optional; must cover every element if present)
//   record l: a -> b   (optional; every named record must cover all elements)
inline ImpStructure parse_lattice_file(std::istream& in) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq_lines;
  std::vector<std::vector<std::string>> imp_lines, bang_lines;
  std::vector<std::pair<std::string, std::vector<std::string>>> record_lines;
  bool heyting = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::format_tokens(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "elements:") {
      names.assign(toks.begin() + 1, toks.end());
    } else if (key == "leq:") {
      if (toks.size() != 4 || toks[2] != "<=")
        throw detail::format_error(lineno, "expected `leq: a <= b`");
      leq_lines.emplace_back(toks[1], toks[3]);
    } else if (key == "heyting") {
      heyting = true;
    } else if (key == "imp:") {
      if (toks.size() != 5 || toks[3] != "->")
        throw detail::format_error(lineno, "expected `imp: a b -> c`");
      imp_lines.push_back({toks[1], toks[2], toks[4]});
    } else if (key == "bang:") {
      if (toks.size() != 4 || toks[2] != "->")
        throw detail::format_error(lineno, "expected `bang: a -> b`");
      bang_lines.push_back({toks[1], toks[3]});
    } else if (key == "record") {
      if (toks.size() != 5 || toks[1].empty() || toks[1].back() != ':' ||
          toks[3] != "->")
        throw detail::format_error(lineno, "expected `record l: a -> b`");
      record_lines.emplace_back(toks[1].substr(0, toks[1].size() - 1),
                                std::vector<std::string>{toks[2], toks[4]});
    } else {
      throw detail::format_error(lineno, "unknown directive: " + key);
    }
  }
  if (names.empty()) throw ParseError("lattice file has no `elements:` line", 0);

  ImpStructure A;
  {
    std::vector<std::pair<int, int>> pairs;
    FinLattice probe;
    probe.names = names;
    // index lookup without derived tables yet
    auto idx = [&](const std::string& nm) {
      for (int i = 0; i < (int)names.size(); ++i)
        if (names[i] == nm) return i;
      throw ParseError("unknown element: " + nm, 0);
    };
    for (auto& [a, b] : leq_lines) pairs.emplace_back(idx(a), idx(b));
    A.lat = FinLattice::from_order(names, pairs);
  }
  int n = A.lat.size();
  if (heyting) {
    if (!heyting_arrow(A.lat, A.imp))
      throw ParseError("lattice does not admit a residuated arrow", 0);
  } else {
    A.imp.assign(n, std::vector<int>(n, -1));
    for (auto& t : imp_lines)
      A.imp[A.lat.index_of(t[0])][A.lat.index_of(t[1])] = A.lat.index_of(t[2]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (A.imp[a][b] < 0)
          throw ParseError("missing imp entry for " + A.lat.name(a) + " " +
                               A.lat.name(b),
                           0);
  }
  if (!bang_lines.empty()) {
    A.bang.assign(n, -1);
    for (auto& t : bang_lines)
      A.bang[A.lat.index_of(t[0])] = A.lat.index_of(t[1]);
    for (int a = 0; a < n; ++a)
      if (A.bang[a] < 0)
        throw ParseError("missing bang entry for " + A.lat.name(a), 0);
  }
  for (auto& [label, _] : record_lines)
    if (!A.records.count(label)) A.records[label] = std::vector<int>(n, -1);
  for (auto& [label, t] : record_lines)
    A.records[label][A.lat.index_of(t[0])] = A.lat.index_of(t[1]);
  for (auto& [label, tab] : A.records)
    for (int a = 0; a < n; ++a)
      if (tab[a] < 0)
        throw ParseError("missing record " + label + " entry for " + A.lat.name(a),
                         0);
  return A;
}

inline ImpStructure load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_lattice_file(in);
}

inline std::string print_lattice_file(const ImpStructure& A) {
  std::ostringstream out;
  int n = A.lat.size();
  out << "elements:";
  for (int i = 0; i < n; ++i) out << " " << A.lat.name(i);
  out << "\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && A.lat.leq(a, b))
        out << "leq: " << A.lat.name(a) << " <= " << A.lat.name(b) << "\n";
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out << "imp: " << A.lat.name(a) << " " << A.lat.name(b) << " -> "
          << A.lat.name(A.imp[a][b]) << "\n";
  if (A.has_bang())
    for (int a = 0; a < n; ++a)
      out << "bang: " << A.lat.name(a) << " -> " << A.lat.name(A.bang[a]) << "\n";
  for (const auto& [label, tab] : A.records)
    for (int a = 0; a < n; ++a)
      out << "record " << label << ": " << A.lat.name(a) << " -> "
          << A.lat.name(tab[a]) << "\n";
  return out.str();
}

// Situation files:
//   theta: Z/2
//   pole: 1          (zero or more values of Z/k)
//   programs: e g
//   ex: e g -> g
//   m: e g -> 0
//   id: e            (optional)
//   tau: e           (optional)
inline Situation parse_situation_file(std::istream& in) {
  Situation S;
  std::vector<std::vector<std::string>> ex_lines, m_lines;
  std::string id_name, tau_name;
  std::string line;
  int lineno = 0;
  bool have_theta = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::format_tokens(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "theta:") {
      if (toks.size() != 2 || toks[1].rfind("Z/", 0) != 0)
        throw detail::format_error(lineno, "expected `theta: Z/k`");
      S.theta_k = std::stoi(toks[1].substr(2));
      if (S.theta_k < 1 || S.theta_k > 32)
        throw detail::format_error(lineno, "theta modulus out of range");
      have_theta = true;
    } else if (key == "pole:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        int v = std::stoi(toks[i]);
        if (v < 0 || v >= 64) throw detail::format_error(lineno, "bad pole value");
        S.pole |= std::uint64_t{1} << v;
      }
    } else if (key == "programs:") {
      S.prog_names.assign(toks.begin() + 1, toks.end());
    } else if (key == "ex:") {
      if (toks.size() != 5 || toks[3] != "->")
        throw detail::format_error(lineno, "expected `ex: p q -> r`");
      ex_lines.push_back({toks[1], toks[2], toks[4]});
    } else if (key == "m:") {
      if (toks.size() != 5 || toks[3] != "->")
        throw detail::format_error(lineno, "expected `m: p q -> v`");
      m_lines.push_back({toks[1], toks[2], toks[4]});
    } else if (key == "id:") {
      if (toks.size() != 2) throw detail::format_error(lineno, "expected `id: p`");
      id_name = toks[1];
    } else if (key == "tau:") {
      if (toks.size() != 2) throw detail::format_error(lineno, "expected `tau: p`");
      tau_name = toks[1];
    } else {
      throw detail::format_error(lineno, "unknown directive: " + key);
    }
  }
  if (!have_theta) throw ParseError("situation file has no `theta:` line", 0);
  if (S.prog_names.empty())
    throw ParseError("situation file has no `programs:` line", 0);
  int n = S.num_progs();
  S.ex.assign(n, std::vector<int>(n, -1));
  S.m.assign(n, std::vector<int>(n, -1));
  for (auto& t : ex_lines)
    S.ex[S.prog_of(t[0])][S.prog_of(t[1])] = S.prog_of(t[2]);
  for (auto& t : m_lines) {
    int v = std::stoi(t[2]);
    if (v < 0 || v >= S.theta_k) throw ParseError("m value out of Z/k range", 0);
    S.m[S.prog_of(t[0])][S.prog_of(t[1])] = v;
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (S.ex[p][q] < 0)
        throw ParseError("missing ex entry for " + S.prog_names[p] + " " +
                             S.prog_names[q],
                         0);
      if (S.m[p][q] < 0)
        throw ParseError("missing m entry for " + S.prog_names[p] + " " +
                             S.prog_names[q],
                         0);
    }
  if (!id_name.empty()) S.id = S.prog_of(id_name);
  if (!tau_name.empty()) S.tau = S.prog_of(tau_name);
  return S;
}

inline Situation load_situation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_situation_file(in);
}

inline std::string print_situation_file(const Situation& S) {
  std::ostringstream out;
  out << "theta: Z/" << S.theta_k << "\n";
  out << "pole:";
  for (int v = 0; v < S.theta_k; ++v)
    if (S.in_pole(v)) out << " " << v;
  out << "\n";
  out << "programs:";
  for (const auto& p : S.prog_names) out << " " << p;
  out << "\n";
  int n = S.num_progs();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      out << "ex: " << S.prog_names[p] << " " << S.prog_names[q] << " -> "
          << S.prog_names[S.ex[p][q]] << "\n";
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      out << "m: " << S.prog_names[p] << " " << S.prog_names[q] << " -> "
          << S.m[p][q] << "\n";
  if (S.id >= 0) out << "id: " << S.prog_names[S.id] << "\n";
  if (S.tau >= 0) out << "tau: " << S.prog_names[S.tau] << "\n";
  return out.str();
}

}  // namespace lia

#endif  // LIA_FORMATS_HPP
