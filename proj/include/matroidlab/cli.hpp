#ifndef MATROIDLAB_CLI_HPP
#define MATROIDLAB_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "matroidlab/axioms.hpp"
#include "matroidlab/chroma.hpp"
#include "matroidlab/exchange.hpp"
#include "matroidlab/games.hpp"
#include "matroidlab/json_io.hpp"
#include "matroidlab/kruskal_katona.hpp"
#include "matroidlab/necklace.hpp"
#include "matroidlab/simplicial.hpp"
#include "matroidlab/union.hpp"

namespace matroidlab {
namespace cli {

// 256-element capacity covers every desk-scale instance the tool targets.
constexpr int kWords = 4;
using Set = BasicElementSet<kWords>;
using MPtr = BasicMatroidPtr<kWords>;

struct Options {
  std::size_t cap = kDefaultMaxEnum;
  bool verify_witness = false;
};

class Timer {
 public:
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

namespace detail {

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(path + ": " + e.what());
  }
}

inline std::vector<int> parse_csv_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InvalidInputError(what + ": cannot parse \"" + tok + "\" as an integer");
    }
  }
  if (out.empty()) throw InvalidInputError(what + " is empty");
  return out;
}

inline Set csv_to_set(const std::string& text, int universe, const std::string& what) {
  Set out(universe);
  for (int e : parse_csv_ints(text, what)) {
    if (e < 0 || e >= universe)
      throw InvalidInputError(what + ": element " + std::to_string(e) +
                              " outside universe of size " + std::to_string(universe));
    out.insert(e);
  }
  return out;
}

// Base sequences on the command line: bases separated by ';', elements by ','.
inline BasicBaseSequence<kWords> parse_sequence(const std::string& text, int universe,
                                                const std::string& what) {
  BasicBaseSequence<kWords> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) out.push_back(csv_to_set(part, universe, what));
  if (out.empty()) throw InvalidInputError(what + " is empty");
  return out;
}

inline std::vector<int> weights_or_ones(const std::string& csv, int n, const std::string& what) {
  if (csv.empty()) return std::vector<int>(n, 1);
  auto w = parse_csv_ints(csv, what);
  if (static_cast<int>(w.size()) != n)
    throw InvalidInputError(what + " needs exactly " + std::to_string(n) + " entries");
  return w;
}

inline int finish(const std::string& name, bool ok, Json result, std::optional<Json> witness,
                  const Timer& timer) {
  Json env = envelope(ok, std::move(result), std::move(witness), timer.ms());
  validate_envelope(env);
  std::cout << dump_canonical(env);
  std::cerr << name << ": " << (ok ? "ok" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

inline void attach_reverified(Json& witness) { witness["reverified"] = true; }

}  // namespace detail

// ---- one-shot commands ----

inline int cmd_check(const std::string& file, const Options&) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  auto report = check_axioms(*m);
  Json checks = Json::array();
  std::optional<Json> witness;
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"id", c.id}, {"pass", c.pass}});
    if (!c.pass && !witness) {
      Json sets = Json::array();
      for (const auto& s : c.witness) sets.push_back(set_to_json(s));
      witness = Json{{"check", c.id}, {"sets", sets}};
    }
  }
  return detail::finish("check", report.ok(), Json{{"checks", checks}}, witness, t);
}

inline int cmd_rank(const std::string& file, const std::string& set_csv, const Options&) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  Set a = set_csv.empty() ? Set(m->ground_size()).complement()
                          : detail::csv_to_set(set_csv, m->ground_size(), "--set");
  return detail::finish("rank", true, m->rank(a), std::nullopt, t);
}

inline int cmd_chromatic(const std::string& file, bool fractional, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  if (fractional)
    return detail::finish("chromatic", true, rational_to_string(fractional_chromatic(m, opt.cap)),
                          std::nullopt, t);
  return detail::finish("chromatic", true, chromatic_number(m, opt.cap), std::nullopt, t);
}

inline int cmd_listcolor(const std::string& file, const std::string& lists_file,
                         const std::string& weights_csv, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  const int n = m->ground_size();
  Json lj = detail::read_json_file(lists_file);
  if (!lj.is_array() || static_cast<int>(lj.size()) != n)
    throw InvalidInputError("lists file must hold one color array per element");
  std::vector<std::vector<int>> lists;
  for (const auto& row : lj) lists.push_back(json_int_list(row, "list entry"));
  auto w = detail::weights_or_ones(weights_csv, n, "--weights");
  auto outcome = color_from_lists<kWords>(m, lists, w);
  if (outcome.ok)
    return detail::finish("listcolor", true, coloring_to_json(outcome.coloring), std::nullopt, t);
  Json witness{{"violating_set", set_to_json(outcome.violating_set)}};
  if (opt.verify_witness) {
    const auto& a = outcome.violating_set;
    std::map<int, Set> support;
    for (int e = 0; e < n; ++e)
      for (int c : lists[e]) support.try_emplace(c, Set(n)).first->second.insert(e);
    long long ranks = 0, want = 0;
    for (const auto& [c, q] : support) ranks += m->rank(a & q);
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1)) want += w[e];
    if (ranks >= want) throw InternalError("violating set fails to violate");
    detail::attach_reverified(witness);
  }
  return detail::finish("listcolor", false, Json(), witness, t);
}

inline int cmd_union(const std::vector<std::string>& files, const std::string& weights_csv,
                     const Options& opt) {
  Timer t;
  std::vector<MPtr> ms;
  for (const auto& f : files) ms.push_back(load_matroid<kWords>(detail::read_json_file(f)));
  if (ms.empty()) throw InvalidInputError("union needs at least one matroid");
  const int n = ms.front()->ground_size();
  auto w = detail::weights_or_ones(weights_csv, n, "--weights");
  auto cert = matroid_union(ms, w);
  if (cert.ok)
    return detail::finish("union", true, covering_to_json(cert.covering), std::nullopt, t);
  long long ranks = 0, want = 0;
  for (const auto& m : ms) ranks += m->rank(cert.violating_set);
  for (int e = cert.violating_set.min_element(); e >= 0;
       e = cert.violating_set.next_element(e + 1))
    want += w[e];
  Json witness{{"violating_set", set_to_json(cert.violating_set)},
               {"rank_sum", ranks},
               {"weight_sum", want}};
  if (opt.verify_witness) {
    if (ranks >= want) throw InternalError("violating set fails to violate");
    detail::attach_reverified(witness);
  }
  return detail::finish("union", false, Json(), witness, t);
}

inline int cmd_intersect(const std::string& f1, const std::string& f2, const Options&) {
  Timer t;
  auto m1 = load_matroid<kWords>(detail::read_json_file(f1));
  auto m2 = load_matroid<kWords>(detail::read_json_file(f2));
  auto res = max_common_independent(m1, m2);
  long long bound = m1->rank(res.minimizer) + m2->rank(res.minimizer.complement());
  if (bound != res.common.size()) throw InternalError("min-max certificate disagrees");
  Json result{{"size", res.common.size()},
              {"common", set_to_json(res.common)},
              {"minimizer", set_to_json(res.minimizer)}};
  return detail::finish("intersect", true, result, std::nullopt, t);
}

// ---- coloring games ----

namespace detail {

// With k classes and doubled weights the union certificate is exactly the
// covering the game strategy wants; without one the engine falls back to the
// least legal move.
inline std::optional<BasicWCovering<kWords>> game_covering(const MPtr& m, int k) {
  std::vector<MPtr> copies(k, m);
  auto cert = matroid_union(copies, std::vector<int>(m->ground_size(), 2));
  if (!cert.ok) return std::nullopt;
  return cert.covering;
}

inline std::optional<std::pair<int, int>> least_legal(const BasicGameState<kWords>& st) {
  for (int e = 0; e < st.ground_size(); ++e) {
    if (st.colored[e] != 0) continue;
    for (int c = 1; c <= st.colors(); ++c)
      if (st.is_legal(e, c)) return std::make_pair(e, c);
  }
  return std::nullopt;
}

struct Repl {
  std::istream& in;
  std::ostream& out;

  // nullopt = end of input, which aborts the session
  std::optional<std::vector<std::string>> read_command(const std::string& prompt) {
    std::string line;
    for (;;) {
      std::cerr << prompt << "\n";
      if (!std::getline(in, line)) return std::nullopt;
      std::stringstream ss(line);
      std::vector<std::string> words;
      std::string word;
      while (ss >> word) words.push_back(word);
      if (!words.empty()) return words;
    }
  }

  void error(const std::string& reason) { out << "ERROR " << reason << "\n"; }
};

inline std::optional<std::pair<int, int>> read_move(Repl& repl, const std::string& prompt) {
  for (;;) {
    auto words = repl.read_command(prompt);
    if (!words) return std::nullopt;
    if (words->size() != 3 || (*words)[0] != "MOVE") {
      repl.error("expected: MOVE <element> <color>");
      continue;
    }
    try {
      return std::make_pair(std::stoi((*words)[1]), std::stoi((*words)[2]));
    } catch (const std::exception&) {
      repl.error("expected integers after MOVE");
    }
  }
}

}  // namespace detail

inline int cmd_game_value(const std::string& file, int k, const Options&) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  auto who = game_value<kWords>(m, k);
  return detail::finish("game value", true, who == Player::kAlice ? "alice" : "bob", std::nullopt,
                        t);
}

inline int cmd_game_run(const std::string& file, int k, const Options&) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  auto covering = detail::game_covering(m, k);
  if (!covering) std::cerr << "no 2-covering with " << k << " classes; alice plays greedily\n";
  auto st = BasicGameState<kWords>::with_colors(m, k);
  Json moves = Json::array();
  while (!st.finished()) {
    auto mv = covering ? alice_game_move(st, *covering) : *detail::least_legal(st);
    st.apply(mv.first, mv.second);
    moves.push_back(Json::array({mv.first, mv.second}));
    auto bob = detail::least_legal(st);
    if (!bob) break;
    st.apply(bob->first, bob->second);
    moves.push_back(Json::array({bob->first, bob->second}));
  }
  const bool alice_won = st.all_colored();
  Json result{{"winner", alice_won ? "alice" : "bob"}, {"moves", moves}};
  return detail::finish("game run", true, result, std::nullopt, t);
}

inline int cmd_game_play(const std::string& file, int k, const std::string& role,
                         const Options&) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  const bool human_is_bob = role == "bob";
  std::optional<BasicWCovering<kWords>> covering;
  if (human_is_bob) {
    covering = detail::game_covering(m, k);
    if (!covering)
      std::cerr << "no 2-covering with " << k << " classes; engine alice plays greedily\n";
  }
  auto st = BasicGameState<kWords>::with_colors(m, k);
  detail::Repl repl{std::cin, std::cout};

  while (true) {
    const bool engines_turn = (st.turn == Player::kAlice) == human_is_bob;
    if (engines_turn) {
      std::optional<std::pair<int, int>> mv;
      if (st.turn == Player::kAlice && covering && !st.finished())
        mv = alice_game_move(st, *covering);
      else if (!(st.turn == Player::kAlice && covering))
        mv = detail::least_legal(st);
      if (!mv) break;
      st.apply(mv->first, mv->second);
      repl.out << "MOVE " << mv->first << " " << mv->second << "\n";
    } else {
      if (!detail::least_legal(st)) break;
      auto mv = detail::read_move(repl, "your move (MOVE <element> <color>)");
      if (!mv) return 2;
      try {
        st.apply(mv->first, mv->second);
      } catch (const InvalidInputError& e) {
        repl.error(e.what());
        continue;
      }
    }
  }
  const bool alice_won = st.all_colored();
  repl.out << "WINNER " << (alice_won ? "alice" : "bob") << "\n";
  Json result{{"winner", alice_won ? "alice" : "bob"}};
  return detail::finish("game play", true, result, std::nullopt, t);
}

inline int cmd_online_run(const std::string& file, const std::string& weights_csv,
                          const std::string& sizes_csv, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  const int n = m->ground_size();
  auto w = detail::weights_or_ones(weights_csv, n, "--weights");
  std::vector<int> ell = sizes_csv.empty()
                             ? std::vector<int>(n, chromatic_number(m, opt.cap))
                             : detail::weights_or_ones(sizes_csv, n, "--list-sizes");
  BasicOnlineState<kWords> st(m, w, ell);
  Json rounds = Json::array();
  while (true) {
    Set reveal(n);
    for (int e = 0; e < n; ++e)
      if (st.remaining_ell[e] > 0) reveal.insert(e);
    if (reveal.empty()) break;
    auto colored = online_alice_respond(st, reveal);
    rounds.push_back(Json{{"reveal", set_to_json(reveal)}, {"colored", set_to_json(colored)}});
  }
  return detail::finish("online run", true, Json{{"rounds", rounds}}, std::nullopt, t);
}

inline int cmd_online_play(const std::string& file, const std::string& weights_csv,
                           const std::string& sizes_csv, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  const int n = m->ground_size();
  auto w = detail::weights_or_ones(weights_csv, n, "--weights");
  std::vector<int> ell = sizes_csv.empty()
                             ? std::vector<int>(n, chromatic_number(m, opt.cap))
                             : detail::weights_or_ones(sizes_csv, n, "--list-sizes");
  BasicOnlineState<kWords> st(m, w, ell);
  detail::Repl repl{std::cin, std::cout};

  auto open_lists = [&] {
    int open = 0;
    for (int e = 0; e < n; ++e) open += st.remaining_ell[e] > 0;
    return open;
  };
  while (open_lists() > 0) {
    auto words = repl.read_command("reveal a set (REVEAL <element> ...)");
    if (!words) return 2;
    if ((*words)[0] != "REVEAL") {
      repl.error("expected: REVEAL <element> ...");
      continue;
    }
    Set reveal(n);
    bool bad = false;
    for (std::size_t i = 1; i < words->size() && !bad; ++i) {
      try {
        int e = std::stoi((*words)[i]);
        if (e < 0 || e >= n) throw std::out_of_range("element");
        reveal.insert(e);
      } catch (const std::exception&) {
        repl.error("elements are integers in 0.." + std::to_string(n - 1));
        bad = true;
      }
    }
    if (bad) continue;
    try {
      auto colored = online_alice_respond(st, reveal);
      repl.out << "COLORSET";
      for (int e = colored.min_element(); e >= 0; e = colored.next_element(e + 1))
        repl.out << " " << e;
      repl.out << "\n";
    } catch (const InvalidInputError& e) {
      repl.error(e.what());
    }
  }
  repl.out << "WINNER alice\n";
  return detail::finish("online play", true, Json{{"winner", "alice"}, {"rounds", st.rounds_played}},
                        std::nullopt, t);
}

inline int cmd_indicated_run(const std::string& file, int colors, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  const int k = colors > 0 ? colors : chromatic_number(m, opt.cap);
  auto part = partition_into_independent(m, k);
  if (!part.ok)
    return detail::finish("indicated run", false, Json(),
                          Json{{"violating_set", set_to_json(part.violating_set)}}, t);
  std::vector<MPtr> ms(k, m);
  auto alice = indicated_alice<kWords>(ms, part.covering, opt.cap);
  std::vector<Set> classes(k, Set(m->ground_size()));
  Json moves = Json::array();
  bool stuck = false;
  while (!alice.done() && !stuck) {
    int e = alice.next_indication();
    stuck = true;
    for (int c = 1; c <= k && stuck; ++c) {
      Set probe = classes[c - 1];
      probe.insert(e);
      if (!m->is_independent(probe)) continue;
      alice.on_bob_color(e, c);
      classes[c - 1] = probe;
      moves.push_back(Json::array({e, c}));
      stuck = false;
    }
  }
  Json result{{"winner", stuck ? "bob" : "alice"}, {"moves", moves}};
  return detail::finish("indicated run", true, result, std::nullopt, t);
}

inline int cmd_indicated_play(const std::string& file, int colors, const std::string& role,
                              const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  const int n = m->ground_size();
  const int k = colors > 0 ? colors : chromatic_number(m, opt.cap);
  detail::Repl repl{std::cin, std::cout};

  if (role == "bob") {
    auto part = partition_into_independent(m, k);
    if (!part.ok)
      return detail::finish("indicated play", false, Json(),
                            Json{{"violating_set", set_to_json(part.violating_set)}}, t);
    std::vector<MPtr> ms(k, m);
    auto alice = indicated_alice<kWords>(ms, part.covering, opt.cap);
    while (!alice.done()) {
      int e = alice.next_indication();
      repl.out << "INDICATE " << e << "\n";
      for (;;) {
        auto mv = detail::read_move(repl, "color it (MOVE " + std::to_string(e) + " <color>)");
        if (!mv) return 2;
        try {
          alice.on_bob_color(mv->first, mv->second);
          break;
        } catch (const InvalidInputError& err) {
          repl.error(err.what());
        }
      }
    }
    repl.out << "WINNER alice\n";
    return detail::finish("indicated play", true, Json{{"winner", "alice"}}, std::nullopt, t);
  }

  // human alice indicates, engine bob answers with the least legal color
  std::vector<Set> classes(k, Set(n));
  std::vector<char> colored(n, 0);
  int left = n;
  while (left > 0) {
    auto words = repl.read_command("indicate an element (INDICATE <element>)");
    if (!words) return 2;
    int e = -1;
    if (words->size() == 2 && (*words)[0] == "INDICATE") {
      try {
        e = std::stoi((*words)[1]);
      } catch (const std::exception&) {
        e = -1;
      }
    }
    if (e < 0 || e >= n) {
      repl.error("expected: INDICATE <element in 0.." + std::to_string(n - 1) + ">");
      continue;
    }
    if (colored[e]) {
      repl.error("element " + std::to_string(e) + " is already colored");
      continue;
    }
    int chosen = 0;
    for (int c = 1; c <= k && !chosen; ++c) {
      Set probe = classes[c - 1];
      probe.insert(e);
      if (m->is_independent(probe)) {
        classes[c - 1] = probe;
        chosen = c;
      }
    }
    if (!chosen) {
      repl.out << "WINNER bob\n";
      return detail::finish("indicated play", true, Json{{"winner", "bob"}}, std::nullopt, t);
    }
    colored[e] = 1;
    --left;
    repl.out << "MOVE " << e << " " << chosen << "\n";
  }
  repl.out << "WINNER alice\n";
  return detail::finish("indicated play", true, Json{{"winner", "alice"}}, std::nullopt, t);
}

// ---- shadows, complexes, exchange properties, necklaces ----

inline int cmd_kk_cascade(long long n, int k, const Options&) {
  Timer t;
  auto rep = cascade(n, k);
  return detail::finish("kk cascade", true,
                        Json{{"terms", rep.terms}, {"delta", delta(n, k)}}, std::nullopt, t);
}

inline int cmd_kk_shadow(const std::string& family_file, const Options&) {
  Timer t;
  Json fj = detail::read_json_file(family_file);
  if (!fj.is_array()) throw InvalidInputError("family file must be an array of vertex arrays");
  std::vector<Set> family;
  for (const auto& row : fj) {
    Set s(Set::kCapacity);
    for (int v : json_int_list(row, "family member")) {
      if (v < 1 || v >= Set::kCapacity)
        throw InvalidInputError("vertices are positive integers below " +
                                std::to_string(Set::kCapacity));
      s.insert(v);
    }
    family.push_back(s);
  }
  auto sh = shadow(family);
  Json sets = Json::array();
  for (const auto& s : sh) sets.push_back(set_to_json(s));
  const int k = family.empty() ? 1 : family.front().size();
  long long bound = delta(static_cast<long long>(family.size()), k);
  if (static_cast<long long>(sh.size()) < bound)
    throw InternalError("shadow beat the lower bound");
  Json result{{"size", family.size()},
              {"shadow_size", sh.size()},
              {"delta", bound},
              {"shadow", sets}};
  return detail::finish("kk shadow", true, result, std::nullopt, t);
}

inline int cmd_kk_fvector(const std::string& counts_csv, const Options&) {
  Timer t;
  auto counts = detail::parse_csv_ints(counts_csv, "--counts");
  std::vector<long long> f(counts.begin(), counts.end());
  bool ok = is_valid_fvector(f);
  std::optional<Json> witness;
  if (!ok) witness = Json{{"counts", f}};
  return detail::finish("kk fvector", ok, ok, witness, t);
}

inline int cmd_complex_extremal(const std::string& file, const Options&) {
  Timer t;
  auto c = parse_complex<kWords>(detail::read_json_file(file));
  bool ok = is_extremal(c);
  std::optional<Json> witness;
  if (!ok) witness = complex_to_json(c);
  return detail::finish("complex extremal", ok, ok, witness, t);
}

inline int cmd_complex_decompose(const std::string& file, const Options& opt) {
  Timer t;
  auto c = parse_complex<kWords>(detail::read_json_file(file));
  auto vd = is_vertex_decomposable(c, opt.cap);
  if (vd.ok)
    return detail::finish("complex decompose", true, Json{{"shedding", vd.shedding}},
                          std::nullopt, t);
  return detail::finish("complex decompose", false, Json(), complex_to_json(c), t);
}

inline int cmd_white_te(const std::string& file, int n, const std::string& relation,
                        const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  TeRelation rel;
  if (relation == "r1")
    rel = TeRelation::kR1;
  else if (relation == "r2")
    rel = TeRelation::kR2;
  else if (relation == "r3")
    rel = TeRelation::kR3;
  else
    throw InvalidInputError("--relation is r1, r2, or r3");
  auto report = te_verify(*m, n, rel, opt.cap);
  Json result{{"vertices", report.vertex_count}, {"classes", report.class_count}};
  std::optional<Json> witness;
  if (!report.ok) {
    Json a = Json::array(), b = Json::array();
    for (const auto& s : report.witness_a) a.push_back(set_to_json(s));
    for (const auto& s : report.witness_b) b.push_back(set_to_json(s));
    Json w{{"a", a}, {"b", b}};
    if (opt.verify_witness) {
      if (!is_compatible(report.witness_a, report.witness_b))
        throw InternalError("witness sequences are not compatible");
      for (const auto& s : report.witness_a)
        if (!m->is_basis(s)) throw InternalError("witness holds a non-basis");
      detail::attach_reverified(w);
    }
    witness = w;
  }
  return detail::finish("white te", report.ok, result, witness, t);
}

inline int cmd_white_sbo(const std::string& file, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  auto res = is_strongly_base_orderable(*m, opt.cap);
  if (res.ok)
    return detail::finish("white sbo", true,
                          Json{{"strongly_base_orderable", true},
                               {"pairs", res.certificate.pairs.size()}},
                          std::nullopt, t);
  Json witness{{"base_a", set_to_json(res.failing_pair.first)},
               {"base_b", set_to_json(res.failing_pair.second)}};
  if (opt.verify_witness) {
    if (!m->is_basis(res.failing_pair.first) || !m->is_basis(res.failing_pair.second))
      throw InternalError("failing pair holds a non-basis");
    detail::attach_reverified(witness);
  }
  return detail::finish("white sbo", false, Json{{"strongly_base_orderable", false}}, witness, t);
}

inline int cmd_white_path(const std::string& file, const std::string& from_text,
                          const std::string& to_text, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  auto xs = detail::parse_sequence(from_text, m->ground_size(), "--from");
  auto ys = detail::parse_sequence(to_text, m->ground_size(), "--to");
  auto res = is_strongly_base_orderable(*m, opt.cap);
  if (!res.ok)
    return detail::finish("white path", false, Json(),
                          Json{{"base_a", set_to_json(res.failing_pair.first)},
                               {"base_b", set_to_json(res.failing_pair.second)}},
                          t);
  auto moves = sbo_exchange_path(*m, xs, ys, res.certificate);
  return detail::finish("white path", true, moves_to_json(moves), std::nullopt, t);
}

inline int cmd_white_graph(const std::string& file, int k, const Options& opt) {
  Timer t;
  auto m = load_matroid<kWords>(detail::read_json_file(file));
  auto summary = blasiak_graph(m, k, opt.cap);
  Json result{{"vertices", summary.vertex_count}, {"components", summary.component_count}};
  std::optional<Json> witness;
  if (!summary.connected) {
    Json fams = Json::array();
    for (const auto& fam : summary.witness) {
      Json sets = Json::array();
      for (const auto& s : fam) sets.push_back(set_to_json(s));
      fams.push_back(sets);
    }
    witness = Json{{"families", fams}};
  }
  return detail::finish("white graph", summary.connected, result, witness, t);
}

inline Necklace1D parse_beads(const std::string& beads) {
  if (beads.empty()) throw InvalidInputError("--beads is empty");
  for (char c : beads)
    if (c < 'A' || c > 'Z')
      throw InvalidInputError("beads are uppercase letters, A for color 1");
  return Necklace1D::from_letters(beads);
}

inline int cmd_necklace_split(const std::string& beads, const std::string& grid_file, int q,
                              int cuts, const std::string& budget_csv, const Options& opt) {
  Timer t;
  if (!beads.empty() && !grid_file.empty())
    throw InvalidInputError("give either --beads or --grid, not both");
  std::optional<Splitting> split;
  Json budget_note;
  if (!beads.empty()) {
    auto neck = parse_beads(beads);
    const int n = static_cast<int>(neck.beads.size());
    int t_cuts = cuts >= 0 ? cuts : std::min(neck.color_count() * (q - 1), n - 1);
    split = fair_split_1d(neck, q, t_cuts);
    budget_note = Json{{"cut_budget", t_cuts}};
  } else if (!grid_file.empty()) {
    auto grid = parse_grid(detail::read_json_file(grid_file));
    auto budget = detail::parse_csv_ints(budget_csv, "--budget");
    split = fair_split_grid(grid, q, budget, opt.cap);
    budget_note = Json{{"budget", budget}};
  } else {
    throw InvalidInputError("necklace split needs --beads or --grid");
  }
  if (split) return detail::finish("necklace split", true, splitting_to_json(*split), std::nullopt, t);
  return detail::finish("necklace split", false, Json(), budget_note, t);
}

inline int cmd_necklace_mincuts(const std::string& beads, int q, const Options&) {
  Timer t;
  return detail::finish("necklace mincuts", true, min_cuts(parse_beads(beads), q), std::nullopt,
                        t);
}

inline int cmd_necklace_tight(int k, int q, const Options&) {
  Timer t;
  if (k > 26) throw InvalidInputError("letters cover at most 26 colors");
  auto neck = tight_example(k, q);
  std::string word;
  for (int b : neck.beads) word.push_back(static_cast<char>('A' + b - 1));
  return detail::finish("necklace tight", true, Json{{"beads", word}, {"cuts", k * (q - 1)}},
                        std::nullopt, t);
}

// ---- wiring ----

inline int run_cli(int argc, const char* const* argv) {
  Options opt;
  if (const char* env = std::getenv("MATROIDLAB_MAX_ENUM")) {
    try {
      opt.cap = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "MATROIDLAB_MAX_ENUM is not a number; keeping the default\n";
    }
  }

  CLI::App app{"matroid coloring workbench"};
  app.require_subcommand(1);
  app.add_flag("--verify-witness", opt.verify_witness, "re-check emitted witnesses");

  std::function<int()> todo;
  std::string file, file2, set_csv, lists_file, weights_csv, sizes_csv, relation = "r2";
  std::string role = "bob", beads, grid_file, budget_csv, from_text, to_text, counts_csv;
  std::vector<std::string> files;
  int colors = 0, n_len = 2, k_arg = 2, q_parts = 2, cuts = -1;
  long long family_size = 0;

  auto* check = app.add_subcommand("check", "matroid axioms");
  check->add_option("file", file)->required();
  check->callback([&] { todo = [&] { return cmd_check(file, opt); }; });

  auto* rank = app.add_subcommand("rank", "rank of a set");
  rank->add_option("file", file)->required();
  rank->add_option("--set", set_csv, "comma-separated elements; whole ground set if absent");
  rank->callback([&] { todo = [&] { return cmd_rank(file, set_csv, opt); }; });

  auto* chromatic = app.add_subcommand("chromatic", "chromatic number");
  chromatic->add_option("file", file)->required();
  bool fractional = false;
  chromatic->add_flag("--fractional", fractional);
  chromatic->callback([&] { todo = [&] { return cmd_chromatic(file, fractional, opt); }; });

  auto* listcolor = app.add_subcommand("listcolor", "coloring from lists");
  listcolor->add_option("file", file)->required();
  listcolor->add_option("--lists", lists_file)->required();
  listcolor->add_option("--weights", weights_csv);
  listcolor->callback(
      [&] { todo = [&] { return cmd_listcolor(file, lists_file, weights_csv, opt); }; });

  auto* union_cmd = app.add_subcommand("union", "weighted matroid union");
  union_cmd->add_option("files", files)->required()->expected(-1);
  union_cmd->add_option("--weights", weights_csv);
  union_cmd->callback([&] { todo = [&] { return cmd_union(files, weights_csv, opt); }; });

  auto* intersect = app.add_subcommand("intersect", "maximum common independent set");
  intersect->add_option("file1", file)->required();
  intersect->add_option("file2", file2)->required();
  intersect->callback([&] { todo = [&] { return cmd_intersect(file, file2, opt); }; });

  auto* game = app.add_subcommand("game", "alternating coloring game");
  game->require_subcommand(1);
  auto* gv = game->add_subcommand("value", "optimal-play winner");
  auto* gr = game->add_subcommand("run", "engine against engine");
  auto* gp = game->add_subcommand("play", "interactive session");
  for (auto* sub : {gv, gr, gp}) {
    sub->add_option("file", file)->required();
    sub->add_option("--colors", colors)->required();
  }
  gp->add_option("--role", role)->check(CLI::IsMember({"alice", "bob"}));
  gv->callback([&] { todo = [&] { return cmd_game_value(file, colors, opt); }; });
  gr->callback([&] { todo = [&] { return cmd_game_run(file, colors, opt); }; });
  gp->callback([&] { todo = [&] { return cmd_game_play(file, colors, role, opt); }; });

  auto* online = app.add_subcommand("online", "on-line list coloring game");
  online->require_subcommand(1);
  auto* onr = online->add_subcommand("run", "engine reveals everything each round");
  auto* onp = online->add_subcommand("play", "you reveal, the engine colors");
  for (auto* sub : {onr, onp}) {
    sub->add_option("file", file)->required();
    sub->add_option("--weights", weights_csv);
    sub->add_option("--list-sizes", sizes_csv);
  }
  onr->callback([&] { todo = [&] { return cmd_online_run(file, weights_csv, sizes_csv, opt); }; });
  onp->callback(
      [&] { todo = [&] { return cmd_online_play(file, weights_csv, sizes_csv, opt); }; });

  auto* indicated = app.add_subcommand("indicated", "indicated coloring game");
  indicated->require_subcommand(1);
  auto* inr = indicated->add_subcommand("run", "engine against engine");
  auto* inp = indicated->add_subcommand("play", "interactive session");
  for (auto* sub : {inr, inp}) {
    sub->add_option("file", file)->required();
    sub->add_option("--colors", colors, "defaults to the chromatic number");
  }
  inp->add_option("--role", role)->check(CLI::IsMember({"alice", "bob"}));
  inr->callback([&] { todo = [&] { return cmd_indicated_run(file, colors, opt); }; });
  inp->callback([&] { todo = [&] { return cmd_indicated_play(file, colors, role, opt); }; });

  auto* kk = app.add_subcommand("kk", "shadow bounds in the squashed order");
  kk->require_subcommand(1);
  auto* kkc = kk->add_subcommand("cascade", "binomial cascade of n over k");
  kkc->add_option("-n", family_size)->required();
  kkc->add_option("-k", k_arg)->required();
  kkc->callback([&] { todo = [&] { return cmd_kk_cascade(family_size, k_arg, opt); }; });
  auto* kks = kk->add_subcommand("shadow", "shadow of a uniform family");
  kks->add_option("--family", file)->required();
  kks->callback([&] { todo = [&] { return cmd_kk_shadow(file, opt); }; });
  auto* kkf = kk->add_subcommand("fvector", "face-count feasibility");
  kkf->add_option("--counts", counts_csv)->required();
  kkf->callback([&] { todo = [&] { return cmd_kk_fvector(counts_csv, opt); }; });

  auto* cpx = app.add_subcommand("complex", "simplicial complexes");
  cpx->require_subcommand(1);
  auto* ce = cpx->add_subcommand("extremal", "face counts meet the shadow bound");
  auto* cd = cpx->add_subcommand("decompose", "vertex decomposability");
  for (auto* sub : {ce, cd}) sub->add_option("file", file)->required();
  ce->callback([&] { todo = [&] { return cmd_complex_extremal(file, opt); }; });
  cd->callback([&] { todo = [&] { return cmd_complex_decompose(file, opt); }; });

  auto* white = app.add_subcommand("white", "basis exchange properties");
  white->require_subcommand(1);
  auto* wte = white->add_subcommand("te", "exchange-connectivity of base sequences");
  wte->add_option("file", file)->required();
  wte->add_option("-n", n_len);
  wte->add_option("--relation", relation)->check(CLI::IsMember({"r1", "r2", "r3"}));
  wte->callback([&] { todo = [&] { return cmd_white_te(file, n_len, relation, opt); }; });
  auto* wsbo = white->add_subcommand("sbo", "strong base orderability");
  wsbo->add_option("file", file)->required();
  wsbo->callback([&] { todo = [&] { return cmd_white_sbo(file, opt); }; });
  auto* wpath = white->add_subcommand("path", "exchange path between base sequences");
  wpath->add_option("file", file)->required();
  wpath->add_option("--from", from_text)->required();
  wpath->add_option("--to", to_text)->required();
  wpath->callback([&] { todo = [&] { return cmd_white_path(file, from_text, to_text, opt); }; });
  auto* wgraph = white->add_subcommand("graph", "base-partition graph connectivity");
  wgraph->add_option("file", file)->required();
  wgraph->add_option("-k", k_arg);
  wgraph->callback([&] { todo = [&] { return cmd_white_graph(file, k_arg, opt); }; });

  auto* necklace = app.add_subcommand("necklace", "fair splittings");
  necklace->require_subcommand(1);
  auto* ns = necklace->add_subcommand("split", "fair splitting within a cut budget");
  ns->add_option("--beads", beads);
  ns->add_option("--grid", grid_file);
  ns->add_option("-q", q_parts)->required();
  ns->add_option("--cuts", cuts);
  ns->add_option("--budget", budget_csv);
  ns->callback(
      [&] { todo = [&] { return cmd_necklace_split(beads, grid_file, q_parts, cuts, budget_csv, opt); }; });
  auto* nm = necklace->add_subcommand("mincuts", "fewest cuts for a fair splitting");
  nm->add_option("--beads", beads)->required();
  nm->add_option("-q", q_parts)->required();
  nm->callback([&] { todo = [&] { return cmd_necklace_mincuts(beads, q_parts, opt); }; });
  auto* nt = necklace->add_subcommand("tight", "necklace needing k(q-1) cuts");
  nt->add_option("-k", k_arg)->required();
  nt->add_option("-q", q_parts)->required();
  nt->callback([&] { todo = [&] { return cmd_necklace_tight(k_arg, q_parts, opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    return todo();
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cli
}  // namespace matroidlab

#endif
