#ifndef MATROIDLAB_GAMES_HPP
#define MATROIDLAB_GAMES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matroidlab/backends.hpp"
#include "matroidlab/chroma.hpp"
#include "matroidlab/element_set.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/matroid.hpp"
#include "matroidlab/union.hpp"

namespace matroidlab {

enum class Player { kAlice, kBob };

// Alternating proper-coloring game: color c is legal on an uncolored element
// while the class of c stays independent in the c-th matroid. The game ends
// when no legal move remains; a fully colored ground set is Alice's win.
template <int Words = 1>
struct BasicGameState {
  using Set = BasicElementSet<Words>;

  std::vector<BasicMatroidPtr<Words>> matroids;  // one per color 1..d
  std::vector<int> colored;                      // per element, 0 = uncolored
  Player turn = Player::kAlice;
  std::optional<std::pair<int, int>> last_move;  // (element, color)

  explicit BasicGameState(std::vector<BasicMatroidPtr<Words>> ms) : matroids(std::move(ms)) {
    if (matroids.empty()) throw InvalidInputError("the game needs at least one color");
    for (const auto& m : matroids)
      if (m->ground_size() != matroids.front()->ground_size())
        throw UniverseMismatchError("game matroids live on different ground sets");
    colored.assign(matroids.front()->ground_size(), 0);
  }

  static BasicGameState with_colors(const BasicMatroidPtr<Words>& m, int k) {
    if (k < 1) throw InvalidInputError("the game needs at least one color");
    return BasicGameState(std::vector<BasicMatroidPtr<Words>>(k, m));
  }

  int ground_size() const { return static_cast<int>(colored.size()); }
  int colors() const { return static_cast<int>(matroids.size()); }

  Set color_class(int c) const {
    Set out(ground_size());
    for (int e = 0; e < ground_size(); ++e)
      if (colored[e] == c) out.insert(e);
    return out;
  }

  Set colored_set() const {
    Set out(ground_size());
    for (int e = 0; e < ground_size(); ++e)
      if (colored[e] != 0) out.insert(e);
    return out;
  }

  bool is_legal(int e, int c) const {
    if (e < 0 || e >= ground_size() || c < 1 || c > colors()) return false;
    if (colored[e] != 0) return false;
    Set cls = color_class(c);
    cls.insert(e);
    return matroids[c - 1]->is_independent(cls);
  }

  std::vector<std::pair<int, int>> legal_moves() const {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < ground_size(); ++e) {
      if (colored[e] != 0) continue;
      for (int c = 1; c <= colors(); ++c)
        if (is_legal(e, c)) out.emplace_back(e, c);
    }
    return out;
  }

  bool all_colored() const {
    return std::all_of(colored.begin(), colored.end(), [](int c) { return c != 0; });
  }

  bool finished() const { return legal_moves().empty(); }

  void apply(int e, int c) {
    if (!is_legal(e, c))
      throw InvalidInputError("illegal move: element " + std::to_string(e) + " color " +
                              std::to_string(c));
    colored[e] = c;
    last_move = {e, c};
    turn = turn == Player::kAlice ? Player::kBob : Player::kAlice;
  }
};

namespace detail {

template <int Words>
std::vector<BasicElementSet<Words>> covering_classes(const BasicWCovering<Words>& covering,
                                                     int colors, int ground) {
  std::vector<BasicElementSet<Words>> out(colors, BasicElementSet<Words>(ground));
  std::vector<char> seen(colors, 0);
  if (static_cast<int>(covering.classes.size()) != colors)
    throw InvalidInputError("covering must provide one class per color");
  for (const auto& [idx, cls] : covering.classes) {
    if (idx < 0 || idx >= colors || seen[idx])
      throw InvalidInputError("covering classes must map one-to-one onto colors");
    seen[idx] = 1;
    out[idx] = cls;
  }
  return out;
}

}  // namespace detail

// Alice's reply in the coloring game, given a 2-covering with the i-th class
// independent in the i-th matroid. She repairs the one color whose class
// plus its unused covering part went dependent (the greedy extension misses
// exactly one element f, recolored with f's other covering color), and
// otherwise colors the least uncolored element with its least covering
// color. Either reply keeps every class plus its unused covering part
// independent.
template <int Words>
std::pair<int, int> alice_game_move(const BasicGameState<Words>& state,
                                    const BasicWCovering<Words>& covering) {
  using Set = BasicElementSet<Words>;
  const int d = state.colors(), n = state.ground_size();
  const auto parts = detail::covering_classes(covering, d, n);
  {
    std::vector<int> depth(n, 0);
    for (int i = 0; i < d; ++i) {
      if (!state.matroids[i]->is_independent(parts[i]))
        throw InvalidInputError("covering class " + std::to_string(i + 1) + " is dependent");
      for (int e = parts[i].min_element(); e >= 0; e = parts[i].next_element(e + 1)) ++depth[e];
    }
    for (int e = 0; e < n; ++e)
      if (depth[e] < 2)
        throw InvalidInputError("element " + std::to_string(e) + " is covered fewer than twice");
  }

  const Set done = state.colored_set();
  int broken = -1;
  for (int i = 0; i < d; ++i) {
    Set hull = state.color_class(i + 1) | (parts[i] - done);
    if (!state.matroids[i]->is_independent(hull)) {
      if (broken >= 0) throw InvalidInputError("two colors violate the invariant at once");
      broken = i;
    }
  }

  if (broken >= 0) {
    const Set cls = state.color_class(broken + 1);
    const Set spare = parts[broken] - done;
    Set ext = cls;
    int skipped = -1;
    for (int e = spare.min_element(); e >= 0; e = spare.next_element(e + 1)) {
      Set probe = ext;
      probe.insert(e);
      if (state.matroids[broken]->is_independent(probe)) {
        ext = probe;
      } else if (skipped < 0) {
        skipped = e;
      } else {
        throw InvalidInputError("invariant broken beyond a single move");
      }
    }
    if (skipped < 0) throw InternalError("dependent hull admits a full extension");
    for (int l = 0; l < d; ++l) {
      if (l == broken || !parts[l].contains(skipped)) continue;
      if (!state.is_legal(skipped, l + 1)) continue;
      return {skipped, l + 1};
    }
    throw InvalidInputError("no admissible repair color; the game state is corrupt");
  }

  for (int e = 0; e < n; ++e) {
    if (state.colored[e] != 0) continue;
    for (int i = 0; i < d; ++i)
      if (parts[i].contains(e) && state.is_legal(e, i + 1)) return {e, i + 1};
  }
  throw InvalidInputError(state.all_colored() ? "the game is over"
                                              : "no covering color fits; the state is corrupt");
}

using AliceStrategy1 = std::function<std::pair<int, int>(const BasicGameState<1>&)>;

namespace detail {

template <int Words>
std::string game_key(const BasicGameState<Words>& state, bool sort_classes) {
  std::vector<std::string> masks;
  for (int c = 1; c <= state.colors(); ++c) {
    auto cls = state.color_class(c);
    std::string m;
    for (int wrd = 0; wrd < Words; ++wrd) {
      auto v = cls.word(wrd);
      for (int b = 0; b < 8; ++b) m.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
    masks.push_back(std::move(m));
  }
  if (sort_classes) std::sort(masks.begin(), masks.end());
  std::string key = state.turn == Player::kAlice ? "a" : "b";
  for (auto& m : masks) key += m;
  return key;
}

template <int Words>
bool alice_wins(BasicGameState<Words>& state,
                const std::function<std::pair<int, int>(const BasicGameState<Words>&)>& alice,
                bool sort_classes, std::map<std::string, bool>& memo) {
  const auto moves = state.legal_moves();
  if (moves.empty()) return state.all_colored();
  const std::string key = game_key(state, sort_classes);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  bool result;
  if (state.turn == Player::kAlice && alice) {
    auto [e, c] = alice(state);
    BasicGameState<Words> next = state;
    next.apply(e, c);
    result = alice_wins(next, alice, sort_classes, memo);
  } else if (state.turn == Player::kAlice) {
    result = false;
    for (const auto& [e, c] : moves) {
      BasicGameState<Words> next = state;
      next.apply(e, c);
      if (alice_wins(next, alice, sort_classes, memo)) {
        result = true;
        break;
      }
    }
  } else {
    result = true;
    for (const auto& [e, c] : moves) {
      BasicGameState<Words> next = state;
      next.apply(e, c);
      if (!alice_wins(next, alice, sort_classes, memo)) {
        result = false;
        break;
      }
    }
  }
  memo.emplace(key, result);
  return result;
}

}  // namespace detail

// Optimal-play winner with k colors. Without a fixed Alice strategy this is
// a full minimax (classes are interchangeable, so memo keys sort them);
// with one, only Bob branches.
template <int Words>
Player game_value(const BasicMatroidPtr<Words>& m, int k,
                  std::function<std::pair<int, int>(const BasicGameState<Words>&)> fixed_alice = {},
                  Player first = Player::kAlice) {
  const int n = m->ground_size();
  if (fixed_alice) {
    if (n > 12) throw CapExceededError("strategy-vs-search needs at most 12 elements");
  } else if (n > 8 || k > 4) {
    throw CapExceededError("full minimax needs at most 8 elements and 4 colors");
  }
  auto state = BasicGameState<Words>::with_colors(m, k);
  state.turn = first;
  std::map<std::string, bool> memo;
  return detail::alice_wins(state, fixed_alice, !fixed_alice, memo) ? Player::kAlice
                                                                    : Player::kBob;
}

// Transversal matroid on C plus 3k(2k-1) blocks of size k whose family is
// the blocks together with 2k-1 copies of everything. Its chromatic number
// is k, yet 2k-2 colors lose the coloring game.
template <int Words>
struct BasicMkInstance {
  using Set = BasicElementSet<Words>;

  int k = 0;
  BasicMatroidPtr<Words> matroid;
  Set c_part;
  std::vector<Set> d_blocks;

  int block_of(int e) const {
    const int c_size = k * (2 * k - 1);
    if (e < c_size) return -1;
    return (e - c_size) / k;
  }

  // V_i = the i-th row of C plus the i-th element of every block.
  std::vector<Set> independent_partition() const {
    const int n = matroid->ground_size(), c_size = k * (2 * k - 1);
    std::vector<Set> parts(k, Set(n));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < 2 * k - 1; ++j) parts[i].insert(i * (2 * k - 1) + j);
      for (std::size_t b = 0; b < d_blocks.size(); ++b)
        parts[i].insert(c_size + static_cast<int>(b) * k + i);
    }
    return parts;
  }
};

template <int Words>
BasicMkInstance<Words> construct_mk(int k) {
  using Set = BasicElementSet<Words>;
  if (k < 3) throw InvalidInputError("the lower-bound family needs k >= 3");
  const long long c_size = static_cast<long long>(k) * (2 * k - 1);
  const long long blocks = 3 * c_size;
  const long long n = c_size + blocks * k;
  if (n > Set::kCapacity)
    throw CapExceededError("ground set of " + std::to_string(n) + " elements over capacity");

  BasicMkInstance<Words> out;
  out.k = k;
  out.c_part = Set(static_cast<int>(n));
  for (int e = 0; e < c_size; ++e) out.c_part.insert(e);
  std::vector<Set> family;
  for (int b = 0; b < blocks; ++b) {
    Set block(static_cast<int>(n));
    for (int i = 0; i < k; ++i) block.insert(static_cast<int>(c_size) + b * k + i);
    out.d_blocks.push_back(block);
    family.push_back(block);
  }
  Set everything = Set(static_cast<int>(n)).complement();
  for (int copy = 0; copy < 2 * k - 1; ++copy) family.push_back(everything);
  out.matroid = std::make_shared<BasicTransversalMatroid<Words>>(static_cast<int>(n),
                                                                 std::move(family));
  return out;
}

// Bob's mimic strategy on the lower-bound family with colors 1..h. Color i
// owns blocks i, i+h, i+2h; when Alice touches C or an owned triple, Bob
// colors inside the triple with its color, keeping the number of touched
// blocks low. Everything else falls back to the least safe move.
template <int Words>
std::pair<int, int> bob_mk_move(const BasicGameState<Words>& state,
                                const BasicMkInstance<Words>& mk) {
  const int h = state.colors();
  if (h > 2 * mk.k - 2)
    throw InvalidInputError("the mimic strategy expects at most 2k-2 colors");

  auto group_blocks = [&](int color) {
    std::vector<int> out;
    for (int rep = 0; rep < 3; ++rep) {
      int b = (color - 1) + rep * h;
      if (b < static_cast<int>(mk.d_blocks.size())) out.push_back(b);
    }
    return out;
  };

  // prefers blocks already touched by the color, then the least element
  auto group_move = [&](int color) -> std::optional<std::pair<int, int>> {
    auto cls = state.color_class(color);
    int best = -1;
    bool best_touched = false;
    for (int b : group_blocks(color)) {
      const auto& block = mk.d_blocks[b];
      const bool touched = block.intersects(cls);
      for (int e = block.min_element(); e >= 0; e = block.next_element(e + 1)) {
        if (!state.is_legal(e, color)) continue;
        if (best < 0 || (touched && !best_touched) || (touched == best_touched && e < best)) {
          best = e;
          best_touched = touched;
        }
        break;  // elements of a block ascend, the first legal one is least
      }
    }
    if (best < 0) return std::nullopt;
    return std::make_pair(best, color);
  };

  if (state.last_move) {
    const auto [e, color] = *state.last_move;
    int target = 0;
    if (mk.c_part.contains(e)) {
      target = color;
    } else {
      const int b = mk.block_of(e);
      if (b >= 0 && b < 3 * h) target = b % h + 1;
    }
    if (target >= 1)
      if (auto mv = group_move(target)) return *mv;
  }
  for (int color = 1; color <= h; ++color)
    if (auto mv = group_move(color)) return *mv;
  for (int e = 0; e < state.ground_size(); ++e)
    for (int c = 1; c <= h; ++c)
      if (state.is_legal(e, c)) return {e, c};
  throw InvalidInputError("no legal move remains; the game is over");
}

// On-line list coloring: Bob reveals one color per round, Alice commits an
// independent subset of it. The witness classes form a coloring of the
// remaining weights from the canonical lists of the remaining sizes.
template <int Words = 1>
struct BasicOnlineState {
  using Set = BasicElementSet<Words>;

  BasicMatroidPtr<Words> matroid;
  std::vector<int> remaining_w, remaining_ell;
  std::vector<Set> classes;                    // index = color, entry 0 unused
  std::vector<std::set<int>> lists_revealed;   // per element, round colors
  int rounds_played = 0;

  BasicOnlineState(const BasicMatroidPtr<Words>& m, std::vector<int> w, std::vector<int> ell)
      : matroid(m), remaining_w(std::move(w)), remaining_ell(std::move(ell)) {
    const int n = m->ground_size();
    if (static_cast<int>(remaining_w.size()) != n || static_cast<int>(remaining_ell.size()) != n)
      throw InvalidInputError("weight and list size vectors must cover the ground set");
    int top = 0;
    for (int e = 0; e < n; ++e) {
      if (remaining_w[e] < 0 || remaining_ell[e] < 0)
        throw InvalidInputError("weights and list sizes must be nonnegative");
      top = std::max(top, remaining_ell[e]);
    }
    lists_revealed.assign(n, {});

    std::vector<std::vector<int>> lists(n);
    for (int e = 0; e < n; ++e)
      for (int c = 1; c <= remaining_ell[e]; ++c) lists[e].push_back(c);
    auto outcome = color_from_lists<Words>(matroid, lists, remaining_w);
    if (!outcome.ok)
      throw InvalidInputError("the instance is not colorable from its canonical lists");

    classes.assign(top + 1, Set(n));
    for (const auto& [color, cls] : outcome.coloring.classes) classes[color] = classes[color] | cls;
    trim_to_exact();
    check();
  }

  int ground_size() const { return matroid->ground_size(); }

  // drops surplus memberships from the top classes down
  void trim_to_exact() {
    const int n = ground_size();
    for (int e = 0; e < n; ++e) {
      int have = 0;
      for (std::size_t c = 1; c < classes.size(); ++c)
        if (classes[c].contains(e)) ++have;
      for (std::size_t c = classes.size(); c-- > 1 && have > remaining_w[e];)
        if (classes[c].contains(e)) {
          classes[c].erase(e);
          --have;
        }
    }
  }

  void check() const {
    const int n = ground_size();
    std::vector<int> have(n, 0);
    for (std::size_t c = 1; c < classes.size(); ++c) {
      if (!matroid->is_independent(classes[c])) throw InternalError("witness class went dependent");
      for (int e = classes[c].min_element(); e >= 0; e = classes[c].next_element(e + 1)) {
        if (static_cast<int>(c) > remaining_ell[e])
          throw InternalError("witness class exceeds a list size");
        ++have[e];
      }
    }
    for (int e = 0; e < n; ++e)
      if (have[e] != remaining_w[e]) throw InternalError("witness classes miss a weight");
  }
};

namespace detail {

// Least Y making both exchange sides independent. Elements sitting in both
// classes are pinned: the moved ones must re-enter through Y, the resting
// ones must stay out of it, or a membership would be lost.
template <int Words>
BasicElementSet<Words> chain_exchange(const BasicMatroid<Words>& m,
                                      const BasicElementSet<Words>& from,
                                      const BasicElementSet<Words>& into,
                                      const BasicElementSet<Words>& moved) {
  using Set = BasicElementSet<Words>;
  const Set forced = moved & into;
  const auto free = (into - from).elements();
  if (free.size() > 20) throw CapExceededError("exchange scan over 2^20 subsets");
  const Set base = from - moved;
  for (std::size_t size = 0; size <= free.size(); ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      Set y = forced;
      for (int t : pick) y.insert(free[t]);
      if (m.is_independent(base | y) && m.is_independent((into - y) | moved)) return y;
      if (size == 0) break;
      int at = static_cast<int>(size) - 1;
      while (at >= 0 &&
             pick[at] == static_cast<int>(free.size()) - 1 - (static_cast<int>(size) - 1 - at))
        --at;
      if (at < 0) break;
      ++pick[at];
      for (std::size_t j = at + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InternalError("no exchange completes the chain");
}

}  // namespace detail

// Alice's reply to a revealed set: walk the revealed elements up through the
// witness classes by exchanges, color what surfaces at the top, and keep the
// rest as the witness for the shrunken instance.
template <int Words>
BasicElementSet<Words> online_alice_respond(BasicOnlineState<Words>& state,
                                            const BasicElementSet<Words>& bob_set) {
  using Set = BasicElementSet<Words>;
  const int n = state.ground_size();
  if (bob_set.universe() != n) throw UniverseMismatchError("revealed set universe mismatch");
  if (bob_set.empty()) throw InvalidInputError("the revealed set must be nonempty");
  for (int e = bob_set.min_element(); e >= 0; e = bob_set.next_element(e + 1))
    if (state.remaining_ell[e] < 1)
      throw InvalidInputError("element " + std::to_string(e) + " has a full list already");

  int top = 0;
  for (int e = 0; e < n; ++e) top = std::max(top, state.remaining_ell[e]);

  Set cur = state.classes[1];
  Set migrants = bob_set & cur;
  for (int i = 1; i < top; ++i) {
    const Set next = state.classes[i + 1];
    const Set y = detail::chain_exchange(*state.matroid, cur, next, migrants);
    state.classes[i] = (cur - migrants) | y;
    cur = (next - y) | migrants;
    migrants = bob_set & cur;
  }
  const Set colored = migrants;
  state.classes[top] = cur - colored;

  for (int e = bob_set.min_element(); e >= 0; e = bob_set.next_element(e + 1)) {
    --state.remaining_ell[e];
    state.lists_revealed[e].insert(state.rounds_played + 1);
  }
  for (int e = colored.min_element(); e >= 0; e = colored.next_element(e + 1)) {
    if (state.remaining_w[e] < 1) throw InternalError("colored an element of weight zero");
    --state.remaining_w[e];
  }
  ++state.rounds_played;
  state.check();
  return colored;
}

// Indicated coloring: Alice only points, Bob colors. She dives into a
// minimal subset whose contracted ranks sum exactly to its size; inside such
// a set every element must be colored before the outside can afford it.
template <int Words = 1>
class BasicIndicatedAlice {
 public:
  using Set = BasicElementSet<Words>;

  BasicIndicatedAlice(std::vector<BasicMatroidPtr<Words>> matroids,
                      const BasicWCovering<Words>& partition, std::size_t cap = kDefaultMaxEnum)
      : matroids_(std::move(matroids)), cap_(cap) {
    if (matroids_.empty()) throw InvalidInputError("the game needs at least one color");
    const int n = matroids_.front()->ground_size();
    for (const auto& m : matroids_)
      if (m->ground_size() != n)
        throw UniverseMismatchError("game matroids live on different ground sets");
    const auto parts = detail::covering_classes(partition, static_cast<int>(matroids_.size()), n);
    std::vector<int> depth(n, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!matroids_[i]->is_independent(parts[i]))
        throw InvalidInputError("partition class " + std::to_string(i + 1) + " is dependent");
      for (int e = parts[i].min_element(); e >= 0; e = parts[i].next_element(e + 1)) ++depth[e];
    }
    for (int e = 0; e < n; ++e)
      if (depth[e] != 1) throw InvalidInputError("classes must partition the ground set");
    colored_.assign(n, 0);
    classes_.assign(matroids_.size() + 1, Set(n));
    focus_.push_back(Set(n).complement());
  }

  bool done() const {
    return std::all_of(colored_.begin(), colored_.end(), [](int c) { return c != 0; });
  }

  int next_indication() {
    if (done()) throw InvalidInputError("everything is already colored");
    Set region = live_region();
    for (;;) {
      if (region.size() == 1) break;
      auto tight = minimal_tight_subset(region);
      if (!tight) break;
      focus_.push_back(*tight);
      region = *tight;
    }
    indicated_ = region.min_element();
    return indicated_;
  }

  void on_bob_color(int e, int c) {
    if (e != indicated_) throw InvalidInputError("Bob colored an element nobody indicated");
    if (c < 1 || c > static_cast<int>(matroids_.size()))
      throw InvalidInputError("color " + std::to_string(c) + " is not in the game");
    if (colored_[e] != 0) throw InvalidInputError("element is already colored");
    Set probe = classes_[c];
    probe.insert(e);
    if (!matroids_[c - 1]->is_independent(probe))
      throw InvalidInputError("Bob's color makes a class dependent");
    classes_[c] = probe;
    colored_[e] = c;
    indicated_ = -1;
  }

 private:
  Set live_region() {
    Set done_set(static_cast<int>(colored_.size()));
    for (std::size_t e = 0; e < colored_.size(); ++e)
      if (colored_[e] != 0) done_set.insert(static_cast<int>(e));
    while (focus_.size() > 1 && (focus_.back() - done_set).empty()) focus_.pop_back();
    return focus_.back() - done_set;
  }

  long long contracted_rank(std::size_t i, const Set& a) const {
    return matroids_[i]->rank(a | classes_[i + 1]) - matroids_[i]->rank(classes_[i + 1]);
  }

  // least proper nonempty subset (by size, then lexicographically) whose
  // contracted ranks sum to its cardinality
  std::optional<Set> minimal_tight_subset(const Set& region) const {
    const auto elems = region.elements();
    const int r = static_cast<int>(elems.size());
    if (r > 25 || (1u << r) > cap_) throw CapExceededError("tight-set scan over the cap");
    for (int size = 1; size < r; ++size) {
      std::vector<int> pick(size);
      std::iota(pick.begin(), pick.end(), 0);
      for (;;) {
        Set a(region.universe());
        for (int t : pick) a.insert(elems[t]);
        long long total = 0;
        for (std::size_t i = 0; i < matroids_.size(); ++i) total += contracted_rank(i, a);
        if (total == size) return a;
        int at = size - 1;
        while (at >= 0 && pick[at] == r - 1 - (size - 1 - at)) --at;
        if (at < 0) break;
        ++pick[at];
        for (int j = at + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return std::nullopt;
  }

  std::vector<BasicMatroidPtr<Words>> matroids_;
  std::size_t cap_;
  std::vector<int> colored_;
  std::vector<Set> classes_;  // per color, 1-based
  std::vector<Set> focus_;
  int indicated_ = -1;
};

template <int Words>
BasicIndicatedAlice<Words> indicated_alice(std::vector<BasicMatroidPtr<Words>> matroids,
                                           const BasicWCovering<Words>& partition,
                                           std::size_t cap = kDefaultMaxEnum) {
  return BasicIndicatedAlice<Words>(std::move(matroids), partition, cap);
}

using GameState = BasicGameState<1>;
using MkInstance = BasicMkInstance<3>;
using OnlineState = BasicOnlineState<1>;
using IndicatedAlice = BasicIndicatedAlice<1>;

}  // namespace matroidlab

#endif
