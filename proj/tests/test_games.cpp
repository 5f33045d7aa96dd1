#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "matroidlab/matroidlab.hpp"
#include "support/corpus.hpp"

using namespace matroidlab;
using testsupport::corpus_up_to;

namespace {

MatroidPtr u24() { return std::make_shared<UniformMatroid>(4, 2); }

// Covering used throughout: each element twice across k classes, class i
// independent in color i's matroid.
WCovering double_covering(const MatroidPtr& m, int k) {
  auto cert = matroid_union(std::vector<MatroidPtr>(static_cast<std::size_t>(k), m),
                            std::vector<int>(m->ground_size(), 2));
  REQUIRE(cert.ok);
  return cert.covering;
}

std::vector<ElementSet> parts_of(const WCovering& covering, int k, int n) {
  std::vector<ElementSet> parts(static_cast<std::size_t>(k), ElementSet(n));
  for (const auto& [idx, cls] : covering.classes) parts[static_cast<std::size_t>(idx)] = cls;
  return parts;
}

// The invariant Alice's strategy maintains: every color class extended by the
// unused part of its covering class stays independent.
bool club_invariant(const GameState& state, const std::vector<ElementSet>& parts) {
  const ElementSet done = state.colored_set();
  for (int i = 0; i < state.colors(); ++i) {
    ElementSet hull = state.color_class(i + 1) | (parts[static_cast<std::size_t>(i)] - done);
    if (!state.matroids[static_cast<std::size_t>(i)]->is_independent(hull)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("game state mechanics") {
  auto state = GameState::with_colors(u24(), 2);
  CHECK(state.ground_size() == 4);
  CHECK(state.colors() == 2);
  CHECK(state.turn == Player::kAlice);
  CHECK(!state.last_move.has_value());
  CHECK(state.legal_moves().size() == 8);

  state.apply(0, 1);
  CHECK(state.turn == Player::kBob);
  CHECK(state.last_move == std::make_pair(0, 1));
  CHECK(state.colored[0] == 1);
  CHECK(state.color_class(1) == ElementSet::of(4, {0}));
  CHECK(state.colored_set() == ElementSet::of(4, {0}));

  state.apply(1, 1);
  // Color 1 now holds a basis; element 2 can only take color 2.
  CHECK(!state.is_legal(2, 1));
  CHECK(state.is_legal(2, 2));
  CHECK_THROWS_AS(state.apply(0, 2), InvalidInputError);
  CHECK_THROWS_AS(state.apply(2, 1), InvalidInputError);
  CHECK_THROWS_AS(state.apply(2, 3), InvalidInputError);

  state.apply(2, 2);
  state.apply(3, 2);
  CHECK(state.all_colored());
  CHECK(state.finished());

  CHECK_THROWS_AS(GameState::with_colors(u24(), 0), InvalidInputError);
}

TEST_CASE("parallel pair endgame leaves one forced reply") {
  auto u12 = std::make_shared<UniformMatroid>(2, 1);
  auto state = GameState::with_colors(u12, 2);
  state.turn = Player::kBob;
  state.apply(0, 1);
  auto moves = state.legal_moves();
  REQUIRE(moves.size() == 1);
  CHECK(moves[0] == std::make_pair(1, 2));
  state.apply(1, 2);
  CHECK(state.all_colored());
}

TEST_CASE("alice opens on the least covered element") {
  auto m = u24();
  auto covering = double_covering(m, 4);
  auto state = GameState::with_colors(m, 4);
  auto [e, c] = alice_game_move(state, covering);
  CHECK(e == 0);
  auto parts = parts_of(covering, 4, 4);
  CHECK(parts[static_cast<std::size_t>(c - 1)].contains(0));
}

TEST_CASE("alice move validates the covering") {
  auto m = u24();
  auto state = GameState::with_colors(m, 2);
  WCovering thin;
  thin.classes = {{0, ElementSet::of(4, {0, 1})}, {1, ElementSet::of(4, {0, 1})}};
  CHECK_THROWS_AS(alice_game_move(state, thin), InvalidInputError);

  WCovering dependent;
  dependent.classes = {{0, ElementSet::full(4)}, {1, ElementSet::full(4)}};
  CHECK_THROWS_AS(alice_game_move(state, dependent), InvalidInputError);
}

TEST_CASE("alice keeps her invariant against random bobs") {
  std::mt19937 rng(67310);
  for (const auto& entry : corpus_up_to(8)) {
    const auto& m = entry.matroid;
    const int n = m->ground_size();
    const int k = 2 * chromatic_number<1>(m);
    CAPTURE(entry.name);
    auto covering = double_covering(m, k);
    auto parts = parts_of(covering, k, n);
    for (int round = 0; round < 5; ++round) {
      auto state = GameState::with_colors(m, k);
      REQUIRE(club_invariant(state, parts));
      while (!state.finished()) {
        if (state.turn == Player::kAlice) {
          auto [e, c] = alice_game_move(state, covering);
          state.apply(e, c);
          REQUIRE(club_invariant(state, parts));
        } else {
          auto moves = state.legal_moves();
          std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
          auto [e, c] = moves[pick(rng)];
          state.apply(e, c);
        }
      }
      REQUIRE(state.all_colored());
    }
  }
}

TEST_CASE("game values of the tiny parallel classes") {
  CHECK(game_value<1>(std::make_shared<UniformMatroid>(2, 1), 2) == Player::kAlice);
  CHECK(game_value<1>(std::make_shared<UniformMatroid>(3, 1), 2) == Player::kBob);
  CHECK(game_value<1>(std::make_shared<UniformMatroid>(3, 1), 3) == Player::kAlice);
  CHECK_THROWS_AS(game_value<1>(std::make_shared<UniformMatroid>(9, 2), 2), CapExceededError);
  CHECK_THROWS_AS(game_value<1>(u24(), 5), CapExceededError);
}

TEST_CASE("game value never flips back as colors are added") {
  for (const auto& entry : corpus_up_to(5)) {
    CAPTURE(entry.name);
    bool alice_before = false;
    for (int k = 1; k <= 4; ++k) {
      bool alice_now = game_value<1>(entry.matroid, k) == Player::kAlice;
      if (alice_before) CHECK(alice_now);
      alice_before = alice_now;
    }
  }
}

TEST_CASE("doubled colors beat every bob on the small corpus") {
  for (const auto& entry : corpus_up_to(6)) {
    const auto& m = entry.matroid;
    const int k = 2 * chromatic_number<1>(m);
    CAPTURE(entry.name);
    auto covering = double_covering(m, k);
    AliceStrategy1 alice = [covering](const GameState& s) {
      return alice_game_move(s, covering);
    };
    CHECK(game_value<1>(m, k, alice) == Player::kAlice);
  }
}

TEST_CASE("the lower bound family at k equals three") {
  CHECK_THROWS_AS(construct_mk<3>(2), InvalidInputError);
  auto mk = construct_mk<3>(3);
  CHECK(mk.k == 3);
  CHECK(mk.matroid->ground_size() == 150);
  CHECK(mk.c_part.size() == 15);
  CHECK(mk.d_blocks.size() == 45);
  for (const auto& block : mk.d_blocks) CHECK(block.size() == 3);
  CHECK(mk.matroid->full_rank() == 50);
  CHECK(mk.matroid->rank(mk.c_part | mk.d_blocks[0]) == 6);

  // The explicit partition into three independent sets pins the chromatic
  // number: 150 elements over rank 50 need at least three classes.
  auto parts = mk.independent_partition();
  REQUIRE(parts.size() == 3);
  BasicElementSet<3> seen(150);
  for (const auto& p : parts) {
    CHECK(p.size() == 50);
    CHECK(mk.matroid->is_independent(p));
    CHECK(!seen.intersects(p));
    seen = seen | p;
  }
  CHECK(seen == BasicElementSet<3>::full(150));
}

TEST_CASE("block ownership lookup") {
  auto mk = construct_mk<3>(3);
  CHECK(mk.block_of(0) == -1);
  CHECK(mk.block_of(14) == -1);
  CHECK(mk.block_of(15) == 0);
  CHECK(mk.block_of(17) == 0);
  CHECK(mk.block_of(18) == 1);
  CHECK(mk.block_of(149) == 44);
}

TEST_CASE("bob's mimic play keeps the board uncolorable") {
  auto mk = construct_mk<3>(3);
  const int h = 4;

  auto play = [&](const std::function<std::pair<int, int>(const BasicGameState<3>&)>& alice) {
    auto state = BasicGameState<3>::with_colors(mk.matroid, h);
    while (!state.finished()) {
      if (state.turn == Player::kAlice) {
        auto [e, c] = alice(state);
        state.apply(e, c);
      } else {
        auto [e, c] = bob_mk_move(state, mk);
        state.apply(e, c);
      }
    }
    // Bob wins: something is left uncolored, and his mimicry never let any
    // color place more than k elements of C.
    CHECK(!state.all_colored());
    for (int c = 1; c <= h; ++c) CHECK((state.color_class(c) & mk.c_part).size() <= 3);
  };

  SUBCASE("greedy alice") {
    play([](const BasicGameState<3>& s) {
      for (int e = 0; e < s.ground_size(); ++e)
        for (int c = 1; c <= s.colors(); ++c)
          if (s.is_legal(e, c)) return std::make_pair(e, c);
      throw InternalError("no legal move for alice");
    });
  }

  SUBCASE("seeded random alices") {
    std::mt19937 rng(90125);
    for (int round = 0; round < 10; ++round) {
      play([&rng](const BasicGameState<3>& s) {
        auto moves = s.legal_moves();
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        return moves[pick(rng)];
      });
    }
  }
}

TEST_CASE("online alice colors a basis when everything is revealed") {
  OnlineState state(u24(), {1, 1, 1, 1}, {2, 2, 2, 2});
  ElementSet first = online_alice_respond(state, ElementSet::full(4));
  CHECK(first.size() == 2);
  CHECK(state.matroid->is_independent(first));
  ElementSet second = online_alice_respond(state, ElementSet::full(4));
  CHECK(second == first.complement());
  CHECK(state.remaining_w == std::vector<int>(4, 0));
  CHECK(state.remaining_ell == std::vector<int>(4, 0));
  CHECK(state.rounds_played == 2);
  for (int e = 0; e < 4; ++e) CHECK(state.lists_revealed[e].size() == 2);
}

TEST_CASE("online state rejects bad instances and bad reveals") {
  CHECK_THROWS_AS(OnlineState(u24(), {1, 1, 1, 1}, {1, 1, 1, 1}), InvalidInputError);
  CHECK_THROWS_AS(OnlineState(u24(), {1, 1}, {2, 2, 2, 2}), InvalidInputError);

  OnlineState state(u24(), {1, 1, 1, 1}, {2, 2, 2, 2});
  CHECK_THROWS_AS(online_alice_respond(state, ElementSet(4)), InvalidInputError);
  online_alice_respond(state, ElementSet::of(4, {0}));
  online_alice_respond(state, ElementSet::of(4, {0}));
  // Element 0 has no list slots left.
  CHECK_THROWS_AS(online_alice_respond(state, ElementSet::of(4, {0, 1})), InvalidInputError);
}

TEST_CASE("online alice survives every reveal sequence on tiny matroids") {
  for (const auto& entry : corpus_up_to(4)) {
    const auto& m = entry.matroid;
    const int n = m->ground_size();
    const int chi = chromatic_number<1>(m);
    CAPTURE(entry.name);

    OnlineState start(m, std::vector<int>(n, 1), std::vector<int>(n, chi));
    std::set<std::string> visited;
    std::vector<OnlineState> stack{start};
    auto key_of = [](const OnlineState& s) {
      std::string key;
      for (int v : s.remaining_w) key += static_cast<char>('0' + v);
      key += '|';
      for (int v : s.remaining_ell) key += static_cast<char>('0' + v);
      key += '|';
      for (std::size_t c = 1; c < s.classes.size(); ++c) {
        key += std::to_string(s.classes[c].word(0));
        key += ',';
      }
      return key;
    };
    visited.insert(key_of(start));
    while (!stack.empty()) {
      OnlineState cur = stack.back();
      stack.pop_back();
      ElementSet live(n);
      for (int e = 0; e < n; ++e)
        if (cur.remaining_ell[e] > 0) live.insert(e);
      if (live.empty()) {
        // Lists exhausted: alice must have placed every weight.
        REQUIRE(cur.remaining_w == std::vector<int>(n, 0));
        continue;
      }
      for_each_subset(live, [&](const ElementSet& reveal) {
        if (reveal.empty()) return true;
        OnlineState next = cur;
        ElementSet colored = online_alice_respond(next, reveal);
        REQUIRE(colored.subset_of(reveal));
        REQUIRE(m->is_independent(colored));
        if (visited.insert(key_of(next)).second) stack.push_back(next);
        return true;
      });
    }
  }
}

TEST_CASE("indicated alice runs a single element game") {
  auto u11 = std::make_shared<UniformMatroid>(1, 1);
  WCovering partition;
  partition.classes = {{0, ElementSet::full(1)}};
  auto alice = indicated_alice<1>({u11}, partition);
  CHECK(!alice.done());
  int e = alice.next_indication();
  CHECK(e == 0);
  CHECK_THROWS_AS(alice.on_bob_color(1, 1), InvalidInputError);
  alice.on_bob_color(0, 1);
  CHECK(alice.done());
}

TEST_CASE("indicated alice validates her inputs") {
  auto m = u24();
  WCovering twice;
  twice.classes = {{0, ElementSet::of(4, {0, 1})}, {1, ElementSet::of(4, {0, 1}) }};
  CHECK_THROWS_AS(indicated_alice<1>({m, m}, twice), InvalidInputError);

  WCovering dependent;
  dependent.classes = {{0, ElementSet::of(4, {0, 1, 2})}, {1, ElementSet::of(4, {3})}};
  CHECK_THROWS_AS(indicated_alice<1>({m, m}, dependent), InvalidInputError);
}

TEST_CASE("indicated alice defeats every bob coloring on small matroids") {
  for (const auto& entry : corpus_up_to(5)) {
    const auto& m = entry.matroid;
    const int n = m->ground_size();
    const int chi = chromatic_number<1>(m);
    CAPTURE(entry.name);
    auto cert = partition_into_independent<1>(m, chi);
    REQUIRE(cert.ok);
    std::vector<MatroidPtr> colors(static_cast<std::size_t>(chi), m);

    std::function<void(const IndicatedAlice&)> walk = [&](const IndicatedAlice& alice) {
      if (alice.done()) return;
      IndicatedAlice probe = alice;
      const int e = probe.next_indication();
      REQUIRE(e >= 0);
      REQUIRE(e < n);
      bool bob_could_move = false;
      for (int c = 1; c <= chi; ++c) {
        IndicatedAlice next = probe;
        try {
          next.on_bob_color(e, c);
        } catch (const InvalidInputError&) {
          continue;  // that color would break a class; bob cannot pick it
        }
        bob_could_move = true;
        walk(next);
      }
      // Alice's indication always leaves bob a proper reply.
      REQUIRE(bob_could_move);
    };
    walk(IndicatedAlice(colors, cert.covering));
  }
}
