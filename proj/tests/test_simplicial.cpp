#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <memory>
#include <vector>

#include "matroidlab/matroidlab.hpp"
#include "support/corpus.hpp"
#include "support/extremal_enum.hpp"

using namespace matroidlab;
using testsupport::corpus_up_to;

namespace {

ElementSet vs(std::initializer_list<int> elems) { return ElementSet::of(64, elems); }

// All k-subsets of {1..m} in squashed order, straight from the comparator.
std::vector<ElementSet> sorted_layer(int k, int m) {
  ElementSet verts(64);
  for (int v = 1; v <= m; ++v) verts.insert(v);
  std::vector<ElementSet> layer;
  for_each_combination(verts, k, [&](const ElementSet& s) {
    layer.push_back(s);
    return true;
  });
  std::sort(layer.begin(), layer.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.colex_less(b); });
  return layer;
}

}  // namespace

TEST_CASE("squashed prefixes match the comparator ordering") {
  auto s24 = squashed_prefix<1>(2, 4);
  REQUIRE(s24.size() == 4);
  CHECK(s24[0] == vs({1, 2}));
  CHECK(s24[1] == vs({1, 3}));
  CHECK(s24[2] == vs({2, 3}));
  CHECK(s24[3] == vs({1, 4}));

  auto s13 = squashed_prefix<1>(1, 3);
  REQUIRE(s13.size() == 3);
  CHECK(s13[0] == vs({1}));
  CHECK(s13[1] == vs({2}));
  CHECK(s13[2] == vs({3}));

  auto s35 = squashed_prefix<1>(3, 5);
  REQUIRE(s35.size() == 5);
  CHECK(s35[0] == vs({1, 2, 3}));
  CHECK(s35[1] == vs({1, 2, 4}));
  CHECK(s35[2] == vs({1, 3, 4}));
  CHECK(s35[3] == vs({2, 3, 4}));
  CHECK(s35[4] == vs({1, 2, 5}));

  for (int k = 1; k <= 3; ++k) {
    auto layer = sorted_layer(k, 8);
    auto prefix = squashed_prefix<1>(k, static_cast<long long>(layer.size()));
    CHECK(prefix == layer);
  }
}

TEST_CASE("avoiding prefixes skip one element and keep the order") {
  auto avoid2 = squashed_prefix_avoiding<1>(2, 4, 2);
  REQUIRE(avoid2.size() == 4);
  for (const auto& s : avoid2) CHECK(!s.contains(2));
  // Filtering the plain order by "no 2" must give the same list.
  std::vector<ElementSet> expect;
  for (const auto& s : sorted_layer(2, 9)) {
    if (!s.contains(2) && expect.size() < 4) expect.push_back(s);
  }
  CHECK(avoid2 == expect);
  CHECK_THROWS_AS(squashed_prefix_avoiding<1>(2, 3, 0), InvalidInputError);
}

TEST_CASE("cascade representations of the worked examples") {
  auto c42 = cascade(4, 2);
  CHECK(c42.k == 2);
  CHECK(c42.terms == std::vector<long long>{3, 1});
  CHECK(c42.value() == 4);
  CHECK(delta(4, 2) == 4);

  auto c53 = cascade(5, 3);
  CHECK(c53.terms == std::vector<long long>{4, 2});
  CHECK(delta(5, 3) == 8);

  auto c103 = cascade(10, 3);
  CHECK(c103.terms == std::vector<long long>{5});
  CHECK(delta(10, 3) == 10);

  CHECK(delta(0, 3) == 0);
  CHECK_THROWS_AS(cascade(0, 2), InvalidInputError);
  CHECK_THROWS_AS(cascade(4, 0), InvalidInputError);
}

TEST_CASE("cascade reconstructs every input") {
  for (int k = 1; k <= 6; ++k) {
    for (long long n = 1; n <= 10000; ++n) {
      auto rep = cascade(n, k);
      REQUIRE(rep.value() == n);
      REQUIRE(!rep.terms.empty());
      for (std::size_t i = 1; i < rep.terms.size(); ++i)
        REQUIRE(rep.terms[i - 1] > rep.terms[i]);
      // The lowest index j satisfies a_j >= j; indices run k down to t.
      const int t = rep.k - static_cast<int>(rep.terms.size()) + 1;
      REQUIRE(t >= 1);
      REQUIRE(rep.terms.back() >= t);
    }
  }
}

TEST_CASE("shadow expands a family one level down") {
  auto s24 = squashed_prefix<1>(2, 4);
  auto sh = shadow(s24);
  REQUIRE(sh.size() == 4);
  CHECK(sh[0] == vs({1}));
  CHECK(sh[1] == vs({2}));
  CHECK(sh[2] == vs({3}));
  CHECK(sh[3] == vs({4}));

  auto single = shadow(std::vector<ElementSet>{vs({2, 5, 7})});
  REQUIRE(single.size() == 3);

  auto disjoint = shadow(std::vector<ElementSet>{vs({1, 2}), vs({3, 4})});
  CHECK(disjoint.size() == 4);

  CHECK_THROWS_AS(shadow(std::vector<ElementSet>{vs({1, 2}), vs({3})}), InvalidInputError);
}

TEST_CASE("shadow of a squashed prefix is the squashed prefix of delta size") {
  for (int k = 2; k <= 4; ++k) {
    const long long top = k == 4 ? 60 : 40;
    for (long long n = 1; n <= top; ++n) {
      auto prefix = squashed_prefix<1>(k, n);
      auto sh = shadow(prefix);
      REQUIRE(static_cast<long long>(sh.size()) == delta(n, k));
      REQUIRE(sh == squashed_prefix<1>(k - 1, delta(n, k)));
    }
  }
}

TEST_CASE("every small family obeys the shadow lower bound") {
  auto layer = sorted_layer(2, 5);
  const std::uint32_t total = std::uint32_t{1} << layer.size();
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    std::vector<ElementSet> family;
    for (std::size_t i = 0; i < layer.size(); ++i)
      if (mask >> i & 1) family.push_back(layer[i]);
    REQUIRE(static_cast<long long>(shadow(family).size()) >=
            delta(static_cast<long long>(family.size()), 2));
  }
}

TEST_CASE("f vector validity follows the cascade bound") {
  CHECK(is_valid_fvector({4, 4}));
  CHECK(!is_valid_fvector({3, 4}));
  CHECK(is_valid_fvector({7}));
  CHECK(is_valid_fvector({}));
  CHECK(!is_valid_fvector({4, -1}));
  CHECK(is_valid_fvector({4, 6, 4, 1}));   // full simplex on 4 vertices
  CHECK(!is_valid_fvector({4, 6, 5}));     // too many triangles for 6 edges
}

TEST_CASE("complex construction prunes to maximal faces") {
  Complex c(5, {vs({1, 2}), vs({1, 2, 3}), vs({1, 2, 3}), vs({4})});
  REQUIRE(c.facets().size() == 2);
  CHECK(c.facets()[0] == ElementSet::of(5, {4}));
  CHECK(c.facets()[1] == ElementSet::of(5, {1, 2, 3}));
  CHECK(c.dimension() == 2);
  CHECK(!c.is_pure());
  CHECK(c.contains(ElementSet::of(5, {2, 3})));
  CHECK(!c.contains(ElementSet::of(5, {1, 4})));
  CHECK(c.vertex_support() == ElementSet::of(5, {1, 2, 3, 4}));

  CHECK_THROWS_AS(Complex(5, {vs({0, 1})}), InvalidInputError);

  Complex empty(3);
  CHECK(empty.dimension() == -1);
  CHECK(empty.is_pure());
  CHECK(empty.f_vector().empty());
}

TEST_CASE("links and deletions strip a vertex") {
  Complex c(5, {vs({1, 2, 3}), vs({2, 3, 4})});
  auto lk = c.link(4);
  REQUIRE(lk.facets().size() == 1);
  CHECK(lk.facets()[0] == ElementSet::of(5, {2, 3}));
  auto del = c.deletion(4);
  REQUIRE(del.facets().size() == 1);
  CHECK(del.facets()[0] == ElementSet::of(5, {1, 2, 3}));
  auto del1 = c.deletion(1);
  REQUIRE(del1.facets().size() == 1);
  CHECK(del1.facets()[0] == ElementSet::of(5, {2, 3, 4}));
  CHECK_THROWS_AS(c.link(5), InvalidInputError);

  auto f = c.f_vector();
  REQUIRE(f.size() == 3);
  CHECK(f[0] == 4);
  CHECK(f[1] == 5);
  CHECK(f[2] == 2);
  CHECK(is_valid_fvector(f));
}

TEST_CASE("extremal complexes have the smallest possible shadow") {
  Complex squashed(5, squashed_prefix<1>(2, 4));
  CHECK(is_extremal(squashed));
  CHECK(squashed.f_vector() == std::vector<long long>{4, 4});

  Complex disjoint(5, {vs({1, 2}), vs({3, 4})});
  CHECK(!is_extremal(disjoint));

  auto sum = std::make_shared<BasicDirectSumMatroid<1>>(std::vector<MatroidPtr>{
      std::make_shared<UniformMatroid>(1, 1), std::make_shared<UniformMatroid>(3, 1)});
  CHECK(!is_extremal(independence_complex(*sum)));

  // The 3-vertex path meets the bound; one more vertex breaks it.
  CHECK(is_extremal(Complex(4, {vs({1, 2}), vs({2, 3})})));
  CHECK(!is_extremal(Complex(5, {vs({1, 2}), vs({2, 3}), vs({3, 4})})));

  CHECK_THROWS_AS(is_extremal(Complex(5, {vs({1}), vs({2, 3})})), InvalidInputError);

  Complex point(2, {vs({1})});
  CHECK(is_extremal(point));
}

TEST_CASE("vertex decomposability of the touchstone complexes") {
  Complex point(2, {vs({1})});
  CHECK(is_vertex_decomposable(point).ok);

  Complex disjoint(5, {vs({1, 2}), vs({3, 4})});
  CHECK(!is_vertex_decomposable(disjoint).ok);

  Complex nonpure(5, {vs({1}), vs({2, 3})});
  CHECK_THROWS_AS(is_vertex_decomposable(nonpure), InvalidInputError);

  Complex wide(30, {vs({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17})});
  CHECK_THROWS_AS(is_vertex_decomposable(wide), CapExceededError);
}

TEST_CASE("matroid independence complexes decompose") {
  for (const auto& entry : corpus_up_to(7)) {
    CAPTURE(entry.name);
    auto cx = independence_complex(*entry.matroid);
    REQUIRE(cx.is_pure());
    auto vd = is_vertex_decomposable(cx);
    REQUIRE(vd.ok);
    // Replay the shedding chain against the definition.
    Complex cur = cx;
    for (int v : vd.shedding) {
      auto lk = cur.link(v);
      REQUIRE(lk.is_pure());
      REQUIRE(is_vertex_decomposable(lk).ok);
      cur = cur.deletion(v);
      REQUIRE(cur.is_pure());
    }
    REQUIRE(cur.facets().size() == 1);
    REQUIRE(cur.facets().front().size() <= 1);
  }
}

TEST_CASE("shedding vertices of extremal complexes") {
  Complex layer(5, sorted_layer(2, 4));
  CHECK(extremal_shedding_vertex(layer) == 1);

  Complex squashed(5, squashed_prefix<1>(2, 4));
  int v = extremal_shedding_vertex(squashed);
  CHECK(is_extremal(squashed.link(v)));
  CHECK(is_extremal(squashed.deletion(v)));

  Complex disjoint(5, {vs({1, 2}), vs({3, 4})});
  CHECK_THROWS_AS(extremal_shedding_vertex(disjoint), InvalidInputError);
  Complex point(2, {vs({1})});
  CHECK_THROWS_AS(extremal_shedding_vertex(point), InvalidInputError);
}

TEST_CASE("independence complex lists the bases one based") {
  auto cx = independence_complex(UniformMatroid(4, 2));
  CHECK(cx.universe() == 5);
  CHECK(cx.dimension() == 1);
  CHECK(cx.facets().size() == 6);
  CHECK(cx.facets().front() == ElementSet::of(5, {1, 2}));
}

TEST_CASE("small extremal families are all vertex decomposable") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      auto families = testsupport::enumerate_extremal(n, k);
      for (const auto& fam : families) {
        auto cx = testsupport::family_to_complex(n, fam);
        REQUIRE(is_extremal(cx));
        REQUIRE(is_vertex_decomposable(cx).ok);
      }
    }
  }
}
