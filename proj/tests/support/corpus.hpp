#ifndef MATROIDLAB_TESTS_SUPPORT_CORPUS_HPP
#define MATROIDLAB_TESTS_SUPPORT_CORPUS_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "matroidlab/matroidlab.hpp"

namespace matroidlab::testsupport {

struct CorpusEntry {
  std::string name;
  MatroidPtr matroid;
};

// Shared zoo of small matroids covering every backend and construction.
// Every entry is loop free so coloring routines apply across the board.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    using Edges = std::vector<std::pair<int, int>>;
    std::vector<CorpusEntry> out;
    const auto add = [&out](std::string name, MatroidPtr m) {
      out.push_back({std::move(name), std::move(m)});
    };
    const auto uni = [](int n, int r) { return std::make_shared<UniformMatroid>(n, r); };
    const auto graph = [](int v, Edges e) {
      return std::make_shared<GraphicMatroid>(v, std::move(e));
    };

    add("u1_1", uni(1, 1));
    add("u2_1", uni(2, 1));
    add("u3_1", uni(3, 1));
    add("u3_2", uni(3, 2));
    add("u4_2", uni(4, 2));
    add("u5_2", uni(5, 2));
    add("u5_3", uni(5, 3));
    add("u6_3", uni(6, 3));
    add("u7_3", uni(7, 3));
    add("u6_6", uni(6, 6));
    add("u9_4", uni(9, 4));

    auto triangle = graph(3, {{0, 1}, {0, 2}, {1, 2}});
    auto k4 = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto k5 = graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                        {3, 4}});
    add("triangle", triangle);
    add("path3", graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    add("cycle4", graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    add("cycle5", graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    add("k4", k4);
    add("k5", k5);
    add("k23", graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
    add("bowtie", graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
    add("dipole3", graph(2, {{0, 1}, {0, 1}, {0, 1}}));
    add("theta", graph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}));

    auto fano = std::make_shared<LinearMatroidGF>(
        2, std::vector<std::vector<long long>>{{1, 0, 0, 1, 1, 0, 1},
                                               {0, 1, 0, 1, 0, 1, 1},
                                               {0, 0, 1, 0, 1, 1, 1}});
    add("fano", fano);
    add("binary_3x5",
        std::make_shared<LinearMatroidGF>(2, std::vector<std::vector<long long>>{
                                                 {1, 0, 0, 1, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 1}}));
    add("binary_4x8",
        std::make_shared<LinearMatroidGF>(2, std::vector<std::vector<long long>>{
                                                 {1, 0, 0, 0, 1, 1, 0, 1},
                                                 {0, 1, 0, 0, 1, 1, 0, 0},
                                                 {0, 0, 1, 0, 1, 0, 1, 1},
                                                 {0, 0, 0, 1, 1, 0, 1, 0}}));
    add("nonfano_gf3",
        std::make_shared<LinearMatroidGF>(3, std::vector<std::vector<long long>>{
                                                 {1, 0, 0, 1, 1, 0, 1},
                                                 {0, 1, 0, 1, 0, 1, 1},
                                                 {0, 0, 1, 0, 1, 1, 1}}));
    add("ternary_3x6",
        std::make_shared<LinearMatroidGF>(3, std::vector<std::vector<long long>>{
                                                 {1, 0, 0, 1, 2, 1}, {0, 1, 0, 1, 1, 2},
                                                 {0, 0, 1, 1, 0, 1}}));
    add("rational_3x6",
        std::make_shared<LinearMatroidQ>(std::vector<std::vector<Rational>>{
            {1, 0, 0, 1, Rational(1, 2), 1}, {0, 1, 0, 1, 1, 2}, {0, 0, 1, 1, 0, 1}}));
    add("nonfano_q", std::make_shared<LinearMatroidQ>(std::vector<std::vector<Rational>>{
                         {1, 0, 0, 1, 1, 0, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 1}}));

    add("transversal_a",
        std::make_shared<TransversalMatroid>(
            5, std::vector<ElementSet>{ElementSet::of(5, {0, 1, 2}), ElementSet::of(5, {1, 2, 3}),
                                       ElementSet::of(5, {3, 4})}));
    add("transversal_b",
        std::make_shared<TransversalMatroid>(
            6, std::vector<ElementSet>{ElementSet::of(6, {0, 1, 2}), ElementSet::of(6, {2, 3, 4}),
                                       ElementSet::of(6, {4, 5})}));
    add("partition_2_2",
        std::make_shared<TransversalMatroid>(
            4, std::vector<ElementSet>{ElementSet::of(4, {0, 1}), ElementSet::of(4, {2, 3})}));
    add("transversal_over",
        std::make_shared<TransversalMatroid>(
            5, std::vector<ElementSet>{ElementSet::of(5, {0, 1, 2, 3, 4}),
                                       ElementSet::of(5, {0, 1, 2, 3, 4}),
                                       ElementSet::of(5, {0, 1, 2})}));

    add("laminar_a",
        std::make_shared<LaminarMatroid>(
            6,
            std::vector<ElementSet>{ElementSet::of(6, {0, 1, 2}),
                                    ElementSet::of(6, {0, 1, 2, 3, 4, 5}),
                                    ElementSet::of(6, {3, 4})},
            std::vector<int>{2, 4, 1}));
    add("laminar_b",
        std::make_shared<LaminarMatroid>(
            5,
            std::vector<ElementSet>{ElementSet::of(5, {0, 1}), ElementSet::of(5, {2, 3}),
                                    ElementSet::of(5, {0, 1, 2, 3, 4})},
            std::vector<int>{1, 1, 3}));

    // Rank three whirl: every 3-subset of a six element ground is a basis
    // except the three triangles through the hub.
    {
      std::vector<ElementSet> bases;
      for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
          for (int c = b + 1; c < 6; ++c) {
            ElementSet s = ElementSet::of(6, {a, b, c});
            if (s == ElementSet::of(6, {0, 1, 3}) || s == ElementSet::of(6, {0, 2, 4}) ||
                s == ElementSet::of(6, {1, 2, 5}))
              continue;
            bases.push_back(s);
          }
      add("whirl3", std::make_shared<ExplicitBasesMatroid>(6, std::move(bases)));
    }
    add("explicit_u23",
        std::make_shared<ExplicitBasesMatroid>(
            3, std::vector<ElementSet>{ElementSet::of(3, {0, 1}), ElementSet::of(3, {0, 2}),
                                       ElementSet::of(3, {1, 2})}));

    add("dual_u4_2", std::make_shared<BasicDualMatroid<1>>(uni(4, 2)));
    add("dual_k4", std::make_shared<BasicDualMatroid<1>>(k4));
    add("dual_fano", std::make_shared<BasicDualMatroid<1>>(fano));

    add("k5_restrict",
        std::make_shared<BasicRestrictMatroid<1>>(k5, ElementSet::of(10, {0, 1, 2, 3, 4, 5})));
    add("k4_contract", std::make_shared<BasicContractMatroid<1>>(k4, ElementSet::of(6, {0})));
    add("fano_contract", std::make_shared<BasicContractMatroid<1>>(fano, ElementSet::of(7, {0})));

    add("sum_u21_u32", std::make_shared<BasicDirectSumMatroid<1>>(
                           std::vector<MatroidPtr>{uni(2, 1), uni(3, 2)}));
    add("sum_triangle_u21", std::make_shared<BasicDirectSumMatroid<1>>(
                                std::vector<MatroidPtr>{triangle, uni(2, 1)}));

    add("blowup_u23",
        std::make_shared<BasicBlowUpMatroid<1>>(uni(3, 2), std::vector<int>{2, 1, 1}));
    add("join_u31_u31", std::make_shared<BasicJoinMatroid<1>>(
                            std::vector<MatroidPtr>{uni(3, 1), uni(3, 1)}));

    return out;
  }();
  return entries;
}

inline std::vector<CorpusEntry> corpus_up_to(int max_ground) {
  std::vector<CorpusEntry> out;
  for (const CorpusEntry& e : corpus())
    if (e.matroid->ground_size() <= max_ground) out.push_back(e);
  return out;
}

}  // namespace matroidlab::testsupport

#endif
