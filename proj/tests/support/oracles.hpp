#ifndef MATROIDLAB_TESTS_SUPPORT_ORACLES_HPP
#define MATROIDLAB_TESTS_SUPPORT_ORACLES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "matroidlab/matroidlab.hpp"

// Brute-force reference implementations. Everything here works on raw
// independence tables and plain masks so results never flow through the
// algorithms under test.

namespace matroidlab::testsupport {

inline std::vector<char> indep_table(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 20) throw std::logic_error("independence table too large");
  std::vector<char> table(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < table.size(); ++mask)
    table[mask] = m.is_independent(ElementSet::from_mask(n, mask));
  return table;
}

// r(A) = size of the largest independent subset, by deleting one element at
// a time. Depends only on the raw table.
inline std::vector<int> rank_from_table(const std::vector<char>& indep, int) {
  std::vector<int> r(indep.size());
  for (std::uint32_t mask = 1; mask < indep.size(); ++mask) {
    if (indep[mask]) {
      r[mask] = std::popcount(mask);
      continue;
    }
    int best = 0;
    for (std::uint32_t rest = mask; rest != 0;) {
      std::uint32_t bit = rest & (0u - rest);
      rest ^= bit;
      best = std::max(best, r[mask ^ bit]);
    }
    r[mask] = best;
  }
  return r;
}

// Fewest independent sets partitioning the ground set, by subset cover DP.
inline int partition_search_chromatic(const std::vector<char>& indep, int n) {
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  const int kInf = n + 1;
  std::vector<int> parts(full + 1, kInf);
  parts[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask)
      if (indep[sub] && parts[mask ^ sub] + 1 < parts[mask])
        parts[mask] = parts[mask ^ sub] + 1;
  if (parts[full] >= kInf) throw std::logic_error("ground set has a loop");
  return parts[full];
}

inline Rational ratio_scan_fractional(const std::vector<int>& rank, int n) {
  Rational best = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (rank[mask] == 0) throw std::logic_error("ground set has a loop");
    Rational ratio(std::popcount(mask), rank[mask]);
    if (ratio > best) best = ratio;
  }
  return best;
}

inline int brute_max_common_independent(const Matroid& a, const Matroid& b) {
  if (a.ground_size() != b.ground_size()) throw std::logic_error("ground sets differ");
  const int n = a.ground_size();
  const auto ta = indep_table(a);
  const auto tb = indep_table(b);
  int best = 0;
  for (std::uint32_t mask = 0; mask < ta.size(); ++mask)
    if (ta[mask] && tb[mask]) best = std::max(best, std::popcount(mask));
  (void)n;
  return best;
}

namespace oracledetail {

inline bool assign_from(const Matroid& m, const std::vector<std::vector<int>>& lists,
                        const std::vector<int>& w, std::size_t at,
                        std::vector<ElementSet>& classes) {
  const int n = m.ground_size();
  if (at == lists.size()) return true;
  const int e = static_cast<int>(at);
  const auto& menu = lists.at(at);
  const int need = w.at(at);
  if (need == 0) return assign_from(m, lists, w, at + 1, classes);
  std::vector<int> pick(need);
  for (int i = 0; i < need; ++i) pick[i] = i;
  const int r = static_cast<int>(menu.size());
  if (need > r) return false;
  for (;;) {
    std::vector<int> touched;
    bool fits = true;
    for (int i = 0; i < need && fits; ++i) {
      int color = menu[pick[i]];
      if (static_cast<int>(classes.size()) <= color) classes.resize(color + 1, ElementSet(n));
      ElementSet trial = classes[color];
      trial.insert(e);
      if (!m.is_independent(trial)) {
        fits = false;
      } else {
        classes[color] = trial;
        touched.push_back(color);
      }
    }
    if (fits && assign_from(m, lists, w, at + 1, classes)) return true;
    for (int color : touched) classes[color].erase(e);
    int i = need - 1;
    while (i >= 0 && pick[i] == r - 1 - (need - 1 - i)) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < need; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace oracledetail

// Exhaustive search for a coloring giving element e exactly w(e) distinct
// colors from its list, all color classes independent.
inline bool brute_list_colorable(const Matroid& m, const std::vector<std::vector<int>>& lists,
                                 const std::vector<int>& w) {
  if (static_cast<int>(lists.size()) != m.ground_size() || lists.size() != w.size())
    throw std::logic_error("list or weight length mismatch");
  std::vector<ElementSet> classes;
  return oracledetail::assign_from(m, lists, w, 0, classes);
}

inline bool brute_list_colorable(const Matroid& m, const std::vector<std::vector<int>>& lists) {
  return brute_list_colorable(m, lists, std::vector<int>(lists.size(), 1));
}

// All bases as masks, straight from the table.
inline std::vector<std::uint32_t> bases_from_table(const std::vector<char>& indep, int n) {
  int full = 0;
  for (std::uint32_t mask = 0; mask < indep.size(); ++mask)
    if (indep[mask]) full = std::max(full, std::popcount(mask));
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < indep.size(); ++mask)
    if (indep[mask] && std::popcount(mask) == full) out.push_back(mask);
  (void)n;
  return out;
}

namespace oracledetail {

inline bool pick_disjoint(const std::vector<std::uint32_t>& bases, int k, std::size_t from,
                          std::uint32_t used) {
  if (k == 0) return true;
  for (std::size_t i = from; i < bases.size(); ++i)
    if ((bases[i] & used) == 0 && pick_disjoint(bases, k - 1, i + 1, used | bases[i]))
      return true;
  return false;
}

}  // namespace oracledetail

inline bool brute_disjoint_bases(const Matroid& m, int k) {
  const auto bases = bases_from_table(indep_table(m), m.ground_size());
  if (bases.size() == 1 && bases[0] == 0) return true;
  return oracledetail::pick_disjoint(bases, k, 0, 0);
}

}  // namespace matroidlab::testsupport

#endif
