#ifndef MATROIDLAB_RANK_TABLE_HPP
#define MATROIDLAB_RANK_TABLE_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

namespace detail {

inline void check_table_size(int n, std::size_t cap) {
  if (n > 25 || (std::uint64_t{1} << n) > cap)
    throw CapExceededError("subset table over 2^" + std::to_string(n) + " masks");
}

}  // namespace detail

// Independence flag per subset mask. Uses heredity to skip oracle calls, so it
// is only valid on genuine matroids.
template <int Words>
std::vector<char> matroid_independence_table(const BasicMatroid<Words>& m,
                                             std::size_t cap = kDefaultMaxEnum) {
  int n = m.ground_size();
  detail::check_table_size(n, cap);
  std::vector<char> indep(std::size_t{1} << n, 0);
  indep[0] = 1;
  for (std::uint32_t mask = 1; mask < indep.size(); ++mask) {
    std::uint32_t sub = mask & (mask - 1);
    indep[mask] =
        indep[sub] && m.is_independent(BasicElementSet<Words>::from_mask(n, mask)) ? 1 : 0;
  }
  return indep;
}

// Independence flag per subset mask with one oracle query each; makes no
// matroid assumptions, so it also serves arbitrary set families.
template <int Words>
std::vector<char> family_independence_table(const BasicMatroid<Words>& m,
                                            std::size_t cap = kDefaultMaxEnum) {
  int n = m.ground_size();
  detail::check_table_size(n, cap);
  std::vector<char> indep(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < indep.size(); ++mask)
    indep[mask] = m.is_independent(BasicElementSet<Words>::from_mask(n, mask)) ? 1 : 0;
  return indep;
}

// rank[mask] = size of the largest member of the family inside mask. For a
// matroid table this is the rank function.
inline std::vector<int> rank_table(const std::vector<char>& indep) {
  std::vector<int> rank(indep.size(), 0);
  for (std::uint32_t mask = 1; mask < indep.size(); ++mask) {
    int best = indep[mask] ? std::popcount(mask) : 0;
    for (std::uint32_t rest = mask; rest != 0;) {
      std::uint32_t bit = rest & (0u - rest);
      rest ^= bit;
      best = std::max(best, rank[mask ^ bit]);
      if (best == std::popcount(mask)) break;
    }
    rank[mask] = best;
  }
  return rank;
}

}  // namespace matroidlab

#endif
