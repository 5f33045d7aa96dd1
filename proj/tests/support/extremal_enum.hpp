#ifndef MATROIDLAB_TESTS_SUPPORT_EXTREMAL_ENUM_HPP
#define MATROIDLAB_TESTS_SUPPORT_EXTREMAL_ENUM_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "matroidlab/matroidlab.hpp"

// Exhaustive enumeration of pure extremal facet families (shadow size equal
// to the cascade derivative of the facet count) on a small vertex set.
// Facets are vertex masks over bits 0..n-1. The arithmetic here is private
// so nothing is borrowed from the code under test.
//
// Strategy per facet size k:
//   k=1: every nonempty vertex family is extremal.
//   k=2: the shadow is the vertex support; direct sweep over all edge sets.
//   k=3: sweep over candidate shadows S (pair sets). A family with shadow
//        exactly S lives inside the pool of triples spanned by S, and its
//        size m must satisfy delta(m) = |S|, which pins m to a short interval
//        near the pool size. Complete because S = shadow(F) is determined
//        by F, so every family is visited under exactly one S.
//   k=4: same sweep, but candidate shadows range over the extremal triple
//        families instead of all 2^C(n,3) triple sets. This leans on the
//        shadow of an extremal family being extremal, which the test suite
//        re-verifies exhaustively for every family produced at k <= 3 and
//        cross-checks against a direct sweep at n <= 6.

namespace matroidlab::testsupport {

struct ExtremalFamily {
  int k = 0;
  std::vector<std::uint32_t> facets;
};

namespace extremaldetail {

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Cascade lower bound for the shadow of m many k-sets.
inline long long shadow_bound(long long m, int k) {
  long long out = 0;
  for (int level = k; level >= 1 && m > 0; --level) {
    int a = level;
    while (binom(a + 1, level) <= m) ++a;
    m -= binom(a, level);
    out += binom(a, level - 1);
  }
  return out;
}

inline std::vector<std::uint32_t> sets_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  return out;
}

struct PoolEntry {
  std::uint32_t facet = 0;
  std::uint64_t shadow = 0;  // bits in the (k-1)-subset indexing
};

struct CoverScan {
  const std::vector<PoolEntry>* pool = nullptr;
  std::vector<std::uint64_t> suffix_or;
  std::uint64_t target = 0;
  int m = 0;
  int k = 0;
  std::vector<int> chosen;
  std::vector<ExtremalFamily>* out = nullptr;

  void run(std::size_t from, std::uint64_t covered) {
    if (static_cast<int>(chosen.size()) == m) {
      if (covered == target) {
        ExtremalFamily fam{k, {}};
        for (int idx : chosen) fam.facets.push_back((*pool)[idx].facet);
        out->push_back(std::move(fam));
      }
      return;
    }
    const std::size_t left = m - chosen.size();
    for (std::size_t i = from; i + left <= pool->size(); ++i) {
      if ((covered | suffix_or[i]) != target) return;
      chosen.push_back(static_cast<int>(i));
      run(i + 1, covered | (*pool)[i].shadow);
      chosen.pop_back();
    }
  }
};

// All families F inside `pool` with shadow exactly `target` and |F| = m for
// some m with shadow_bound(m, k) = popcount(target).
inline void families_with_shadow(const std::vector<PoolEntry>& pool, std::uint64_t target, int k,
                                 const std::vector<std::vector<int>>& size_buckets,
                                 std::vector<ExtremalFamily>& out) {
  const int want = std::popcount(target);
  if (want >= static_cast<int>(size_buckets.size())) return;
  CoverScan scan;
  scan.pool = &pool;
  scan.target = target;
  scan.k = k;
  scan.out = &out;
  scan.suffix_or.assign(pool.size() + 1, 0);
  for (std::size_t i = pool.size(); i > 0; --i)
    scan.suffix_or[i - 1] = scan.suffix_or[i] | pool[i - 1].shadow;
  for (int m : size_buckets[want]) {
    if (m > static_cast<int>(pool.size())) continue;
    scan.m = m;
    scan.run(0, 0);
  }
}

// size_buckets[v] = all m with shadow_bound(m, k) == v.
inline std::vector<std::vector<int>> bucket_sizes(int pool_total, int max_value, int k) {
  std::vector<std::vector<int>> buckets(max_value + 1);
  for (int m = 1; m <= pool_total; ++m) {
    long long v = shadow_bound(m, k);
    if (v <= max_value) buckets[static_cast<int>(v)].push_back(m);
  }
  return buckets;
}

inline std::vector<PoolEntry> spanned_pool(const std::vector<std::uint32_t>& candidates,
                                           const std::vector<std::uint64_t>& cand_shadow,
                                           std::uint64_t allowed) {
  std::vector<PoolEntry> pool;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if ((cand_shadow[i] & ~allowed) == 0) pool.push_back({candidates[i], cand_shadow[i]});
  return pool;
}

}  // namespace extremaldetail

inline std::vector<ExtremalFamily> enumerate_extremal(int n, int k);

namespace extremaldetail {

// Facet masks -> per-facet shadow bitmask in the index space of (k-1)-sets.
inline std::vector<std::uint64_t> facet_shadows(const std::vector<std::uint32_t>& facets,
                                                const std::vector<std::uint32_t>& subs, int n) {
  std::vector<int> sub_index(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < subs.size(); ++i) sub_index[subs[i]] = static_cast<int>(i);
  std::vector<std::uint64_t> out(facets.size(), 0);
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::uint32_t rest = facets[i]; rest != 0;) {
      std::uint32_t bit = rest & (0u - rest);
      rest ^= bit;
      out[i] |= std::uint64_t{1} << sub_index[facets[i] ^ bit];
    }
  return out;
}

inline std::vector<ExtremalFamily> sweep_all_masks(int n, int k) {
  std::vector<ExtremalFamily> out;
  const auto pool = sets_of_size(n, k);
  const auto subs = sets_of_size(n, k - 1);
  const auto shadows = facet_shadows(pool, subs, n);
  const std::uint32_t size = std::uint32_t{1} << pool.size();
  std::vector<long long> bound(pool.size() + 1);
  for (std::size_t m = 1; m <= pool.size(); ++m) bound[m] = shadow_bound(m, k);
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    std::uint64_t shadow = 0;
    for (std::uint32_t rest = mask; rest != 0;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      shadow |= shadows[i];
    }
    if (std::popcount(shadow) != bound[std::popcount(mask)]) continue;
    ExtremalFamily fam{k, {}};
    for (std::uint32_t rest = mask; rest != 0;) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      fam.facets.push_back(pool[i]);
    }
    out.push_back(std::move(fam));
  }
  return out;
}

inline std::vector<ExtremalFamily> sweep_by_shadow_sets(int n) {
  std::vector<ExtremalFamily> out;
  const auto triples = sets_of_size(n, 3);
  const auto pairs = sets_of_size(n, 2);
  const auto shadows = facet_shadows(triples, pairs, n);
  const auto buckets = bucket_sizes(static_cast<int>(triples.size()),
                                    static_cast<int>(pairs.size()), 3);
  const std::uint64_t top = std::uint64_t{1} << pairs.size();
  for (std::uint64_t s = 1; s < top; ++s) {
    const int want = std::popcount(s);
    if (buckets[want].empty()) continue;
    const auto pool = spanned_pool(triples, shadows, s);
    if (pool.empty() || buckets[want].front() > static_cast<int>(pool.size())) continue;
    families_with_shadow(pool, s, 3, buckets, out);
  }
  return out;
}

inline std::vector<ExtremalFamily> sweep_by_extremal_shadows(int n) {
  std::vector<ExtremalFamily> out;
  const auto quads = sets_of_size(n, 4);
  const auto triples = sets_of_size(n, 3);
  const auto shadows = facet_shadows(quads, triples, n);
  const auto buckets = bucket_sizes(static_cast<int>(quads.size()),
                                    static_cast<int>(triples.size()), 4);
  std::vector<int> triple_index(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < triples.size(); ++i) triple_index[triples[i]] = static_cast<int>(i);
  for (const ExtremalFamily& shad : enumerate_extremal(n, 3)) {
    std::uint64_t s = 0;
    for (std::uint32_t f : shad.facets) s |= std::uint64_t{1} << triple_index[f];
    const int want = std::popcount(s);
    if (want >= static_cast<int>(buckets.size()) || buckets[want].empty()) continue;
    const auto pool = spanned_pool(quads, shadows, s);
    if (pool.empty() || buckets[want].front() > static_cast<int>(pool.size())) continue;
    families_with_shadow(pool, s, 4, buckets, out);
  }
  return out;
}

}  // namespace extremaldetail

// Direct-sweep variant for k=4; exponential in C(n,4), so n <= 6 only.
// Exists to cross-check the shadow-driven path.
inline std::vector<ExtremalFamily> enumerate_extremal_direct4(int n) {
  return extremaldetail::sweep_all_masks(n, 4);
}

inline std::vector<ExtremalFamily> enumerate_extremal(int n, int k) {
  using namespace extremaldetail;
  if (k == 1) {
    std::vector<ExtremalFamily> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
      ExtremalFamily fam{1, {}};
      for (std::uint32_t rest = mask; rest != 0;) {
        std::uint32_t bit = rest & (0u - rest);
        rest ^= bit;
        fam.facets.push_back(bit);
      }
      out.push_back(std::move(fam));
    }
    return out;
  }
  if (k == 2) return sweep_all_masks(n, 2);
  if (k == 3) return n <= 6 ? sweep_all_masks(n, 3) : sweep_by_shadow_sets(n);
  if (k == 4) return n <= 6 ? sweep_all_masks(n, 4) : sweep_by_extremal_shadows(n);
  return {};
}

// 1-based complex over vertex bit i -> vertex i+1.
inline Complex family_to_complex(int n, const ExtremalFamily& fam) {
  std::vector<ElementSet> facets;
  for (std::uint32_t mask : fam.facets) {
    ElementSet f(n + 1);
    for (std::uint32_t rest = mask; rest != 0;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      f.insert(v + 1);
    }
    facets.push_back(f);
  }
  return Complex(n + 1, facets);
}

}  // namespace matroidlab::testsupport

#endif
