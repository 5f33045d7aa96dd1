#ifndef MATROIDLAB_KRUSKAL_KATONA_HPP
#define MATROIDLAB_KRUSKAL_KATONA_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "matroidlab/element_set.hpp"
#include "matroidlab/errors.hpp"

namespace matroidlab {

namespace detail {

inline constexpr long long kBinomSaturated = (1LL << 62);

// Binomial coefficient clamped at 2^62; the clamp only ever matters while
// probing for the largest argument below a bound.
inline long long binom_sat(long long n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
    if (r >= static_cast<unsigned __int128>(kBinomSaturated)) return kBinomSaturated;
  }
  return static_cast<long long>(r);
}

// Largest a with C(a, j) <= bound, for bound >= 0 and j >= 1.
inline long long max_binom_arg(int j, long long bound) {
  long long a = j - 1, step = 1;
  while (binom_sat(a + step, j) <= bound) {
    a += step;
    step *= 2;
  }
  for (step /= 2; step >= 1; step /= 2)
    if (binom_sat(a + step, j) <= bound) a += step;
  return a;
}

}  // namespace detail

// n = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_t, t) with a_k > ... > a_t >= t.
struct CascadeRep {
  int k = 0;
  std::vector<long long> terms;  // a_k first

  long long value() const {
    long long n = 0;
    int j = k;
    for (long long a : terms) n += detail::binom_sat(a, j--);
    return n;
  }
};

inline CascadeRep cascade(long long n, int k) {
  if (k < 1) throw InvalidInputError("cascade needs k >= 1");
  if (n < 1) throw InvalidInputError("cascade needs n >= 1");
  CascadeRep rep;
  rep.k = k;
  long long rem = n;
  for (int j = k; rem > 0; --j) {
    if (j < 1) throw InternalError("cascade ran past its last term");
    long long a = detail::max_binom_arg(j, rem);
    if (a < j || (!rep.terms.empty() && a >= rep.terms.back()))
      throw InternalError("cascade terms fail to descend");
    rep.terms.push_back(a);
    rem -= detail::binom_sat(a, j);
  }
  return rep;
}

// Size of the shadow of the first n k-sets in squashed order: replace each
// C(a_j, j) of the cascade by C(a_j, j-1). Zero families have empty shadows.
inline long long delta(long long n, int k) {
  if (n < 0) throw InvalidInputError("negative family size");
  if (n == 0) return 0;
  auto rep = cascade(n, k);
  long long out = 0;
  int j = rep.k;
  for (long long a : rep.terms) out += detail::binom_sat(a, j-- - 1);
  return out;
}

// The r-th k-subset of {1,2,...} (0-indexed) in squashed order, which on
// fixed-size sets is the colex order; built by the combinadic greedy step.
template <int Words = 1>
BasicElementSet<Words> squashed_at(int k, long long r) {
  using Set = BasicElementSet<Words>;
  const int universe = Set::kCapacity;
  Set out(universe);
  for (int j = k; j >= 1; --j) {
    long long c = detail::max_binom_arg(j, r);
    if (c + 1 >= universe)
      throw CapExceededError("squashed order element " + std::to_string(c + 1) +
                             " exceeds the set capacity");
    out.insert(static_cast<int>(c) + 1);
    r -= detail::binom_sat(c, j);
  }
  return out;
}

template <int Words = 1>
std::vector<BasicElementSet<Words>> squashed_prefix(int k, long long n) {
  using Set = BasicElementSet<Words>;
  if (k < 0 || n < 0) throw InvalidInputError("squashed prefix needs k, n >= 0");
  if (k == 0) {
    if (n > 1) throw InvalidInputError("only one empty set exists");
    return std::vector<Set>(n, Set(Set::kCapacity));
  }
  std::vector<Set> out;
  out.reserve(n);
  for (long long r = 0; r < n; ++r) out.push_back(squashed_at<Words>(k, r));
  return out;
}

// First n k-sets in squashed order avoiding the element i. The sets over
// positive integers minus i are order isomorphic to the plain squashed list,
// so unrank there and shift labels past i up by one.
template <int Words = 1>
std::vector<BasicElementSet<Words>> squashed_prefix_avoiding(int k, long long n, int i) {
  using Set = BasicElementSet<Words>;
  if (i < 1) throw InvalidInputError("avoided element must be positive");
  auto plain = squashed_prefix<Words>(k, n);
  std::vector<Set> out;
  out.reserve(plain.size());
  for (const auto& s : plain) {
    Set shifted(Set::kCapacity);
    for (int e = s.min_element(); e >= 0; e = s.next_element(e + 1)) {
      int mapped = e < i ? e : e + 1;
      if (mapped >= Set::kCapacity)
        throw CapExceededError("squashed order element " + std::to_string(mapped) +
                               " exceeds the set capacity");
      shifted.insert(mapped);
    }
    out.push_back(shifted);
  }
  return out;
}

// All (k-1)-subsets of the members of a k-uniform family, deduplicated and
// sorted in squashed order.
template <int Words>
std::vector<BasicElementSet<Words>> shadow(const std::vector<BasicElementSet<Words>>& family) {
  using Set = BasicElementSet<Words>;
  if (family.empty()) return {};
  const int k = family.front().size();
  if (k < 1) throw InvalidInputError("shadow needs nonempty sets");
  std::vector<Set> out;
  for (const auto& s : family) {
    if (s.size() != k) throw InvalidInputError("shadow needs sets of equal size");
    for (int e = s.min_element(); e >= 0; e = s.next_element(e + 1)) {
      Set t = s;
      t.erase(e);
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) { return a.colex_less(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Kruskal-Katona characterization: (f_0,...,f_d) is the f-vector of a
// simplicial complex iff f_{k-1} >= delta(f_k, k+1) for k = 1..d.
inline bool is_valid_fvector(const std::vector<long long>& f) {
  for (long long v : f)
    if (v < 0) return false;
  for (std::size_t k = 1; k < f.size(); ++k)
    if (f[k - 1] < delta(f[k], static_cast<int>(k) + 1)) return false;
  return true;
}

}  // namespace matroidlab

#endif
