#ifndef MATROIDLAB_ELEMENT_SET_HPP
#define MATROIDLAB_ELEMENT_SET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "matroidlab/errors.hpp"

namespace matroidlab {

// Set of element indices 0..universe-1 over a fixed number of 64-bit words.
// The default alias ElementSet (one word) covers every desk-scale ground set;
// wider instantiations exist for the large game constructions.
template <int Words>
class BasicElementSet {
  static_assert(Words >= 1);

 public:
  static constexpr int kCapacity = 64 * Words;

  BasicElementSet() : universe_(0) { bits_.fill(0); }

  explicit BasicElementSet(int universe) : universe_(universe) {
    if (universe < 0 || universe > kCapacity)
      throw CapExceededError("element set universe " + std::to_string(universe) +
                             " exceeds capacity " + std::to_string(kCapacity));
    bits_.fill(0);
  }

  static BasicElementSet empty(int universe) { return BasicElementSet(universe); }

  static BasicElementSet full(int universe) {
    BasicElementSet s(universe);
    for (int w = 0; w < Words; ++w) s.bits_[w] = ~0ULL;
    s.trim();
    return s;
  }

  static BasicElementSet of(int universe, std::initializer_list<int> elems) {
    BasicElementSet s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  static BasicElementSet of(int universe, const std::vector<int>& elems) {
    BasicElementSet s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  static BasicElementSet from_mask(int universe, std::uint64_t mask) {
    BasicElementSet s(universe);
    s.bits_[0] = mask;
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int e) const {
    return e >= 0 && e < universe_ && (bits_[e >> 6] >> (e & 63)) & 1;
  }

  BasicElementSet& insert(int e) {
    check_element(e);
    bits_[e >> 6] |= 1ULL << (e & 63);
    return *this;
  }

  BasicElementSet& erase(int e) {
    check_element(e);
    bits_[e >> 6] &= ~(1ULL << (e & 63));
    return *this;
  }

  BasicElementSet with(int e) const {
    BasicElementSet s = *this;
    s.insert(e);
    return s;
  }

  BasicElementSet without(int e) const {
    BasicElementSet s = *this;
    s.erase(e);
    return s;
  }

  int size() const {
    int n = 0;
    for (int w = 0; w < Words; ++w) n += std::popcount(bits_[w]);
    return n;
  }

  bool empty() const {
    for (int w = 0; w < Words; ++w)
      if (bits_[w]) return false;
    return true;
  }

  BasicElementSet operator|(const BasicElementSet& o) const {
    BasicElementSet s = binary_ready(o);
    for (int w = 0; w < Words; ++w) s.bits_[w] = bits_[w] | o.bits_[w];
    return s;
  }

  BasicElementSet operator&(const BasicElementSet& o) const {
    BasicElementSet s = binary_ready(o);
    for (int w = 0; w < Words; ++w) s.bits_[w] = bits_[w] & o.bits_[w];
    return s;
  }

  BasicElementSet operator^(const BasicElementSet& o) const {
    BasicElementSet s = binary_ready(o);
    for (int w = 0; w < Words; ++w) s.bits_[w] = bits_[w] ^ o.bits_[w];
    return s;
  }

  // Set difference.
  BasicElementSet operator-(const BasicElementSet& o) const {
    BasicElementSet s = binary_ready(o);
    for (int w = 0; w < Words; ++w) s.bits_[w] = bits_[w] & ~o.bits_[w];
    return s;
  }

  BasicElementSet complement() const {
    BasicElementSet s(universe_);
    for (int w = 0; w < Words; ++w) s.bits_[w] = ~bits_[w];
    s.trim();
    return s;
  }

  bool subset_of(const BasicElementSet& o) const {
    binary_ready(o);
    for (int w = 0; w < Words; ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }

  bool intersects(const BasicElementSet& o) const {
    binary_ready(o);
    for (int w = 0; w < Words; ++w)
      if (bits_[w] & o.bits_[w]) return true;
    return false;
  }

  bool operator==(const BasicElementSet& o) const {
    return universe_ == o.universe_ && bits_ == o.bits_;
  }
  bool operator!=(const BasicElementSet& o) const { return !(*this == o); }

  int min_element() const {
    for (int w = 0; w < Words; ++w)
      if (bits_[w]) return w * 64 + std::countr_zero(bits_[w]);
    return -1;
  }

  int max_element() const {
    for (int w = Words - 1; w >= 0; --w)
      if (bits_[w]) return w * 64 + 63 - std::countl_zero(bits_[w]);
    return -1;
  }

  // First element >= from, or -1.
  int next_element(int from) const {
    if (from >= universe_) return -1;
    if (from < 0) from = 0;
    int w = from >> 6;
    std::uint64_t cur = bits_[w] & (~0ULL << (from & 63));
    while (true) {
      if (cur) return w * 64 + std::countr_zero(cur);
      if (++w >= Words) return -1;
      cur = bits_[w];
    }
  }

  std::vector<int> elements() const {
    std::vector<int> v;
    v.reserve(size());
    for (int e = min_element(); e >= 0; e = next_element(e + 1)) v.push_back(e);
    return v;
  }

  // Lexicographic order on the sorted element list: {0,3} < {1,2} < {1,3}.
  bool lex_less(const BasicElementSet& o) const {
    for (int w = 0; w < Words; ++w) {
      std::uint64_t d = bits_[w] ^ o.bits_[w];
      if (d) return (bits_[w] >> std::countr_zero(d)) & 1;
    }
    return false;
  }

  // Squashed (colex) order: A < B iff max(A xor B) lies in B.
  bool colex_less(const BasicElementSet& o) const {
    for (int w = Words - 1; w >= 0; --w) {
      std::uint64_t d = bits_[w] ^ o.bits_[w];
      if (d) return (o.bits_[w] >> (63 - std::countl_zero(d))) & 1;
    }
    return false;
  }

  // Ascending size, then lexicographic; the order used for canonical witnesses.
  bool canonical_less(const BasicElementSet& o) const {
    int a = size(), b = o.size();
    if (a != b) return a < b;
    return lex_less(o);
  }

  std::uint64_t word(int i) const { return bits_[i]; }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(universe_);
    for (int w = 0; w < Words; ++w)
      h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(bits_[w]);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e = min_element(); e >= 0; e = next_element(e + 1)) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  void check_element(int e) const {
    if (e < 0 || e >= universe_)
      throw UniverseMismatchError("element " + std::to_string(e) +
                                  " outside universe of size " + std::to_string(universe_));
  }

  BasicElementSet binary_ready(const BasicElementSet& o) const {
    if (universe_ != o.universe_)
      throw UniverseMismatchError("set universes differ: " + std::to_string(universe_) +
                                  " vs " + std::to_string(o.universe_));
    return BasicElementSet(universe_);
  }

  void trim() {
    for (int w = 0; w < Words; ++w) {
      int lo = w * 64;
      if (lo >= universe_) {
        bits_[w] = 0;
      } else if (universe_ - lo < 64) {
        bits_[w] &= (1ULL << (universe_ - lo)) - 1;
      }
    }
  }

  std::array<std::uint64_t, Words> bits_;
  int universe_;
};

using ElementSet = BasicElementSet<1>;

// Enumeration helpers. Callbacks return false to stop early; each helper
// reports whether the scan ran to completion.

// All subsets of base, in no particular order (binary counter order).
template <int Words, class F>
bool for_each_subset(const BasicElementSet<Words>& base, F&& f) {
  std::vector<int> elems = base.elements();
  int k = static_cast<int>(elems.size());
  if (k > 30) throw CapExceededError("subset scan over " + std::to_string(k) + " elements");
  std::uint64_t total = 1ULL << k;
  for (std::uint64_t m = 0; m < total; ++m) {
    BasicElementSet<Words> s(base.universe());
    for (int i = 0; i < k; ++i)
      if ((m >> i) & 1) s.insert(elems[i]);
    if (!f(s)) return false;
  }
  return true;
}

// All size-k subsets of base in lexicographic order of the sorted element list.
template <int Words, class F>
bool for_each_combination(const BasicElementSet<Words>& base, int k, F&& f) {
  std::vector<int> elems = base.elements();
  int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    BasicElementSet<Words> s(base.universe());
    for (int i : idx) s.insert(elems[i]);
    if (!f(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// All subsets in canonical witness order: ascending size, lexicographic inside.
template <int Words, class F>
bool for_each_subset_canonical(const BasicElementSet<Words>& base, F&& f) {
  int n = base.size();
  for (int k = 0; k <= n; ++k)
    if (!for_each_combination(base, k, f)) return false;
  return true;
}

}  // namespace matroidlab

template <int Words>
struct std::hash<matroidlab::BasicElementSet<Words>> {
  std::size_t operator()(const matroidlab::BasicElementSet<Words>& s) const {
    return s.hash();
  }
};

#endif
