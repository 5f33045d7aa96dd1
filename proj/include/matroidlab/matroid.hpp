#ifndef MATROIDLAB_MATROID_HPP
#define MATROIDLAB_MATROID_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "matroidlab/element_set.hpp"
#include "matroidlab/errors.hpp"

namespace matroidlab {

template <int Words>
class IncrementalSet;

// Independence oracle. Everything else (rank, closure, circuits, bases) is
// derived from is_independent; backends may override rank when they can do
// better than the greedy scan.
template <int Words>
class BasicMatroid {
 public:
  using Set = BasicElementSet<Words>;

  explicit BasicMatroid(int ground) : ground_(ground) {
    if (ground < 0 || ground > Set::kCapacity)
      throw CapExceededError("ground set of size " + std::to_string(ground) +
                             " exceeds set capacity " + std::to_string(Set::kCapacity));
  }
  virtual ~BasicMatroid() = default;

  int ground_size() const { return ground_; }
  Set ground() const { return Set::full(ground_); }

  virtual bool is_independent(const Set& a) const = 0;

  // Size of a maximal independent subset, grown greedily in ascending element
  // order. Equals the size of a maximum independent subset by augmentation.
  virtual int rank(const Set& a) const {
    check_universe(a);
    Set picked(ground_);
    int r = 0;
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1)) {
      picked.insert(e);
      if (is_independent(picked)) {
        ++r;
      } else {
        picked.erase(e);
      }
    }
    return r;
  }

  int full_rank() const { return rank(ground()); }

  Set closure(const Set& a) const {
    check_universe(a);
    int r = rank(a);
    Set cl = a;
    for (int e = 0; e < ground_; ++e) {
      if (a.contains(e)) continue;
      if (rank(a.with(e)) == r) cl.insert(e);
    }
    return cl;
  }

  bool is_basis(const Set& a) const {
    check_universe(a);
    return is_independent(a) && a.size() == full_rank();
  }

  bool is_circuit(const Set& a) const {
    check_universe(a);
    if (a.empty() || is_independent(a)) return false;
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1))
      if (!is_independent(a.without(e))) return false;
    return true;
  }

  Set loops() const {
    Set l(ground_);
    for (int e = 0; e < ground_; ++e) {
      Set single(ground_);
      single.insert(e);
      if (!is_independent(single)) l.insert(e);
    }
    return l;
  }

  // All bases in lexicographic order. Throws CapExceededError when the number
  // of candidate sets C(n, r) exceeds the cap.
  std::vector<Set> bases(std::size_t cap = kDefaultMaxEnum) const {
    int n = ground_, r = full_rank();
    if (binom_exceeds(n, r, cap))
      throw CapExceededError("basis enumeration over C(" + std::to_string(n) + "," +
                             std::to_string(r) + ") candidates");
    std::vector<Set> out;
    for_each_combination(ground(), r, [&](const Set& s) {
      if (is_independent(s)) out.push_back(s);
      return true;
    });
    return out;
  }

  // All circuits in canonical order (ascending size, then lexicographic).
  std::vector<Set> circuits(std::size_t cap = kDefaultMaxEnum) const {
    if (ground_ > 30 || (1ULL << ground_) > cap)
      throw CapExceededError("circuit enumeration over 2^" + std::to_string(ground_) +
                             " candidates");
    std::vector<Set> out;
    for_each_subset_canonical(ground(), [&](const Set& s) {
      if (s.empty() || is_independent(s)) return true;
      // Enumeration by ascending size: s is a circuit iff no smaller circuit
      // sits inside it.
      for (const Set& c : out)
        if (c.subset_of(s)) return true;
      out.push_back(s);
      return true;
    });
    return out;
  }

  // Mutable mirror of one independent set; backends with cheap augmentation
  // structure (matchings) override this with something faster than re-querying
  // the oracle from scratch.
  virtual std::unique_ptr<IncrementalSet<Words>> incremental() const;

 protected:
  void check_universe(const Set& a) const {
    if (a.universe() != ground_)
      throw UniverseMismatchError("set universe " + std::to_string(a.universe()) +
                                  " does not match ground size " + std::to_string(ground_));
  }

 private:
  static bool binom_exceeds(int n, int k, std::size_t cap) {
    if (k < 0 || k > n) return false;
    k = std::min(k, n - k);
    std::size_t c = 1;
    for (int i = 1; i <= k; ++i) {
      if (c > cap) return true;
      c = c * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    }
    return c > cap;
  }

  int ground_;
};

template <int Words>
class IncrementalSet {
 public:
  using Set = BasicElementSet<Words>;

  explicit IncrementalSet(int universe) : current_(universe) {}
  virtual ~IncrementalSet() = default;

  const Set& current() const { return current_; }

  virtual bool can_add(int e) const = 0;
  // Whether current - remove + add is independent (remove must be a member).
  virtual bool can_swap(int add, int remove) const = 0;
  virtual void add(int e) { current_.insert(e); }
  virtual void remove(int e) { current_.erase(e); }

 protected:
  Set current_;
};

// Fallback incremental set: every query goes back to the oracle.
template <int Words>
class OracleIncrementalSet final : public IncrementalSet<Words> {
 public:
  using Set = BasicElementSet<Words>;

  explicit OracleIncrementalSet(const BasicMatroid<Words>& m)
      : IncrementalSet<Words>(m.ground_size()), m_(m) {}

  bool can_add(int e) const override {
    return !this->current_.contains(e) && m_.is_independent(this->current_.with(e));
  }

  bool can_swap(int add, int remove) const override {
    if (add == remove) return this->current_.contains(remove);
    return m_.is_independent(this->current_.with(add).without(remove));
  }

 private:
  const BasicMatroid<Words>& m_;
};

template <int Words>
std::unique_ptr<IncrementalSet<Words>> BasicMatroid<Words>::incremental() const {
  return std::make_unique<OracleIncrementalSet<Words>>(*this);
}

using Matroid = BasicMatroid<1>;
using MatroidPtr = std::shared_ptr<const Matroid>;

template <int Words>
using BasicMatroidPtr = std::shared_ptr<const BasicMatroid<Words>>;

}  // namespace matroidlab

#endif
