#ifndef MATROIDLAB_BACKENDS_HPP
#define MATROIDLAB_BACKENDS_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/rational.hpp"

namespace matroidlab {

// U_{b,n}: independent iff at most b elements.
template <int Words = 1>
class BasicUniformMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicUniformMatroid(int n, int b) : BasicMatroid<Words>(n), b_(b) {
    if (b < 0 || b > n)
      throw InvalidInputError("uniform matroid rank " + std::to_string(b) +
                              " outside [0," + std::to_string(n) + "]");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return a.size() <= b_;
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return std::min(a.size(), b_);
  }

 private:
  int b_;
};

// Cycle matroid of a multigraph; elements are edges, independence is acyclicity.
template <int Words = 1>
class BasicGraphicMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicGraphicMatroid(int vertices, std::vector<std::pair<int, int>> edges)
      : BasicMatroid<Words>(static_cast<int>(edges.size())),
        vertices_(vertices),
        edges_(std::move(edges)) {
    if (vertices < 0) throw InvalidInputError("negative vertex count");
    for (auto [u, v] : edges_)
      if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_)
        throw InvalidInputError("edge endpoint outside vertex range");
  }

  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return forest_size(a) == a.size();
  }

  // Number of endpoints touched minus number of components of the subgraph.
  int rank(const Set& a) const override {
    this->check_universe(a);
    return forest_size(a);
  }

 private:
  int forest_size(const Set& a) const {
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int merged = 0;
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1)) {
      int ru = find(edges_[e].first), rv = find(edges_[e].second);
      if (ru != rv) {
        parent[ru] = rv;
        ++merged;
      }
    }
    return merged;
  }

  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Columns of a matrix over GF(p); independence is linear independence mod p.
template <int Words = 1>
class BasicLinearMatroidGF final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicLinearMatroidGF(long long p, std::vector<std::vector<long long>> rows)
      : BasicMatroid<Words>(rows.empty() ? 0 : static_cast<int>(rows[0].size())),
        p_(p),
        rows_(std::move(rows)) {
    if (!is_prime(p)) throw InvalidInputError("GF modulus " + std::to_string(p) + " is not prime");
    for (const auto& r : rows_) {
      if (r.size() != rows_[0].size()) throw InvalidInputError("ragged matrix");
      for (long long v : r)
        if (v % p_ < 0) throw InvalidInputError("negative entry; reduce mod p first");
    }
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return elimination_rank(a) == a.size();
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return elimination_rank(a);
  }

 private:
  static bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  int elimination_rank(const Set& a) const {
    std::vector<int> cols = a.elements();
    int m = static_cast<int>(rows_.size()), k = static_cast<int>(cols.size());
    std::vector<std::vector<long long>> t(m, std::vector<long long>(k));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j) t[i][j] = rows_[i][cols[j]] % p_;
    int r = 0;
    for (int j = 0; j < k && r < m; ++j) {
      int pivot = -1;
      for (int i = r; i < m; ++i)
        if (t[i][j] % p_ != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      std::swap(t[r], t[pivot]);
      long long inv = mod_inverse(t[r][j]);
      for (int j2 = j; j2 < k; ++j2) t[r][j2] = t[r][j2] * inv % p_;
      for (int i = 0; i < m; ++i) {
        if (i == r || t[i][j] == 0) continue;
        long long f = t[i][j];
        for (int j2 = j; j2 < k; ++j2) t[i][j2] = ((t[i][j2] - f * t[r][j2]) % p_ + p_) % p_;
      }
      ++r;
    }
    return r;
  }

  long long mod_inverse(long long x) const {
    long long res = 1, base = x % p_, e = p_ - 2;
    while (e) {
      if (e & 1) res = res * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return res;
  }

  long long p_;
  std::vector<std::vector<long long>> rows_;
};

// Columns of a matrix over the rationals, eliminated exactly.
template <int Words = 1>
class BasicLinearMatroidQ final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  explicit BasicLinearMatroidQ(std::vector<std::vector<Rational>> rows)
      : BasicMatroid<Words>(rows.empty() ? 0 : static_cast<int>(rows[0].size())),
        rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (r.size() != rows_[0].size()) throw InvalidInputError("ragged matrix");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return elimination_rank(a) == a.size();
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return elimination_rank(a);
  }

 private:
  int elimination_rank(const Set& a) const {
    std::vector<int> cols = a.elements();
    int m = static_cast<int>(rows_.size()), k = static_cast<int>(cols.size());
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(k));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j) t[i][j] = rows_[i][cols[j]];
    int r = 0;
    for (int j = 0; j < k && r < m; ++j) {
      int pivot = -1;
      for (int i = r; i < m; ++i)
        if (t[i][j] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      std::swap(t[r], t[pivot]);
      for (int i = 0; i < m; ++i) {
        if (i == r || t[i][j] == 0) continue;
        Rational f = t[i][j] / t[r][j];
        for (int j2 = j; j2 < k; ++j2) t[i][j2] -= f * t[r][j2];
      }
      ++r;
    }
    return r;
  }

  std::vector<std::vector<Rational>> rows_;
};

// Sets independent iff they can be matched injectively into a set family.
template <int Words = 1>
class BasicTransversalMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicTransversalMatroid(int n, std::vector<Set> family)
      : BasicMatroid<Words>(n), family_(std::move(family)) {
    adj_.resize(n);
    for (int j = 0; j < static_cast<int>(family_.size()); ++j) {
      if (family_[j].universe() != n)
        throw UniverseMismatchError("family member universe mismatch");
      for (int e = family_[j].min_element(); e >= 0; e = family_[j].next_element(e + 1))
        adj_[e].push_back(j);
    }
  }

  const std::vector<Set>& family() const { return family_; }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return matching_size(a) == a.size();
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return matching_size(a);
  }

  std::unique_ptr<IncrementalSet<Words>> incremental() const override;

 private:
  template <int W>
  friend class TransversalIncrementalSet;

  int matching_size(const Set& a) const {
    std::vector<int> owner(family_.size(), -1);
    std::vector<int> stamp(family_.size(), -1);
    int tick = 0, matched = 0;
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1), ++tick)
      if (augment(e, owner, stamp, tick)) ++matched;
    return matched;
  }

  bool augment(int e, std::vector<int>& owner, std::vector<int>& stamp, int tick) const {
    for (int j : adj_[e]) {
      if (stamp[j] == tick) continue;
      stamp[j] = tick;
      if (owner[j] < 0 || augment(owner[j], owner, stamp, tick)) {
        owner[j] = e;
        return true;
      }
    }
    return false;
  }

  std::vector<Set> family_;
  std::vector<std::vector<int>> adj_;
};

// Incremental matching mirror: one augmenting-path attempt per query instead
// of a from-scratch matching.
template <int Words>
class TransversalIncrementalSet final : public IncrementalSet<Words> {
 public:
  explicit TransversalIncrementalSet(const BasicTransversalMatroid<Words>& m)
      : IncrementalSet<Words>(m.ground_size()),
        m_(m),
        owner_(m.family().size(), -1),
        set_of_(m.ground_size(), -1),
        stamp_(m.family().size(), -1) {}

  bool can_add(int e) const override {
    if (this->current_.contains(e)) return false;
    ++tick_;
    return reachable_free_set(e) >= 0;
  }

  bool can_swap(int add, int remove) const override {
    if (!this->current_.contains(remove)) return false;
    if (add == remove) return true;
    if (this->current_.contains(add)) return false;
    int freed = set_of_[remove];
    unhook(remove);
    ++tick_;
    bool ok = reachable_free_set(add) >= 0;
    hook(remove, freed);
    return ok;
  }

  void add(int e) override {
    ++tick_;
    if (!flip_augment(e)) throw InternalError("incremental matching add on dependent set");
    this->current_.insert(e);
  }

  void remove(int e) override {
    if (!this->current_.contains(e)) throw InternalError("removing absent element");
    unhook(e);
    this->current_.erase(e);
  }

 private:
  // DFS over alternating paths; returns a free set index reachable from e, -1
  // if none. Read-only.
  int reachable_free_set(int e) const {
    for (int j : m_.adj_[e]) {
      if (stamp_[j] == tick_) continue;
      stamp_[j] = tick_;
      if (owner_[j] < 0) return j;
      if (reachable_free_set(owner_[j]) >= 0) return j;
    }
    return -1;
  }

  bool flip_augment(int e) {
    for (int j : m_.adj_[e]) {
      if (stamp_[j] == tick_) continue;
      stamp_[j] = tick_;
      if (owner_[j] < 0 || flip_augment(owner_[j])) {
        owner_[j] = e;
        set_of_[e] = j;
        return true;
      }
    }
    return false;
  }

  void unhook(int e) const {
    owner_[set_of_[e]] = -1;
    set_of_[e] = -1;
  }

  void hook(int e, int j) const {
    owner_[j] = e;
    set_of_[e] = j;
  }

  const BasicTransversalMatroid<Words>& m_;
  mutable std::vector<int> owner_;
  mutable std::vector<int> set_of_;
  mutable std::vector<int> stamp_;
  mutable int tick_ = 0;
};

template <int Words>
std::unique_ptr<IncrementalSet<Words>> BasicTransversalMatroid<Words>::incremental() const {
  return std::make_unique<TransversalIncrementalSet<Words>>(*this);
}

// Capacity bounds over a laminar set family (members pairwise nested or disjoint).
template <int Words = 1>
class BasicLaminarMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicLaminarMatroid(int n, std::vector<Set> family, std::vector<int> capacities)
      : BasicMatroid<Words>(n), family_(std::move(family)), caps_(std::move(capacities)) {
    if (family_.size() != caps_.size())
      throw InvalidInputError("laminar family and capacity counts differ");
    for (std::size_t i = 0; i < family_.size(); ++i) {
      if (family_[i].universe() != n) throw UniverseMismatchError("family member universe mismatch");
      if (caps_[i] < 0) throw InvalidInputError("negative capacity");
      for (std::size_t j = i + 1; j < family_.size(); ++j) {
        const Set& a = family_[i];
        const Set& b = family_[j];
        if (a.intersects(b) && !a.subset_of(b) && !b.subset_of(a))
          throw InvalidInputError("family is not laminar: " + a.to_string() + " vs " +
                                  b.to_string());
      }
    }
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    for (std::size_t i = 0; i < family_.size(); ++i)
      if ((a & family_[i]).size() > caps_[i]) return false;
    return true;
  }

 private:
  std::vector<Set> family_;
  std::vector<int> caps_;
};

// Matroid given by an explicit basis list; independent iff inside some basis.
template <int Words = 1>
class BasicExplicitBasesMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicExplicitBasesMatroid(int n, std::vector<Set> bases)
      : BasicMatroid<Words>(n), bases_(std::move(bases)) {
    if (bases_.empty()) throw InvalidInputError("explicit matroid needs at least one basis");
    for (const Set& b : bases_) {
      if (b.universe() != n) throw UniverseMismatchError("basis universe mismatch");
      if (b.size() != bases_[0].size())
        throw InvalidInputError("explicit bases must share one cardinality");
    }
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    for (const Set& b : bases_)
      if (a.subset_of(b)) return true;
    return false;
  }

 private:
  std::vector<Set> bases_;
};

// Arbitrary set family used verbatim as the "independent" sets. Deliberately
// not necessarily a matroid; the axiom checker feeds on these.
template <int Words = 1>
class BasicExplicitFamilyOracle final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicExplicitFamilyOracle(int n, std::vector<Set> family)
      : BasicMatroid<Words>(n), family_(std::move(family)) {
    for (const Set& s : family_)
      if (s.universe() != n) throw UniverseMismatchError("family member universe mismatch");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    for (const Set& s : family_)
      if (s == a) return true;
    return false;
  }

 private:
  std::vector<Set> family_;
};

using UniformMatroid = BasicUniformMatroid<1>;
using GraphicMatroid = BasicGraphicMatroid<1>;
using LinearMatroidGF = BasicLinearMatroidGF<1>;
using LinearMatroidQ = BasicLinearMatroidQ<1>;
using TransversalMatroid = BasicTransversalMatroid<1>;
using LaminarMatroid = BasicLaminarMatroid<1>;
using ExplicitBasesMatroid = BasicExplicitBasesMatroid<1>;
using ExplicitFamilyOracle = BasicExplicitFamilyOracle<1>;

}  // namespace matroidlab

#endif
