#ifndef MATROIDLAB_CONSTRUCTIONS_HPP
#define MATROIDLAB_CONSTRUCTIONS_HPP

#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "matroidlab/matroid.hpp"

namespace matroidlab {

// r*(A) = |A| - r(E) + r(E\A).
template <int Words = 1>
class BasicDualMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  explicit BasicDualMatroid(BasicMatroidPtr<Words> inner)
      : BasicMatroid<Words>(inner->ground_size()),
        inner_(std::move(inner)),
        inner_full_rank_(inner_->full_rank()) {}

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return inner_->rank(this->ground() - a) == inner_full_rank_;
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return a.size() - inner_full_rank_ + inner_->rank(this->ground() - a);
  }

 private:
  BasicMatroidPtr<Words> inner_;
  int inner_full_rank_;
};

// Restriction to keep, reindexed onto 0..|keep|-1 in ascending element order.
template <int Words = 1>
class BasicRestrictMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicRestrictMatroid(BasicMatroidPtr<Words> inner, const Set& keep)
      : BasicMatroid<Words>(keep.size()), inner_(std::move(inner)), to_orig_(keep.elements()) {
    if (keep.universe() != inner_->ground_size())
      throw UniverseMismatchError("restriction set universe mismatch");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return inner_->is_independent(embed(a));
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return inner_->rank(embed(a));
  }

 private:
  Set embed(const Set& a) const {
    Set s(inner_->ground_size());
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1)) s.insert(to_orig_[e]);
    return s;
  }

  BasicMatroidPtr<Words> inner_;
  std::vector<int> to_orig_;
};

// Restriction that keeps the original universe: everything outside allowed
// becomes a loop. Used for list-coloring, where color i may only be placed
// on elements whose list contains i.
template <int Words = 1>
class BasicSubsetRestrictMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicSubsetRestrictMatroid(BasicMatroidPtr<Words> inner, Set allowed)
      : BasicMatroid<Words>(inner->ground_size()),
        inner_(std::move(inner)),
        allowed_(std::move(allowed)) {
    if (allowed_.universe() != inner_->ground_size())
      throw UniverseMismatchError("restriction set universe mismatch");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return a.subset_of(allowed_) && inner_->is_independent(a);
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return inner_->rank(a & allowed_);
  }

 private:
  BasicMatroidPtr<Words> inner_;
  Set allowed_;
};

// Contraction by F, reindexed onto the complement. A fixed maximal independent
// subset of F is frozen at construction; r'(A) = r(A u F) - r(F).
template <int Words = 1>
class BasicContractMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicContractMatroid(BasicMatroidPtr<Words> inner, const Set& away)
      : BasicMatroid<Words>(inner->ground_size() - away.size()),
        inner_(std::move(inner)),
        to_orig_((Set::full(inner_->ground_size()) - away).elements()),
        base_of_away_(greedy_base(*inner_, away)) {
    if (away.universe() != inner_->ground_size())
      throw UniverseMismatchError("contraction set universe mismatch");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return inner_->is_independent(embed(a) | base_of_away_);
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return inner_->rank(embed(a) | base_of_away_) - base_of_away_.size();
  }

 private:
  static Set greedy_base(const BasicMatroid<Words>& m, const Set& within) {
    Set picked(m.ground_size());
    for (int e = within.min_element(); e >= 0; e = within.next_element(e + 1)) {
      picked.insert(e);
      if (!m.is_independent(picked)) picked.erase(e);
    }
    return picked;
  }

  Set embed(const Set& a) const {
    Set s(inner_->ground_size());
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1)) s.insert(to_orig_[e]);
    return s;
  }

  BasicMatroidPtr<Words> inner_;
  std::vector<int> to_orig_;
  Set base_of_away_;
};

// Contraction that keeps the original universe: contracted elements become
// loops. Convenient when weights or colorings index the original elements.
template <int Words = 1>
class BasicContractKeepMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  BasicContractKeepMatroid(BasicMatroidPtr<Words> inner, Set away)
      : BasicMatroid<Words>(inner->ground_size()),
        inner_(std::move(inner)),
        away_(std::move(away)),
        base_of_away_(greedy_base(*inner_, away_)) {
    if (away_.universe() != inner_->ground_size())
      throw UniverseMismatchError("contraction set universe mismatch");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return !a.intersects(away_) && inner_->is_independent(a | base_of_away_);
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    return inner_->rank((a - away_) | base_of_away_) - base_of_away_.size();
  }

 private:
  static Set greedy_base(const BasicMatroid<Words>& m, const Set& within) {
    Set picked(m.ground_size());
    for (int e = within.min_element(); e >= 0; e = within.next_element(e + 1)) {
      picked.insert(e);
      if (!m.is_independent(picked)) picked.erase(e);
    }
    return picked;
  }

  BasicMatroidPtr<Words> inner_;
  Set away_;
  Set base_of_away_;
};

// Disjoint union; parts occupy consecutive index blocks.
template <int Words = 1>
class BasicDirectSumMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  explicit BasicDirectSumMatroid(std::vector<BasicMatroidPtr<Words>> parts)
      : BasicMatroid<Words>(total_size(parts)), parts_(std::move(parts)) {
    int off = 0;
    for (const auto& p : parts_) {
      offsets_.push_back(off);
      off += p->ground_size();
    }
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (!parts_[i]->is_independent(slice(a, i))) return false;
    return true;
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    int r = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) r += parts_[i]->rank(slice(a, i));
    return r;
  }

 private:
  static int total_size(const std::vector<BasicMatroidPtr<Words>>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p->ground_size();
    return n;
  }

  Set slice(const Set& a, std::size_t i) const {
    Set s(parts_[i]->ground_size());
    int off = offsets_[i], n = parts_[i]->ground_size();
    for (int e = a.next_element(off); e >= 0 && e < off + n; e = a.next_element(e + 1))
      s.insert(e - off);
    return s;
  }

  std::vector<BasicMatroidPtr<Words>> parts_;
  std::vector<int> offsets_;
};

// Replaces element e by copies[e] parallel copies (copies[e] may be zero).
// Copies of the same element are mutually dependent; otherwise independence
// is inherited through the projection.
template <int Words = 1, int InnerWords = Words>
class BasicBlowUpMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;
  using InnerSet = BasicElementSet<InnerWords>;

  BasicBlowUpMatroid(BasicMatroidPtr<InnerWords> inner, const std::vector<int>& copies)
      : BasicMatroid<Words>(total_copies(copies)), inner_(std::move(inner)) {
    if (static_cast<int>(copies.size()) != inner_->ground_size())
      throw InvalidInputError("blow-up multiplicity count does not match ground size");
    for (int e = 0; e < static_cast<int>(copies.size()); ++e)
      for (int c = 0; c < copies[e]; ++c) to_orig_.push_back(e);
  }

  const std::vector<int>& copy_map() const { return to_orig_; }

  std::unique_ptr<IncrementalSet<InnerWords>> inner_incremental() const {
    return inner_->incremental();
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    InnerSet proj(inner_->ground_size());
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1)) {
      int orig = to_orig_[e];
      if (proj.contains(orig)) return false;
      proj.insert(orig);
    }
    return inner_->is_independent(proj);
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    InnerSet proj(inner_->ground_size());
    for (int e = a.min_element(); e >= 0; e = a.next_element(e + 1)) proj.insert(to_orig_[e]);
    return inner_->rank(proj);
  }

  std::unique_ptr<IncrementalSet<Words>> incremental() const override;

 private:
  static int total_copies(const std::vector<int>& copies) {
    int n = 0;
    for (int c : copies) {
      if (c < 0) throw InvalidInputError("negative blow-up multiplicity");
      n += c;
    }
    return n;
  }

  BasicMatroidPtr<InnerWords> inner_;
  std::vector<int> to_orig_;
};

template <int Words, int InnerWords>
class BlowUpIncrementalSet final : public IncrementalSet<Words> {
 public:
  explicit BlowUpIncrementalSet(const BasicBlowUpMatroid<Words, InnerWords>& m)
      : IncrementalSet<Words>(m.ground_size()),
        map_(m.copy_map()),
        inner_(m.inner_incremental()) {}

  bool can_add(int e) const override {
    if (this->current_.contains(e)) return false;
    if (inner_->current().contains(map_[e])) return false;
    return inner_->can_add(map_[e]);
  }

  bool can_swap(int add, int remove) const override {
    if (!this->current_.contains(remove) || this->current_.contains(add)) return false;
    if (map_[add] == map_[remove]) return true;
    if (inner_->current().contains(map_[add])) return false;
    return inner_->can_swap(map_[add], map_[remove]);
  }

  void add(int e) override {
    inner_->add(map_[e]);
    this->current_.insert(e);
  }

  void remove(int e) override {
    inner_->remove(map_[e]);
    this->current_.erase(e);
  }

 private:
  const std::vector<int>& map_;
  std::unique_ptr<IncrementalSet<InnerWords>> inner_;
};

template <int Words, int InnerWords>
std::unique_ptr<IncrementalSet<Words>> BasicBlowUpMatroid<Words, InnerWords>::incremental() const {
  return std::make_unique<BlowUpIncrementalSet<Words, InnerWords>>(*this);
}

// Join (union) of matroids over one shared ground set.
// r(A) = min over B subset A of sum_i r_i(B) + |A\B|, evaluated by subset
// enumeration under a cap.
template <int Words = 1>
class BasicJoinMatroid final : public BasicMatroid<Words> {
 public:
  using Set = BasicElementSet<Words>;

  explicit BasicJoinMatroid(std::vector<BasicMatroidPtr<Words>> parts,
                            std::size_t enum_cap = kDefaultMaxEnum)
      : BasicMatroid<Words>(parts.empty() ? 0 : parts[0]->ground_size()),
        parts_(std::move(parts)),
        cap_(enum_cap) {
    if (parts_.empty()) throw InvalidInputError("join of zero matroids");
    for (const auto& p : parts_)
      if (p->ground_size() != this->ground_size())
        throw UniverseMismatchError("join parts must share one ground set");
  }

  bool is_independent(const Set& a) const override {
    this->check_universe(a);
    return rank(a) == a.size();
  }

  int rank(const Set& a) const override {
    this->check_universe(a);
    if (a.size() > 25 || (1ULL << a.size()) > cap_)
      throw CapExceededError("join rank enumeration over 2^" + std::to_string(a.size()) +
                             " subsets");
    int best = a.size();  // B = empty
    for_each_subset(a, [&](const Set& b) {
      int v = a.size() - b.size();
      for (const auto& p : parts_) {
        v += p->rank(b);
        if (v >= best) break;
      }
      best = std::min(best, v);
      return true;
    });
    return best;
  }

 private:
  std::vector<BasicMatroidPtr<Words>> parts_;
  std::size_t cap_;
};

using DualMatroid = BasicDualMatroid<1>;
using RestrictMatroid = BasicRestrictMatroid<1>;
using SubsetRestrictMatroid = BasicSubsetRestrictMatroid<1>;
using ContractMatroid = BasicContractMatroid<1>;
using ContractKeepMatroid = BasicContractKeepMatroid<1>;
using DirectSumMatroid = BasicDirectSumMatroid<1>;
using BlowUpMatroid = BasicBlowUpMatroid<1>;
using JoinMatroid = BasicJoinMatroid<1>;

}  // namespace matroidlab

#endif
