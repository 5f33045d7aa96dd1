#ifndef MATROIDLAB_UNION_HPP
#define MATROIDLAB_UNION_HPP

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "matroidlab/constructions.hpp"
#include "matroidlab/matroid.hpp"

namespace matroidlab {

template <int Words = 1>
struct BasicWCovering {
  std::vector<std::pair<int, BasicElementSet<Words>>> classes;  // (matroid index, class)
  std::vector<int> weight;
};

template <int Words = 1>
struct BasicUnionCertificate {
  bool ok = false;
  BasicWCovering<Words> covering;
  BasicElementSet<Words> violating_set;
};

namespace detail {

// Greedy maximum packing of `todo` into classes independent in the respective
// matroids, one class per matroid, grown by shortest augmenting paths. An arc
// u -> v means u can enter v's class once v leaves; a class with room to take
// u directly ends a path. Elements whose search fails are skipped; they stay
// unplaceable for good because the packable sets form a matroid. After the
// sweep, `region` is everything reachable from the unplaced elements, which
// makes it the exact minimizer of sum_i r_i(A) + |E \ A| over the ground set.
template <int Words>
struct PackingOutcome {
  std::vector<BasicElementSet<Words>> classes;
  BasicElementSet<Words> unplaced;
  BasicElementSet<Words> region;
};

template <int Words>
PackingOutcome<Words> pack_elements(const std::vector<BasicMatroidPtr<Words>>& ms,
                                    const BasicElementSet<Words>& todo) {
  using Set = BasicElementSet<Words>;
  const int n = ms.empty() ? 0 : ms[0]->ground_size();
  const int k = static_cast<int>(ms.size());

  std::vector<std::unique_ptr<IncrementalSet<Words>>> inc;
  inc.reserve(k);
  for (const auto& m : ms) inc.push_back(m->incremental());
  std::vector<int> class_of(n, -1);

  const auto bfs = [&](const Set& sources, bool apply, Set* reachable) -> bool {
    if (sources.empty()) {
      if (reachable) *reachable = Set(n);
      return false;
    }
    std::vector<int> prev(n, -2);
    std::deque<int> queue;
    for (int e = sources.min_element(); e >= 0; e = sources.next_element(e + 1)) {
      prev[e] = -1;
      queue.push_back(e);
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int j = 0; j < k; ++j) {
        if (!inc[j]->can_add(u)) continue;
        if (!apply) throw InternalError("stuck element reached an open class");
        int into = j, cur = u;
        while (cur >= 0) {
          int old = class_of[cur];
          class_of[cur] = into;
          into = old;
          cur = prev[cur] >= 0 ? prev[cur] : -1;
        }
        // Rebuild the mutated classes from scratch; the shortest-path theorem
        // says every one of them is still independent, and we verify it.
        std::vector<Set> masks(k, Set(n));
        for (int e = 0; e < n; ++e)
          if (class_of[e] >= 0) masks[class_of[e]].insert(e);
        for (int c = 0; c < k; ++c) {
          if (inc[c]->current() == masks[c]) continue;
          inc[c] = ms[c]->incremental();
          for (int e = masks[c].min_element(); e >= 0; e = masks[c].next_element(e + 1)) {
            if (!inc[c]->can_add(e))
              throw InternalError("augmenting path produced a dependent class");
            inc[c]->add(e);
          }
        }
        return true;
      }
      for (int j = 0; j < k; ++j) {
        if (class_of[u] == j) continue;
        const Set& cls = inc[j]->current();
        for (int v = cls.min_element(); v >= 0; v = cls.next_element(v + 1)) {
          if (prev[v] != -2) continue;
          if (inc[j]->can_swap(u, v)) {
            prev[v] = u;
            queue.push_back(v);
          }
        }
      }
    }
    if (reachable) {
      Set r(n);
      for (int e = 0; e < n; ++e)
        if (prev[e] != -2) r.insert(e);
      *reachable = r;
    }
    return false;
  };

  Set unplaced(n);
  for (int x = todo.min_element(); x >= 0; x = todo.next_element(x + 1))
    if (!bfs(Set::of(n, {x}), true, nullptr)) unplaced.insert(x);

  PackingOutcome<Words> out;
  out.unplaced = unplaced;
  bfs(unplaced, false, &out.region);
  out.classes.assign(k, Set(n));
  for (int e = 0; e < n; ++e)
    if (class_of[e] >= 0) out.classes[class_of[e]].insert(e);
  return out;
}

template <int Words>
void require_shared_ground(const std::vector<BasicMatroidPtr<Words>>& ms) {
  if (ms.empty()) throw InvalidInputError("need at least one matroid");
  for (const auto& m : ms)
    if (m->ground_size() != ms[0]->ground_size())
      throw UniverseMismatchError("matroids must share one ground set");
}

}  // namespace detail

// Constructive weighted matroid union: either a covering whose class V_i is
// independent in M_i and hits every element e exactly w(e) times, or a subset
// A with sum_i r_i(A) < sum_{e in A} w(e) proving none exists. The weighted
// case reduces to the unweighted one by replicating e into w(e) parallel
// copies in every matroid.
template <int Words>
BasicUnionCertificate<Words> matroid_union(const std::vector<BasicMatroidPtr<Words>>& ms,
                                           const std::vector<int>& w) {
  using Set = BasicElementSet<Words>;
  detail::require_shared_ground(ms);
  const int n = ms[0]->ground_size();
  if (static_cast<int>(w.size()) != n)
    throw InvalidInputError("weight vector length does not match ground size");
  long long blown = 0;
  for (int c : w) {
    if (c < 0) throw InvalidInputError("negative weight");
    blown += c;
  }
  if (blown > Set::kCapacity)
    throw CapExceededError("weighted union needs " + std::to_string(blown) +
                           " replicated elements");

  auto first_blowup = std::make_shared<BasicBlowUpMatroid<Words, Words>>(ms[0], w);
  const std::vector<int>& to_orig = first_blowup->copy_map();
  std::vector<BasicMatroidPtr<Words>> blown_ms;
  blown_ms.reserve(ms.size());
  blown_ms.push_back(first_blowup);
  for (std::size_t i = 1; i < ms.size(); ++i)
    blown_ms.push_back(std::make_shared<BasicBlowUpMatroid<Words, Words>>(ms[i], w));

  auto packed = detail::pack_elements(blown_ms, Set::full(static_cast<int>(blown)));

  BasicUnionCertificate<Words> cert;
  if (packed.unplaced.empty()) {
    cert.ok = true;
    cert.covering.weight = w;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Set v(n);
      for (int e = packed.classes[i].min_element(); e >= 0;
           e = packed.classes[i].next_element(e + 1))
        v.insert(to_orig[e]);
      if (!ms[i]->is_independent(v)) throw InternalError("covering class fails independence");
      cert.covering.classes.emplace_back(static_cast<int>(i), v);
    }
    std::vector<int> seen(n, 0);
    for (const auto& [i, v] : cert.covering.classes)
      for (int e = v.min_element(); e >= 0; e = v.next_element(e + 1)) ++seen[e];
    if (seen != w) throw InternalError("covering multiplicities disagree with the weights");
    return cert;
  }

  Set bad(n);
  for (int e = packed.region.min_element(); e >= 0; e = packed.region.next_element(e + 1))
    bad.insert(to_orig[e]);
  long long ranks = 0, want = 0;
  for (const auto& m : ms) ranks += m->rank(bad);
  for (int e = bad.min_element(); e >= 0; e = bad.next_element(e + 1)) want += w[e];
  if (ranks >= want) throw InternalError("violating set fails to violate");
  cert.ok = false;
  cert.violating_set = bad;
  return cert;
}

// Cover with k independent sets; exists iff k * r(A) >= |A| for every A.
template <int Words>
BasicUnionCertificate<Words> partition_into_independent(BasicMatroidPtr<Words> m, int k) {
  if (k < 1) throw InvalidInputError("need at least one class");
  std::vector<BasicMatroidPtr<Words>> ms(static_cast<std::size_t>(k), m);
  return matroid_union(ms, std::vector<int>(m->ground_size(), 1));
}

// k pairwise disjoint bases; exist iff k * r(A) + |E \ A| >= k * r(E) for
// every A. Runs a maximum packing into k classes: the packable sets form the
// union matroid, so the greedy packing is maximum, and it reaches k * r(E)
// exactly when every class is a basis.
template <int Words>
BasicUnionCertificate<Words> disjoint_bases(BasicMatroidPtr<Words> m, int k) {
  using Set = BasicElementSet<Words>;
  if (k < 1) throw InvalidInputError("need at least one basis");
  const int n = m->ground_size();
  const int full = m->full_rank();
  std::vector<BasicMatroidPtr<Words>> ms(static_cast<std::size_t>(k), m);
  auto packed = detail::pack_elements(ms, Set::full(n));

  long long covered = 0;
  for (const auto& c : packed.classes) covered += c.size();

  BasicUnionCertificate<Words> cert;
  if (covered == static_cast<long long>(k) * full) {
    cert.ok = true;
    cert.covering.weight.assign(n, 0);
    for (int i = 0; i < k; ++i) {
      if (packed.classes[i].size() != full || !m->is_independent(packed.classes[i]))
        throw InternalError("packed class is not a basis");
      cert.covering.classes.emplace_back(i, packed.classes[i]);
      for (int e = packed.classes[i].min_element(); e >= 0;
           e = packed.classes[i].next_element(e + 1))
        cert.covering.weight[e] = 1;
    }
    return cert;
  }

  const Set& bad = packed.region;
  long long lhs = static_cast<long long>(k) * m->rank(bad) + (n - bad.size());
  if (lhs >= static_cast<long long>(k) * full) throw InternalError("violating set fails to violate");
  cert.ok = false;
  cert.violating_set = bad;
  return cert;
}

template <int Words = 1>
struct BasicIntersectResult {
  BasicElementSet<Words> common;     // maximum set independent in both matroids
  BasicElementSet<Words> minimizer;  // A with |common| = r1(A) + r2(E \ A)
};

// Maximum common independent set of two matroids via a packing with M1 and
// the dual of M2: extend the dual class to a dual basis B*, then E \ B* is a
// basis of M2 and the M1 class minus B* is the answer.
template <int Words>
BasicIntersectResult<Words> max_common_independent(BasicMatroidPtr<Words> m1,
                                                   BasicMatroidPtr<Words> m2) {
  using Set = BasicElementSet<Words>;
  if (m1->ground_size() != m2->ground_size())
    throw UniverseMismatchError("matroids must share one ground set");
  const int n = m1->ground_size();

  auto dual2 = std::make_shared<BasicDualMatroid<Words>>(m2);
  std::vector<BasicMatroidPtr<Words>> ms{m1, dual2};
  auto packed = detail::pack_elements(ms, Set::full(n));

  Set dual_basis = packed.classes[1];
  for (int e = 0; e < n; ++e) {
    if (dual_basis.contains(e)) continue;
    dual_basis.insert(e);
    if (!dual2->is_independent(dual_basis)) dual_basis.erase(e);
  }

  BasicIntersectResult<Words> out;
  out.common = packed.classes[0] - dual_basis;

  if (n <= 12) {
    int best = -1;
    Set arg(n);
    for_each_subset_canonical(Set::full(n), [&](const Set& a) {
      int v = m1->rank(a) + m2->rank(Set::full(n) - a);
      if (best < 0 || v < best) {
        best = v;
        arg = a;
      }
      return true;
    });
    out.minimizer = arg;
  } else {
    out.minimizer = packed.region;
  }

  if (!m1->is_independent(out.common) || !m2->is_independent(out.common))
    throw InternalError("common set fails independence");
  if (out.common.size() !=
      m1->rank(out.minimizer) + m2->rank(Set::full(n) - out.minimizer))
    throw InternalError("min-max equality fails on the returned certificate");
  return out;
}

using WCovering = BasicWCovering<1>;
using UnionCertificate = BasicUnionCertificate<1>;
using IntersectResult = BasicIntersectResult<1>;

}  // namespace matroidlab

#endif
