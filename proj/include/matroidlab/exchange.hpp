#ifndef MATROIDLAB_EXCHANGE_HPP
#define MATROIDLAB_EXCHANGE_HPP

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroidlab/element_set.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/matroid.hpp"
#include "matroidlab/union.hpp"

namespace matroidlab {

template <int Words = 1>
using BasicBaseSequence = std::vector<BasicElementSet<Words>>;

// Move e from the i-th basis into the j-th and f the other way.
struct ExchangeMove {
  int i = 0, j = 0;
  int e = 0, f = 0;

  ExchangeMove inverse() const { return {i, j, f, e}; }
};

namespace detail {

template <int Words>
struct SetLess {
  bool operator()(const BasicElementSet<Words>& a, const BasicElementSet<Words>& b) const {
    return a.canonical_less(b);
  }
};

template <int Words>
struct SeqLess {
  bool operator()(const BasicBaseSequence<Words>& a, const BasicBaseSequence<Words>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return a[i].canonical_less(b[i]);
    }
    return false;
  }
};

template <int Words>
std::vector<int> union_counts(const BasicBaseSequence<Words>& seq, int n) {
  std::vector<int> counts(n, 0);
  for (const auto& b : seq)
    for (int e = b.min_element(); e >= 0; e = b.next_element(e + 1)) ++counts[e];
  return counts;
}

// Exact min-cost perfect assignment on a square matrix, by the standard
// potentials method; used with negated weights for maximum overlap.
inline std::vector<int> min_assignment(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(n + 1, LLONG_MAX);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = -1;
      long long delta = LLONG_MAX;
      for (int j = 1; j <= n; ++j)
        if (!used[j]) {
          long long cur = a[i0 - 1][j - 1] - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
          if (minv[j] < delta) {
            delta = minv[j];
            j1 = j;
          }
        }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j]) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

template <int Words>
bool is_compatible(const BasicBaseSequence<Words>& xs, const BasicBaseSequence<Words>& ys) {
  if (xs.size() != ys.size()) throw InvalidInputError("sequences differ in length");
  if (xs.empty()) return true;
  const int n = xs.front().universe();
  return detail::union_counts(xs, n) == detail::union_counts(ys, n);
}

// Largest total intersection over all matchings of the two sequences.
template <int Words>
long long overlap(const BasicBaseSequence<Words>& xs, const BasicBaseSequence<Words>& ys) {
  if (xs.size() != ys.size()) throw InvalidInputError("sequences differ in length");
  const int n = static_cast<int>(xs.size());
  if (n == 0) return 0;
  long long wmax = 0;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      w[i][j] = (xs[i] & ys[j]).size();
      wmax = std::max(wmax, w[i][j]);
    }
  std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cost[i][j] = wmax - w[i][j];
  auto assign = detail::min_assignment(cost);
  long long total = 0;
  for (int i = 0; i < n; ++i) total += w[i][assign[i]];
  return total;
}

template <int Words>
void apply_exchange(const BasicMatroid<Words>& m, BasicBaseSequence<Words>& seq,
                    const ExchangeMove& mv) {
  if (mv.i == mv.j || mv.i < 0 || mv.j < 0 || mv.i >= static_cast<int>(seq.size()) ||
      mv.j >= static_cast<int>(seq.size()))
    throw InvalidInputError("exchange positions out of range");
  auto a = seq[mv.i], b = seq[mv.j];
  if (!a.contains(mv.e) || !b.contains(mv.f))
    throw InvalidInputError("exchange elements missing from their bases");
  a.erase(mv.e).insert(mv.f);
  b.erase(mv.f).insert(mv.e);
  if (!m.is_basis(a) || !m.is_basis(b)) throw InvalidInputError("exchange breaks a basis");
  seq[mv.i] = a;
  seq[mv.j] = b;
}

enum class TeRelation { kR1, kR2, kR3 };

template <int Words = 1>
struct BasicTeReport {
  bool ok = false;
  long long vertex_count = 0;
  long long class_count = 0;
  BasicBaseSequence<Words> witness_a, witness_b;  // same class, no move path
};

// Builds the full move graph on length-n base sequences (tuples under r1,
// multisets under r2 and r3) and checks that every compatibility class is a
// single component. r1/r2 moves are single symmetric exchanges, r2 adds
// permutations by quotienting, and an r3 move replaces a pair of bases by
// any basis pair with the same multiset union.
template <int Words>
BasicTeReport<Words> te_verify(const BasicMatroid<Words>& m, int n, TeRelation rel,
                               std::size_t cap = kDefaultMaxEnum) {
  using Set = BasicElementSet<Words>;
  using Seq = BasicBaseSequence<Words>;
  if (n < 1) throw InvalidInputError("sequence length must be positive");
  auto bases = m.bases(cap);
  std::sort(bases.begin(), bases.end(), detail::SetLess<Words>{});
  const std::size_t bcount = bases.size();

  double size_guess = 1;
  for (int i = 0; i < n; ++i) size_guess *= static_cast<double>(bcount);
  if (size_guess > static_cast<double>(cap))
    throw CapExceededError("sequence space of about " + std::to_string(size_guess) + " states");

  const bool sorted_reps = rel != TeRelation::kR1;
  std::map<Seq, int, detail::SeqLess<Words>> index;
  std::vector<Seq> verts;
  {
    Seq work(n, bases.empty() ? Set(m.ground_size()) : bases[0]);
    std::vector<std::size_t> pick(n, 0);
    if (!bases.empty()) {
      for (;;) {
        bool ordered = true;
        if (sorted_reps)
          for (int i = 0; i + 1 < n; ++i)
            if (pick[i] > pick[i + 1]) {
              ordered = false;
              break;
            }
        if (ordered) {
          for (int i = 0; i < n; ++i) work[i] = bases[pick[i]];
          index.emplace(work, static_cast<int>(verts.size()));
          verts.push_back(work);
        }
        int at = n - 1;
        while (at >= 0 && ++pick[at] == bcount) pick[at--] = 0;
        if (at < 0) break;
      }
    }
  }

  detail::Dsu dsu(static_cast<int>(verts.size()));
  auto connect = [&](const Seq& from, Seq to) {
    if (sorted_reps)
      std::sort(to.begin(), to.end(),
                [](const Set& a, const Set& b) { return a.canonical_less(b); });
    auto it = index.find(to);
    if (it == index.end()) throw InternalError("move left the enumerated sequence space");
    dsu.unite(index.at(from), it->second);
  };

  for (const auto& seq : verts) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Set bi = seq[i], bj = seq[j];
        if (rel == TeRelation::kR3) {
          const Set both = bi & bj, any = bi | bj;
          for (const auto& d : bases) {
            if (!both.subset_of(d) || !d.subset_of(any)) continue;
            Set dp = both | (any - d);
            if (!m.is_basis(dp)) continue;
            Seq to = seq;
            to[i] = d;
            to[j] = dp;
            connect(seq, std::move(to));
          }
        } else {
          const Set bi_only = bi - bj, bj_only = bj - bi;
          for (int e = bi_only.min_element(); e >= 0; e = bi_only.next_element(e + 1))
            for (int f = bj_only.min_element(); f >= 0; f = bj_only.next_element(f + 1)) {
              Set a = bi, b = bj;
              a.erase(e).insert(f);
              b.erase(f).insert(e);
              if (!m.is_basis(a) || !m.is_basis(b)) continue;
              Seq to = seq;
              to[i] = a;
              to[j] = b;
              connect(seq, std::move(to));
            }
        }
      }
  }

  BasicTeReport<Words> out;
  out.vertex_count = static_cast<long long>(verts.size());
  std::map<std::vector<int>, int> class_rep;  // union counts -> first vertex
  out.ok = true;
  for (const auto& [seq, idx] : index) {
    auto key = detail::union_counts(seq, m.ground_size());
    auto [it, fresh] = class_rep.try_emplace(key, idx);
    if (fresh) continue;
    if (out.ok && dsu.find(idx) != dsu.find(it->second)) {
      out.ok = false;
      out.witness_a = verts[it->second];
      out.witness_b = seq;
    }
  }
  out.class_count = static_cast<long long>(class_rep.size());
  return out;
}

// Bijections between base pairs under which every partial swap stays a
// basis; keyed on the canonically ordered pair and inverted on reversed
// lookups. Only the part moving across the symmetric difference is stored.
template <int Words = 1>
struct BasicSboCertificate {
  using Set = BasicElementSet<Words>;

  struct PairLess {
    bool operator()(const std::pair<Set, Set>& a, const std::pair<Set, Set>& b) const {
      if (!(a.first == b.first)) return a.first.canonical_less(b.first);
      if (a.second == b.second) return false;
      return a.second.canonical_less(b.second);
    }
  };

  std::map<std::pair<Set, Set>, std::map<int, int>, PairLess> pairs;

  void store(const Set& b1, const Set& b2, const std::map<int, int>& moved) {
    if (b2.canonical_less(b1)) {
      std::map<int, int> inv;
      for (auto [e, f] : moved) inv.emplace(f, e);
      pairs[{b2, b1}] = inv;
    } else {
      pairs[{b1, b2}] = moved;
    }
  }

  // Full bijection b1 -> b2, identity on the intersection.
  std::map<int, int> bijection(const Set& b1, const Set& b2) const {
    std::map<int, int> out;
    for (int e = (b1 & b2).min_element(); e >= 0; e = (b1 & b2).next_element(e + 1))
      out.emplace(e, e);
    if (b1 == b2) return out;
    const bool flipped = b2.canonical_less(b1);
    auto it = pairs.find(flipped ? std::make_pair(b2, b1) : std::make_pair(b1, b2));
    if (it == pairs.end()) throw InvalidInputError("certificate misses a base pair");
    for (auto [e, f] : it->second) out.emplace(flipped ? f : e, flipped ? e : f);
    return out;
  }
};

template <int Words = 1>
struct BasicSboResult {
  bool ok = false;
  BasicSboCertificate<Words> certificate;
  std::pair<BasicElementSet<Words>, BasicElementSet<Words>> failing_pair;
};

// For every base pair searches the bijections across the symmetric
// difference (the intersection is always fixed) for one where all partial
// swaps stay bases; first valid bijection in permutation order is kept.
template <int Words>
BasicSboResult<Words> is_strongly_base_orderable(const BasicMatroid<Words>& m,
                                                 std::size_t cap = kDefaultMaxEnum) {
  using Set = BasicElementSet<Words>;
  auto bases = m.bases(cap);
  std::sort(bases.begin(), bases.end(), detail::SetLess<Words>{});

  BasicSboResult<Words> out;
  out.failing_pair = {Set(m.ground_size()), Set(m.ground_size())};
  for (std::size_t x = 0; x < bases.size(); ++x)
    for (std::size_t y = x + 1; y < bases.size(); ++y) {
      const Set& b1 = bases[x];
      const Set& b2 = bases[y];
      const auto from = (b1 - b2).elements();
      auto to = (b2 - b1).elements();
      const int d = static_cast<int>(from.size());
      if (d > 7) throw CapExceededError("base pair differs in " + std::to_string(d) + " elements");

      std::map<int, int> found;
      do {
        bool good = true;
        for (std::uint32_t mask = 1; mask < (1u << d) && good; ++mask) {
          Set probe = b1;
          for (int t = 0; t < d; ++t)
            if (mask & (1u << t)) probe.erase(from[t]).insert(to[t]);
          good = m.is_basis(probe);
        }
        if (good) {
          for (int t = 0; t < d; ++t) found.emplace(from[t], to[t]);
          break;
        }
      } while (std::next_permutation(to.begin(), to.end()));

      if (found.empty() && d > 0) {
        out.ok = false;
        out.failing_pair = {b1, b2};
        return out;
      }
      out.certificate.store(b1, b2, found);
    }
  out.ok = true;
  return out;
}

// Walks one compatible sequence into a permutation of the other by single
// symmetric exchanges. Each round matches the sequences for maximum overlap,
// picks a position pair witnessing the difference, and splits the union of
// the two certificate bijections (a union of two matchings, hence bipartite)
// to rebuild both pairs; total overlap grows every round. Moves applied to
// the target side are emitted inverted at the end.
template <int Words>
std::vector<ExchangeMove> sbo_exchange_path(const BasicMatroid<Words>& m,
                                            const BasicBaseSequence<Words>& xs,
                                            const BasicBaseSequence<Words>& ys,
                                            const BasicSboCertificate<Words>& cert) {
  using Set = BasicElementSet<Words>;
  using Seq = BasicBaseSequence<Words>;
  if (!is_compatible(xs, ys)) throw InvalidInputError("sequences are not compatible");
  for (const auto& b : xs)
    if (!m.is_basis(b)) throw InvalidInputError("sequence entry is not a basis");
  for (const auto& b : ys)
    if (!m.is_basis(b)) throw InvalidInputError("sequence entry is not a basis");

  const int n = static_cast<int>(xs.size());
  Seq cur = xs, tgt = ys;
  std::vector<ExchangeMove> prefix, suffix;
  std::vector<int> match(n);
  long long last_overlap = -1;

  for (;;) {
    long long wmax = 0;
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        w[i][j] = (cur[i] & tgt[j]).size();
        wmax = std::max(wmax, w[i][j]);
      }
    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cost[i][j] = wmax - w[i][j];
    match = detail::min_assignment(cost);
    long long ov = 0;
    for (int i = 0; i < n; ++i) ov += w[i][match[i]];
    if (ov <= last_overlap) throw InternalError("overlap failed to increase");
    last_overlap = ov;

    int pos = -1;
    for (int i = 0; i < n && pos < 0; ++i)
      if (!(cur[i] == tgt[match[i]])) pos = i;
    if (pos < 0) break;

    const int e = (cur[pos] - tgt[match[pos]]).min_element();
    int other = -1;
    for (int j = 0; j < n && other < 0; ++j)
      if (j != pos && tgt[match[j]].contains(e) && !cur[j].contains(e)) other = j;
    if (other < 0) throw InternalError("compatible sequences lack a receiving pair");

    const Set b1 = cur[pos], b2 = cur[other];
    const Set d1 = tgt[match[pos]], d2 = tgt[match[other]];
    const auto pi_b = cert.bijection(b1, b2);
    const auto pi_d = cert.bijection(d1, d2);

    // Two-color the union of the two matchings across the pair differences.
    std::map<int, std::vector<int>> adj;
    for (int b = (b1 - b2).min_element(); b >= 0; b = (b1 - b2).next_element(b + 1)) {
      adj[b].push_back(pi_b.at(b));
      adj[pi_b.at(b)].push_back(b);
    }
    for (int d = (d1 - d2).min_element(); d >= 0; d = (d1 - d2).next_element(d + 1)) {
      adj[d].push_back(pi_d.at(d));
      adj[pi_d.at(d)].push_back(d);
    }
    std::map<int, int> side;
    for (const auto& [start, ignored] : adj) {
      if (side.count(start)) continue;
      side[start] = 0;
      std::vector<int> queue{start};
      while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int v : adj.at(u)) {
          if (auto it = side.find(v); it != side.end()) {
            if (it->second == side.at(u)) throw InternalError("matching union is not bipartite");
            continue;
          }
          side[v] = 1 - side.at(u);
          queue.push_back(v);
        }
      }
    }

    for (int b = (b1 - b2).min_element(); b >= 0; b = (b1 - b2).next_element(b + 1)) {
      if (side.at(b) != 1) continue;
      ExchangeMove mv{pos, other, b, pi_b.at(b)};
      apply_exchange(m, cur, mv);
      prefix.push_back(mv);
    }
    for (int d = (d1 - d2).min_element(); d >= 0; d = (d1 - d2).next_element(d + 1)) {
      if (side.at(d) != 1) continue;
      ExchangeMove mv{match[pos], match[other], d, pi_d.at(d)};
      apply_exchange(m, tgt, mv);
      suffix.push_back(mv);
    }
  }

  std::vector<int> into_cur(n);              // target position -> current position
  for (int i = 0; i < n; ++i) into_cur[match[i]] = i;
  std::vector<ExchangeMove> moves = prefix;
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
    ExchangeMove mv = it->inverse();
    mv.i = into_cur[mv.i];
    mv.j = into_cur[mv.j];
    apply_exchange(m, cur, mv);
    moves.push_back(mv);
  }

  auto done = cur;
  auto want = ys;
  detail::SeqLess<Words> less;
  std::sort(done.begin(), done.end(), [](const Set& a, const Set& b) { return a.canonical_less(b); });
  std::sort(want.begin(), want.end(), [](const Set& a, const Set& b) { return a.canonical_less(b); });
  if (less(done, want) || less(want, done))
    throw InternalError("exchange path missed the target sequence");
  return moves;
}

template <int Words>
int b_degree(const BasicElementSet<Words>& b, const BasicElementSet<Words>& bp) {
  return (bp - b).size();
}

// Splits a basis of B-degree d into d bases each one exchange away from B:
// swap the least workable element pair between B' and B, recurse on the
// lowered remainder. The outputs union with d-1 copies of B back to B'.
template <int Words>
std::vector<BasicElementSet<Words>> balanced_reduction(const BasicMatroid<Words>& m,
                                                       const BasicElementSet<Words>& b,
                                                       const BasicElementSet<Words>& bp) {
  using Set = BasicElementSet<Words>;
  if (!m.is_basis(b) || !m.is_basis(bp)) throw InvalidInputError("inputs must be bases");

  std::vector<Set> out;
  Set cur = bp;
  while (b_degree(b, cur) > 1) {
    const int e = (cur - b).min_element();
    bool stepped = false;
    const Set candidates = b - cur;
    for (int f = candidates.min_element(); f >= 0; f = candidates.next_element(f + 1)) {
      Set balanced = b, rest = cur;
      balanced.erase(f).insert(e);
      rest.erase(e).insert(f);
      if (m.is_basis(balanced) && m.is_basis(rest)) {
        out.push_back(balanced);
        cur = rest;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw InternalError("symmetric exchange must provide a pivot");
  }
  if (b_degree(b, cur) == 1) out.push_back(cur);

  std::vector<int> have(b.universe(), 0), want(b.universe(), 0);
  for (const auto& s : out) {
    if (b_degree(b, s) != 1) throw InternalError("reduction output is not balanced");
    for (int e = s.min_element(); e >= 0; e = s.next_element(e + 1)) ++have[e];
  }
  const int copies = b_degree(b, bp) - 1;
  for (int e = b.min_element(); e >= 0; e = b.next_element(e + 1)) want[e] += copies;
  for (int e = bp.min_element(); e >= 0; e = bp.next_element(e + 1)) ++want[e];
  if (have != want) throw InternalError("reduction changed the multiset union");
  return out;
}

template <int Words = 1>
struct BasicBlasiakSummary {
  long long vertex_count = 0;
  long long component_count = 0;
  bool connected = false;
  std::vector<BasicBaseSequence<Words>> witness;  // two vertices when disconnected
};

// Connectivity of the base-partition graph: vertices are unordered families
// of k disjoint bases covering the ground set; for k = 2 edges are symmetric
// exchanges, for k >= 3 edges join families sharing a basis.
template <int Words>
BasicBlasiakSummary<Words> blasiak_graph(const BasicMatroidPtr<Words>& m, int k,
                                         std::size_t cap = kDefaultMaxEnum) {
  using Set = BasicElementSet<Words>;
  using Seq = BasicBaseSequence<Words>;
  if (k < 2) throw InvalidInputError("partition count must be at least 2");
  const int n = m->ground_size();
  if (n != k * m->full_rank() || !disjoint_bases(m, k).ok)
    throw InvalidInputError("ground set is not a union of " + std::to_string(k) +
                            " disjoint bases");

  auto bases = m->bases(cap);
  std::sort(bases.begin(), bases.end(), detail::SetLess<Words>{});
  std::vector<Seq> verts;
  Seq stack;
  auto grow = [&](auto&& self, std::size_t from, const Set& used) -> void {
    if (static_cast<int>(stack.size()) == k) {
      if (used.size() == n) {
        verts.push_back(stack);
        if (verts.size() > cap) throw CapExceededError("partition family over the cap");
      }
      return;
    }
    for (std::size_t t = from; t < bases.size(); ++t) {
      if (bases[t].intersects(used)) continue;
      stack.push_back(bases[t]);
      self(self, t + 1, used | bases[t]);
      stack.pop_back();
    }
  };
  grow(grow, 0, Set(n));

  detail::Dsu dsu(static_cast<int>(verts.size()));
  if (k == 2) {
    std::map<Seq, int, detail::SeqLess<Words>> index;
    for (std::size_t t = 0; t < verts.size(); ++t) index.emplace(verts[t], static_cast<int>(t));
    for (std::size_t t = 0; t < verts.size(); ++t) {
      const Set b1 = verts[t][0], b2 = verts[t][1];
      for (int e = b1.min_element(); e >= 0; e = b1.next_element(e + 1))
        for (int f = b2.min_element(); f >= 0; f = b2.next_element(f + 1)) {
          Set a = b1, c = b2;
          a.erase(e).insert(f);
          c.erase(f).insert(e);
          if (!m->is_basis(a) || !m->is_basis(c)) continue;
          Seq to{a, c};
          if (c.canonical_less(a)) std::swap(to[0], to[1]);
          dsu.unite(static_cast<int>(t), index.at(to));
        }
    }
  } else {
    std::map<Set, std::vector<int>, detail::SetLess<Words>> holders;
    for (std::size_t t = 0; t < verts.size(); ++t)
      for (const auto& b : verts[t]) holders[b].push_back(static_cast<int>(t));
    for (const auto& [b, owners] : holders)
      for (std::size_t t = 1; t < owners.size(); ++t) dsu.unite(owners[0], owners[t]);
  }

  BasicBlasiakSummary<Words> out;
  out.vertex_count = static_cast<long long>(verts.size());
  std::vector<int> roots;
  for (std::size_t t = 0; t < verts.size(); ++t) roots.push_back(dsu.find(static_cast<int>(t)));
  std::vector<int> uniq = roots;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  out.component_count = static_cast<long long>(uniq.size());
  out.connected = out.component_count <= 1;
  if (!out.connected)
    for (std::size_t t = 1; t < verts.size() && out.witness.empty(); ++t)
      if (roots[t] != roots[0]) out.witness = {verts[0], verts[t]};
  return out;
}

using BaseSequence = BasicBaseSequence<1>;
using TeReport = BasicTeReport<1>;
using SboCertificate = BasicSboCertificate<1>;
using SboResult = BasicSboResult<1>;
using BlasiakSummary = BasicBlasiakSummary<1>;

}  // namespace matroidlab

#endif
