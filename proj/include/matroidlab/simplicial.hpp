#ifndef MATROIDLAB_SIMPLICIAL_HPP
#define MATROIDLAB_SIMPLICIAL_HPP

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroidlab/element_set.hpp"
#include "matroidlab/errors.hpp"
#include "matroidlab/kruskal_katona.hpp"
#include "matroidlab/matroid.hpp"

namespace matroidlab {

// A simplicial complex stored by its facets. Vertices are positive integers
// to match the squashed order, so the universe leaves bit zero unused. The
// empty complex is represented by the single facet {} and has dimension -1.
template <int Words = 1>
class BasicComplex {
 public:
  using Set = BasicElementSet<Words>;

  explicit BasicComplex(int universe) : universe_(universe), facets_{Set(universe)} {}

  // Faces may come from any universe (such as squashed prefixes over the
  // full set capacity) and are re-embedded, with bounds checked by insert.
  BasicComplex(int universe, const std::vector<Set>& raw) : universe_(universe) {
    std::vector<Set> faces;
    faces.reserve(raw.size());
    for (const auto& f : raw) {
      if (f.contains(0)) throw InvalidInputError("vertices are 1-based");
      Set t(universe);
      for (int e = f.min_element(); e >= 0; e = f.next_element(e + 1)) t.insert(e);
      faces.push_back(t);
    }
    for (const auto& f : faces) {
      bool maximal = true;
      for (const auto& g : faces)
        if (!(f == g) && f.subset_of(g)) {
          maximal = false;
          break;
        }
      if (maximal) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(),
              [](const Set& a, const Set& b) { return a.canonical_less(b); });
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    if (facets_.empty()) facets_.push_back(Set(universe_));
  }

  int universe() const { return universe_; }
  const std::vector<Set>& facets() const { return facets_; }

  Set vertex_support() const {
    Set s(universe_);
    for (const auto& f : facets_) s = s | f;
    return s;
  }

  int dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.size() - 1);
    return d;
  }

  bool is_pure() const {
    for (const auto& f : facets_)
      if (f.size() != facets_.front().size()) return false;
    return true;
  }

  bool contains(const Set& face) const {
    for (const auto& f : facets_)
      if (face.subset_of(f)) return true;
    return false;
  }

  // Face counts by dimension, f_0 through f_d; empty for the empty complex.
  std::vector<long long> f_vector(std::size_t cap = kDefaultMaxEnum) const {
    std::size_t work = 0;
    for (const auto& f : facets_) {
      if (f.size() > 25) throw CapExceededError("facet too large for face enumeration");
      work += std::size_t{1} << f.size();
      if (work > cap) throw CapExceededError("face enumeration over " + std::to_string(work));
    }
    auto cmp = [](const Set& a, const Set& b) { return a.canonical_less(b); };
    std::set<Set, decltype(cmp)> faces(cmp);
    for (const auto& f : facets_)
      for_each_subset(f, [&](const Set& s) {
        faces.insert(s);
        return true;
      });
    std::vector<long long> f(dimension() + 1, 0);
    for (const auto& s : faces)
      if (s.size() >= 1) ++f[s.size() - 1];
    return f;
  }

  BasicComplex link(int v) const {
    require_vertex(v);
    std::vector<Set> faces;
    for (const auto& f : facets_)
      if (f.contains(v)) {
        Set t = f;
        t.erase(v);
        faces.push_back(t);
      }
    return BasicComplex(universe_, faces);
  }

  BasicComplex deletion(int v) const {
    require_vertex(v);
    std::vector<Set> faces;
    for (const auto& f : facets_) {
      Set t = f;
      t.erase(v);
      faces.push_back(t);
    }
    return BasicComplex(universe_, faces);
  }

  bool operator==(const BasicComplex& o) const {
    return universe_ == o.universe_ && facets_ == o.facets_;
  }

 private:
  void require_vertex(int v) const {
    if (v < 1 || v >= universe_ || !vertex_support().contains(v))
      throw InvalidInputError("element " + std::to_string(v) + " is not a vertex");
  }

  int universe_;
  std::vector<Set> facets_;
};

// Pure complexes with the fewest possible faces one dimension down:
// f_{d-1} = delta(f_d, d+1). Dimension <= 0 is extremal by convention.
template <int Words>
bool is_extremal(const BasicComplex<Words>& c) {
  if (!c.is_pure()) throw InvalidInputError("extremality is defined for pure complexes");
  const int d = c.dimension();
  if (d <= 0) return true;
  const long long fd = static_cast<long long>(c.facets().size());
  const long long fd1 = static_cast<long long>(shadow(c.facets()).size());
  return fd1 == delta(fd, d + 1);
}

template <int Words = 1>
struct BasicVertexDecomposition {
  bool ok = false;
  std::vector<int> shedding;  // deletion-chain vertices down to a base case
};

namespace detail {

template <int Words>
class VdSearch {
 public:
  // -2: not decomposable, -1: base case, >= 1: least shedding vertex.
  int search(const BasicComplex<Words>& cx) {
    std::string key = encode(cx);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    int res = -2;
    const auto& fs = cx.facets();
    if (fs.size() == 1 && fs.front().size() <= 1) {
      res = -1;
    } else {
      auto sup = cx.vertex_support();
      for (int v = sup.min_element(); v >= 0; v = sup.next_element(v + 1)) {
        auto lk = cx.link(v);
        auto del = cx.deletion(v);
        if (!lk.is_pure() || !del.is_pure()) continue;
        if (search(lk) != -2 && search(del) != -2) {
          res = v;
          break;
        }
      }
    }
    memo_.emplace(std::move(key), res);
    return res;
  }

 private:
  static std::string encode(const BasicComplex<Words>& cx) {
    std::string key;
    for (const auto& f : cx.facets())
      for (int w = 0; w < Words; ++w) {
        std::uint64_t x = f.word(w);
        for (int b = 0; b < 8; ++b) key.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
      }
    return key;
  }

  std::unordered_map<std::string, int> memo_;
};

}  // namespace detail

// Recursive shedding search: a pure complex decomposes if it is {} or a
// point, or some vertex has a pure decomposable link and deletion. Returns
// the deletion chain built from the least shedding vertex at every step.
template <int Words>
BasicVertexDecomposition<Words> is_vertex_decomposable(const BasicComplex<Words>& c,
                                                       int vertex_cap = 16) {
  if (!c.is_pure()) throw InvalidInputError("vertex decomposability is defined for pure complexes");
  if (c.vertex_support().size() > vertex_cap)
    throw CapExceededError("decomposability search over " +
                           std::to_string(c.vertex_support().size()) + " vertices");
  detail::VdSearch<Words> vd;
  BasicVertexDecomposition<Words> out;
  if (vd.search(c) == -2) return out;
  out.ok = true;
  BasicComplex<Words> cur = c;
  for (;;) {
    int v = vd.search(cur);
    if (v == -1) break;
    out.shedding.push_back(v);
    cur = cur.deletion(v);
  }
  return out;
}

// Shedding vertex for an extremal complex: the least vertex i whose avoiding
// facets B_i have a shadow larger than the trace C_i of the containing ones,
// or the least vertex outright when the facets form a complete layer. The
// link and deletion at the returned vertex are re-verified extremal.
template <int Words>
int extremal_shedding_vertex(const BasicComplex<Words>& c) {
  using Set = BasicElementSet<Words>;
  if (!is_extremal(c)) throw InvalidInputError("complex is not extremal");
  if (c.dimension() < 1) throw InvalidInputError("shedding needs positive dimension");

  const auto& fs = c.facets();
  const Set sup = c.vertex_support();
  const int k = c.dimension() + 1;
  if (static_cast<long long>(fs.size()) == detail::binom_sat(sup.size(), k))
    return sup.min_element();

  for (int i = sup.min_element(); i >= 0; i = sup.next_element(i + 1)) {
    std::vector<Set> avoiding, trace;
    for (const auto& f : fs) {
      if (f.contains(i)) {
        Set t = f;
        t.erase(i);
        trace.push_back(t);
      } else {
        avoiding.push_back(f);
      }
    }
    if (avoiding.empty()) continue;
    if (shadow(avoiding).size() > trace.size()) {
      if (!is_extremal(c.link(i)) || !is_extremal(c.deletion(i)))
        throw InternalError("shedding vertex fails on a residue");
      return i;
    }
  }
  throw InternalError("no shedding vertex in a non-complete extremal complex");
}

// Complex of independent sets, with elements shifted to 1-based vertices.
template <int Words>
BasicComplex<Words> independence_complex(const BasicMatroid<Words>& m,
                                         std::size_t cap = kDefaultMaxEnum) {
  using Set = BasicElementSet<Words>;
  const int n = m.ground_size();
  if (n + 1 > Set::kCapacity) throw CapExceededError("ground set too large for a complex");
  std::vector<Set> shifted;
  for (const auto& b : m.bases(cap)) {
    Set t(n + 1);
    for (int e = b.min_element(); e >= 0; e = b.next_element(e + 1)) t.insert(e + 1);
    shifted.push_back(t);
  }
  return BasicComplex<Words>(n + 1, shifted);
}

using Complex = BasicComplex<1>;
using VertexDecomposition = BasicVertexDecomposition<1>;

}  // namespace matroidlab

#endif
