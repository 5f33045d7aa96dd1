#ifndef MATROIDLAB_NECKLACE_HPP
#define MATROIDLAB_NECKLACE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "matroidlab/errors.hpp"
#include "matroidlab/matroid.hpp"

namespace matroidlab {

// Beads colored with contiguous ids 1..k.
struct Necklace1D {
  std::vector<int> beads;

  Necklace1D() = default;
  explicit Necklace1D(std::vector<int> b) : beads(std::move(b)) {}

  // Letters map to colors: 'A' -> 1, 'B' -> 2, ...
  static Necklace1D from_letters(const std::string& word) {
    std::vector<int> b;
    b.reserve(word.size());
    for (char c : word) b.push_back(c - 'A' + 1);
    return Necklace1D(std::move(b));
  }

  int color_count() const { return beads.empty() ? 0 : *std::max_element(beads.begin(), beads.end()); }
};

// Cells indexed by d coordinates, first coordinate slowest.
struct GridNecklace {
  std::vector<int> dims;
  std::vector<int> cells;

  GridNecklace() = default;
  GridNecklace(std::vector<int> d, std::vector<int> c) : dims(std::move(d)), cells(std::move(c)) {}

  int color_count() const { return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()); }
};

// Cut positions sit between beads (position p separates bead p-1 from bead
// p); grids carry one ascending coordinate list per axis instead. part_of
// labels the pieces left to right (grids: first coordinate slowest) with
// part ids 1..q.
struct Splitting {
  std::vector<int> cuts;
  std::vector<std::vector<int>> axis_cuts;
  std::vector<int> part_of;
};

namespace detail {

inline void require_necklace(const Necklace1D& neck) {
  if (neck.beads.empty()) throw InvalidInputError("necklace has no beads");
  const int k = neck.color_count();
  std::vector<char> seen(k + 1, 0);
  for (int c : neck.beads) {
    if (c < 1 || c > k) throw InvalidInputError("bead color " + std::to_string(c) + " out of range");
    seen[c] = 1;
  }
  for (int c = 1; c <= k; ++c)
    if (!seen[c]) throw InvalidInputError("color ids must be contiguous from 1");
}

inline std::vector<long long> color_totals(const std::vector<int>& cells, int k) {
  std::vector<long long> totals(k + 1, 0);
  for (int c : cells) ++totals[c];
  return totals;
}

inline std::vector<long long> fair_target(const std::vector<long long>& totals, int q) {
  std::vector<long long> target(totals.size(), 0);
  for (std::size_t c = 1; c < totals.size(); ++c) {
    if (totals[c] % q != 0)
      throw InvalidInputError("count of color " + std::to_string(c) + " is not divisible by " +
                              std::to_string(q));
    target[c] = totals[c] / q;
  }
  return target;
}

// Assigns part ids to pieces so every part hits the target vector exactly.
// Labels are tried in restricted growth order (a fresh part id only after
// all smaller ones); dead (piece, sorted part loads) states are memoized.
class PieceLabeler {
 public:
  PieceLabeler(const std::vector<std::vector<long long>>& piece_vectors,
               const std::vector<long long>& target, int q)
      : pieces_(piece_vectors), target_(target), q_(q), loads_(q + 1, std::vector<long long>(target.size(), 0)) {}

  std::optional<std::vector<int>> run() {
    labels_.assign(pieces_.size(), 0);
    if (grow(0, 0)) return labels_;
    return std::nullopt;
  }

 private:
  bool grow(std::size_t at, int used) {
    if (at == pieces_.size()) {
      if (used != q_) return false;
      for (int part = 1; part <= q_; ++part)
        if (loads_[part] != target_) return false;
      return true;
    }
    if (dead_.count(encode(at))) return false;
    const int limit = std::min(q_, used + 1);
    for (int part = 1; part <= limit; ++part) {
      bool fits = true;
      for (std::size_t c = 1; c < target_.size(); ++c) {
        loads_[part][c] += pieces_[at][c];
        if (loads_[part][c] > target_[c]) fits = false;
      }
      if (fits) {
        labels_[at] = part;
        if (grow(at + 1, std::max(used, part))) return true;
      }
      for (std::size_t c = 1; c < target_.size(); ++c) loads_[part][c] -= pieces_[at][c];
    }
    dead_.insert(encode(at));
    return false;
  }

  std::string encode(std::size_t at) const {
    std::vector<std::vector<long long>> sorted(loads_.begin() + 1, loads_.end());
    std::sort(sorted.begin(), sorted.end());
    std::string key = std::to_string(at);
    for (const auto& v : sorted)
      for (long long x : v) key += ',' + std::to_string(x);
    return key;
  }

  const std::vector<std::vector<long long>>& pieces_;
  const std::vector<long long>& target_;
  int q_;
  std::vector<std::vector<long long>> loads_;
  std::vector<int> labels_;
  std::unordered_set<std::string> dead_;
};

inline void verify_fairness(const std::vector<std::vector<long long>>& piece_vectors,
                            const std::vector<int>& part_of,
                            const std::vector<long long>& target, int q) {
  std::vector<std::vector<long long>> loads(q + 1, std::vector<long long>(target.size(), 0));
  for (std::size_t p = 0; p < piece_vectors.size(); ++p) {
    if (part_of[p] < 1 || part_of[p] > q) throw InternalError("piece labeled outside 1..q");
    for (std::size_t c = 1; c < target.size(); ++c) loads[part_of[p]][c] += piece_vectors[p][c];
  }
  for (int part = 1; part <= q; ++part)
    if (loads[part] != target) throw InternalError("splitting is not fair");
}

}  // namespace detail

// Least-cut fair q-splitting with at most t cuts, searched by iterative
// deepening on the cut count; cut sets ascend lexicographically and pieces
// are labeled in restricted growth order, so the result is deterministic.
inline std::optional<Splitting> fair_split_1d(const Necklace1D& neck, int q, int t) {
  detail::require_necklace(neck);
  if (q < 1) throw InvalidInputError("part count must be positive");
  const int n = static_cast<int>(neck.beads.size());
  if (t < 0 || t > n - 1) throw InvalidInputError("cut budget outside 0.." + std::to_string(n - 1));
  const int k = neck.color_count();
  const auto totals = detail::color_totals(neck.beads, k);
  const auto target = detail::fair_target(totals, q);

  std::vector<std::vector<long long>> prefix(n + 1, std::vector<long long>(k + 1, 0));
  for (int i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i];
    ++prefix[i + 1][neck.beads[i]];
  }
  auto segment = [&](int from, int to) {
    std::vector<long long> v(k + 1, 0);
    for (int c = 1; c <= k; ++c) v[c] = prefix[to][c] - prefix[from][c];
    return v;
  };

  for (int c = 0; c <= t; ++c) {
    std::vector<int> cuts(c);
    std::iota(cuts.begin(), cuts.end(), 1);
    for (;;) {
      std::vector<std::vector<long long>> pieces;
      int from = 0;
      for (int cut : cuts) {
        pieces.push_back(segment(from, cut));
        from = cut;
      }
      pieces.push_back(segment(from, n));

      detail::PieceLabeler labeler(pieces, target, q);
      if (auto labels = labeler.run()) {
        detail::verify_fairness(pieces, *labels, target, q);
        Splitting out;
        out.cuts = cuts;
        out.part_of = *labels;
        return out;
      }

      int at = c - 1;
      while (at >= 0 && cuts[at] == n - 1 - (c - 1 - at)) --at;
      if (at < 0) break;
      ++cuts[at];
      for (int j = at + 1; j < c; ++j) cuts[j] = cuts[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Smallest number of cuts admitting a fair q-splitting. The k(q-1) ceiling
// always suffices, so running out of budget means a solver defect.
inline int min_cuts(const Necklace1D& neck, int q) {
  detail::require_necklace(neck);
  const int n = static_cast<int>(neck.beads.size());
  const int bound = std::min(neck.color_count() * (q - 1), n - 1);
  auto split = fair_split_1d(neck, q, bound);
  if (!split) throw InternalError("no fair splitting within the cut bound");
  return static_cast<int>(split->cuts.size());
}

// k monochromatic blocks of length q; every fair q-splitting must cut each
// block q-1 times, so k(q-1) cuts are required.
inline Necklace1D tight_example(int k, int q) {
  if (k < 1 || q < 2) throw InvalidInputError("tight example needs k >= 1 and q >= 2");
  std::vector<int> beads;
  beads.reserve(static_cast<std::size_t>(k) * q);
  for (int color = 1; color <= k; ++color)
    for (int i = 0; i < q; ++i) beads.push_back(color);
  return Necklace1D(std::move(beads));
}

// Axis-aligned fair splitting: at most budget[i] full hyperplane cuts on
// axis i. Searches cut totals in ascending order, then per-axis counts and
// coordinates lexicographically.
inline std::optional<Splitting> fair_split_grid(const GridNecklace& grid, int q,
                                                const std::vector<int>& budget,
                                                std::size_t cap = kDefaultMaxEnum) {
  const int d = static_cast<int>(grid.dims.size());
  if (d == 0) throw InvalidInputError("grid has no axes");
  if (static_cast<int>(budget.size()) != d)
    throw InvalidInputError("budget must list one cut count per axis");
  long long cell_count = 1;
  for (int s : grid.dims) {
    if (s < 1) throw InvalidInputError("grid dimensions must be positive");
    cell_count *= s;
  }
  if (static_cast<long long>(grid.cells.size()) != cell_count)
    throw InvalidInputError("cell count does not match the dimensions");
  if (q < 1) throw InvalidInputError("part count must be positive");
  for (int i = 0; i < d; ++i)
    if (budget[i] < 0 || budget[i] > grid.dims[i] - 1)
      throw InvalidInputError("axis " + std::to_string(i) + " budget outside 0.." +
                              std::to_string(grid.dims[i] - 1));

  const int k = grid.color_count();
  if (k == 0) throw InvalidInputError("grid has no cells");
  for (int c : grid.cells)
    if (c < 1) throw InvalidInputError("cell colors must be positive");
  const auto totals = detail::color_totals(grid.cells, k);
  const auto target = detail::fair_target(totals, q);

  long long piece_cap = 1;
  for (int i = 0; i < d; ++i) piece_cap *= budget[i] + 1;
  double labelings = std::pow(static_cast<double>(q), static_cast<double>(piece_cap));
  if (piece_cap > static_cast<long long>(cap) || labelings > static_cast<double>(cap))
    throw CapExceededError("grid labeling space of about " + std::to_string(labelings) +
                           " states");

  // strides for row-major cell access
  std::vector<long long> stride(d, 1);
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * grid.dims[i + 1];

  int total_budget = 0;
  for (int b : budget) total_budget += b;

  std::vector<std::vector<int>> axis_cuts(d);
  std::optional<Splitting> found;

  // per-axis segment id for a coordinate, given the axis cut list
  auto build_pieces = [&]() -> std::optional<Splitting> {
    std::vector<int> segs(d);
    long long piece_total = 1;
    for (int i = 0; i < d; ++i) {
      segs[i] = static_cast<int>(axis_cuts[i].size()) + 1;
      piece_total *= segs[i];
    }
    std::vector<std::vector<long long>> pieces(
        piece_total, std::vector<long long>(k + 1, 0));
    std::vector<int> coord(d, 0);
    for (long long cell = 0; cell < cell_count; ++cell) {
      long long rest = cell;
      long long piece = 0;
      for (int i = 0; i < d; ++i) {
        coord[i] = static_cast<int>(rest / stride[i]);
        rest %= stride[i];
        const auto& cl = axis_cuts[i];
        int seg = static_cast<int>(std::upper_bound(cl.begin(), cl.end(), coord[i]) - cl.begin());
        piece = piece * segs[i] + seg;
      }
      ++pieces[piece][grid.cells[cell]];
    }
    detail::PieceLabeler labeler(pieces, target, q);
    if (auto labels = labeler.run()) {
      detail::verify_fairness(pieces, *labels, target, q);
      Splitting out;
      out.axis_cuts = axis_cuts;
      out.part_of = *labels;
      return out;
    }
    return std::nullopt;
  };

  // choose cut coordinates axis by axis for a fixed per-axis count profile
  std::function<bool(int, const std::vector<int>&)> place = [&](int axis,
                                                                const std::vector<int>& counts) {
    if (axis == d) {
      found = build_pieces();
      return found.has_value();
    }
    const int c = counts[axis], top = grid.dims[axis] - 1;
    std::vector<int> cuts(c);
    std::iota(cuts.begin(), cuts.end(), 1);
    if (c == 0) {
      axis_cuts[axis].clear();
      return place(axis + 1, counts);
    }
    for (;;) {
      axis_cuts[axis] = cuts;
      if (place(axis + 1, counts)) return true;
      int at = c - 1;
      while (at >= 0 && cuts[at] == top - (c - 1 - at)) --at;
      if (at < 0) break;
      ++cuts[at];
      for (int j = at + 1; j < c; ++j) cuts[j] = cuts[j - 1] + 1;
    }
    return false;
  };

  // distribute a cut total over the axes, lexicographically
  std::function<bool(int, int, std::vector<int>&)> profile = [&](int axis, int left,
                                                                 std::vector<int>& counts) {
    if (axis == d) return left == 0 && place(0, counts);
    for (int c = 0; c <= std::min(left, budget[axis]); ++c) {
      counts[axis] = c;
      if (profile(axis + 1, left - c, counts)) return true;
    }
    return false;
  };

  for (int total = 0; total <= total_budget; ++total) {
    std::vector<int> counts(d, 0);
    if (profile(0, total, counts)) return found;
  }
  return std::nullopt;
}

}  // namespace matroidlab

#endif
