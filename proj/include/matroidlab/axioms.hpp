#ifndef MATROIDLAB_AXIOMS_HPP
#define MATROIDLAB_AXIOMS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "matroidlab/matroid.hpp"
#include "matroidlab/rank_table.hpp"

namespace matroidlab {

template <int Words = 1>
struct BasicAxiomCheck {
  std::string id;
  bool pass = true;
  std::vector<BasicElementSet<Words>> witness;
};

template <int Words = 1>
struct BasicAxiomReport {
  std::vector<BasicAxiomCheck<Words>> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const BasicAxiomCheck<Words>* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
};

// Exhaustive verification of the independence, rank, closure and circuit
// axioms against the oracle's raw answers. Makes no matroid assumptions, so
// it can expose a backend that merely pretends to be one. The scans run in
// ascending mask order; each failing check carries the first witness found.
template <int Words>
BasicAxiomReport<Words> check_axioms(const BasicMatroid<Words>& m) {
  using Set = BasicElementSet<Words>;
  int n = m.ground_size();
  if (n > 12) throw CapExceededError("axiom check over 2^" + std::to_string(n) + " subsets");
  const std::uint32_t size = std::uint32_t{1} << n;
  const auto at = [n](std::uint32_t mask) { return Set::from_mask(n, mask); };

  std::vector<char> indep = family_independence_table(m, std::size_t{1} << 12);
  std::vector<int> trank = rank_table(indep);
  std::vector<int> grank(size);
  std::vector<std::uint32_t> gclose(size);
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    grank[mask] = m.rank(at(mask));
    gclose[mask] = static_cast<std::uint32_t>(m.closure(at(mask)).word(0));
  }

  BasicAxiomReport<Words> report;
  const auto fail = [&report](const std::string& id, std::vector<Set> witness) {
    report.checks.push_back({id, false, std::move(witness)});
  };
  const auto pass = [&report](const std::string& id) { report.checks.push_back({id, true, {}}); };

  if (indep[0])
    pass("empty-set-independent");
  else
    fail("empty-set-independent", {at(0)});

  [&] {
    for (std::uint32_t mask = 1; mask < size; ++mask) {
      if (!indep[mask]) continue;
      for (std::uint32_t rest = mask; rest != 0;) {
        std::uint32_t bit = rest & (0u - rest);
        rest ^= bit;
        if (!indep[mask ^ bit]) return fail("downward-closure", {at(mask), at(mask ^ bit)});
      }
    }
    pass("downward-closure");
  }();

  [&] {
    for (std::uint32_t a = 0; a < size; ++a) {
      if (!indep[a]) continue;
      int pa = std::popcount(a);
      for (std::uint32_t b = 0; b < size; ++b) {
        if (!indep[b] || pa >= std::popcount(b)) continue;
        bool extended = false;
        for (std::uint32_t rest = b & ~a; rest != 0 && !extended;) {
          std::uint32_t bit = rest & (0u - rest);
          rest ^= bit;
          extended = indep[a | bit];
        }
        if (!extended) return fail("augmentation", {at(a), at(b)});
      }
    }
    pass("augmentation");
  }();

  [&] {
    std::vector<std::uint32_t> bases;
    for (std::uint32_t mask = 0; mask < size; ++mask) {
      if (!indep[mask]) continue;
      bool maximal = true;
      for (int e = 0; e < n && maximal; ++e)
        if (!(mask >> e & 1) && indep[mask | (1u << e)]) maximal = false;
      if (maximal) bases.push_back(mask);
    }
    for (std::uint32_t b1 : bases)
      for (std::uint32_t b2 : bases) {
        if (b1 == b2) continue;
        for (std::uint32_t rest = b1 & ~b2; rest != 0;) {
          std::uint32_t e = rest & (0u - rest);
          rest ^= e;
          bool swapped = false;
          for (std::uint32_t other = b2 & ~b1; other != 0 && !swapped;) {
            std::uint32_t f = other & (0u - other);
            other ^= f;
            swapped = indep[(b1 ^ e) | f];
          }
          if (!swapped)
            return fail("basis-exchange", {at(b1), at(b2), at(e)});
        }
      }
    pass("basis-exchange");
  }();

  [&] {
    for (std::uint32_t mask = 0; mask < size; ++mask)
      if (grank[mask] < 0 || grank[mask] > std::popcount(mask))
        return fail("rank-bounds", {at(mask)});
    pass("rank-bounds");
  }();

  [&] {
    for (std::uint32_t mask = 0; mask < size; ++mask)
      for (int e = 0; e < n; ++e) {
        if (mask >> e & 1) continue;
        std::uint32_t ext = mask | (1u << e);
        if (grank[mask] > grank[ext]) return fail("rank-monotone", {at(mask), at(ext)});
      }
    pass("rank-monotone");
  }();

  [&] {
    for (std::uint32_t a = 0; a < size; ++a)
      for (std::uint32_t b = 0; b < size; ++b)
        if (grank[a | b] + grank[a & b] > grank[a] + grank[b])
          return fail("rank-submodular", {at(a), at(b)});
    pass("rank-submodular");
  }();

  [&] {
    for (std::uint32_t mask = 0; mask < size; ++mask)
      if ((mask & gclose[mask]) != mask) return fail("closure-extensive", {at(mask)});
    pass("closure-extensive");
  }();

  [&] {
    for (std::uint32_t mask = 0; mask < size; ++mask)
      for (int e = 0; e < n; ++e) {
        if (mask >> e & 1) continue;
        std::uint32_t ext = mask | (1u << e);
        if ((gclose[mask] & ~gclose[ext]) != 0) return fail("closure-monotone", {at(mask), at(ext)});
      }
    pass("closure-monotone");
  }();

  [&] {
    for (std::uint32_t mask = 0; mask < size; ++mask)
      if (gclose[gclose[mask]] != gclose[mask]) return fail("closure-idempotent", {at(mask)});
    pass("closure-idempotent");
  }();

  [&] {
    for (std::uint32_t mask = 0; mask < size; ++mask)
      for (int e = 0; e < n; ++e) {
        if (gclose[mask] >> e & 1) continue;
        std::uint32_t gained = gclose[mask | (1u << e)] & ~gclose[mask] & ~(1u << e);
        for (std::uint32_t rest = gained; rest != 0;) {
          std::uint32_t fbit = rest & (0u - rest);
          rest ^= fbit;
          if (!(gclose[mask | fbit] >> e & 1))
            return fail("closure-exchange", {at(mask), at(std::uint32_t{1} << e), at(fbit)});
        }
      }
    pass("closure-exchange");
  }();

  [&] {
    std::vector<std::uint32_t> circuits;
    for (std::uint32_t mask = 1; mask < size; ++mask) {
      if (indep[mask]) continue;
      bool minimal = true;
      for (std::uint32_t rest = mask; rest != 0 && minimal;) {
        std::uint32_t bit = rest & (0u - rest);
        rest ^= bit;
        minimal = indep[mask ^ bit] != 0;
      }
      if (minimal) circuits.push_back(mask);
    }
    for (std::size_t i = 0; i < circuits.size(); ++i)
      for (std::size_t j = i + 1; j < circuits.size(); ++j) {
        std::uint32_t c1 = circuits[i], c2 = circuits[j];
        for (std::uint32_t rest = c1 & c2; rest != 0;) {
          std::uint32_t e = rest & (0u - rest);
          rest ^= e;
          if (indep[(c1 | c2) ^ e]) return fail("circuit-elimination", {at(c1), at(c2), at(e)});
        }
      }
    pass("circuit-elimination");
  }();

  [&] {
    for (std::uint32_t mask = 0; mask < size; ++mask)
      if (grank[mask] != trank[mask]) return fail("greedy-rank", {at(mask)});
    pass("greedy-rank");
  }();

  return report;
}

using AxiomCheck = BasicAxiomCheck<1>;
using AxiomReport = BasicAxiomReport<1>;

}  // namespace matroidlab

#endif
