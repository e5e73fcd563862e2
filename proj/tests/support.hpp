#pragma once

// Independent oracles for tests. Nothing here calls the engine's lattice code:
// elements are modelled as explicit finite point sets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "wonder/polydiagonal.hpp"

namespace oracle {

using Point = std::vector<int>;
using PointSet = std::set<Point>;

// Points of X^n over the alphabet {0..n-1} lying on a polydiagonal.
inline PointSet points_of(const wonder::Polydiagonal& p) {
  PointSet out;
  const int n = p.n();
  Point t(static_cast<std::size_t>(n));
  std::function<void(int)> go = [&](int i) {
    if (i == n) {
      for (const auto& b : p.blocks())
        for (int x : b)
          if (t[x - 1] != t[b[0] - 1]) return;
      out.insert(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

// Points of (P^1)^{n-3}; values 0, 1, 2 are the anchors 0, 1, inf and 3.. are generic.
inline PointSet points_of(const wonder::AnchoredPolydiagonal& p) {
  PointSet out;
  const int k = p.n() - 3;
  Point t(static_cast<std::size_t>(k));
  std::function<void(int)> go = [&](int i) {
    if (i == k) {
      for (const auto& b : p.blocks())
        for (int x : b.members) {
          if (t[x - 4] != t[b.members[0] - 4]) return;
          if (b.anchor && t[x - 4] != static_cast<int>(*b.anchor)) return;
        }
      out.insert(t);
      return;
    }
    for (int v = 0; v < 3 + k; ++v) {
      t[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

inline PointSet meet(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

inline bool contains(const PointSet& a, const PointSet& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

// Building set as point sets; subsets are bitmasks over its members.
struct Model {
  std::vector<PointSet> g;

  PointSet meet_mask(std::uint64_t mask, const PointSet& ambient) const {
    PointSet acc = ambient;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (mask >> i & 1) acc = meet(acc, g[i]);
    return acc;
  }

  std::uint64_t minimal(std::uint64_t mask) const {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      bool min = true;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i && (mask >> j & 1) && contains(g[i], g[j])) min = false;
      if (min) out |= std::uint64_t{1} << i;
    }
    return out;
  }

  // Minimal members containing s.
  std::uint64_t factors(const PointSet& s) const {
    std::uint64_t above = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (contains(g[i], s)) above |= std::uint64_t{1} << i;
    return minimal(above);
  }

  // Nest condition read literally from the recursive definition.
  bool is_nest(std::uint64_t t) const {
    if (t == 0) return true;
    std::uint64_t mins = minimal(t);
    PointSet all;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (mins >> i & 1) {
        all = all.empty() ? g[i] : meet(all, g[i]);
        if (all.empty()) return false;
      }
    if (factors(all) != mins) return false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!(mins >> i & 1)) continue;
      std::uint64_t above = 0;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i && (t >> j & 1) && contains(g[j], g[i])) above |= std::uint64_t{1} << j;
      if (!is_nest(above)) return false;
    }
    return true;
  }

  std::vector<std::uint64_t> all_nonempty_nests() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t t = 1; t < (std::uint64_t{1} << g.size()); ++t)
      if (is_nest(t)) out.push_back(t);
    return out;
  }
};

// Diagonals Δ_I of X^n, |I| >= 2, as block lists.
inline std::vector<wonder::Block> all_diagonal_blocks(int n) {
  std::vector<wonder::Block> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    wonder::Block b;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) b.push_back(i + 1);
    if (b.size() >= 2) out.push_back(b);
  }
  return out;
}

// Every simple graph on n labelled vertices as an edge list.
inline std::vector<std::vector<std::pair<int, int>>> all_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) es.push_back(slots[i]);
    out.push_back(es);
  }
  return out;
}

// Connectivity of a vertex set under an edge list, by repeated relaxation.
inline bool connected(const std::vector<int>& vs, const std::vector<std::pair<int, int>>& es) {
  if (vs.empty()) return true;
  std::set<int> reach{vs[0]};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [u, v] : es) {
      bool in_u = std::count(vs.begin(), vs.end(), u) > 0, in_v = std::count(vs.begin(), vs.end(), v) > 0;
      if (!in_u || !in_v) continue;
      if (reach.count(u) != reach.count(v)) {
        reach.insert(u);
        reach.insert(v);
        grew = true;
      }
    }
  }
  return reach.size() == vs.size();
}

}  // namespace oracle
