#pragma once

// Brute-force reference implementations for small graphs (n <= ~20). They
// share nothing with the library beyond Graph accessors.

#include <bit>
#include <cstdint>
#include <vector>

#include "convlab/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> rows(const convlab::Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    out[static_cast<std::size_t>(u)] |= Mask{1} << v;
    out[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return out;
}

inline Mask full(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Synchronous rounds until nothing changes.
inline Mask closure(const std::vector<Mask>& adj, Mask seed, int k) {
  Mask cur = seed;
  while (true) {
    Mask next = cur;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (!(cur >> v & 1) && std::popcount(adj[v] & cur) >= k) next |= Mask{1} << v;
    if (next == cur) return cur;
    cur = next;
  }
}

inline int conversion_number(const convlab::Graph& g, int k) {
  const auto adj = rows(g);
  const int n = g.order();
  int best = n;
  for (Mask s = 0; s <= full(n); ++s) {
    if (std::popcount(s) < best && closure(adj, s, k) == full(n)) best = std::popcount(s);
    if (s == full(n)) break;
  }
  return best;
}

inline int independence_number(const convlab::Graph& g) {
  const auto adj = rows(g);
  int best = 0;
  for (Mask s = 0; s <= full(g.order()); ++s) {
    bool ok = true;
    for (std::size_t v = 0; v < adj.size() && ok; ++v)
      if ((s >> v & 1) && (adj[v] & s)) ok = false;
    if (ok) best = std::max(best, std::popcount(s));
    if (s == full(g.order())) break;
  }
  return best;
}

// Every nonempty induced subgraph of X has a vertex of degree <= r.
inline bool r_degenerate(const std::vector<Mask>& adj, Mask x, int r) {
  for (Mask sub = x; sub; sub = (sub - 1) & x) {
    bool low = false;
    for (std::size_t v = 0; v < adj.size() && !low; ++v)
      if ((sub >> v & 1) && std::popcount(adj[v] & sub) <= r) low = true;
    if (!low) return false;
  }
  return true;
}

inline int components(const std::vector<Mask>& adj, Mask x) {
  int count = 0;
  while (x) {
    Mask seen = x & (~x + 1), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (std::size_t v = 0; v < adj.size(); ++v)
        if (frontier >> v & 1) next |= adj[v] & x;
      frontier = next & ~seen;
      seen |= next;
    }
    x &= ~seen;
    ++count;
  }
  return count;
}

// Plain backtracking over edges in order.
inline bool edge_colourable(const convlab::Graph& g, int colours) {
  const auto es = g.edges();
  std::vector<int> colour(es.size(), -1);
  std::vector<int> used(static_cast<std::size_t>(g.order()), 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == es.size()) return true;
    auto [u, v] = es[i];
    for (int c = 0; c < colours; ++c) {
      const int bit = 1 << c;
      if ((used[static_cast<std::size_t>(u)] | used[static_cast<std::size_t>(v)]) & bit) continue;
      used[static_cast<std::size_t>(u)] |= bit;
      used[static_cast<std::size_t>(v)] |= bit;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(u)] &= ~bit;
      used[static_cast<std::size_t>(v)] &= ~bit;
      if (i == 0) break;  // colour symmetry
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace oracle
