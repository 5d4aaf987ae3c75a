#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "k4bb/graph_ops.hpp"

namespace k4bb {

/// Exact minimum of class-edges over balanced bipartitions, with a witness.
struct OracleResult {
  long long optimum = 0;
  Bipartition witness;
};

namespace detail {

inline std::vector<std::uint64_t> single_word_rows(const Graph& g) {
  std::vector<std::uint64_t> rows(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) rows[v] = g.row(v)[0];
  return rows;
}

inline long long class_edges_mask(const std::vector<std::uint64_t>& rows, std::uint64_t full,
                                  std::uint64_t a) {
  long long twice = 0;
  std::uint64_t b = full & ~a;
  std::uint64_t bits = a;
  while (bits) {
    int v = std::countr_zero(bits);
    bits &= bits - 1;
    twice += std::popcount(rows[v] & a);
  }
  bits = b;
  while (bits) {
    int v = std::countr_zero(bits);
    bits &= bits - 1;
    twice += std::popcount(rows[v] & b);
  }
  return twice / 2;
}

inline VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace detail

/// Brute-force bb(G): side_a runs over all smaller/equal halves in lexicographic
/// order (vertex 0 pinned to side_a when n is even, which halves the space);
/// the first minimizer found is kept, so the witness is deterministic.
inline OracleResult bb_exact(const Graph& g, int cap = 20) {
  int n = g.vertex_count();
  if (n > cap)
    throw SizeLimitError("bb_exact: " + std::to_string(n) + " vertices exceeds cap " +
                         std::to_string(cap));
  if (n > 64) throw SizeLimitError("bb_exact supports at most 64 vertices");
  std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  auto rows = detail::single_word_rows(g);

  int k = n / 2;
  std::vector<int> comb(k);
  bool fixed_zero = n % 2 == 0 && k > 0;
  for (int i = 0; i < k; ++i) comb[i] = i;

  long long best = -1;
  std::uint64_t best_mask = 0;
  while (true) {
    std::uint64_t a = 0;
    for (int i = 0; i < k; ++i) a |= 1ULL << comb[i];
    long long c = detail::class_edges_mask(rows, full, a);
    if (best < 0 || c < best) {
      best = c;
      best_mask = a;
    }
    // advance to the next combination in lexicographic order
    int i = k - 1;
    int lo = fixed_zero ? 1 : 0;
    while (i >= lo && comb[i] == n - k + i) --i;
    if (i < lo) break;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  if (k == 0) {
    best = 0;
    best_mask = 0;
  }

  OracleResult out;
  out.optimum = best;
  out.witness.side_a = detail::mask_to_set(best_mask);
  out.witness.side_b = detail::mask_to_set(full & ~best_mask);
  return out;
}

namespace detail {

/// Greedy clique cover of the candidate set; its size bounds the independence
/// number from above.
inline int clique_cover_bound(const std::vector<std::uint64_t>& rows, std::uint64_t cand) {
  std::uint64_t cliques[64];
  int count = 0;
  std::uint64_t bits = cand;
  while (bits) {
    int v = std::countr_zero(bits);
    bits &= bits - 1;
    bool placed = false;
    for (int c = 0; c < count; ++c) {
      if ((rows[v] & cliques[c]) == cliques[c]) {
        cliques[c] |= 1ULL << v;
        placed = true;
        break;
      }
    }
    if (!placed) cliques[count++] = 1ULL << v;
  }
  return count;
}

struct MisSolver {
  const std::vector<std::uint64_t>& rows;
  int best = 0;

  void search(std::uint64_t cand, int size) {
    if (size > best) best = size;
    if (!cand) return;
    if (size + std::popcount(cand) <= best) return;
    if (size + clique_cover_bound(rows, cand) <= best) return;
    int v = std::countr_zero(cand);
    search(cand & ~rows[v] & ~(1ULL << v), size + 1);
    search(cand & ~(1ULL << v), size);
  }
};

inline int independence_number(const std::vector<std::uint64_t>& rows, std::uint64_t cand) {
  MisSolver solver{rows};
  solver.search(cand, 0);
  return solver.best;
}

}  // namespace detail

/// Exact maximum independent set; among all maximum sets returns the
/// lexicographically smallest (greedy inclusion checked against exact
/// independence numbers of the residual graphs).
inline VertexSet max_independent_set(const Graph& g, int cap = 30) {
  int n = g.vertex_count();
  if (n > cap)
    throw SizeLimitError("max_independent_set: " + std::to_string(n) + " vertices exceeds cap " +
                         std::to_string(cap));
  if (n > 64) throw SizeLimitError("max_independent_set supports at most 64 vertices");
  std::uint64_t full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  auto rows = detail::single_word_rows(g);
  int target = detail::independence_number(rows, full);

  VertexSet chosen;
  std::uint64_t cand = full;
  for (int v = 0; v < n && static_cast<int>(chosen.size()) < target; ++v) {
    if (!((cand >> v) & 1)) continue;
    std::uint64_t with_v = cand & ~rows[v] & ~(1ULL << v);
    if (static_cast<int>(chosen.size()) + 1 + detail::independence_number(rows, with_v) == target) {
      chosen.push_back(v);
      cand = with_v;
    } else {
      cand &= ~(1ULL << v);
    }
  }
  internal_check(static_cast<int>(chosen.size()) == target, "lexicographic MIS reconstruction");
  return chosen;
}

namespace detail {

inline int edge_bit(int u, int v, int n) {  // u < v
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline bool mask_is_k4_free(std::uint32_t mask, int n) {
  std::uint32_t rows[8] = {0};
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) {
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
      }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!((rows[u] >> v) & 1)) continue;
      std::uint32_t common = rows[u] & rows[v] & (~0u << (v + 1));
      std::uint32_t bits = common;
      while (bits) {
        int x = std::countr_zero(bits);
        bits &= bits - 1;
        if (rows[x] & common & (x == 31 ? 0u : ~0u << (x + 1))) return false;
      }
    }
  }
  return true;
}

inline Graph mask_to_graph(std::uint32_t mask, int n) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

}  // namespace detail

/// Visits every labeled K4-free graph on n vertices exactly once and returns
/// how many there are. With threads > 1 the adjacency-mask space is split into
/// contiguous ranges and the visitor must be safe to call concurrently.
inline long long enumerate_k4_free(int n, const std::function<void(const Graph&)>& visitor,
                                   int threads = 1) {
  if (n < 0 || n > 7) throw SizeLimitError("enumerate_k4_free handles n <= 7");
  int m = n * (n - 1) / 2;
  std::uint64_t total = 1ULL << m;
  if (threads <= 1) {
    long long count = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (!detail::mask_is_k4_free(static_cast<std::uint32_t>(mask), n)) continue;
      ++count;
      if (visitor) visitor(detail::mask_to_graph(static_cast<std::uint32_t>(mask), n));
    }
    return count;
  }
  std::atomic<long long> count{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t lo = total * t / threads;
    std::uint64_t hi = total * (t + 1) / threads;
    pool.emplace_back([&, lo, hi] {
      long long local = 0;
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (!detail::mask_is_k4_free(static_cast<std::uint32_t>(mask), n)) continue;
        ++local;
        if (visitor) visitor(detail::mask_to_graph(static_cast<std::uint32_t>(mask), n));
      }
      count += local;
    });
  }
  for (auto& th : pool) th.join();
  return count.load();
}

/// For a triangle-free graph that is tripartite w.r.t. tp with part sizes
/// a <= b <= c, checks e(G) <= a*c + b*c.
inline bool check_packing_bound(const Graph& g, const TriPartition& tp) {
  validate_tripartition(tp, g.vertex_count());
  for (int i = 0; i < 3; ++i)
    if (edges_within(g, tp.parts[i]) != 0)
      throw PreconditionError("graph has an edge inside part " + std::to_string(i));
  if (triangle_count(g) != 0) throw PreconditionError("graph is not triangle-free");
  long long s[3] = {static_cast<long long>(tp.parts[0].size()),
                    static_cast<long long>(tp.parts[1].size()),
                    static_cast<long long>(tp.parts[2].size())};
  std::sort(s, s + 3);
  return g.edge_count() <= s[0] * s[2] + s[1] * s[2];
}

}  // namespace k4bb
