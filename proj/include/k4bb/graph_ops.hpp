#pragma once

#include <array>
#include <bit>
#include <vector>

#include "k4bb/graph.hpp"

namespace k4bb {

namespace detail {

inline int masked_popcount(const std::uint64_t* row, const std::vector<std::uint64_t>& mask) {
  int c = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) c += std::popcount(row[w] & mask[w]);
  return c;
}

/// Edges of g with both endpoints inside `mask`.
inline long long edges_within_mask(const Graph& g, const std::vector<std::uint64_t>& mask) {
  long long twice = 0;
  for (std::size_t w = 0; w < mask.size(); ++w) {
    std::uint64_t bits = mask[w];
    while (bits) {
      int v = static_cast<int>(w) * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      twice += masked_popcount(g.row(v), mask);
    }
  }
  return twice / 2;
}

inline long long edges_between_masks(const Graph& g, const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b) {
  long long total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t bits = a[w];
    while (bits) {
      int v = static_cast<int>(w) * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      total += masked_popcount(g.row(v), b);
    }
  }
  return total;  // a and b disjoint
}

}  // namespace detail

inline long long edges_within(const Graph& g, const VertexSet& s) {
  return detail::edges_within_mask(g, set_mask(s, g.vertex_count()));
}

inline long long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return detail::edges_between_masks(g, set_mask(a, g.vertex_count()),
                                     set_mask(b, g.vertex_count()));
}

inline long long edges_from_vertex(const Graph& g, int v, const VertexSet& s) {
  return detail::masked_popcount(g.row(v), set_mask(s, g.vertex_count()));
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
  return edges_within(g, s) == 0;
}

/// |N(u) ∩ N(v)| for distinct vertices.
inline int codegree(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("codegree needs two distinct vertices");
  int c = 0;
  const std::uint64_t* ru = g.row(u);
  const std::uint64_t* rv = g.row(v);
  for (int w = 0; w < g.words(); ++w) c += std::popcount(ru[w] & rv[w]);
  return c;
}

inline VertexSet common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common_neighbors needs two distinct vertices");
  VertexSet out;
  const std::uint64_t* ru = g.row(u);
  const std::uint64_t* rv = g.row(v);
  for (int w = 0; w < g.words(); ++w) {
    std::uint64_t bits = ru[w] & rv[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

/// True iff no four vertices are pairwise adjacent. Walks triangles and tests
/// extensions, so it is fast on sparse and on K4-free inputs alike.
inline bool is_k4_free(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::uint64_t> common(g.words());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (int w = 0; w < g.words(); ++w) common[w] = g.row(u)[w] & g.row(v)[w];
      for (int w = 0; w < g.words(); ++w) {
        std::uint64_t bits = common[w];
        while (bits) {
          int x = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          if (x <= v) continue;
          // u,v,x is a triangle; a common neighbor above x closes a K4
          for (int ww = x >> 6; ww < g.words(); ++ww) {
            std::uint64_t ext = common[ww] & g.row(x)[ww];
            if (ww == (x >> 6)) ext &= ~0ULL << (x & 63) << 1;
            if (ext) return false;
          }
        }
      }
    }
  }
  return true;
}

/// All unordered pairwise-adjacent triples, each once, in ascending order.
inline std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (int w = (v + 1) >> 6; w < g.words(); ++w) {
        std::uint64_t bits = g.row(u)[w] & g.row(v)[w];
        if (w == ((v + 1) >> 6)) bits &= ~0ULL << ((v + 1) & 63);
        while (bits) {
          int x = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          out.push_back({u, v, x});
        }
      }
    }
  }
  return out;
}

inline long long triangle_count(const Graph& g) {
  return static_cast<long long>(triangles(g).size());
}

/// Class-edges: edges with both endpoints on one side of the bipartition.
inline long long class_edges(const Graph& g, const Bipartition& p) {
  validate_bipartition(p, g.vertex_count());
  return edges_within(g, p.side_a) + edges_within(g, p.side_b);
}

inline long long cross_edges(const Graph& g, const Bipartition& p) {
  validate_bipartition(p, g.vertex_count());
  return edges_between(g, p.side_a, p.side_b);
}

/// Red iff deg(v) >= n/2 (n odd compares exactly via 2*deg >= n).
inline ColoredGraph degree_coloring(const Graph& g) {
  ColoredGraph out{g, {}};
  int n = g.vertex_count();
  out.colors.reserve(n);
  for (int v = 0; v < n; ++v)
    out.colors.push_back(2 * g.degree(v) >= n ? Color::Red : Color::Blue);
  return out;
}

/// k copies per vertex; copies of adjacent vertices fully joined, copies of a
/// vertex mutually non-adjacent. Copy j of vertex v lands at index v*k + j, so
/// blowup(blowup(g,k1),k2) is bit-identical to blowup(g,k1*k2).
inline Graph blowup(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("blowup factor must be >= 1");
  int n = g.vertex_count();
  Graph out(n * k);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v))
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) out.add_edge(u * k + i, v * k + j);
  return out;
}

inline int blowup_original(int index, int k) { return index / k; }
inline int blowup_copy(int v, int j, int k) { return v * k + j; }

/// Greedy maximal matching with both endpoints inside a single part;
/// edges scanned in ascending lexicographic order for reproducibility.
inline std::vector<std::pair<int, int>> maximal_matching_within(const Graph& g,
                                                                const std::vector<VertexSet>& parts) {
  int n = g.vertex_count();
  std::vector<int> part_of(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    validate_vertex_set(parts[i], n, "part " + std::to_string(i));
    for (int v : parts[i]) {
      if (part_of[v] != -1) throw PreconditionError("parts overlap at vertex " + std::to_string(v));
      part_of[v] = static_cast<int>(i);
    }
  }
  std::vector<char> covered(n, 0);
  std::vector<std::pair<int, int>> matching;
  for (int u = 0; u < n; ++u) {
    if (covered[u] || part_of[u] == -1) continue;
    for (int v = u + 1; v < n; ++v) {
      if (covered[v] || part_of[v] != part_of[u] || !g.adjacent(u, v)) continue;
      matching.emplace_back(u, v);
      covered[u] = covered[v] = 1;
      break;
    }
  }
  return matching;
}

/// Vertex union of a greedy maximal family of vertex-disjoint triangles fully
/// inside `within`. The induced graph on within \ T is triangle-free.
inline VertexSet maximal_disjoint_triangles(const Graph& g, const VertexSet& within) {
  validate_vertex_set(within, g.vertex_count(), "within");
  std::vector<char> used(g.vertex_count(), 0);
  VertexSet t;
  const auto& w = within;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (used[w[i]]) continue;
    bool found = false;
    for (std::size_t j = i + 1; j < w.size() && !found; ++j) {
      if (used[w[j]] || !g.adjacent(w[i], w[j])) continue;
      for (std::size_t k = j + 1; k < w.size(); ++k) {
        if (used[w[k]] || !g.adjacent(w[i], w[k]) || !g.adjacent(w[j], w[k])) continue;
        used[w[i]] = used[w[j]] = used[w[k]] = 1;
        t.push_back(w[i]);
        t.push_back(w[j]);
        t.push_back(w[k]);
        found = true;
        break;
      }
    }
  }
  return sorted_set(std::move(t));
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v)) out.add_edge(perm[u], perm[v]);
  return out;
}

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  validate_vertex_set(keep, g.vertex_count(), "keep");
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

}  // namespace k4bb
