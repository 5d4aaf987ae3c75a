#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "k4bb/errors.hpp"

namespace k4bb {

/// Sorted list of distinct vertex indices.
using VertexSet = std::vector<int>;

enum class Color : std::uint8_t { Blue = 0, Red = 1 };

/// Simple undirected graph over vertices 0..n-1, adjacency kept as dense
/// bit rows so row intersections (codegrees, class-edge counts) are popcounts.
/// Treated as immutable once built; every algorithm below is a pure function.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), words_((n + 63) / 64), rows_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return edges_; }
  int words() const { return words_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop");
    if (adjacent(u, v)) return;
    row(u)[v >> 6] |= 1ULL << (v & 63);
    row(v)[u >> 6] |= 1ULL << (u & 63);
    ++edges_;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!adjacent(u, v)) return;
    row(u)[v >> 6] &= ~(1ULL << (v & 63));
    row(v)[u >> 6] &= ~(1ULL << (u & 63));
    --edges_;
  }

  int degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  int min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

  VertexSet neighbors(int v) const {
    VertexSet out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  std::uint64_t* row(int v) { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
  }

  int n_ = 0;
  int words_ = 0;
  long long edges_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct ColoredGraph {
  Graph graph;
  std::vector<Color> colors;
};

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

struct TriPartition {
  std::array<VertexSet, 3> parts;
};

// ---- vertex set helpers ----

inline bool is_sorted_unique(const VertexSet& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

inline VertexSet sorted_set(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet full_vertex_set(int n) {
  VertexSet out(n);
  for (int v = 0; v < n; ++v) out[v] = v;
  return out;
}

/// Word-mask form of a vertex set, for popcount-based edge counting.
inline std::vector<std::uint64_t> set_mask(const VertexSet& s, int n) {
  std::vector<std::uint64_t> mask((n + 63) / 64, 0);
  for (int v : s) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
    mask[v >> 6] |= 1ULL << (v & 63);
  }
  return mask;
}

inline void validate_vertex_set(const VertexSet& s, int n, const std::string& name) {
  if (!is_sorted_unique(s)) throw PreconditionError(name + " is not a sorted duplicate-free list");
  if (!s.empty() && (s.front() < 0 || s.back() >= n))
    throw PreconditionError(name + " has an index out of range");
}

inline void validate_bipartition(const Bipartition& p, int n) {
  validate_vertex_set(p.side_a, n, "side_a");
  validate_vertex_set(p.side_b, n, "side_b");
  if (static_cast<int>(p.side_a.size() + p.side_b.size()) != n ||
      !set_intersection(p.side_a, p.side_b).empty())
    throw PreconditionError("sides do not partition the vertex set");
}

inline bool is_balanced(const Bipartition& p) {
  auto a = static_cast<long long>(p.side_a.size());
  auto b = static_cast<long long>(p.side_b.size());
  return std::llabs(a - b) <= 1;
}

inline void validate_tripartition(const TriPartition& tp, int n) {
  std::size_t total = 0;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < 3; ++i) {
    validate_vertex_set(tp.parts[i], n, "part " + std::to_string(i));
    total += tp.parts[i].size();
    for (int v : tp.parts[i]) {
      if (seen[v]) throw PreconditionError("parts overlap at vertex " + std::to_string(v));
      seen[v] = 1;
    }
  }
  if (static_cast<int>(total) != n) throw PreconditionError("parts do not cover the vertex set");
}

// ---- text format ----
//
// Line 1: "n m". Next m lines: "u v" with 0 <= u < v < n, no duplicates.
// Colored graphs carry one extra line of n characters over {R,B}.

struct ParsedGraph {
  Graph graph;
  bool colored = false;
  std::vector<Color> colors;
};

inline ParsedGraph parse_graph_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](bool required) {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos) return true;
    }
    if (required) throw ParseError("unexpected end of file", lineno + 1);
    return false;
  };

  next_line(true);
  std::istringstream head(line);
  long long n = -1, m = -1;
  std::string extra;
  if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0)
    throw ParseError("expected header 'n m'", lineno);
  if (n > 1'000'000 || m > 50'000'000) throw ParseError("header sizes out of range", lineno);

  ParsedGraph out;
  out.graph = Graph(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    next_line(true);
    std::istringstream es(line);
    long long u = -1, v = -1;
    if (!(es >> u >> v) || (es >> extra)) throw ParseError("expected edge 'u v'", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex index out of range", lineno);
    if (u == v) throw ParseError("self-loop", lineno);
    if (u > v) throw ParseError("edges must be written with u < v", lineno);
    if (out.graph.adjacent(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("duplicate edge", lineno);
    out.graph.add_edge(static_cast<int>(u), static_cast<int>(v));
  }

  if (next_line(false)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string colors = line.substr(b, e - b + 1);
    if (static_cast<long long>(colors.size()) != n)
      throw ParseError("color line must have exactly n characters", lineno);
    out.colored = true;
    out.colors.reserve(colors.size());
    for (char c : colors) {
      if (c == 'R')
        out.colors.push_back(Color::Red);
      else if (c == 'B')
        out.colors.push_back(Color::Blue);
      else
        throw ParseError("colors must be 'R' or 'B'", lineno);
    }
    if (next_line(false)) throw ParseError("trailing content after color line", lineno);
  }
  return out;
}

inline ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_text(in);
}

inline std::string to_text(const Graph& g, const std::vector<Color>* colors = nullptr) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) out << u << ' ' << v << '\n';
  if (colors) {
    for (Color c : *colors) out << (c == Color::Red ? 'R' : 'B');
    out << '\n';
  }
  return out.str();
}

inline std::string to_text(const ColoredGraph& cg) { return to_text(cg.graph, &cg.colors); }

}  // namespace k4bb
