#pragma once

#include <memory>
#include <string>
#include <vector>

#include "k4bb/partition.hpp"
#include "k4bb/prng.hpp"

namespace k4bb {

enum class Family {
  CompleteTripartite,
  Turan,
  CompleteBipartite,
  PentagonBlowup,
  RandomTripartite,
  RandomK4FreeRepair,
  BlowupOf,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::CompleteTripartite: return "complete-tripartite";
    case Family::Turan: return "turan";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::PentagonBlowup: return "pentagon-blowup";
    case Family::RandomTripartite: return "random-tripartite";
    case Family::RandomK4FreeRepair: return "random-k4free-repair";
    case Family::BlowupOf: return "blowup-of";
  }
  return "?";
}

/// Family tag plus parameters; a fixed spec generates a bit-identical graph on
/// every platform (SplitMix64 drives all randomness).
struct GeneratorSpec {
  Family family = Family::CompleteTripartite;
  std::vector<int> sizes;        // part sizes / vertex count, per family
  Rational edge_prob = Rational(1, 2);
  std::uint64_t seed = 0;
  int k = 1;                     // blowup factor
  std::shared_ptr<GeneratorSpec> base;  // for blowup-of
};

/// Generated graph plus the vertex classes the construction used (independent
/// parts, when the family has them).
struct GeneratedGraph {
  Graph graph;
  std::vector<VertexSet> parts;
};

inline GeneratedGraph complete_multipartite(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) {
    require(s >= 0, "part sizes must be nonnegative");
    n += s;
  }
  GeneratedGraph out{Graph(n), {}};
  int start = 0;
  for (int s : sizes) {
    VertexSet part;
    for (int v = start; v < start + s; ++v) part.push_back(v);
    out.parts.push_back(std::move(part));
    start += s;
  }
  for (std::size_t i = 0; i < out.parts.size(); ++i)
    for (std::size_t j = i + 1; j < out.parts.size(); ++j)
      for (int u : out.parts[i])
        for (int v : out.parts[j]) out.graph.add_edge(std::min(u, v), std::max(u, v));
  return out;
}

inline GeneratedGraph cycle_graph(int n) {
  GeneratedGraph out{Graph(n), {}};
  for (int v = 0; v + 1 < n; ++v) out.graph.add_edge(v, v + 1);
  if (n > 2) out.graph.add_edge(0, n - 1);
  return out;
}

inline GeneratedGraph generate_with_parts(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::CompleteTripartite: {
      require(spec.sizes.size() == 3, "complete-tripartite needs three part sizes");
      return complete_multipartite(spec.sizes);
    }
    case Family::Turan: {
      require(spec.sizes.size() == 1 && spec.sizes[0] >= 0, "turan needs a vertex count");
      int n = spec.sizes[0];
      return complete_multipartite({(n + 2) / 3, (n + 1) / 3, n / 3});
    }
    case Family::CompleteBipartite: {
      require(spec.sizes.size() == 2, "complete-bipartite needs two part sizes");
      return complete_multipartite(spec.sizes);
    }
    case Family::PentagonBlowup: {
      require(spec.k >= 1, "pentagon-blowup needs k >= 1");
      GeneratedGraph out;
      out.graph = blowup(cycle_graph(5).graph, spec.k);
      for (int c = 0; c < 5; ++c) {
        VertexSet klass;
        for (int j = 0; j < spec.k; ++j) klass.push_back(c * spec.k + j);
        out.parts.push_back(std::move(klass));
      }
      return out;
    }
    case Family::RandomTripartite: {
      require(spec.sizes.size() == 3, "random-tripartite needs three part sizes");
      auto full = complete_multipartite(spec.sizes);
      SplitMix64 rng(spec.seed);
      GeneratedGraph out{Graph(full.graph.vertex_count()), full.parts};
      int n = full.graph.vertex_count();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (full.graph.adjacent(u, v) && rng.chance(spec.edge_prob)) out.graph.add_edge(u, v);
      return out;
    }
    case Family::RandomK4FreeRepair: {
      require(spec.sizes.size() == 1 && spec.sizes[0] >= 0, "random-k4free-repair needs n");
      int n = spec.sizes[0];
      require(n <= 64, "random-k4free-repair supports n <= 64");
      SplitMix64 rng(spec.seed);
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng.chance(spec.edge_prob)) g.add_edge(u, v);
      // delete the edge lying in the most K4s until none remain
      while (true) {
        std::vector<std::vector<long long>> in_k4(n, std::vector<long long>(n, 0));
        bool any = false;
        for (int a = 0; a < n; ++a)
          for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
              if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
              for (int d = c + 1; d < n; ++d) {
                if (g.adjacent(a, d) && g.adjacent(b, d) && g.adjacent(c, d)) {
                  any = true;
                  int quad[4] = {a, b, c, d};
                  for (int x = 0; x < 4; ++x)
                    for (int y = x + 1; y < 4; ++y) ++in_k4[quad[x]][quad[y]];
                }
              }
            }
          }
        if (!any) break;
        int bu = -1, bv = -1;
        long long best = 0;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (in_k4[u][v] > best) {
              best = in_k4[u][v];
              bu = u;
              bv = v;
            }
        g.remove_edge(bu, bv);
      }
      internal_check(is_k4_free(g), "repair left a K4 behind");
      return {std::move(g), {}};
    }
    case Family::BlowupOf: {
      require(spec.base != nullptr, "blowup-of needs a base spec");
      require(spec.k >= 1, "blowup-of needs k >= 1");
      auto base = generate_with_parts(*spec.base);
      GeneratedGraph out;
      out.graph = blowup(base.graph, spec.k);
      for (const auto& part : base.parts) {
        VertexSet klass;
        for (int v : part)
          for (int j = 0; j < spec.k; ++j) klass.push_back(v * spec.k + j);
        out.parts.push_back(sorted_set(std::move(klass)));
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown family");
}

/// Every generated graph is K4-free; asserted here once per call.
inline Graph generate(const GeneratorSpec& spec) {
  auto out = generate_with_parts(spec);
  internal_check(is_k4_free(out.graph), "generator produced a K4");
  return std::move(out.graph);
}

namespace detail {

/// Trim two independent sets to total exactly 2n/3 with |i2| >= |i1| and
/// |i2| <= n/2, removing highest-index vertices, preferring target sizes that
/// make both greedy side capacities even.
inline std::pair<VertexSet, VertexSet> trim_independent_pair(int n, VertexSet i1, VertexSet i2) {
  if (i1.size() > i2.size()) std::swap(i1, i2);
  require(n % 6 == 0, "trim needs 6 | n");
  require(3 * static_cast<long long>(i1.size() + i2.size()) >= 2LL * n,
          "sets cover less than 2n/3");
  long long lo = std::max<long long>(n / 3, 2LL * n / 3 - static_cast<long long>(i1.size()));
  long long hi = std::min<long long>(static_cast<long long>(i2.size()), n / 2);
  require(lo <= hi, "no valid trim: the smaller set has fewer than n/6 vertices");
  long long s2 = hi;
  if ((s2 - n / 6) % 2 != 0 && s2 - 1 >= lo) s2 -= 1;
  long long s1 = 2LL * n / 3 - s2;
  i2.resize(s2);
  i1.resize(s1);
  return {std::move(i1), std::move(i2)};
}

}  // namespace detail

/// Packages a generated graph whose first two parts serve as the independent
/// pair. Rejects families without two usable parts or with too little
/// coverage, naming the reason.
inline ConvenientInstance convenient_instance(const GeneratorSpec& spec) {
  auto gen = generate_with_parts(spec);
  int n = gen.graph.vertex_count();
  require(n % 6 == 0, "convenient instance needs 6 | n, got n = " + std::to_string(n));
  require(gen.parts.size() >= 2, std::string(family_name(spec.family)) +
                                     " does not designate independent parts");
  VertexSet i1 = gen.parts[0];
  VertexSet i2 = gen.parts[1];
  if (spec.family == Family::PentagonBlowup) {
    // the best disjoint independent pair in a pentagon blowup is two
    // class-pairs, still too small: rejected with the exact deficit
    i1 = set_union(gen.parts[0], gen.parts[2]);
    i2 = set_union(gen.parts[1], gen.parts[3]);
    (void)0;
  }
  require(3 * static_cast<long long>(i1.size() + i2.size()) >= 2LL * n,
          "parts cover " + std::to_string(i1.size() + i2.size()) + " < 2n/3 = " +
              std::to_string(2 * n / 3) + " vertices");
  auto trimmed = detail::trim_independent_pair(n, std::move(i1), std::move(i2));
  return ConvenientInstance::create(gen.graph, std::move(trimmed.first),
                                    std::move(trimmed.second));
}

/// Seeded convenient-style instance for stress tests: three parts of sizes
/// (n/3 - d, n/3 + d, n/3), cross edges kept with probability p, then random
/// chords inside the third part, skipping any that would close a K4 (or any
/// triangle inside R when triangle_free_rest is set).
struct ConvenientDraw {
  Graph graph;
  VertexSet i1, i2;
};

inline ConvenientDraw random_convenient_draw(int n, int imbalance, const Rational& cross_prob,
                                             const Rational& chord_prob, bool triangle_free_rest,
                                             std::uint64_t seed) {
  require(n % 6 == 0, "n must be divisible by 6");
  require(imbalance >= 0 && n / 3 - imbalance >= 0 && n / 6 - imbalance >= 0,
          "imbalance too large");
  SplitMix64 rng(seed);
  int a = n / 3 - imbalance, b = n / 3 + imbalance;
  auto gen = complete_multipartite({a, b, n - a - b});
  Graph g(n);
  int rest_start = a + b;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (gen.graph.adjacent(u, v) && rng.chance(cross_prob)) g.add_edge(u, v);
  for (int u = rest_start; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!rng.chance(chord_prob)) continue;
      g.add_edge(u, v);
      bool closes_triangle_in_rest = false;
      if (triangle_free_rest)
        for (int w = rest_start; w < n && !closes_triangle_in_rest; ++w)
          if (w != u && w != v && g.adjacent(u, w) && g.adjacent(v, w))
            closes_triangle_in_rest = true;
      if (closes_triangle_in_rest || !is_k4_free(g)) g.remove_edge(u, v);
    }
  }
  ConvenientDraw draw;
  draw.i1 = gen.parts[0];
  draw.i2 = gen.parts[1];
  draw.graph = std::move(g);
  return draw;
}

}  // namespace k4bb
