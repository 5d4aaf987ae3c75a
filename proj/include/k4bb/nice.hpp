#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k4bb/partition.hpp"
#include "k4bb/prng.hpp"

namespace k4bb {

/// Exact values of the four niceness inequalities:
///   lhs1 = (2e/n^2)(2/3 - 2e/n^2)            < eps
///   lhs2 = (2e/n^2)(2/9 - 6t/n^3)            < eps
///   lhs3 = 6 * sum over triangles of
///          (n - deg(u,v) - deg(u,w) - deg(v,w)) / n^4   < eps
///   min_degree_ok: delta(G) >= (4n-1)/9
struct NicenessReport {
  long long n = 0;
  long long e = 0;
  long long t = 0;
  long long codegree_deficiency_sum = 0;
  int min_degree = 0;
  Rational lhs1, lhs2, lhs3;
  bool min_degree_ok = false;
  Rational eps;
  bool verdict = false;
};

inline NicenessReport niceness_report(const Graph& g, const Rational& eps) {
  int n = g.vertex_count();
  require(n >= 1, "niceness is undefined for the empty graph");
  NicenessReport rep;
  rep.n = n;
  rep.e = g.edge_count();
  auto tris = triangles(g);
  rep.t = static_cast<long long>(tris.size());
  for (const auto& tri : tris)
    rep.codegree_deficiency_sum += n - codegree(g, tri[0], tri[1]) - codegree(g, tri[0], tri[2]) -
                                   codegree(g, tri[1], tri[2]);
  rep.min_degree = g.min_degree();

  long long n2 = static_cast<long long>(n) * n;
  Rational edge_density(2 * rep.e, n2);
  Rational triple_density = Rational(6 * rep.t) / (Rational(n2) * n);
  rep.lhs1 = edge_density * (Rational(2, 3) - edge_density);
  rep.lhs2 = edge_density * (Rational(2, 9) - triple_density);
  rep.lhs3 = Rational(6 * rep.codegree_deficiency_sum) / (Rational(n2) * n2);
  rep.min_degree_ok = 9LL * rep.min_degree >= 4LL * n - 1;
  rep.eps = eps;
  rep.verdict =
      rep.lhs1 < eps && rep.lhs2 < eps && rep.lhs3 < eps && rep.min_degree_ok;
  return rep;
}

struct WitnessTriangle {
  std::array<int, 3> triangle{};
  long long deficiency = 0;  // n - deg(u,v) - deg(u,w) - deg(v,w)
};

/// The triangle minimizing the codegree deficiency; first in enumeration
/// order among ties.
inline WitnessTriangle witness_triangle(const Graph& g) {
  auto tris = triangles(g);
  if (tris.empty()) throw PreconditionError("graph has no triangle");
  int n = g.vertex_count();
  WitnessTriangle best;
  bool have = false;
  for (const auto& tri : tris) {
    long long def = n - codegree(g, tri[0], tri[1]) - codegree(g, tri[0], tri[2]) -
                    codegree(g, tri[1], tri[2]);
    if (!have || def < best.deficiency) {
      best.triangle = tri;
      best.deficiency = def;
      have = true;
    }
  }
  return best;
}

/// The pairwise common neighborhoods of a triangle's edges. K4-freeness makes
/// them independent and pairwise disjoint; both are re-verified.
inline std::array<VertexSet, 3> three_independent_sets(const Graph& g,
                                                       const std::array<int, 3>& tri) {
  require(g.adjacent(tri[0], tri[1]) && g.adjacent(tri[0], tri[2]) && g.adjacent(tri[1], tri[2]),
          "vertices do not form a triangle");
  require(is_k4_free(g), "graph contains a K4");
  std::array<VertexSet, 3> sets = {common_neighbors(g, tri[0], tri[1]),
                                   common_neighbors(g, tri[0], tri[2]),
                                   common_neighbors(g, tri[1], tri[2])};
  for (int i = 0; i < 3; ++i) {
    internal_check(is_independent_set(g, sets[i]), "codegree set not independent");
    for (int j = i + 1; j < 3; ++j)
      internal_check(set_intersection(sets[i], sets[j]).empty(), "codegree sets overlap");
  }
  return sets;
}

/// The three near-classes plus the leftover vertices, each assigned to a part
/// it is sparsely connected to.
struct SpottyPartition {
  std::array<VertexSet, 3> base;   // A1, A2, A3
  VertexSet s;                     // V \ (A1 u A2 u A3)
  std::array<VertexSet, 3> parts;  // A1', A2', A3'
};

/// Assigns every vertex outside the three sets to a class it sends fewer than
/// 96*eps*n edges into (minimum count, ties to the lowest class index).
inline SpottyPartition spotty_partition(const Graph& g, const Rational& eps,
                                        const std::array<VertexSet, 3>& sets) {
  int n = g.vertex_count();
  long long total = 0;
  for (int i = 0; i < 3; ++i) {
    validate_vertex_set(sets[i], n, "set " + std::to_string(i));
    require(is_independent_set(g, sets[i]), "set " + std::to_string(i) + " is not independent");
    for (int j = i + 1; j < 3; ++j)
      require(set_intersection(sets[i], sets[j]).empty(), "sets overlap");
    Rational size(static_cast<long long>(sets[i].size()));
    require(size > Rational(n) * (Rational(1, 3) - 5 * eps) &&
                size < Rational(n) * (Rational(1, 3) + 5 * eps),
            "set " + std::to_string(i) + " size outside (n/3 - 5*eps*n, n/3 + 5*eps*n)");
    total += static_cast<long long>(sets[i].size());
  }
  require(Rational(total) >= Rational(n) * (1 - 5 * eps), "sets cover less than (1-5*eps)n");
  require(9LL * g.min_degree() >= 4LL * n - 1, "minimum degree below (4n-1)/9");

  SpottyPartition sp;
  sp.base = sets;
  sp.parts = sets;
  sp.s = set_difference(full_vertex_set(n), set_union(set_union(sets[0], sets[1]), sets[2]));
  Rational threshold = 96 * eps * n;
  for (int v : sp.s) {
    long long count[3];
    for (int i = 0; i < 3; ++i) count[i] = edges_from_vertex(g, v, sets[i]);
    int pick = 0;
    for (int i = 1; i < 3; ++i)
      if (count[i] < count[pick]) pick = i;
    if (!(Rational(count[pick]) < threshold))
      throw AssignmentFailure(v, count[0], count[1], count[2]);
    sp.parts[pick].push_back(v);
  }
  for (auto& part : sp.parts) part = sorted_set(std::move(part));
  return sp;
}

/// Theorem-style pipeline for eps-nice graphs (eps < 1e-4, n even):
/// witness triangle -> three codegree sets -> spotty partition -> for each
/// donor class, distribute it over the other two by conditional expectations;
/// best of the three. Bound n^2/9.
inline PartitionCertificate nice_partition(const Graph& g, const Rational& eps) {
  int n = g.vertex_count();
  require(eps < Rational(1, 10000), "nice_partition needs eps < 1e-4");
  require(n % 2 == 0, "nice_partition needs even n");
  require(n >= 6, "nice_partition needs n >= 6");
  auto rep = niceness_report(g, eps);
  require(rep.verdict, "graph is not eps-nice for the given eps");

  auto wt = witness_triangle(g);
  auto sets = three_independent_sets(g, wt.triangle);
  auto sp = spotty_partition(g, eps, sets);

  std::optional<PartitionCertificate> best;
  for (int d = 0; d < 3; ++d) {
    int j = d == 0 ? 1 : 0;
    int k = d == 2 ? 1 : 2;
    long long slots_j = n / 2 - static_cast<long long>(sp.parts[j].size());
    long long slots_k = n / 2 - static_cast<long long>(sp.parts[k].size());
    require(slots_j >= 0 && slots_k >= 0, "a spotty class already exceeds n/2");
    auto fill = detail::conditional_fill(g, sp.parts[j], sp.parts[k], sp.parts[d], slots_j,
                                         slots_k);
    auto cert = make_certificate(g, std::move(fill.partition),
                                 Rational(static_cast<long long>(n) * n, 9), Method::Nice);
    if (!best || cert.achieved < best->achieved) best = std::move(cert);
  }
  return *best;
}

// ---- lemma audits (report-only) ----

struct MissingEdgeViolation {
  int u = 0, v = 0;          // the within-class edge
  int part = 0;              // class index it lies in
  long long lhs = 0;         // e({u,v}, Aj' u Ak')
  Rational excess;           // lhs - 2(|Aj'|+|Ak'|) + n(1/3 - 5 eps); violation iff excess^2 > 3 eps n^2
};

struct DensePairViolation {
  int class_a = 0, class_b = 0;
  VertexSet b1, b2;  // threshold-size subsets with e(b1, b2) == 0
};

struct AuditReport {
  long long threshold_size = 0;  // ceil(sqrt(3 eps) n)
  long long within_edges_checked = 0;
  long long dense_pairs_checked = 0;
  std::vector<MissingEdgeViolation> missing_edge_violations;
  std::vector<DensePairViolation> dense_pair_violations;
  std::vector<std::string> notes;
  bool passed = true;
};

/// Checks every within-class edge against the missing-edges inequality and
/// probes threshold-size subset pairs for the dense-pairs property (extremal
/// low-degree candidates first, then seeded random samples).
inline AuditReport lemma_audit(const Graph& g, const Rational& eps, const SpottyPartition& sp,
                               std::uint64_t seed = 0, int samples = 32) {
  int n = g.vertex_count();
  AuditReport rep;
  Rational sqrt_arg = 3 * eps * n * n;  // compare squared quantities, no floating point
  rep.threshold_size = ceil_sqrt(sqrt_arg);

  for (int i = 0; i < 3; ++i) {
    int j = i == 0 ? 1 : 0;
    int k = i == 2 ? 1 : 2;
    long long others = static_cast<long long>(sp.parts[j].size() + sp.parts[k].size());
    VertexSet jk = set_union(sp.parts[j], sp.parts[k]);
    const VertexSet& part = sp.parts[i];
    for (std::size_t x = 0; x < part.size(); ++x) {
      for (std::size_t y = x + 1; y < part.size(); ++y) {
        if (!g.adjacent(part[x], part[y])) continue;
        ++rep.within_edges_checked;
        long long lhs =
            edges_from_vertex(g, part[x], jk) + edges_from_vertex(g, part[y], jk);
        Rational excess = Rational(lhs) - 2 * others + Rational(n) * (Rational(1, 3) - 5 * eps);
        if (excess > 0 && excess * excess > sqrt_arg) {
          rep.missing_edge_violations.push_back({part[x], part[y], i, lhs, excess});
          rep.passed = false;
        }
      }
    }
  }

  long long s = rep.threshold_size;
  SplitMix64 rng(seed);
  auto check_pair = [&](int ci, int cj, const VertexSet& b1, const VertexSet& b2) {
    ++rep.dense_pairs_checked;
    if (edges_between(g, b1, b2) == 0) {
      rep.dense_pair_violations.push_back({ci, cj, b1, b2});
      rep.passed = false;
    }
  };
  auto sparsest_towards = [&](const VertexSet& from, const VertexSet& towards) {
    std::vector<std::pair<long long, int>> ranked;
    ranked.reserve(from.size());
    for (int v : from) ranked.emplace_back(edges_from_vertex(g, v, towards), v);
    std::sort(ranked.begin(), ranked.end());
    VertexSet out;
    for (long long x = 0; x < s; ++x) out.push_back(ranked[x].second);
    return sorted_set(std::move(out));
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (s == 0 || s > static_cast<long long>(std::min(sp.base[i].size(), sp.base[j].size()))) {
        rep.notes.push_back("dense-pairs vacuous for classes " + std::to_string(i) + "," +
                            std::to_string(j));
        continue;
      }
      VertexSet b1 = sparsest_towards(sp.base[i], sp.base[j]);
      VertexSet b2 = sparsest_towards(sp.base[j], b1);
      check_pair(i, j, b1, b2);
      for (int it = 0; it < samples; ++it) {
        auto sample = [&](const VertexSet& from) {
          VertexSet pool = from;
          for (long long x = 0; x < s; ++x) {
            std::size_t pick = x + rng.below(pool.size() - x);
            std::swap(pool[x], pool[pick]);
          }
          pool.resize(s);
          return sorted_set(std::move(pool));
        };
        check_pair(i, j, sample(sp.base[i]), sample(sp.base[j]));
      }
    }
  }
  return rep;
}

}  // namespace k4bb
