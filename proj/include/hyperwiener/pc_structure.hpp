#pragma once

// Edge-gated hypergraphs, the vertex partitions H_e, the Theta relation on
// edges, and recognition of k-uniform partial cube-hypergraphs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperwiener/error.hpp"
#include "hyperwiener/hypergraph.hpp"
#include "hyperwiener/metric.hpp"
#include "hyperwiener/union_find.hpp"

namespace hyperwiener {

class NotEdgeGatedError : public Error {
 public:
  NotEdgeGatedError(VertexId vertex, EdgeId edge)
      : Error(ErrorCode::NotEdgeGated, "vertex " + std::to_string(vertex) + " has no gate in edge " +
                                           std::to_string(edge)),
        vertex_(vertex),
        edge_(edge) {}

  VertexId vertex() const noexcept { return vertex_; }
  EdgeId edge() const noexcept { return edge_; }

 private:
  VertexId vertex_;
  EdgeId edge_;
};

/// e Theta f and f Theta g hold but e Theta g does not.
class ThetaNotTransitiveError : public Error {
 public:
  explicit ThetaNotTransitiveError(std::array<EdgeId, 3> witness)
      : Error(ErrorCode::ThetaNotTransitive,
              "edges " + std::to_string(witness[0]) + ", " + std::to_string(witness[1]) + ", " +
                  std::to_string(witness[2]) + " violate transitivity"),
        witness_(witness) {}

  const std::array<EdgeId, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<EdgeId, 3> witness_;
};

struct GateResult {
  std::optional<VertexId> vertex;

  explicit operator bool() const noexcept { return vertex.has_value(); }
};

/// Gate of the row's source in `edge`: the unique nearest edge vertex, with
/// every other edge vertex exactly one step farther.
inline GateResult gate_from_row(const DistanceRow& row, std::span<const VertexId> edge) {
  Distance best = kUnreachable;
  VertexId best_vertex = 0;
  for (VertexId a : edge) {
    if (row[a] < best) {
      best = row[a];
      best_vertex = a;
    }
  }
  if (best == kUnreachable) return {};
  for (VertexId a : edge) {
    if (a != best_vertex && row[a] != best + 1) return {};
  }
  return {best_vertex};
}

inline GateResult gate(const Hypergraph& h, VertexId x, EdgeId e) {
  if (e >= h.edge_count()) throw Error(ErrorCode::UnknownEdgeId, "gate: edge id out of range");
  return gate_from_row(bfs_from(h, x), h.edge(e));
}

struct EdgeGatedResult {
  bool edge_gated = true;
  /// First (vertex, edge) pair without a gate.
  std::optional<std::pair<VertexId, EdgeId>> counterexample;

  explicit operator bool() const noexcept { return edge_gated; }
};

inline EdgeGatedResult is_edge_gated(const Hypergraph& h, const DistanceTable& table) {
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      if (!gate_from_row(table.row(x), h.edge(e))) return {false, std::pair{x, e}};
    }
  }
  return {};
}

inline EdgeGatedResult is_edge_gated(const Hypergraph& h) {
  require_connected(h, "is_edge_gated");
  return is_edge_gated(h, DistanceTable::compute(h));
}

/// H_e: block i collects the vertices whose gate in e is anchors[i].
struct EdgeVertexPartition {
  EdgeId edge = 0;
  std::vector<VertexId> anchors;
  std::vector<std::vector<VertexId>> blocks;
  std::vector<std::uint32_t> block_of;

  const std::vector<VertexId>& block_for(VertexId anchor) const {
    const auto it = std::ranges::find(anchors, anchor);
    if (it == anchors.end()) throw Error(ErrorCode::BadParameter, "vertex is not an anchor of this edge");
    return blocks[static_cast<std::size_t>(it - anchors.begin())];
  }
};

inline EdgeVertexPartition edge_vertex_partition(const Hypergraph& h, const DistanceTable& table, EdgeId e) {
  if (e >= h.edge_count()) throw Error(ErrorCode::UnknownEdgeId, "edge id out of range");
  EdgeVertexPartition p;
  p.edge = e;
  const auto edge = h.edge(e);
  p.anchors.assign(edge.begin(), edge.end());
  p.blocks.resize(edge.size());
  p.block_of.resize(h.vertex_count());
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    const auto g = gate_from_row(table.row(x), edge);
    if (!g) throw NotEdgeGatedError(x, e);
    const auto slot = static_cast<std::uint32_t>(std::ranges::find(p.anchors, *g.vertex) - p.anchors.begin());
    p.block_of[x] = slot;
    p.blocks[slot].push_back(x);
  }
  return p;
}

inline EdgeVertexPartition edge_vertex_partition(const Hypergraph& h, EdgeId e) {
  require_connected(h, "edge_vertex_partition");
  return edge_vertex_partition(h, DistanceTable::compute(h), e);
}

/// e Theta f given H_e: f meets every block of H_e.
inline bool theta(const EdgeVertexPartition& pe, std::span<const VertexId> f) {
  std::vector<bool> hit(pe.blocks.size(), false);
  std::size_t count = 0;
  for (VertexId v : f) {
    const auto b = pe.block_of[v];
    if (!hit[b]) {
      hit[b] = true;
      ++count;
    }
  }
  return count == pe.blocks.size();
}

inline bool theta(const Hypergraph& h, EdgeId e, EdgeId f) {
  if (f >= h.edge_count()) throw Error(ErrorCode::UnknownEdgeId, "edge id out of range");
  return theta(edge_vertex_partition(h, e), h.edge(f));
}

/// The raw Theta relation as bit rows: row(e) has bit f set iff e Theta f.
class ThetaRelation {
 public:
  ThetaRelation() = default;

  ThetaRelation(const Hypergraph& h, std::span<const EdgeVertexPartition> partitions)
      : m_(h.edge_count()), words_((m_ + 63) / 64), bits_(m_ * words_, 0) {
    for (EdgeId e = 0; e < m_; ++e) {
      for (EdgeId f = 0; f < m_; ++f) {
        if (theta(partitions[e], h.edge(f))) bits_[e * words_ + f / 64] |= std::uint64_t{1} << (f % 64);
      }
    }
  }

  bool operator()(EdgeId e, EdgeId f) const { return (bits_[e * words_ + f / 64] >> (f % 64)) & 1U; }
  std::size_t edge_count() const noexcept { return m_; }

  std::optional<std::pair<EdgeId, EdgeId>> asymmetric_pair() const {
    for (EdgeId e = 0; e < m_; ++e) {
      for (EdgeId f = e + 1; f < m_; ++f) {
        if ((*this)(e, f) != (*this)(f, e)) return std::pair{e, f};
      }
    }
    return std::nullopt;
  }

  /// Transitive iff row(f) is a subset of row(e) whenever e Theta f.
  std::optional<std::array<EdgeId, 3>> transitivity_violation() const {
    for (EdgeId e = 0; e < m_; ++e) {
      for (EdgeId f = 0; f < m_; ++f) {
        if (e == f || !(*this)(e, f)) continue;
        for (std::size_t w = 0; w < words_; ++w) {
          const std::uint64_t missing = bits_[f * words_ + w] & ~bits_[e * words_ + w];
          if (missing != 0) {
            const auto g = static_cast<EdgeId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(missing)));
            return std::array<EdgeId, 3>{e, f, g};
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline std::vector<EdgeVertexPartition> all_edge_partitions(const Hypergraph& h, const DistanceTable& table) {
  std::vector<EdgeVertexPartition> out;
  out.reserve(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) out.push_back(edge_vertex_partition(h, table, e));
  return out;
}

struct ThetaClass {
  std::vector<EdgeId> edges;
  /// Components of H minus this class.
  ComponentPartition components;

  std::vector<std::uint64_t> sizes() const { return components.sizes(); }
};

struct ThetaStructure {
  std::vector<ThetaClass> classes;
  std::vector<std::uint32_t> class_of_edge;
};

inline ThetaStructure theta_structure(const Hypergraph& h, const DistanceTable& table) {
  if (auto bad = is_edge_gated(h, table); !bad) {
    throw NotEdgeGatedError(bad.counterexample->first, bad.counterexample->second);
  }
  const auto partitions = all_edge_partitions(h, table);
  const ThetaRelation relation(h, partitions);
  if (auto witness = relation.transitivity_violation()) throw ThetaNotTransitiveError(*witness);

  UnionFind uf(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    for (EdgeId f = e + 1; f < h.edge_count(); ++f) {
      if (relation(e, f) && relation(f, e)) uf.unite(e, f);
    }
  }
  ThetaStructure out;
  out.class_of_edge.assign(h.edge_count(), 0);
  std::vector<std::uint32_t> class_of_root(h.edge_count(), UINT32_MAX);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    const auto root = uf.find(e);
    if (class_of_root[root] == UINT32_MAX) {
      class_of_root[root] = static_cast<std::uint32_t>(out.classes.size());
      out.classes.emplace_back();
    }
    out.class_of_edge[e] = class_of_root[root];
    out.classes[class_of_root[root]].edges.push_back(e);
  }
  // Classes from symmetric pairs alone must be Theta-cliques.
  for (const auto& cls : out.classes) {
    for (EdgeId e : cls.edges) {
      for (EdgeId f : cls.edges) {
        if (!relation(e, f)) {
          for (EdgeId g : cls.edges) {
            if (relation(e, g) && relation(g, f)) throw ThetaNotTransitiveError({e, g, f});
          }
          throw ThetaNotTransitiveError({e, f, f});
        }
      }
    }
  }
  for (auto& cls : out.classes) cls.components = components_without(h, cls.edges);
  return out;
}

inline ThetaStructure theta_structure(const Hypergraph& h) {
  require_connected(h, "theta_structure");
  return theta_structure(h, DistanceTable::compute(h));
}

enum class RecognitionFailure { None, NotUniform, NotEdgeGated, ThetaNotTransitive };

constexpr std::string_view to_string(RecognitionFailure r) {
  switch (r) {
    case RecognitionFailure::None: return "none";
    case RecognitionFailure::NotUniform: return "not uniform";
    case RecognitionFailure::NotEdgeGated: return "not edge-gated";
    case RecognitionFailure::ThetaNotTransitive: return "theta not transitive";
  }
  return "unknown";
}

struct RecognitionReport {
  std::optional<std::size_t> uniform_k;
  bool edge_gated = false;
  std::optional<std::pair<VertexId, EdgeId>> gate_counterexample;
  bool theta_symmetric = false;
  std::optional<std::pair<EdgeId, EdgeId>> asymmetric_pair;
  bool theta_transitive = false;
  std::optional<std::array<EdgeId, 3>> transitivity_witness;
  /// Convexity route, present only when requested: edge-gated and every
  /// block of every H_e convex.
  std::optional<bool> convexity_ok;
  std::optional<std::pair<EdgeId, VertexId>> nonconvex_block;  // (edge, anchor)
  bool verdict = false;
  RecognitionFailure reason = RecognitionFailure::None;

  /// Partial-cube verdict of the convexity characterization, when run.
  std::optional<bool> convexity_verdict() const {
    if (!convexity_ok) return std::nullopt;
    return uniform_k.has_value() && *convexity_ok;
  }

  std::optional<bool> routes_agree() const {
    const auto other = convexity_verdict();
    if (!other) return std::nullopt;
    return *other == verdict;
  }
};

inline RecognitionReport recognize(const Hypergraph& h, bool validate_convexity = false) {
  require_connected(h, "recognize");
  RecognitionReport r;
  r.uniform_k = uniformity(h);
  const auto table = DistanceTable::compute(h);
  const auto gated = is_edge_gated(h, table);
  r.edge_gated = gated.edge_gated;
  r.gate_counterexample = gated.counterexample;
  std::vector<EdgeVertexPartition> partitions;
  if (r.edge_gated) {
    partitions = all_edge_partitions(h, table);
    const ThetaRelation relation(h, partitions);
    r.asymmetric_pair = relation.asymmetric_pair();
    r.theta_symmetric = !r.asymmetric_pair;
    r.transitivity_witness = relation.transitivity_violation();
    r.theta_transitive = !r.transitivity_witness;
  }
  if (validate_convexity) {
    r.convexity_ok = r.edge_gated;
    for (std::size_t e = 0; e < partitions.size() && *r.convexity_ok; ++e) {
      const auto& p = partitions[e];
      for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (!is_convex(table, p.blocks[i])) {
          r.convexity_ok = false;
          r.nonconvex_block = std::pair{p.edge, p.anchors[i]};
          break;
        }
      }
    }
  }
  r.verdict = r.uniform_k.has_value() && r.edge_gated && r.theta_transitive;
  if (!r.uniform_k) {
    r.reason = RecognitionFailure::NotUniform;
  } else if (!r.edge_gated) {
    r.reason = RecognitionFailure::NotEdgeGated;
  } else if (!r.theta_transitive) {
    r.reason = RecognitionFailure::ThetaNotTransitive;
  }
  return r;
}

/// Pair (u, v) from different blocks of `parts` with a geodesic whose number
/// of `removed` edges is not exactly one. Dynamic programming over the
/// shortest-path DAG of each source tracks the min and max such count.
inline std::optional<std::pair<VertexId, VertexId>> single_crossing_violation(
    const Hypergraph& h, const DistanceTable& table, const std::vector<bool>& removed,
    const ComponentPartition& parts) {
  const std::size_t n = h.vertex_count();
  std::vector<VertexId> order(n);
  std::vector<std::uint32_t> lo(n);
  std::vector<std::uint32_t> hi(n);
  for (VertexId u = 0; u < n; ++u) {
    const auto& row = table.row(u);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::ranges::sort(order, [&](VertexId a, VertexId b) { return row[a] < row[b]; });
    std::ranges::fill(lo, UINT32_MAX);
    std::ranges::fill(hi, 0);
    lo[u] = 0;
    for (VertexId x : order) {
      if (row[x] == kUnreachable) break;
      for (EdgeId e : h.incident(x)) {
        const std::uint32_t step = removed[e] ? 1 : 0;
        for (VertexId y : h.edge(e)) {
          if (row[y] != row[x] + 1) continue;
          lo[y] = std::min(lo[y], lo[x] + step);
          hi[y] = std::max(hi[y], hi[x] + step);
        }
      }
    }
    for (VertexId v = u + 1; v < n; ++v) {
      if (parts.block_of[u] == parts.block_of[v]) continue;
      if (lo[v] != 1 || hi[v] != 1) return std::pair{u, v};
    }
  }
  return std::nullopt;
}

/// For every pair split by H - F, every shortest path uses exactly one edge of F.
inline bool verify_single_crossing(const Hypergraph& h, const DistanceTable& table,
                                   std::span<const EdgeId> cut) {
  const auto parts = components_without(h, cut);
  if (parts.count() < 2) throw Error(ErrorCode::NotACut, "removing the edge set leaves the hypergraph connected");
  std::vector<bool> removed(h.edge_count(), false);
  for (EdgeId e : cut) removed[e] = true;
  return !single_crossing_violation(h, table, removed, parts);
}

inline bool verify_single_crossing(const Hypergraph& h, std::span<const EdgeId> cut) {
  require_connected(h, "verify_single_crossing");
  return verify_single_crossing(h, DistanceTable::compute(h), cut);
}

}  // namespace hyperwiener
