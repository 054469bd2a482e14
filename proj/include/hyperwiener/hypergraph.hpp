#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperwiener/error.hpp"
#include "hyperwiener/union_find.hpp"

namespace hyperwiener {

/// Dense vertex index in [0, vertex_count).
using VertexId = std::uint32_t;
/// Position of an edge in the (input-ordered) edge list.
using EdgeId = std::uint32_t;

/// Raised by Hypergraph::build; `edge_index()` is the position of the
/// offending edge in the input list.
class BuildError : public Error {
 public:
  BuildError(ErrorCode code, std::size_t edge_index, const std::string& message)
      : Error(code, "edge " + std::to_string(edge_index) + ": " + message), edge_index_(edge_index) {}

  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  std::size_t edge_index_;
};

struct BuildOptions {
  /// Drop edges of size 1 with a warning instead of rejecting them.
  bool allow_singleton_edges = false;
  /// Receives human-readable warnings (repeated vertices, dropped edges).
  std::vector<std::string>* warnings = nullptr;
};

/// Finite undirected hypergraph on vertices 0..n-1. Immutable after build.
/// Each edge is stored as a sorted vertex list; edge order follows the input.
class Hypergraph {
 public:
  Hypergraph() = default;

  static Hypergraph build(std::size_t vertex_count, std::vector<std::vector<VertexId>> edges,
                          const BuildOptions& options = {}) {
    Hypergraph h;
    h.vertex_count_ = vertex_count;
    h.edges_.reserve(edges.size());
    std::map<std::vector<VertexId>, std::size_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto& edge = edges[i];
      if (edge.empty()) throw BuildError(ErrorCode::EmptyEdge, i, "edge has no vertices");
      for (VertexId v : edge) {
        if (v >= vertex_count) {
          throw BuildError(ErrorCode::OutOfRangeVertex, i,
                           "vertex " + std::to_string(v) + " is not below vertex count " +
                               std::to_string(vertex_count));
        }
      }
      std::sort(edge.begin(), edge.end());
      const auto old_size = edge.size();
      edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
      if (edge.size() != old_size && options.warnings) {
        options.warnings->push_back("edge " + std::to_string(i) + ": repeated vertices removed");
      }
      if (edge.size() < 2) {
        if (!options.allow_singleton_edges) {
          throw BuildError(ErrorCode::EdgeTooSmall, i, "edges must contain at least two vertices");
        }
        if (options.warnings) {
          options.warnings->push_back("edge " + std::to_string(i) + ": singleton edge dropped");
        }
        continue;
      }
      auto [it, inserted] = seen.emplace(edge, i);
      if (!inserted) {
        throw BuildError(ErrorCode::DuplicateEdge, i,
                         "same vertex set as edge " + std::to_string(it->second));
      }
      h.edges_.push_back(std::move(edge));
    }
    h.incidence_.assign(vertex_count, {});
    for (std::size_t e = 0; e < h.edges_.size(); ++e) {
      for (VertexId v : h.edges_[e]) h.incidence_[v].push_back(static_cast<EdgeId>(e));
    }
    return h;
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const VertexId> edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::vector<VertexId>>& edges() const noexcept { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }

  bool edge_contains(EdgeId e, VertexId v) const {
    const auto& edge = edges_.at(e);
    return std::binary_search(edge.begin(), edge.end(), v);
  }

  /// Looks an edge up by its (sorted) vertex set.
  std::optional<EdgeId> find_edge(std::span<const VertexId> sorted_vertices) const {
    if (sorted_vertices.empty() || sorted_vertices.front() >= vertex_count_) return std::nullopt;
    for (EdgeId e : incidence_[sorted_vertices.front()]) {
      if (std::ranges::equal(edges_[e], sorted_vertices)) return e;
    }
    return std::nullopt;
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Returns k when every edge has exactly k vertices. Edgeless hypergraphs
/// have no uniformity.
inline std::optional<std::size_t> uniformity(const Hypergraph& h) {
  if (h.edge_count() == 0) return std::nullopt;
  const std::size_t k = h.edges().front().size();
  for (const auto& edge : h.edges()) {
    if (edge.size() != k) return std::nullopt;
  }
  return k;
}

/// Returns a pair of distinct edges sharing two or more vertices, if any.
inline std::optional<std::pair<EdgeId, EdgeId>> linearity_violation(const Hypergraph& h) {
  std::vector<std::uint32_t> shared(h.edge_count(), 0);
  std::vector<EdgeId> touched;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    touched.clear();
    for (VertexId v : h.edge(e)) {
      for (EdgeId f : h.incident(v)) {
        if (f <= e) continue;
        if (shared[f]++ == 0) touched.push_back(f);
        if (shared[f] >= 2) {
          for (EdgeId t : touched) shared[t] = 0;
          return std::pair{e, f};
        }
      }
    }
    for (EdgeId t : touched) shared[t] = 0;
  }
  return std::nullopt;
}

inline bool is_linear(const Hypergraph& h) { return !linearity_violation(h).has_value(); }

/// H - F: same vertex set, surviving edges in their original relative order.
inline Hypergraph remove_edges(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::vector<bool> drop(h.edge_count(), false);
  for (EdgeId e : removed) {
    if (e >= h.edge_count()) {
      throw Error(ErrorCode::UnknownEdgeId, "edge id " + std::to_string(e) + " out of range");
    }
    drop[e] = true;
  }
  std::vector<std::vector<VertexId>> kept;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (!drop[e]) kept.push_back(h.edges()[e]);
  }
  return Hypergraph::build(h.vertex_count(), std::move(kept));
}

/// Partition of the vertex set into connected blocks. Blocks are ordered by
/// their smallest vertex and hold sorted vertex lists.
struct ComponentPartition {
  std::vector<std::vector<VertexId>> blocks;
  std::vector<std::uint32_t> block_of;

  std::size_t count() const noexcept { return blocks.size(); }

  std::vector<std::uint64_t> sizes() const {
    std::vector<std::uint64_t> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks) out.push_back(b.size());
    return out;
  }
};

/// Reusable component labelling of H minus a set of edges. Labels are
/// numbered in order of each component's smallest vertex.
class ComponentLabeler {
 public:
  explicit ComponentLabeler(const Hypergraph& h)
      : h_(&h), uf_(h.vertex_count()), label_of_root_(h.vertex_count()), labels_(h.vertex_count()) {}

  /// Returns the component count; `removed` may be empty.
  std::size_t run(const std::vector<bool>& removed) {
    uf_.reset();
    for (EdgeId e = 0; e < h_->edge_count(); ++e) {
      if (!removed.empty() && removed[e]) continue;
      const auto edge = h_->edge(e);
      for (std::size_t i = 1; i < edge.size(); ++i) uf_.unite(edge[0], edge[i]);
    }
    std::ranges::fill(label_of_root_, UINT32_MAX);
    sizes_.clear();
    for (VertexId v = 0; v < h_->vertex_count(); ++v) {
      auto& label = label_of_root_[uf_.find(v)];
      if (label == UINT32_MAX) {
        label = static_cast<std::uint32_t>(sizes_.size());
        sizes_.push_back(0);
      }
      labels_[v] = label;
      ++sizes_[label];
    }
    return sizes_.size();
  }

  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }

 private:
  const Hypergraph* h_;
  UnionFind uf_;
  std::vector<std::uint32_t> label_of_root_;
  std::vector<std::uint32_t> labels_;
  std::vector<std::uint64_t> sizes_;
};

/// Components of H minus the edges flagged in `removed` (empty: none).
inline ComponentPartition components_without(const Hypergraph& h, const std::vector<bool>& removed) {
  ComponentLabeler labeler(h);
  ComponentPartition out;
  out.blocks.resize(labeler.run(removed));
  for (std::size_t b = 0; b < out.blocks.size(); ++b) out.blocks[b].reserve(labeler.sizes()[b]);
  out.block_of = labeler.labels();
  for (VertexId v = 0; v < h.vertex_count(); ++v) out.blocks[out.block_of[v]].push_back(v);
  return out;
}

inline ComponentPartition components_without(const Hypergraph& h, std::span<const EdgeId> removed) {
  std::vector<bool> mask(h.edge_count(), false);
  for (EdgeId e : removed) {
    if (e >= h.edge_count()) {
      throw Error(ErrorCode::UnknownEdgeId, "edge id " + std::to_string(e) + " out of range");
    }
    mask[e] = true;
  }
  return components_without(h, mask);
}

inline ComponentPartition components(const Hypergraph& h) { return components_without(h, std::vector<bool>{}); }

inline bool is_connected(const Hypergraph& h) { return components(h).count() <= 1; }

inline void require_connected(const Hypergraph& h, const char* what) {
  if (!is_connected(h)) {
    throw Error(ErrorCode::Disconnected, std::string(what) + " requires a connected hypergraph");
  }
}

}  // namespace hyperwiener
