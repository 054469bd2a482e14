#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hyperwiener/error.hpp"
#include "hyperwiener/hypergraph.hpp"
#include "hyperwiener/io.hpp"
#include "hyperwiener/metric.hpp"
#include "hyperwiener/wiener_cut.hpp"

namespace hyperwiener {

using Seed = std::uint64_t;

/// Q_k^1: k vertices, one edge holding all of them.
inline Hypergraph single_edge(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::BadParameter, "single_edge needs k >= 2");
  std::vector<VertexId> edge(k);
  for (std::size_t i = 0; i < k; ++i) edge[i] = static_cast<VertexId>(i);
  return Hypergraph::build(k, {edge});
}

/// H x G with vertex (u, u') at id u * |V(G)| + u'. Edges {u} x e' come
/// first (by u, then e'), followed by e x {u'} (by e, then u').
inline Hypergraph cartesian_product(const Hypergraph& h, const Hypergraph& g) {
  const std::size_t ng = g.vertex_count();
  auto id = [ng](std::size_t u, std::size_t w) { return static_cast<VertexId>(u * ng + w); };
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t u = 0; u < h.vertex_count(); ++u) {
    for (const auto& e : g.edges()) {
      std::vector<VertexId> edge;
      for (VertexId w : e) edge.push_back(id(u, w));
      edges.push_back(std::move(edge));
    }
  }
  for (const auto& e : h.edges()) {
    for (std::size_t w = 0; w < ng; ++w) {
      std::vector<VertexId> edge;
      for (VertexId u : e) edge.push_back(id(u, w));
      edges.push_back(std::move(edge));
    }
  }
  return Hypergraph::build(h.vertex_count() * ng, std::move(edges));
}

/// Row-major labelling of {0..k-1}^n; coordinate 0 is the most significant.
class CubeCoordinates {
 public:
  CubeCoordinates(std::size_t k, std::size_t n) : k_(k), n_(n) {}

  std::size_t k() const noexcept { return k_; }
  std::size_t n() const noexcept { return n_; }

  std::vector<std::size_t> tuple_of(VertexId v) const {
    std::vector<std::size_t> t(n_);
    std::size_t rest = v;
    for (std::size_t i = n_; i-- > 0;) {
      t[i] = rest % k_;
      rest /= k_;
    }
    return t;
  }

  VertexId id_of(std::span<const std::size_t> tuple) const {
    std::size_t id = 0;
    for (std::size_t x : tuple) id = id * k_ + x;
    return static_cast<VertexId>(id);
  }

 private:
  std::size_t k_;
  std::size_t n_;
};

struct Cube {
  Hypergraph graph;
  CubeCoordinates coordinates;
};

/// Q_k^n from the coordinate rule: an edge is the set of tuples agreeing
/// everywhere except one coordinate. Edges are grouped by that coordinate.
inline Cube cube(std::size_t k, std::size_t n) {
  if (k < 2 || n < 1) throw Error(ErrorCode::BadParameter, "cube needs k >= 2 and n >= 1");
  CubeCoordinates coords(k, n);
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= k;
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t axis = 0; axis < n; ++axis) {
    for (VertexId v = 0; v < count; ++v) {
      auto t = coords.tuple_of(v);
      if (t[axis] != 0) continue;
      std::vector<VertexId> edge;
      for (std::size_t x = 0; x < k; ++x) {
        t[axis] = x;
        edge.push_back(coords.id_of(t));
      }
      edges.push_back(std::move(edge));
    }
  }
  return {Hypergraph::build(count, std::move(edges)), coords};
}

/// Linear phenylene LP_n: hexagons {6i..6i+5}, then squares {6i+4..6i+7}.
inline Hypergraph phenylene(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "phenylene needs n >= 2");
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<VertexId> hex;
    for (std::size_t j = 0; j < 6; ++j) hex.push_back(static_cast<VertexId>(6 * i + j));
    edges.push_back(std::move(hex));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto b = static_cast<VertexId>(6 * i);
    edges.push_back({b + 4, b + 5, b + 6, b + 7});
  }
  return Hypergraph::build(6 * n, std::move(edges));
}

/// Grows a linear hypertree edge by edge: each new edge takes one uniformly
/// chosen existing vertex plus size-1 fresh ones.
inline Hypergraph random_hypertree(std::span<const std::size_t> edge_sizes, Seed seed) {
  if (edge_sizes.empty()) throw Error(ErrorCode::BadParameter, "random_hypertree needs at least one edge");
  for (std::size_t s : edge_sizes) {
    if (s < 2) throw Error(ErrorCode::BadParameter, "hypertree edges need size >= 2");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<VertexId>> edges;
  VertexId next = 0;
  for (std::size_t i = 0; i < edge_sizes.size(); ++i) {
    std::vector<VertexId> edge;
    if (i > 0) edge.push_back(static_cast<VertexId>(std::uniform_int_distribution<std::uint64_t>(0, next - 1)(rng)));
    while (edge.size() < edge_sizes[i]) edge.push_back(next++);
    edges.push_back(std::move(edge));
  }
  return Hypergraph::build(next, std::move(edges));
}

/// The seven-vertex hypertree with edges {0,1}, {1,2,3}, {3,4,5}, {3,6}.
inline Hypergraph example_t1() { return Hypergraph::build(7, {{0, 1}, {1, 2, 3}, {3, 4, 5}, {3, 6}}); }

struct ClarExample {
  Hypergraph graph;
  CutPartition cuts;
};

namespace detail {

// Clar-structure hypergraph, dataset version 1.
//  - edge 0: central sextet {0..5}
//  - edges 1..6: outer sextets O_i = {6+6i .. 11+6i}
//  - edges 7..12: spokes {i, 6+6i} joining O_i to central vertex i
//  - edges 13..15: bonds {7+12j, 13+12j} pairing O_{2j} with O_{2j+1}
// Cut 0 (type I) is the central sextet with the three pairing bonds; cut
// 1+i (type II) is O_i with the spoke of its partner O_{i^1}.
inline constexpr std::string_view kClarHypergraph =
    "# clar structure hypergraph v1\n"
    "h 42\n"
    "e 0 1 2 3 4 5\n"
    "e 6 7 8 9 10 11\n"
    "e 12 13 14 15 16 17\n"
    "e 18 19 20 21 22 23\n"
    "e 24 25 26 27 28 29\n"
    "e 30 31 32 33 34 35\n"
    "e 36 37 38 39 40 41\n"
    "e 0 6\n"
    "e 1 12\n"
    "e 2 18\n"
    "e 3 24\n"
    "e 4 30\n"
    "e 5 36\n"
    "e 7 13\n"
    "e 19 25\n"
    "e 31 37\n";

inline constexpr std::string_view kClarCuts =
    "# clar structure cuts v1\n"
    "c 0 13 14 15\n"
    "c 1 8\n"
    "c 2 7\n"
    "c 3 10\n"
    "c 4 9\n"
    "c 5 12\n"
    "c 6 11\n";

}  // namespace detail

/// Loads the embedded Clar dataset and its canonical seven-cut partition.
/// Throws if the transcription no longer matches the known invariants.
inline ClarExample example_clar() {
  ClarExample ex{parse_hypergraph(detail::kClarHypergraph), {}};
  ex.cuts = parse_cuts(detail::kClarCuts, ex.graph);
  const auto& h = ex.graph;
  std::size_t six = 0;
  std::size_t two = 0;
  for (const auto& e : h.edges()) {
    six += e.size() == 6;
    two += e.size() == 2;
  }
  auto fail = [](const std::string& what) { throw Error(ErrorCode::BadParameter, "clar dataset: " + what); };
  if (h.vertex_count() != 42 || six != 7 || two != 9 || h.edge_count() != 16) fail("unexpected vertex/edge counts");
  if (!is_connected(h)) fail("not connected");
  if (ex.cuts.cuts.size() != 7) fail("expected seven cuts");
  for (std::size_t c = 0; c < ex.cuts.cuts.size(); ++c) {
    auto sizes = components_without(h, ex.cuts.cuts[c]).sizes();
    std::ranges::sort(sizes);
    const std::vector<std::uint64_t> expected =
        c == 0 ? std::vector<std::uint64_t>{7, 7, 7, 7, 7, 7} : std::vector<std::uint64_t>{1, 1, 1, 1, 7, 31};
    if (sizes != expected) fail("cut " + std::to_string(c) + " has the wrong component profile");
  }
  if (wiener_brute(h) != 2985) fail("Wiener index is not 2985");
  return ex;
}

}  // namespace hyperwiener
