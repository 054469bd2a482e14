#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperwiener/error.hpp"
#include "hyperwiener/hypergraph.hpp"

namespace hyperwiener {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Exact, unbounded accumulator for Wiener sums.
using WienerValue = boost::multiprecision::cpp_int;

struct DistanceRow {
  VertexId source = 0;
  std::vector<Distance> dist;

  Distance operator[](VertexId v) const { return dist[v]; }
};

namespace detail {

// Reusable BFS buffers. A step moves between any two vertices of a shared
// edge, so each edge is expanded once, when first reached.
class BfsWorkspace {
 public:
  explicit BfsWorkspace(const Hypergraph& h) : h_(&h), edge_done_(h.edge_count(), 0) {
    queue_.reserve(h.vertex_count());
  }

  // Fills `dist` (resized to n). When `targets` is non-empty the search stops
  // once all of them are labelled; other entries may then stay unreachable.
  void run(VertexId source, std::vector<Distance>& dist, std::span<const VertexId> targets = {}) {
    const auto& h = *h_;
    dist.assign(h.vertex_count(), kUnreachable);
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(edge_done_.begin(), edge_done_.end(), 0);
      stamp_ = 1;
    }
    std::size_t remaining = targets.size();
    auto hit = [&](VertexId v) {
      if (remaining != 0 && std::find(targets.begin(), targets.end(), v) != targets.end()) --remaining;
    };
    queue_.clear();
    dist[source] = 0;
    queue_.push_back(source);
    hit(source);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      if (!targets.empty() && remaining == 0) return;
      const VertexId u = queue_[head];
      const Distance next = dist[u] + 1;
      for (EdgeId e : h.incident(u)) {
        if (edge_done_[e] == stamp_) continue;
        edge_done_[e] = stamp_;
        for (VertexId w : h.edge(e)) {
          if (dist[w] != kUnreachable) continue;
          dist[w] = next;
          queue_.push_back(w);
          hit(w);
        }
      }
    }
  }

 private:
  const Hypergraph* h_;
  std::vector<std::uint32_t> edge_done_;
  std::uint32_t stamp_ = 0;
  std::vector<VertexId> queue_;
};

}  // namespace detail

inline DistanceRow bfs_from(const Hypergraph& h, VertexId source) {
  if (source >= h.vertex_count()) throw Error(ErrorCode::OutOfRangeVertex, "bfs source out of range");
  detail::BfsWorkspace ws(h);
  DistanceRow row{source, {}};
  ws.run(source, row.dist);
  return row;
}

/// All-pairs distances, one BFS row per vertex.
class DistanceTable {
 public:
  DistanceTable() = default;

  static DistanceTable compute(const Hypergraph& h, unsigned threads = 1) {
    DistanceTable t;
    const std::size_t n = h.vertex_count();
    t.rows_.resize(n);
    auto work = [&](std::size_t begin, std::size_t stride) {
      detail::BfsWorkspace ws(h);
      for (std::size_t s = begin; s < n; s += stride) {
        t.rows_[s].source = static_cast<VertexId>(s);
        ws.run(static_cast<VertexId>(s), t.rows_[s].dist);
      }
    };
    threads = std::max(1u, threads);
    if (threads == 1 || n < 2) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i, threads);
    }
    return t;
  }

  Distance operator()(VertexId u, VertexId v) const { return rows_[u].dist[v]; }
  const DistanceRow& row(VertexId u) const { return rows_[u]; }
  std::size_t size() const noexcept { return rows_.size(); }

  bool connected() const {
    return rows_.empty() ||
           std::ranges::none_of(rows_.front().dist, [](Distance d) { return d == kUnreachable; });
  }

 private:
  std::vector<DistanceRow> rows_;
};

inline Distance distance(const Hypergraph& h, VertexId u, VertexId v) {
  if (u >= h.vertex_count() || v >= h.vertex_count()) {
    throw Error(ErrorCode::OutOfRangeVertex, "distance query out of range");
  }
  if (u == v) return 0;
  detail::BfsWorkspace ws(h);
  std::vector<Distance> dist;
  const VertexId target[] = {v};
  ws.run(u, dist, target);
  return dist[v];
}

/// W(H) as the sum of BFS distances over unordered pairs. `threads` splits the
/// per-source fan-out; partial sums are combined by addition.
inline WienerValue wiener_brute(const Hypergraph& h, unsigned threads = 1) {
  const std::size_t n = h.vertex_count();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<WienerValue> partial(threads);
  std::vector<char> disconnected(threads, 0);
  auto work = [&](unsigned slot) {
    detail::BfsWorkspace ws(h);
    std::vector<Distance> dist;
    for (std::size_t s = slot; s < n; s += threads) {
      ws.run(static_cast<VertexId>(s), dist);
      std::uint64_t row_sum = 0;
      for (std::size_t v = s + 1; v < n; ++v) {
        if (dist[v] == kUnreachable) {
          disconnected[slot] = 1;
          return;
        }
        row_sum += dist[v];
      }
      partial[slot] += row_sum;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work, i);
  }
  if (std::ranges::any_of(disconnected, [](char c) { return c != 0; })) {
    throw Error(ErrorCode::Disconnected, "Wiener index is undefined for a disconnected hypergraph");
  }
  WienerValue total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

/// Convexity against a precomputed table: for x, y in X every z with
/// d(x,z) + d(z,y) = d(x,y) must lie in X.
inline bool is_convex(const DistanceTable& table, std::span<const VertexId> members) {
  const std::size_t n = table.size();
  std::vector<bool> inside(n, false);
  for (VertexId v : members) inside[v] = true;
  std::vector<VertexId> outside;
  for (VertexId z = 0; z < n; ++z) {
    if (!inside[z]) outside.push_back(z);
  }
  if (outside.empty()) return true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& rx = table.row(members[i]);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto& ry = table.row(members[j]);
      const Distance dxy = rx[members[j]];
      if (dxy < 2) continue;
      for (VertexId z : outside) {
        if (static_cast<std::uint64_t>(rx[z]) + ry[z] == dxy) return false;
      }
    }
  }
  return true;
}

inline bool is_convex(const Hypergraph& h, std::span<const VertexId> members) {
  for (VertexId v : members) {
    if (v >= h.vertex_count()) throw Error(ErrorCode::OutOfRangeVertex, "convexity query out of range");
  }
  require_connected(h, "is_convex");
  return is_convex(DistanceTable::compute(h), members);
}

/// H(x, y): vertices strictly closer to x than to y, in increasing order.
inline std::vector<VertexId> closer_set(const Hypergraph& h, VertexId x, VertexId y) {
  if (x >= h.vertex_count() || y >= h.vertex_count()) {
    throw Error(ErrorCode::OutOfRangeVertex, "closer_set query out of range");
  }
  require_connected(h, "closer_set");
  const auto rx = bfs_from(h, x);
  const auto ry = bfs_from(h, y);
  std::vector<VertexId> out;
  for (VertexId z = 0; z < h.vertex_count(); ++z) {
    if (rx[z] < ry[z]) out.push_back(z);
  }
  return out;
}

/// Whether `sub`, placed into `host` by `vertex_map` (sub vertex -> host
/// vertex), preserves every pairwise distance.
inline bool is_isometric_subhypergraph(const Hypergraph& host, const Hypergraph& sub,
                                       std::span<const VertexId> vertex_map) {
  if (vertex_map.size() != sub.vertex_count()) {
    throw Error(ErrorCode::NotASubhypergraph, "vertex map must cover every vertex of the subhypergraph");
  }
  std::vector<bool> used(host.vertex_count(), false);
  for (VertexId v : vertex_map) {
    if (v >= host.vertex_count() || used[v]) {
      throw Error(ErrorCode::NotASubhypergraph, "vertex map is not an injection into the host");
    }
    used[v] = true;
  }
  for (const auto& edge : sub.edges()) {
    std::vector<VertexId> mapped;
    for (VertexId v : edge) mapped.push_back(vertex_map[v]);
    std::ranges::sort(mapped);
    if (!host.find_edge(mapped)) {
      throw Error(ErrorCode::NotASubhypergraph, "a mapped edge is not an edge of the host");
    }
  }
  detail::BfsWorkspace host_ws(host);
  detail::BfsWorkspace sub_ws(sub);
  std::vector<Distance> host_dist;
  std::vector<Distance> sub_dist;
  for (VertexId u = 0; u < sub.vertex_count(); ++u) {
    sub_ws.run(u, sub_dist);
    host_ws.run(vertex_map[u], host_dist);
    for (VertexId v = u + 1; v < sub.vertex_count(); ++v) {
      if (sub_dist[v] != host_dist[vertex_map[v]]) return false;
    }
  }
  return true;
}

}  // namespace hyperwiener
