#pragma once

// Wiener index by the cut method: Theta-class cuts for partial
// cube-hypergraphs, per-edge cuts for hypertrees, and user-supplied convex
// cut partitions with a residual term for pairs no cut separates.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperwiener/error.hpp"
#include "hyperwiener/hypergraph.hpp"
#include "hyperwiener/metric.hpp"
#include "hyperwiener/pc_structure.hpp"

namespace hyperwiener {

/// Disjoint edge sets whose union is E(H).
struct CutPartition {
  std::vector<std::vector<EdgeId>> cuts;

  static CutPartition singletons(const Hypergraph& h) {
    CutPartition c;
    for (EdgeId e = 0; e < h.edge_count(); ++e) c.cuts.push_back({e});
    return c;
  }

  friend bool operator==(const CutPartition&, const CutPartition&) = default;
};

struct CutTerm {
  std::size_t cut_index = 0;
  std::vector<EdgeId> edges;
  std::vector<std::uint64_t> sizes;
  WienerValue contribution;
};

struct ResidualPair {
  VertexId u = 0;
  VertexId v = 0;
  Distance distance = 0;
};

struct WienerBreakdown {
  WienerValue total;
  std::vector<CutTerm> per_cut;
  WienerValue residual;
  std::vector<ResidualPair> residual_pairs;

  bool consistent() const {
    WienerValue sum = residual;
    for (const auto& t : per_cut) sum += t.contribution;
    return sum == total;
  }
};

/// Sum of s_j * s_j' over unordered index pairs.
inline WienerValue cut_contribution(std::span<const std::uint64_t> sizes) {
  WienerValue total = 0;
  WienerValue prefix = 0;
  for (std::uint64_t s : sizes) {
    total += prefix * s;
    prefix += s;
  }
  return total;
}

class NotPartialCubeError : public Error {
 public:
  explicit NotPartialCubeError(RecognitionReport report)
      : Error(ErrorCode::NotPartialCube,
              "not a k-uniform partial cube-hypergraph (" + std::string(to_string(report.reason)) + ")"),
        report_(std::move(report)) {}

  const RecognitionReport& report() const noexcept { return report_; }

 private:
  RecognitionReport report_;
};

namespace detail {

inline WienerBreakdown finish(std::vector<CutTerm> terms) {
  WienerBreakdown out;
  out.total = 0;
  out.residual = 0;
  for (const auto& t : terms) out.total += t.contribution;
  out.per_cut = std::move(terms);
  return out;
}

inline CutTerm make_term(std::size_t index, std::vector<EdgeId> edges, std::vector<std::uint64_t> sizes) {
  CutTerm t;
  t.cut_index = index;
  t.edges = std::move(edges);
  t.sizes = std::move(sizes);
  t.contribution = cut_contribution(t.sizes);
  return t;
}

inline CutTerm make_term(std::size_t index, std::vector<EdgeId> edges, const ComponentPartition& parts) {
  return make_term(index, std::move(edges), parts.sizes());
}

// splitmix64 finalizer.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// W(H) summed over Theta classes. Refuses inputs that are not recognized
/// k-uniform partial cube-hypergraphs.
inline WienerBreakdown wiener_cut(const Hypergraph& h) {
  auto report = recognize(h);
  if (!report.verdict) throw NotPartialCubeError(std::move(report));
  const auto structure = theta_structure(h);
  std::vector<CutTerm> terms;
  for (std::size_t i = 0; i < structure.classes.size(); ++i) {
    const auto& cls = structure.classes[i];
    terms.push_back(detail::make_term(i, cls.edges, cls.components));
  }
  return detail::finish(std::move(terms));
}

struct CycleWitness {
  /// u_0, ..., u_{k-1}; the cycle closes back to u_0.
  std::vector<VertexId> vertices;
  /// e_1, ..., e_k with {u_{i-1}, u_i} in e_i.
  std::vector<EdgeId> edges;
};

struct AcyclicityResult {
  bool acyclic = true;
  std::optional<CycleWitness> cycle;

  explicit operator bool() const noexcept { return acyclic; }
};

/// Cycle search on the vertex-edge incidence graph. Nodes 0..n-1 are
/// vertices, n..n+m-1 are edges; a cycle there is a hypergraph cycle.
inline AcyclicityResult acyclicity_check(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  const std::size_t total = n + h.edge_count();
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> parent(total, kNone);
  std::vector<bool> visited(total, false);
  auto neighbours = [&](std::size_t node) -> std::vector<std::size_t> {
    std::vector<std::size_t> out;
    if (node < n) {
      for (EdgeId e : h.incident(static_cast<VertexId>(node))) out.push_back(n + e);
    } else {
      for (VertexId v : h.edge(static_cast<EdgeId>(node - n))) out.push_back(v);
    }
    return out;
  };
  for (std::size_t root = 0; root < total; ++root) {
    if (visited[root]) continue;
    std::vector<std::size_t> stack{root};
    visited[root] = true;
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      for (std::size_t next : neighbours(node)) {
        if (next == parent[node]) continue;
        if (!visited[next]) {
          visited[next] = true;
          parent[next] = node;
          stack.push_back(next);
          continue;
        }
        // Non-tree link node-next closes a cycle through their common ancestor.
        std::vector<std::size_t> up_a{node};
        for (std::size_t x = node; parent[x] != kNone; x = parent[x]) up_a.push_back(parent[x]);
        std::vector<std::size_t> up_b{next};
        for (std::size_t x = next; parent[x] != kNone; x = parent[x]) up_b.push_back(parent[x]);
        while (up_a.size() > 1 && up_b.size() > 1 && up_a[up_a.size() - 2] == up_b[up_b.size() - 2]) {
          up_a.pop_back();
          up_b.pop_back();
        }
        // up_a.back() == up_b.back() is the lowest common ancestor.
        std::vector<std::size_t> ring(up_a.begin(), up_a.end());
        for (auto it = std::next(up_b.rbegin()); it != up_b.rend(); ++it) ring.push_back(*it);
        // Rotate so the ring starts at a vertex node.
        if (ring.front() >= n) std::rotate(ring.begin(), ring.begin() + 1, ring.end());
        CycleWitness w;
        for (std::size_t x : ring) {
          if (x < n) {
            w.vertices.push_back(static_cast<VertexId>(x));
          } else {
            w.edges.push_back(static_cast<EdgeId>(x - n));
          }
        }
        return {false, std::move(w)};
      }
    }
  }
  return {};
}

struct HypertreeCheck {
  bool connected = false;
  std::optional<std::pair<EdgeId, EdgeId>> linearity_violation;
  std::optional<CycleWitness> cycle;

  bool ok() const noexcept { return connected && !linearity_violation && !cycle; }
};

inline HypertreeCheck check_hypertree(const Hypergraph& h) {
  HypertreeCheck c;
  c.connected = is_connected(h);
  c.linearity_violation = linearity_violation(h);
  c.cycle = acyclicity_check(h).cycle;
  return c;
}

class NotAHypertreeError : public Error {
 public:
  explicit NotAHypertreeError(HypertreeCheck check)
      : Error(ErrorCode::NotAHypertree, describe(check)), check_(std::move(check)) {}

  const HypertreeCheck& check() const noexcept { return check_; }

 private:
  static std::string describe(const HypertreeCheck& c) {
    if (!c.connected) return "hypergraph is disconnected";
    if (c.linearity_violation) {
      return "edges " + std::to_string(c.linearity_violation->first) + " and " +
             std::to_string(c.linearity_violation->second) + " share more than one vertex";
    }
    std::string s = "cycle through edges";
    for (EdgeId e : c.cycle->edges) s += " " + std::to_string(e);
    return s;
  }

  HypertreeCheck check_;
};

/// Hypertree formula: every edge is its own cut, edges may differ in size.
inline WienerBreakdown wiener_hypertree(const Hypergraph& t) {
  auto check = check_hypertree(t);
  if (!check.ok()) throw NotAHypertreeError(std::move(check));
  std::vector<CutTerm> terms;
  std::vector<bool> mask(t.edge_count(), false);
  for (EdgeId e = 0; e < t.edge_count(); ++e) {
    mask[e] = true;
    terms.push_back(detail::make_term(e, {e}, components_without(t, mask)));
    mask[e] = false;
  }
  return detail::finish(std::move(terms));
}

struct CutReport {
  bool pairwise_disjoint = true;
  bool disconnects = false;
  bool components_convex = false;
  bool single_crossing = false;
  ComponentPartition components;

  bool ok() const noexcept { return pairwise_disjoint && disconnects && components_convex && single_crossing; }
};

struct CutValidationReport {
  std::vector<CutReport> cuts;
  bool coverage_identity = false;
  /// First pair whose distance differs from its number of separating cuts.
  std::optional<std::pair<VertexId, VertexId>> coverage_counterexample;
  std::vector<ResidualPair> unseparated_pairs;

  bool method_valid() const {
    return coverage_identity && std::ranges::all_of(cuts, [](const CutReport& c) { return c.ok(); });
  }
};

class InvalidCutPartitionError : public Error {
 public:
  explicit InvalidCutPartitionError(CutValidationReport report)
      : Error(ErrorCode::InvalidCutPartition, "cut partition does not satisfy the cut-method conditions"),
        report_(std::move(report)) {}

  const CutValidationReport& report() const noexcept { return report_; }

 private:
  CutValidationReport report_;
};

/// Throws NotAPartition or CutEdgesIntersect on structural defects.
inline void check_cut_partition(const Hypergraph& h, const CutPartition& partition) {
  std::vector<int> owner(h.edge_count(), -1);
  for (std::size_t c = 0; c < partition.cuts.size(); ++c) {
    if (partition.cuts[c].empty()) {
      throw Error(ErrorCode::NotAPartition, "cut " + std::to_string(c) + " is empty");
    }
    for (EdgeId e : partition.cuts[c]) {
      if (e >= h.edge_count()) {
        throw Error(ErrorCode::NotAPartition, "cut " + std::to_string(c) + " names unknown edge " + std::to_string(e));
      }
      if (owner[e] != -1) {
        throw Error(ErrorCode::NotAPartition, "edge " + std::to_string(e) + " appears in cuts " +
                                                  std::to_string(owner[e]) + " and " + std::to_string(c));
      }
      owner[e] = static_cast<int>(c);
    }
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (owner[e] == -1) throw Error(ErrorCode::NotAPartition, "edge " + std::to_string(e) + " is in no cut");
  }
  std::vector<int> used_by(h.vertex_count(), -1);
  for (std::size_t c = 0; c < partition.cuts.size(); ++c) {
    for (EdgeId e : partition.cuts[c]) {
      for (VertexId v : h.edge(e)) {
        if (used_by[v] == static_cast<int>(c)) {
          throw Error(ErrorCode::CutEdgesIntersect,
                      "edges of cut " + std::to_string(c) + " share vertex " + std::to_string(v));
        }
        used_by[v] = static_cast<int>(c);
      }
    }
  }
}

inline CutValidationReport validate_cut_partition(const Hypergraph& h, const DistanceTable& table,
                                                  const CutPartition& partition) {
  check_cut_partition(h, partition);
  CutValidationReport report;
  std::vector<bool> mask(h.edge_count(), false);
  for (const auto& cut : partition.cuts) {
    CutReport r;
    for (EdgeId e : cut) mask[e] = true;
    r.components = components_without(h, mask);
    r.disconnects = r.components.count() >= 2;
    r.components_convex = std::ranges::all_of(
        r.components.blocks, [&](const std::vector<VertexId>& b) { return is_convex(table, b); });
    r.single_crossing = r.disconnects && !single_crossing_violation(h, table, mask, r.components);
    for (EdgeId e : cut) mask[e] = false;
    report.cuts.push_back(std::move(r));
  }
  report.coverage_identity = true;
  const std::size_t n = h.vertex_count();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      Distance separating = 0;
      for (const auto& r : report.cuts) {
        if (r.components.block_of[u] != r.components.block_of[v]) ++separating;
      }
      if (separating == 0) {
        report.unseparated_pairs.push_back({u, v, table(u, v)});
      } else if (separating != table(u, v) && report.coverage_identity) {
        report.coverage_identity = false;
        report.coverage_counterexample = std::pair{u, v};
      }
    }
  }
  return report;
}

inline CutValidationReport validate_cut_partition(const Hypergraph& h, const CutPartition& partition) {
  require_connected(h, "validate_cut_partition");
  return validate_cut_partition(h, DistanceTable::compute(h), partition);
}

struct GeneralOptions {
  /// Skip validation; the caller vouches for the partition.
  bool prevalidated = false;
  /// Inline validation is all-pairs; above this vertex count it must be
  /// requested with `force_validation`.
  std::size_t validation_limit = 512;
  bool force_validation = false;
};

/// Sum of cut contributions plus the BFS distance of every pair that no cut
/// separates.
inline WienerBreakdown wiener_general(const Hypergraph& h, const CutPartition& partition,
                                      const GeneralOptions& options = {}) {
  require_connected(h, "wiener_general");
  if (!options.prevalidated) {
    if (h.vertex_count() > options.validation_limit && !options.force_validation) {
      throw Error(ErrorCode::ValidationTooLarge,
                  std::to_string(h.vertex_count()) + " vertices exceeds the validation limit of " +
                      std::to_string(options.validation_limit) + "; request validation explicitly");
    }
    auto report = validate_cut_partition(h, partition);
    if (!report.method_valid()) throw InvalidCutPartitionError(std::move(report));
  } else {
    check_cut_partition(h, partition);
  }

  const std::size_t n = h.vertex_count();
  const std::size_t cuts = partition.cuts.size();
  std::vector<CutTerm> terms;
  std::vector<std::uint32_t> labels(cuts * n);  // labels[c * n + v]
  std::vector<std::uint64_t> hash(n, 0);
  ComponentLabeler labeler(h);
  std::vector<bool> mask(h.edge_count(), false);
  for (std::size_t c = 0; c < cuts; ++c) {
    for (EdgeId e : partition.cuts[c]) mask[e] = true;
    labeler.run(mask);
    for (EdgeId e : partition.cuts[c]) mask[e] = false;
    terms.push_back(detail::make_term(c, partition.cuts[c], labeler.sizes()));
    std::ranges::copy(labeler.labels(), labels.begin() + static_cast<std::ptrdiff_t>(c * n));
    for (VertexId v = 0; v < n; ++v) hash[v] = detail::mix(hash[v] + labeler.labels()[v] + 1);
  }
  auto out = detail::finish(std::move(terms));

  // Vertices with identical label signatures are separated by no cut.
  auto same_signature = [&](VertexId a, VertexId b) {
    if (hash[a] != hash[b]) return false;
    for (std::size_t c = 0; c < cuts; ++c) {
      if (labels[c * n + a] != labels[c * n + b]) return false;
    }
    return true;
  };
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::ranges::sort(order, [&](VertexId a, VertexId b) {
    if (hash[a] != hash[b]) return hash[a] < hash[b];
    for (std::size_t c = 0; c < cuts; ++c) {
      if (labels[c * n + a] != labels[c * n + b]) return labels[c * n + a] < labels[c * n + b];
    }
    return a < b;
  });
  std::vector<std::vector<VertexId>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && same_signature(order[i], order[j])) ++j;
    if (j - i > 1) {
      groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(j));
    }
    i = j;
  }
  detail::BfsWorkspace ws(h);
  std::vector<Distance> dist;
  for (const auto& members : groups) {
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      const std::span<const VertexId> rest(members.data() + i + 1, members.size() - i - 1);
      ws.run(members[i], dist, rest);
      for (VertexId v : rest) {
        out.residual_pairs.push_back({members[i], v, dist[v]});
        out.residual += dist[v];
      }
    }
  }
  std::ranges::sort(out.residual_pairs, {}, [](const ResidualPair& p) { return std::pair{p.u, p.v}; });
  out.total += out.residual;
  return out;
}

}  // namespace hyperwiener
