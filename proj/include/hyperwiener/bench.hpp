#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hyperwiener/error.hpp"
#include "hyperwiener/generators.hpp"
#include "hyperwiener/io.hpp"
#include "hyperwiener/metric.hpp"
#include "hyperwiener/wiener_cut.hpp"

namespace hyperwiener::bench {

struct BenchRecord {
  std::string family;
  std::string params;
  std::size_t n_vertices = 0;
  std::size_t n_edges = 0;
  std::string method;
  WienerValue wiener;
  std::uint64_t nanos = 0;
};

struct HypertreeSpec {
  std::size_t edge_size = 3;
  std::size_t edge_count = 8;
  Seed seed = 1;
};

struct BenchGrid {
  std::vector<std::string> families;
  std::vector<std::size_t> phenylene_n{2, 3, 4, 5, 6, 7, 8};
  std::vector<std::pair<std::size_t, std::size_t>> cube_kn{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  std::vector<HypertreeSpec> hypertrees{{3, 8, 1}, {3, 8, 2}, {4, 10, 3}, {2, 12, 4}};
  /// Each timing is the minimum over this many runs.
  unsigned repeats = 3;
};

class MethodDisagreementError : public Error {
 public:
  MethodDisagreementError(const std::string& instance, std::string serialized)
      : Error(ErrorCode::MethodDisagreement, "methods disagree on " + instance), serialized_(std::move(serialized)) {}

  /// The offending hypergraph in the text file format.
  const std::string& serialized() const noexcept { return serialized_; }

 private:
  std::string serialized_;
};

namespace detail {

inline std::uint64_t time_once(const std::function<WienerValue()>& fn, WienerValue& value) {
  const auto start = std::chrono::steady_clock::now();
  value = fn();
  const auto stop = std::chrono::steady_clock::now();
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

struct Instance {
  std::string family;
  std::string params;
  Hypergraph graph;
  std::string cut_method;
  std::function<WienerValue()> cut_route;
};

inline void run_instance(const Instance& inst, unsigned repeats, std::vector<BenchRecord>& out) {
  // Alternate the two routes so drift in machine load hits both alike.
  const std::function<WienerValue()> brute_route = [&] { return wiener_brute(inst.graph); };
  WienerValue brute;
  WienerValue cut;
  std::uint64_t brute_ns = UINT64_MAX;
  std::uint64_t cut_ns = UINT64_MAX;
  for (unsigned r = 0; r < std::max(1u, repeats); ++r) {
    brute_ns = std::min(brute_ns, time_once(brute_route, brute));
    cut_ns = std::min(cut_ns, time_once(inst.cut_route, cut));
  }
  if (brute != cut) {
    throw MethodDisagreementError(inst.family + " " + inst.params, write_hypergraph(inst.graph));
  }
  const auto nv = inst.graph.vertex_count();
  const auto ne = inst.graph.edge_count();
  out.push_back({inst.family, inst.params, nv, ne, "brute", brute, brute_ns});
  out.push_back({inst.family, inst.params, nv, ne, inst.cut_method, cut, cut_ns});
}

}  // namespace detail

/// One record per (instance, method). Brute force and the family's cut route
/// run on every instance and must agree before anything is returned.
inline std::vector<BenchRecord> run_bench(const BenchGrid& grid) {
  std::vector<BenchRecord> out;
  for (const auto& family : grid.families) {
    if (family == "phenylene") {
      for (std::size_t n : grid.phenylene_n) {
        auto h = phenylene(n);
        auto cuts = CutPartition::singletons(h);
        detail::Instance inst{family, "n=" + std::to_string(n), h, "general", {}};
        inst.cut_route = [h, cuts] { return wiener_general(h, cuts, {.prevalidated = true}).total; };
        detail::run_instance(inst, grid.repeats, out);
      }
    } else if (family == "cube") {
      for (auto [k, n] : grid.cube_kn) {
        auto h = cube(k, n).graph;
        detail::Instance inst{family, "k=" + std::to_string(k) + ";n=" + std::to_string(n), h, "cut", {}};
        inst.cut_route = [h] { return wiener_cut(h).total; };
        detail::run_instance(inst, grid.repeats, out);
      }
    } else if (family == "hypertree") {
      for (const auto& spec : grid.hypertrees) {
        const std::vector<std::size_t> sizes(spec.edge_count, spec.edge_size);
        auto h = random_hypertree(sizes, spec.seed);
        detail::Instance inst{family,
                              "k=" + std::to_string(spec.edge_size) + ";m=" + std::to_string(spec.edge_count) +
                                  ";seed=" + std::to_string(spec.seed),
                              h, "tree", {}};
        inst.cut_route = [h] { return wiener_hypertree(h).total; };
        detail::run_instance(inst, grid.repeats, out);
      }
    } else {
      throw Error(ErrorCode::BadParameter, "unknown bench family '" + family + "'");
    }
  }
  return out;
}

inline constexpr std::string_view kCsvHeader = "family,params,n_vertices,n_edges,method,wiener,nanos";

inline std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.family << ',' << r.params << ',' << r.n_vertices << ',' << r.n_edges << ',' << r.method << ','
        << r.wiener << ',' << r.nanos << '\n';
  }
  return out.str();
}

}  // namespace hyperwiener::bench
