#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests drive it directly with in-memory streams.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperwiener/bench.hpp"
#include "hyperwiener/error.hpp"
#include "hyperwiener/generators.hpp"
#include "hyperwiener/hypergraph.hpp"
#include "hyperwiener/io.hpp"
#include "hyperwiener/metric.hpp"
#include "hyperwiener/pc_structure.hpp"
#include "hyperwiener/wiener_cut.hpp"

namespace hyperwiener::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

namespace detail {

inline json value_json(const WienerValue& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline json breakdown_json(const WienerBreakdown& b) {
  json cuts = json::array();
  for (const auto& t : b.per_cut) {
    cuts.push_back({{"cut", t.cut_index}, {"edges", t.edges}, {"sizes", t.sizes}, {"contribution", value_json(t.contribution)}});
  }
  json pairs = json::array();
  for (const auto& p : b.residual_pairs) pairs.push_back({p.u, p.v, p.distance});
  return {{"per_cut", cuts}, {"residual", value_json(b.residual)}, {"residual_pairs", pairs}};
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

struct Common {
  std::string file;
  bool json = false;
  bool allow_singleton_edges = false;
};

inline Hypergraph load(const Common& c, std::ostream& err) {
  std::vector<std::string> warnings;
  BuildOptions options{c.allow_singleton_edges, &warnings};
  auto h = parse_hypergraph(read_text_file(c.file), options);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return h;
}

inline json recognition_json(const RecognitionReport& r) {
  json j{{"verdict", r.verdict},
         {"reason", std::string(to_string(r.reason))},
         {"uniform_k", r.uniform_k ? json(*r.uniform_k) : json(nullptr)},
         {"edge_gated", r.edge_gated},
         {"theta_symmetric", r.theta_symmetric},
         {"theta_transitive", r.theta_transitive}};
  if (r.gate_counterexample) j["gate_counterexample"] = {r.gate_counterexample->first, r.gate_counterexample->second};
  if (r.transitivity_witness) j["transitivity_witness"] = *r.transitivity_witness;
  if (r.convexity_ok) {
    j["convexity_ok"] = *r.convexity_ok;
    j["routes_agree"] = *r.routes_agree();
  }
  return j;
}

inline void print_recognition(const RecognitionReport& r, std::ostream& out) {
  out << "verdict: " << yes_no(r.verdict) << '\n';
  out << "reason: " << to_string(r.reason) << '\n';
  out << "uniform_k: " << (r.uniform_k ? std::to_string(*r.uniform_k) : "none") << '\n';
  out << "edge_gated: " << yes_no(r.edge_gated);
  if (r.gate_counterexample) {
    out << " (vertex " << r.gate_counterexample->first << " has no gate in edge " << r.gate_counterexample->second << ")";
  }
  out << '\n';
  out << "theta_symmetric: " << yes_no(r.theta_symmetric) << '\n';
  out << "theta_transitive: " << yes_no(r.theta_transitive);
  if (r.transitivity_witness) {
    const auto& w = *r.transitivity_witness;
    out << " (witness " << w[0] << ' ' << w[1] << ' ' << w[2] << ")";
  }
  out << '\n';
  if (r.convexity_ok) {
    out << "convexity_ok: " << yes_no(*r.convexity_ok) << '\n';
    out << "routes_agree: " << yes_no(*r.routes_agree()) << '\n';
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wiener index of hypergraphs by the cut method", "hyperwiener"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a hypergraph family instance");
  std::string family;
  std::size_t gen_k = 3;
  std::size_t gen_n = 2;
  std::vector<std::size_t> gen_sizes{3, 3, 3};
  Seed gen_seed = 1;
  std::string gen_out;
  std::string gen_cuts_out;
  gen->add_option("family", family, "cube | phenylene | hypertree | t1 | clar | single")
      ->required()
      ->check(CLI::IsMember({"cube", "phenylene", "hypertree", "t1", "clar", "single"}));
  gen->add_option("--k", gen_k, "edge size (cube, single)");
  gen->add_option("--n", gen_n, "dimension (cube) or ring count (phenylene)");
  gen->add_option("--sizes", gen_sizes, "hypertree edge sizes")->delimiter(',');
  gen->add_option("--seed", gen_seed, "hypertree seed");
  gen->add_option("-o,--output", gen_out, "write the hypergraph here instead of stdout");
  gen->add_option("--cuts-out", gen_cuts_out, "also write the family's canonical cut partition");

  // wiener
  auto* wiener = app.add_subcommand("wiener", "Compute the Wiener index");
  detail::Common wc;
  std::string method = "auto";
  std::string cuts_file;
  unsigned threads = 1;
  bool force_validation = false;
  bool verbose = false;
  wiener->add_option("file", wc.file)->required();
  wiener->add_option("--method", method)->check(CLI::IsMember({"brute", "cut", "tree", "general", "auto"}));
  wiener->add_option("--cuts", cuts_file, "cut partition file (general)");
  wiener->add_option("--threads", threads, "threads for brute-force BFS fan-out")->check(CLI::PositiveNumber);
  wiener->add_flag("--validate", force_validation, "validate cuts even above the size limit");
  wiener->add_flag("-v,--verbose", verbose, "print the per-cut breakdown");
  wiener->add_flag("--json", wc.json);
  wiener->add_flag("--allow-singleton-edges", wc.allow_singleton_edges);

  // recognize
  auto* recog = app.add_subcommand("recognize", "Test for a k-uniform partial cube-hypergraph");
  detail::Common rc;
  bool validate_convexity = false;
  recog->add_option("file", rc.file)->required();
  recog->add_flag("--validate-convexity", validate_convexity);
  recog->add_flag("--json", rc.json);
  recog->add_flag("--allow-singleton-edges", rc.allow_singleton_edges);

  // theta
  auto* theta_cmd = app.add_subcommand("theta", "List Theta classes with component sizes");
  detail::Common tc;
  theta_cmd->add_option("file", tc.file)->required();
  theta_cmd->add_flag("--json", tc.json);
  theta_cmd->add_flag("--allow-singleton-edges", tc.allow_singleton_edges);

  // cuts-validate
  auto* cv = app.add_subcommand("cuts-validate", "Check a cut partition against the cut-method conditions");
  detail::Common cc;
  std::string cv_cuts;
  cv->add_option("file", cc.file)->required();
  cv->add_option("--cuts", cv_cuts)->required();
  cv->add_flag("--json", cc.json);
  cv->add_flag("--allow-singleton-edges", cc.allow_singleton_edges);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time brute force against the cut method");
  bench::BenchGrid grid;
  std::vector<std::string> families;
  std::string csv_out;
  bench_cmd->add_option("--families", families, "comma-separated: cube, phenylene, hypertree")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--csv", csv_out, "CSV output path")->required();
  bench_cmd->add_option("--phenylene-n", grid.phenylene_n, "phenylene sizes")->delimiter(',');
  bench_cmd->add_option("--repeats", grid.repeats, "runs per timing (minimum is kept)")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (gen->parsed()) {
      Hypergraph h;
      std::optional<CutPartition> cuts;
      if (family == "cube") {
        h = cube(gen_k, gen_n).graph;
        CutPartition p;
        for (const auto& cls : theta_structure(h).classes) p.cuts.push_back(cls.edges);
        cuts = p;
      } else if (family == "phenylene") {
        h = phenylene(gen_n);
      } else if (family == "hypertree") {
        h = random_hypertree(gen_sizes, gen_seed);
      } else if (family == "t1") {
        h = example_t1();
      } else if (family == "single") {
        h = single_edge(gen_k);
      } else {
        auto ex = example_clar();
        h = ex.graph;
        cuts = ex.cuts;
      }
      if (!cuts) cuts = CutPartition::singletons(h);
      const auto text = write_hypergraph(h);
      if (gen_out.empty()) {
        out << text;
      } else {
        write_text_file(gen_out, text);
      }
      if (!gen_cuts_out.empty()) write_text_file(gen_cuts_out, write_cuts(*cuts));
      return kOk;
    }

    if (wiener->parsed()) {
      const auto h = detail::load(wc, err);
      if (!cuts_file.empty() && method != "general" && method != "auto") {
        err << "--cuts is only used by --method general or auto\n";
        return kUsageError;
      }
      std::optional<CutPartition> cuts;
      if (!cuts_file.empty()) cuts = parse_cuts(read_text_file(cuts_file), h);
      const GeneralOptions general_options{.prevalidated = false, .validation_limit = 512, .force_validation = force_validation};

      std::string ran = method;
      std::optional<WienerBreakdown> breakdown;
      WienerValue value;
      const auto start = std::chrono::steady_clock::now();
      if (method == "auto") {
        require_connected(h, "wiener");
        if (recognize(h).verdict) {
          ran = "cut";
        } else if (check_hypertree(h).ok()) {
          ran = "tree";
        } else if (cuts) {
          ran = "general";
        } else {
          ran = "brute";
        }
      }
      if (ran == "brute") {
        value = wiener_brute(h, threads);
      } else if (ran == "cut") {
        breakdown = wiener_cut(h);
      } else if (ran == "tree") {
        breakdown = wiener_hypertree(h);
      } else {
        breakdown = wiener_general(h, cuts ? *cuts : CutPartition::singletons(h), general_options);
      }
      const auto nanos =
          std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
      if (breakdown) value = breakdown->total;

      if (wc.json) {
        json j{{"method", ran}, {"value", detail::value_json(value)}, {"timings", {{"nanos", nanos}}}};
        j["breakdown"] = breakdown ? detail::breakdown_json(*breakdown) : json(nullptr);
        out << j.dump() << '\n';
      } else {
        out << value << '\n';
        out << "method: " << ran << '\n';
        if (verbose && breakdown) {
          for (const auto& t : breakdown->per_cut) {
            out << "cut " << t.cut_index << ": edges [" << detail::join(t.edges) << "] sizes ["
                << detail::join(t.sizes) << "] contribution " << t.contribution << '\n';
          }
          out << "residual: " << breakdown->residual << " over " << breakdown->residual_pairs.size() << " pairs\n";
        }
      }
      return kOk;
    }

    if (recog->parsed()) {
      const auto h = detail::load(rc, err);
      const auto report = recognize(h, validate_convexity);
      if (rc.json) {
        out << detail::recognition_json(report).dump() << '\n';
      } else {
        detail::print_recognition(report, out);
      }
      return kOk;
    }

    if (theta_cmd->parsed()) {
      const auto h = detail::load(tc, err);
      const auto structure = theta_structure(h);
      if (tc.json) {
        json classes = json::array();
        for (const auto& cls : structure.classes) classes.push_back({{"edges", cls.edges}, {"sizes", cls.sizes()}});
        out << json{{"classes", classes}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < structure.classes.size(); ++i) {
          const auto& cls = structure.classes[i];
          out << "class " << i << ": edges [" << detail::join(cls.edges) << "] sizes [" << detail::join(cls.sizes())
              << "]\n";
        }
      }
      return kOk;
    }

    if (cv->parsed()) {
      const auto h = detail::load(cc, err);
      const auto partition = parse_cuts(read_text_file(cv_cuts), h);
      const auto report = validate_cut_partition(h, partition);
      if (cc.json) {
        json cuts = json::array();
        for (const auto& c : report.cuts) {
          cuts.push_back({{"pairwise_disjoint", c.pairwise_disjoint},
                          {"disconnects", c.disconnects},
                          {"components_convex", c.components_convex},
                          {"single_crossing", c.single_crossing},
                          {"sizes", c.components.sizes()}});
        }
        json pairs = json::array();
        for (const auto& p : report.unseparated_pairs) pairs.push_back({p.u, p.v, p.distance});
        out << json{{"method_valid", report.method_valid()},
                    {"coverage_identity", report.coverage_identity},
                    {"cuts", cuts},
                    {"unseparated_pairs", pairs}}
                   .dump()
            << '\n';
      } else {
        for (std::size_t i = 0; i < report.cuts.size(); ++i) {
          const auto& c = report.cuts[i];
          out << "cut " << i << ": disjoint=" << detail::yes_no(c.pairwise_disjoint)
              << " disconnects=" << detail::yes_no(c.disconnects) << " convex=" << detail::yes_no(c.components_convex)
              << " single_crossing=" << detail::yes_no(c.single_crossing) << " sizes ["
              << detail::join(c.components.sizes()) << "]\n";
        }
        out << "coverage_identity: " << detail::yes_no(report.coverage_identity) << '\n';
        out << "unseparated_pairs: " << report.unseparated_pairs.size() << '\n';
        out << "method_valid: " << detail::yes_no(report.method_valid()) << '\n';
      }
      return report.method_valid() ? kOk : kDomainError;
    }

    if (bench_cmd->parsed()) {
      for (const auto& f : families) {
        if (!f.empty()) grid.families.push_back(f);
      }
      try {
        const auto records = bench::run_bench(grid);
        write_text_file(csv_out, bench::to_csv(records));
        out << "wrote " << records.size() << " records to " << csv_out << '\n';
      } catch (const bench::MethodDisagreementError& e) {
        err << e.what() << '\n' << e.serialized();
        return kDomainError;
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace hyperwiener::cli
