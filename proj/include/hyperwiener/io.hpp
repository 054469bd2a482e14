#pragma once

// Text formats.
//
// Hypergraph file:            Cut file:
//   # comment                   # comment
//   h <vertex_count>            c <edge id> <edge id> ...
//   e <v1> <v2> ...             (one line per cut)
//
// Ids are 0-based; edge order in the hypergraph file defines EdgeId.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperwiener/error.hpp"
#include "hyperwiener/hypergraph.hpp"
#include "hyperwiener/wiener_cut.hpp"

namespace hyperwiener {

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(ErrorCode::SyntaxError, line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    fn(line, line_no);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

}  // namespace detail

inline Hypergraph parse_hypergraph(std::string_view text, const BuildOptions& options = {}) {
  std::optional<std::uint64_t> vertex_count;
  std::vector<std::vector<VertexId>> edges;
  std::vector<std::size_t> edge_lines;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = detail::split_fields(line);
    if (fields.empty() || fields[0].front() == '#') return;
    if (fields[0] == "h") {
      if (vertex_count) throw ParseError(ErrorCode::SyntaxError, line_no, "duplicate header line");
      if (fields.size() != 2) throw ParseError(ErrorCode::SyntaxError, line_no, "header must be 'h <vertex_count>'");
      vertex_count = detail::parse_count(fields[1], line_no);
      if (*vertex_count > UINT32_MAX) throw ParseError(ErrorCode::SyntaxError, line_no, "vertex count too large");
    } else if (fields[0] == "e") {
      if (!vertex_count) throw ParseError(ErrorCode::SyntaxError, line_no, "edge line before header");
      std::vector<VertexId> edge;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto v = detail::parse_count(fields[i], line_no);
        if (v >= *vertex_count) {
          throw ParseError(ErrorCode::OutOfRangeVertex, line_no,
                           "vertex " + std::to_string(v) + " is not below vertex count " +
                               std::to_string(*vertex_count));
        }
        edge.push_back(static_cast<VertexId>(v));
      }
      edges.push_back(std::move(edge));
      edge_lines.push_back(line_no);
    } else {
      throw ParseError(ErrorCode::SyntaxError, line_no, "unknown record '" + std::string(fields[0]) + "'");
    }
  });
  if (!vertex_count) throw ParseError(ErrorCode::SyntaxError, 0, "missing header line 'h <vertex_count>'");
  try {
    return Hypergraph::build(*vertex_count, std::move(edges), options);
  } catch (const BuildError& e) {
    throw ParseError(e.code(), edge_lines[e.edge_index()], e.what());
  }
}

inline std::string write_hypergraph(const Hypergraph& h) {
  std::string out = "h " + std::to_string(h.vertex_count()) + "\n";
  for (const auto& edge : h.edges()) {
    out += 'e';
    for (VertexId v : edge) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

/// Parses a cut file and checks it partitions the edges of `h` into
/// pairwise vertex-disjoint cuts.
inline CutPartition parse_cuts(std::string_view text, const Hypergraph& h) {
  CutPartition partition;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    const auto fields = detail::split_fields(line);
    if (fields.empty() || fields[0].front() == '#') return;
    if (fields[0] != "c") {
      throw ParseError(ErrorCode::SyntaxError, line_no, "unknown record '" + std::string(fields[0]) + "'");
    }
    std::vector<EdgeId> cut;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto e = detail::parse_count(fields[i], line_no);
      if (e >= h.edge_count()) {
        throw ParseError(ErrorCode::NotAPartition, line_no, "unknown edge id " + std::to_string(e));
      }
      cut.push_back(static_cast<EdgeId>(e));
    }
    if (cut.empty()) throw ParseError(ErrorCode::SyntaxError, line_no, "cut line lists no edges");
    partition.cuts.push_back(std::move(cut));
  });
  check_cut_partition(h, partition);
  return partition;
}

inline std::string write_cuts(const CutPartition& partition) {
  std::string out;
  for (const auto& cut : partition.cuts) {
    out += 'c';
    for (EdgeId e : cut) {
      out += ' ';
      out += std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadParameter, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadParameter, "cannot write '" + path + "'");
  out << text;
}

}  // namespace hyperwiener
