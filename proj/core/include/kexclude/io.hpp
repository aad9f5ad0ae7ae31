#pragma once

// Graph files and certificate documents.
//
// Text format, one record per line, 0-indexed:
//   c <comment>          (ignored)
//   p <n> <edges>
//   e <u> <v>
// Saved files list edges with u < v in lexicographic order. graph6 is
// accepted anywhere a graph file is read (detected from the content).

#include "kexclude/graph.hpp"
#include "kexclude/poly_excluder.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace kex {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { Dimacs, Graph6 };

std::string write_dimacs(const Graph& g);
Graph read_dimacs(std::istream& in);

std::string write_graph6(const Graph& g);
/// One graph6 record, with or without the ">>graph6<<" header.
Graph read_graph6(std::string_view record);

/// Detects graph6 by content; everything else is parsed as the text format.
Graph read_graph(std::istream& in);
Graph load_graph(const std::filesystem::path& path);
void save_graph(const std::filesystem::path& path, const Graph& g,
                GraphFormat format = GraphFormat::Dimacs);
/// Graph6 for ".g6" paths, the text format otherwise.
GraphFormat format_for(const std::filesystem::path& path);

nlohmann::json certificate_to_json(const ExclusionCertificate& cert);
/// Throws ParseError (line 0) on missing or ill-typed fields.
ExclusionCertificate certificate_from_json(const nlohmann::json& doc);

void save_certificate(const std::filesystem::path& path, const ExclusionCertificate& cert);
ExclusionCertificate load_certificate(const std::filesystem::path& path);

}  // namespace kex
