#include "kexclude/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace kex {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

std::size_t parse_count(std::string_view tok, std::size_t line, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  return v;
}

constexpr int kG6Offset = 63;

bool looks_like_graph6(std::string_view first_line) {
  if (first_line.starts_with(">>graph6<<")) return true;
  if (first_line.empty()) return false;
  for (char ch : first_line)
    if (ch < 63 || ch > 126) return false;
  // The text format always starts with 'c' or 'p' followed by whitespace.
  return !(first_line.size() > 1 && (first_line[0] == 'c' || first_line[0] == 'p') &&
           (first_line[1] == ' ' || first_line[1] == '\t'));
}

}  // namespace

std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t declared = 0;
  std::size_t seen = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      // Accept both "p <n> <m>" and the classic "p edge <n> <m>".
      std::size_t first = tokens.size() == 4 ? 2 : 1;
      if (tokens.size() != first + 2) throw ParseError(line_no, "expected 'p <n> <edges>'");
      n = parse_count(tokens[first], line_no, "vertex count");
      declared = parse_count(tokens[first + 1], line_no, "edge count");
      have_header = true;
      header_line = line_no;
      continue;
    }
    if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before 'p' header");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const std::size_t u = parse_count(tokens[1], line_no, "vertex id");
      const std::size_t v = parse_count(tokens[2], line_no, "vertex id");
      if (u >= n || v >= n)
        throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      edges.emplace_back(u, v);
      ++seen;
      continue;
    }
    throw ParseError(line_no, "unknown record '" + std::string(tokens[0]) + "'");
  }
  if (!have_header) throw ParseError(line_no, "missing 'p <n> <edges>' header");
  if (seen != declared)
    throw ParseError(header_line, "header declares " + std::to_string(declared) +
                                      " edges, file has " + std::to_string(seen));
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Offset));
  } else {
    throw std::invalid_argument("graph6 writer supports at most 258047 vertices");
  }
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kG6Offset));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kG6Offset));
  return out;
}

Graph read_graph6(std::string_view record) {
  if (record.starts_with(">>graph6<<")) record.remove_prefix(10);
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) record.remove_suffix(1);
  auto byte = [&](std::size_t i) {
    if (i >= record.size()) throw ParseError(1, "graph6 record truncated");
    const int c = static_cast<unsigned char>(record[i]);
    if (c < 63 || c > 126) throw ParseError(1, "invalid graph6 byte at offset " + std::to_string(i));
    return c - kG6Offset;
  };
  std::size_t pos = 0;
  std::size_t n = 0;
  if (record.empty()) throw ParseError(1, "empty graph6 record");
  if (byte(0) == 63) {
    if (record.size() > 1 && byte(1) == 63)
      throw ParseError(1, "graph6 orders above 258047 are not supported");
    n = (static_cast<std::size_t>(byte(1)) << 12) | (static_cast<std::size_t>(byte(2)) << 6) |
        static_cast<std::size_t>(byte(3));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(byte(0));
    pos = 1;
  }
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (pairs + 5) / 6;
  if (record.size() != expected)
    throw ParseError(1, "graph6 record has " + std::to_string(record.size()) +
                            " bytes, expected " + std::to_string(expected));
  GraphBuilder b(n);
  std::size_t index = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++index) {
      const int chunk = byte(pos + index / 6);
      if ((chunk >> (5 - static_cast<int>(index % 6))) & 1) b.add_edge(i, j);
    }
  return std::move(b).build();
}

Graph read_graph(std::istream& in) {
  const std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
  const std::size_t start = content.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) throw ParseError(1, "empty graph file");
  const std::size_t end = content.find('\n', start);
  const std::string first_line =
      content.substr(start, end == std::string::npos ? std::string::npos : end - start);
  if (looks_like_graph6(first_line)) {
    const auto line_no = static_cast<std::size_t>(std::count(
                             content.begin(), content.begin() + static_cast<std::ptrdiff_t>(start),
                             '\n')) +
                         1;
    try {
      return read_graph6(first_line);
    } catch (const ParseError& e) {
      throw ParseError(line_no, std::string(e.what()).substr(std::string("line 1: ").size()));
    }
  }
  std::istringstream text(content);
  return read_dimacs(text);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path.string());
  return read_graph(in);
}

GraphFormat format_for(const std::filesystem::path& path) {
  return path.extension() == ".g6" ? GraphFormat::Graph6 : GraphFormat::Dimacs;
}

void save_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path.string());
  if (format == GraphFormat::Graph6)
    out << write_graph6(g) << '\n';
  else
    out << write_dimacs(g);
}

namespace {

nlohmann::json id_list(const VertexSet& s) { return members_of(s); }

VertexSet set_from(const nlohmann::json& ids, std::size_t n) {
  VertexSet s(n);
  for (const auto& id : ids) {
    const auto v = id.get<std::size_t>();
    if (v >= n) throw ParseError(0, "certificate vertex id " + std::to_string(v) + " out of range");
    s.set(v);
  }
  return s;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace

nlohmann::json certificate_to_json(const ExclusionCertificate& cert) {
  nlohmann::json doc;
  doc["format"] = "kexclude-certificate";
  doc["version"] = 1;
  doc["graph_hash"] = hash_hex(cert.graph_hash);
  doc["graph_order"] = cert.graph_order;
  doc["k"] = cert.k;
  doc["delta"] = to_string(cert.params.delta);
  doc["m"] = cert.params.m;
  doc["eps"] = to_string(cert.params.eps);
  doc["k_min"] = cert.params.k_min;
  doc["vertex"] = cert.vertex;
  doc["reason"] = to_string(cert.reason);
  doc["round"] = cert.round;
  doc["side"] = to_string(cert.side);
  doc["evidence"] = to_string(cert.evidence);
  nlohmann::json structures = nlohmann::json::array();
  for (const auto& s : cert.structures) structures.push_back(id_list(s));
  doc["structures"] = structures;
  doc["union_size"] = cert.union_size;
  doc["outside_non_edges"] = cert.outside_non_edges;
  doc["threshold"] = to_string(cert.threshold);
  doc["non_edges_into_union"] = cert.non_edges_into_union;
  doc["target"] = cert.target;
  doc["candidate"] = id_list(cert.candidate);
  return doc;
}

ExclusionCertificate certificate_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format").get<std::string>() != "kexclude-certificate")
      throw ParseError(0, "not a certificate document");
    ExclusionCertificate cert;
    cert.graph_hash = std::stoull(doc.at("graph_hash").get<std::string>(), nullptr, 16);
    const auto n = doc.at("graph_order").get<std::size_t>();
    cert.graph_order = n;
    cert.k = doc.at("k").get<std::size_t>();
    cert.params.delta = parse_rational(doc.at("delta").get<std::string>());
    cert.params.m = doc.at("m").get<std::int64_t>();
    cert.params.eps = parse_rational(doc.at("eps").get<std::string>());
    cert.params.k_min = doc.at("k_min").get<std::int64_t>();
    cert.vertex = doc.at("vertex").get<std::size_t>();

    const auto reason = doc.at("reason").get<std::string>();
    if (reason == "no-k-clique")
      cert.reason = FailedRequirement::NoKClique;
    else if (reason == "no-k-independent-set")
      cert.reason = FailedRequirement::NoKIndependentSet;
    else
      throw ParseError(0, "unknown reason '" + reason + "'");

    cert.round = doc.at("round").get<std::size_t>();
    const auto side = doc.at("side").get<std::string>();
    if (side == "clique")
      cert.side = Side::Clique;
    else if (side == "independent-set")
      cert.side = Side::IndependentSet;
    else
      throw ParseError(0, "unknown side '" + side + "'");

    const auto evidence = doc.at("evidence").get<std::string>();
    bool known = false;
    for (auto e : {EvidenceKind::WholeGraphNoClique, EvidenceKind::OutsideShortfall,
                   EvidenceKind::CandidateNoClique, EvidenceKind::ExactOracle})
      if (to_string(e) == evidence) {
        cert.evidence = e;
        known = true;
      }
    if (!known) throw ParseError(0, "unknown evidence kind '" + evidence + "'");

    for (const auto& s : doc.at("structures")) cert.structures.push_back(set_from(s, n));
    cert.union_size = doc.at("union_size").get<std::size_t>();
    cert.outside_non_edges = doc.at("outside_non_edges").get<std::size_t>();
    cert.threshold = parse_rational(doc.at("threshold").get<std::string>());
    cert.non_edges_into_union = doc.at("non_edges_into_union").get<std::size_t>();
    cert.target = doc.at("target").get<std::int64_t>();
    cert.candidate = set_from(doc.at("candidate"), n);
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("malformed certificate: ") + e.what());
  }
}

void save_certificate(const std::filesystem::path& path, const ExclusionCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write certificate " + path.string());
  out << certificate_to_json(cert).dump(2) << '\n';
}

ExclusionCertificate load_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("certificate is not valid JSON: ") + e.what());
  }
  return certificate_from_json(doc);
}

}  // namespace kex
