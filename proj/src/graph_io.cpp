#include "factorkit/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "factorkit/error.hpp"

namespace factorkit {

namespace {

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

long long parse_integer(std::string_view token, const std::string& context) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(context + "expected an integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream fields(line);
  std::vector<std::string> out;
  for (std::string tok; fields >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Vertex LabeledGraph::id_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<Vertex>(i);
  throw ParseError("unknown vertex label '" + std::string(label) + "'");
}

LabeledGraph with_default_labels(Graph g) {
  LabeledGraph out{std::move(g), {}};
  out.labels.reserve(out.graph.order());
  for (std::size_t v = 0; v < out.graph.order(); ++v) out.labels.push_back(std::to_string(v));
  return out;
}

LabeledGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("graph: missing 'n m' header");
  auto header = split(line);
  if (header.size() != 2) throw ParseError(where(line_no) + "expected 'n m'");
  const long long n = parse_integer(header[0], where(line_no));
  const long long m = parse_integer(header[1], where(line_no));
  if (n < 0 || m < 0) throw ParseError(where(line_no) + "negative counts");
  if (n > (1LL << 24)) throw ParseError(where(line_no) + "graph order too large");
  if (m > n * (n - 1) / 2) throw ParseError(where(line_no) + "more edges than a simple graph allows");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_content_line(in, line, line_no)) {
    auto fields = split(line);
    if (fields.size() != 2) throw ParseError(where(line_no) + "expected 'u v'");
    const long long u = parse_integer(fields[0], where(line_no));
    const long long v = parse_integer(fields[1], where(line_no));
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(where(line_no) + "endpoint out of range");
    if (u == v) throw ParseError(where(line_no) + "self-loop");
    if (static_cast<long long>(edges.size()) == m) throw ParseError(where(line_no) + "more edge lines than declared");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("graph: declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  try {
    return with_default_labels(Graph(static_cast<std::size_t>(n), edges));
  } catch (const DomainError& e) {
    throw ParseError(std::string("graph: ") + e.what());
  }
}

LabeledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path.string() + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_graph(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file '" + path.string() + "'");
  write_graph(out, g);
}

DegreeFunc read_prescription(std::istream& in, const LabeledGraph& g) {
  const auto n = g.graph.order();
  std::vector<std::int64_t> values(n, 0);
  std::vector<bool> seen(n, false);
  std::string line;
  std::size_t line_no = 0;
  while (next_content_line(in, line, line_no)) {
    auto fields = split(line);
    if (fields.size() != 2) throw ParseError("prescription " + where(line_no) + "expected 'label value'");
    const Vertex v = g.id_of(fields[0]);
    const long long value = parse_integer(fields[1], "prescription " + where(line_no));
    if (value < 0) throw ParseError("prescription " + where(line_no) + "negative value");
    if (seen[v]) throw ParseError("prescription " + where(line_no) + "vertex listed twice");
    seen[v] = true;
    values[v] = value;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw ParseError("prescription: no value for vertex '" + g.labels[v] + "'");
  try {
    return DegreeFunc(std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(std::string("prescription: ") + e.what());
  }
}

DegreeFunc parse_prescription_spec(std::string_view spec, const LabeledGraph& g) {
  if (spec.starts_with("const:")) {
    const long long value = parse_integer(spec.substr(6), "prescription spec: ");
    if (value < 0) throw ParseError("prescription spec: negative constant");
    try {
      return DegreeFunc::constant(g.graph.order(), value);
    } catch (const DomainError& e) {
      throw ParseError(std::string("prescription spec: ") + e.what());
    }
  }
  if (spec.starts_with("file:")) {
    const std::filesystem::path path(std::string(spec.substr(5)));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open prescription file '" + path.string() + "'");
    return read_prescription(in, g);
  }
  throw ParseError("prescription spec must be 'const:K' or 'file:PATH', got '" + std::string(spec) + "'");
}

}  // namespace factorkit
