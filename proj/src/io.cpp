#include "spl/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "spl/error.hpp"

namespace spl {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::string at_line(std::size_t n, const std::string& what) {
  return "line " + std::to_string(n) + ": " + what;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  GraphFile out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto words = split_words(line);
    if (words.empty()) continue;

    const std::string_view kind = words[0];
    try {
      if (kind == "vertex" || kind == "sink") {
        if (words.size() != 2)
          throw Error(Errc::SyntaxError, at_line(line_no, "expected '" + std::string(kind) + " <name>'"));
        const VertexId v = out.graph.add_vertex(std::string(words[1]));
        if (kind == "sink") {
          if (out.sink)
            throw Error(Errc::MultipleSinks, at_line(line_no, "second sink declaration"));
          out.sink = v;
        }
      } else if (kind == "edge") {
        if (words.size() != 4)
          throw Error(Errc::SyntaxError, at_line(line_no, "expected 'edge <name> <source> <range>'"));
        out.graph.add_edge(std::string(words[1]), words[2], words[3]);
      } else {
        throw Error(Errc::SyntaxError, at_line(line_no, "unknown declaration '" + std::string(kind) + "'"));
      }
    } catch (const Error& e) {
      if (e.detail().rfind("line ", 0) == 0) throw;
      throw Error(e.code(), at_line(line_no, e.detail()));
    }
  }
  return out;
}

SandpileGraph parse_sandpile(std::string_view text) {
  GraphFile f = parse_graph(text);
  return validate_sandpile(std::move(f.graph), f.sink);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_graph(const DirectedMultigraph& g, std::optional<VertexId> sink) {
  std::string out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out += (sink && *sink == v ? "sink " : "vertex ") + g.vertex_name(v) + "\n";
  for (const Edge& e : g.edges())
    out += "edge " + e.name + " " + g.vertex_name(e.source) + " " + g.vertex_name(e.range) + "\n";
  return out;
}

std::string format_graph(const SandpileGraph& g) { return format_graph(g.graph(), g.sink()); }

}  // namespace spl
