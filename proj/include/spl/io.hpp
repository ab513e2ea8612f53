#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "spl/graph.hpp"

namespace spl {

/// A parsed graph file. `sink` is set when the file declares one.
struct GraphFile {
  DirectedMultigraph graph;
  std::optional<VertexId> sink;
};

/// Line format:
///   vertex <name>
///   sink <name>
///   edge <name> <source> <range>
/// Blank lines and text after '#' are ignored; declaration order is the
/// canonical order. Throws SyntaxError, UnknownVertex or DuplicateVertex, with
/// the line number in the message.
GraphFile parse_graph(std::string_view text);

/// parse_graph followed by validate_sandpile.
SandpileGraph parse_sandpile(std::string_view text);

/// Reads a whole file; throws InvalidArgument when it cannot be opened.
std::string read_file(const std::string& path);

/// Round-trips through parse_graph. The sink, when given, is declared with
/// `sink` instead of `vertex`.
std::string format_graph(const DirectedMultigraph& g, std::optional<VertexId> sink = std::nullopt);
std::string format_graph(const SandpileGraph& g);

}  // namespace spl
