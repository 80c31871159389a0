#ifndef QEMBED_GRAPH6_HPP
#define QEMBED_GRAPH6_HPP

#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

struct Graph6Options {
    /// Strict mode rejects nonzero padding bits; the lenient flag tolerates
    /// them (they are ignored either way).
    bool lenient_padding = false;
};

/// Decodes one graph6 record. An optional leading ">>graph6<<" header is
/// stripped. Throws Error with one of the g6_* codes on malformed input;
/// sparse6/digraph6 records are rejected with g6_unsupported_format naming
/// the detected format.
Graph parse_graph6(std::string_view line, const Graph6Options& options = {});

/// Canonical graph6 encoding of the labeled adjacency, no header. Every
/// byte of the result lies in [63,126].
std::string write_graph6(const Graph& g);

enum class Graph6StreamMode {
    fail_fast, // throw on the first malformed record
    skip,      // collect a diagnostic and continue
};

struct Graph6Diagnostic {
    std::size_t line_number = 0; // 1-based
    std::string message;
};

/// Line-oriented reader: one record per line, blank lines skipped, the
/// ">>graph6<<" header accepted only on the first line (alone or fused with
/// the first record). Decoded graphs are handed to `sink` as they are read.
/// Returns the diagnostics collected in skip mode (always empty in
/// fail_fast mode, which throws instead, with the line number in the
/// message).
std::vector<Graph6Diagnostic> read_graph6_stream(
    std::istream& source,
    const std::function<void(Graph, std::size_t /*line_number*/)>& sink,
    Graph6StreamMode mode = Graph6StreamMode::fail_fast,
    const Graph6Options& options = {});

struct Graph6File {
    std::vector<Graph> graphs;
    std::vector<Graph6Diagnostic> diagnostics;
};

/// Eager convenience wrapper over read_graph6_stream.
Graph6File read_graph6_file(std::istream& source,
                            Graph6StreamMode mode = Graph6StreamMode::fail_fast,
                            const Graph6Options& options = {});

} // namespace qembed

#endif
