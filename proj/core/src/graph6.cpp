#include "qembed/graph6.hpp"

#include <string>

namespace qembed {

namespace {

constexpr int kBias = 63;
constexpr int kByteMax = 126;
constexpr long kFourByteMax = 258047; // larger counts would start with byte 126 again

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";
constexpr std::string_view kDigraph6Header = ">>digraph6<<";

int sixbits(std::string_view s, std::size_t pos) {
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > kByteMax)
        throw Error(errc::g6_invalid_byte,
                    "byte " + std::to_string(int{c}) + " at position " + std::to_string(pos) +
                        " outside [63,126]");
    return c - kBias;
}

// Consumes N(n); returns {n, bytes consumed}.
std::pair<long, std::size_t> parse_count(std::string_view s) {
    if (s.empty())
        throw Error(errc::g6_truncated, "empty record");
    if (s.front() == ':')
        throw Error(errc::g6_unsupported_format, "sparse6 record detected");
    if (s.front() == '&')
        throw Error(errc::g6_unsupported_format, "digraph6 record detected");
    int first = sixbits(s, 0);
    if (first < 63) return {first, 1};
    // 126 ~ multi-byte count
    if (s.size() >= 2 && s[1] == '~')
        throw Error(errc::g6_unsupported_size, "8-byte vertex count form not supported");
    if (s.size() < 4)
        throw Error(errc::g6_truncated, "truncated 4-byte vertex count");
    long n = 0;
    for (std::size_t i = 1; i < 4; ++i) n = n << 6 | sixbits(s, i);
    if (n < 63)
        throw Error(errc::g6_invalid_byte, "overlong vertex count encoding");
    return {n, 4};
}

// Record body without header handling; '>' is outside [63,126], so headered
// input fails here with InvalidByte.
Graph parse_record(std::string_view line, const Graph6Options& options) {
    auto [n, offset] = parse_count(line);
    if (n == 0)
        throw Error(errc::g6_unsupported_size, "empty graph (n = 0) not representable");
    if (n > kFourByteMax)
        throw Error(errc::g6_unsupported_size, "vertex count exceeds 4-byte form");

    const long bit_count = n * (n - 1) / 2;
    const std::size_t body_bytes = static_cast<std::size_t>((bit_count + 5) / 6);
    if (line.size() < offset + body_bytes)
        throw Error(errc::g6_truncated,
                    "expected " + std::to_string(body_bytes) + " body bytes, got " +
                        std::to_string(line.size() - offset));
    if (line.size() > offset + body_bytes)
        throw Error(errc::g6_trailing_garbage,
                    std::to_string(line.size() - offset - body_bytes) + " byte(s) past the record");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    int group = 0, bits_left = 0;
    std::size_t pos = offset;
    // Upper triangle, column-major: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for (int col = 1; col < n && bit < bit_count; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (bits_left == 0) {
                group = sixbits(line, pos++);
                bits_left = 6;
            }
            if (group >> (bits_left - 1) & 1) edges.emplace_back(row, col);
            --bits_left;
        }
    }
    if (!options.lenient_padding && bits_left > 0 && (group & ((1 << bits_left) - 1)) != 0)
        throw Error(errc::g6_nonzero_padding, "padding bits must be zero");

    return Graph(static_cast<int>(n), edges);
}

std::string_view strip_header(std::string_view line) {
    if (line.substr(0, kSparse6Header.size()) == kSparse6Header)
        throw Error(errc::g6_unsupported_format, "sparse6 header detected");
    if (line.substr(0, kDigraph6Header.size()) == kDigraph6Header)
        throw Error(errc::g6_unsupported_format, "digraph6 header detected");
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header)
        line.remove_prefix(kGraph6Header.size());
    return line;
}

} // namespace

Graph parse_graph6(std::string_view line, const Graph6Options& options) {
    return parse_record(strip_header(line), options);
}

std::string write_graph6(const Graph& g) {
    const long n = g.vertex_count();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= kFourByteMax) {
        out.push_back(static_cast<char>(kByteMax));
        out.push_back(static_cast<char>((n >> 12 & 0x3f) + kBias));
        out.push_back(static_cast<char>((n >> 6 & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    } else {
        throw Error(errc::g6_unsupported_size, "vertex count exceeds 4-byte form");
    }
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = group << 1 | static_cast<int>(g.adjacent(row, col));
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph6Diagnostic> read_graph6_stream(
    std::istream& source,
    const std::function<void(Graph, std::size_t)>& sink,
    Graph6StreamMode mode,
    const Graph6Options& options) {
    std::vector<Graph6Diagnostic> diagnostics;
    std::string line;
    std::size_t line_number = 0;
    bool first_content_line = true;
    while (std::getline(source, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string_view record = line;
        const bool allow_header = first_content_line;
        first_content_line = false;
        try {
            // the header is honored on the first content line only
            if (allow_header) {
                record = strip_header(record);
                if (record.empty()) continue;
            }
            sink(parse_record(record, options), line_number);
        } catch (const Error& e) {
            if (mode == Graph6StreamMode::fail_fast)
                throw Error(e.code(), "line " + std::to_string(line_number) + ": " + e.what());
            diagnostics.push_back({line_number, e.what()});
        }
    }
    return diagnostics;
}

Graph6File read_graph6_file(std::istream& source, Graph6StreamMode mode,
                            const Graph6Options& options) {
    Graph6File out;
    out.diagnostics = read_graph6_stream(
        source,
        [&out](Graph g, std::size_t) { out.graphs.push_back(std::move(g)); },
        mode, options);
    return out;
}

} // namespace qembed
