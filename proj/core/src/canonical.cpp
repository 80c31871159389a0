#include "qembed/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace qembed {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

} // namespace

std::string CanonicalCode::bitstring() const {
    const int len = pair_count(n);
    std::string out(len, '0');
    for (int b = 0; b < len; ++b)
        if (bits >> (len - 1 - b) & 1u) out[b] = '1';
    return out;
}

CanonicalCode canonical_label(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCanonicalLabelCap)
        throw Error(errc::too_large,
                    "canonical labeling capped at n <= " + std::to_string(kCanonicalLabelCap));
    const int len = pair_count(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits = bits << 1 | static_cast<std::uint64_t>(g.adjacent(perm[i], perm[j]));
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (len == 0) best = 0;
    return CanonicalCode{n, best};
}

Graph graph_from_canonical_code(const CanonicalCode& code) {
    const int n = code.n;
    const int len = pair_count(n);
    std::vector<std::pair<int, int>> edges;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (code.bits >> (len - 1 - b) & 1u) edges.emplace_back(i, j);
            ++b;
        }
    return Graph(n, edges);
}

std::vector<Graph> enumerate_connected(int n) {
    if (n < 1)
        throw Error(errc::invalid_argument, "vertex count must be positive");
    if (n > kEnumerationCap)
        throw Error(errc::too_large,
                    "exhaustive enumeration capped at n <= " + std::to_string(kEnumerationCap));
    const int len = pair_count(n);
    std::map<std::uint64_t, Graph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (mask >> b & 1u) edges.emplace_back(i, j);
                ++b;
            }
        Graph g(n, edges);
        if (!is_connected(g)) continue;
        CanonicalCode code = canonical_label(g);
        if (!classes.count(code.bits))
            classes.emplace(code.bits, graph_from_canonical_code(code));
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [bits, g] : classes) out.push_back(std::move(g));
    return out;
}

} // namespace qembed
