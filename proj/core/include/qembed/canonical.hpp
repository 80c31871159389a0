#ifndef QEMBED_CANONICAL_HPP
#define QEMBED_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

inline constexpr int kCanonicalLabelCap = 8;
inline constexpr int kEnumerationCap = 6;

/// Isomorphism-invariant code: the lexicographically minimal row-major
/// upper-triangle adjacency bit sequence over all vertex relabelings.
/// Valid for n <= kCanonicalLabelCap, so the packed word never exceeds
/// C(8,2) = 28 bits. Two graphs are isomorphic iff their codes compare equal.
struct CanonicalCode {
    int n = 0;
    std::uint64_t bits = 0; // first pair bit in the most significant position

    std::string bitstring() const;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Exhaustive minimization over all n! relabelings.
CanonicalCode canonical_label(const Graph& g);

/// Graph whose row-major upper-triangle bits equal the code.
Graph graph_from_canonical_code(const CanonicalCode& code);

/// All connected graphs on n vertices, one canonical representative per
/// isomorphism class, sorted by canonical code. Brute force over the
/// 2^C(n,2) labeled graphs; n <= kEnumerationCap.
std::vector<Graph> enumerate_connected(int n);

} // namespace qembed

#endif
