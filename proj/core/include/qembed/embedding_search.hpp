#ifndef QEMBED_EMBEDDING_SEARCH_HPP
#define QEMBED_EMBEDDING_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "qembed/canonical.hpp"
#include "qembed/graph.hpp"

namespace qembed {

/// Classification threshold on the numeric QE constant; the smallest
/// positive value in scope is about 0.12, exact-zero cases sit below 1e-12.
inline constexpr double kNonQeThreshold = 1e-9;

/// Injective vertex map from a pattern graph into a host graph preserving
/// all pairwise graph distances.
struct IsometricWitness {
    std::vector<int> mapping; // mapping[pattern vertex] = host vertex
};

/// Backtracking search over injective maps, pruning on distance mismatch
/// against precomputed distance matrices. Pattern vertices are assigned in
/// descending-degree order and candidate images in ascending label, so the
/// first witness found is deterministic. Patterns of diameter <= 2 are
/// matched by adjacency alone, which suffices for isometry there.
std::optional<IsometricWitness> find_isometric_embedding(const Graph& pattern, const Graph& host);

struct ScanRecord {
    CanonicalCode code;
    std::string graph6;
    int order = 0;
    int size = 0; // edge count
    std::vector<int> degree_sequence;
    double qec = 0.0;
    bool non_qe = false;
    bool primary = false;
    /// Canonical graph6 strings of the non-QE proper subgraphs found
    /// isometrically embedded (deduped, sorted by canonical code).
    std::vector<std::string> witnesses;
    double residual = 0.0; // |<f,Df> - qec| for the eigen certificate
};

struct ScanReport {
    std::vector<ScanRecord> records;

    int total() const { return static_cast<int>(records.size()); }
    int non_qe_count() const;
    int primary_count() const;
};

/// One record for each graph: numeric QE constant, class, and for non-QE
/// graphs the primary flag with its witnesses by exhaustive induced-subgraph
/// search. Record order follows the input order.
ScanReport scan_graphs(const std::vector<Graph>& graphs, int jobs = 1);

/// Scan over all connected isomorphism classes on n vertices (2 <= n <= 6),
/// sorted by canonical code.
ScanReport non_qe_scan(int n, int jobs = 1);

/// Same scan restricted to the non-QE records.
ScanReport primary_scan(int n, int jobs = 1);

/// Characterizations of the QE constants of the three sporadic primary
/// non-QE graphs on six vertices.
enum class PrimaryPolynomial {
    closed_form_sqrt19, // (-4 + sqrt(19)) / 3
    cubic,              // positive root of 5x^3 + 26x^2 + 24x - 6
    quartic,            // positive root of 3x^4 + 14x^3 + 18x^2 + 5x - 1
};

std::string to_string(PrimaryPolynomial tag);

/// Which characterization (if any) the value satisfies: direct comparison
/// within 1e-9 for the closed form, residual <= 1e-7 for the polynomials.
std::optional<PrimaryPolynomial> primary_polynomial_check(double qec_value);

} // namespace qembed

#endif
