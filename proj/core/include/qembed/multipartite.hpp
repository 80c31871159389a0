#ifndef QEMBED_MULTIPARTITE_HPP
#define QEMBED_MULTIPARTITE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

/// Part sizes of a complete multipartite graph, kept sorted non-increasing.
class PartitionSpec {
public:
    explicit PartitionSpec(std::vector<int> parts);

    /// Accepts comma-separated sizes with repetition shorthand:
    /// "4,1,1,1", "2^4", "3,1^4".
    static PartitionSpec parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int part_count() const noexcept { return static_cast<int>(parts_.size()); }
    int vertex_count() const noexcept { return total_; }
    int operator[](int i) const { return parts_[i]; }

    std::string to_string() const; // "4,1,1,1"

    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

Graph complete_multipartite_graph(const PartitionSpec& parts);

/// Left side of the root equation: sum_i m_i / (alpha + m_i).
/// Strictly decreasing between consecutive poles -m_i.
double psi(double alpha, const PartitionSpec& parts);

/// Unique root of psi in the open interval (-m_1, -m_2), by bisection.
/// Requires m_1 > m_2: with equal top parts the equation has no root there.
double minimal_root(const PartitionSpec& parts);

struct QecClosedForm {
    enum class Branch { equal_top, root };

    double value = 0.0;
    std::optional<double> alpha_star; // present on the root branch
    Branch branch = Branch::equal_top;
};

/// QE constant of the complete multipartite graph: -2 + m_1 when the two
/// largest parts coincide, otherwise -2 - alpha* with alpha* the minimal
/// root of psi.
QecClosedForm qec_multipartite(const PartitionSpec& parts);

/// Reduced fraction; den > 0, sign carried by num.
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Exact value where the closed form is rational: equal-top, bipartite and
/// complete split partitions. Absent otherwise.
std::optional<Rational> qec_multipartite_exact(const PartitionSpec& parts);

double qec_bipartite(int m, int n);
double qec_tripartite(int l, int m, int n);
/// K with one part of size m joined to n singletons (the complete split
/// graph on m + n vertices).
double qec_complete_split(int m, int n);
double qec_cocktail_party(int n);

/// Exact integer test for a positive QE constant; condition() reports which
/// of the four defining cases applies (1..4), or 0 for the QE class.
bool classify_non_qe(const PartitionSpec& parts);
int non_qe_condition(const PartitionSpec& parts);

/// Solution of the stationary system
///   (m_i + alpha) xi_i = -beta/2,  sum m_i xi_i^2 = 1,  sum m_i xi_i = 0.
struct StationarySolution {
    std::vector<double> xi;
    double alpha = 0.0;
    double beta = 0.0;
};

/// Reconstructs the stationary solution for a root alpha of psi. The
/// degenerate point alpha = -m_1 of an equal-top partition is handled as
/// its own branch (beta = 0, weight on the two top parts).
StationarySolution stationary_solution(const PartitionSpec& parts, double alpha);

/// The four primary non-QE complete multipartite graphs.
enum class PrimaryGraph { k_3_2, k_5_1_1, k_4_1_1_1, k_3_1_1_1_1 };

std::string to_string(PrimaryGraph tag);
const PartitionSpec& primary_parts(PrimaryGraph tag);

/// Primary graphs whose part vector is dominated by a subsequence of
/// `parts`; nonempty exactly when the partition is of non-QE class.
std::vector<PrimaryGraph> contains_primary(const PartitionSpec& parts);

} // namespace qembed

#endif
