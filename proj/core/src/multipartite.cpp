#include "qembed/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace qembed {

namespace {

constexpr double kRootWidthTol = 1e-13;
constexpr double kStationaryPsiTol = 1e-9;

void require_k2(const PartitionSpec& parts, const char* what) {
    if (parts.part_count() < 2)
        throw Error(errc::invalid_argument, std::string(what) + " needs k >= 2 parts");
}

bool rest_are_ones(const PartitionSpec& parts) {
    for (int i = 1; i < parts.part_count(); ++i)
        if (parts[i] != 1) return false;
    return true;
}

Rational reduced(long long num, long long den) {
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

} // namespace

PartitionSpec::PartitionSpec(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw Error(errc::empty_part, "no parts given");
    for (int m : parts_) {
        if (m < 1) throw Error(errc::empty_part, "part size must be >= 1");
        total_ += m;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

PartitionSpec PartitionSpec::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto read_int = [&]() -> int {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start)
            throw Error(errc::invalid_argument,
                        "expected integer at position " + std::to_string(start) + " in partition \"" +
                            std::string(text) + "\"");
        int value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + (text[i] - '0');
            if (value > 1000000)
                throw Error(errc::invalid_argument, "partition entry too large");
        }
        return value;
    };
    while (true) {
        int m = read_int();
        int repeat = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            repeat = read_int();
            if (repeat < 1)
                throw Error(errc::invalid_argument, "repetition count must be >= 1");
        }
        if (static_cast<long long>(parts.size()) + repeat > 100000)
            throw Error(errc::invalid_argument, "partition too large");
        parts.insert(parts.end(), repeat, m);
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw Error(errc::invalid_argument,
                        "unexpected character '" + std::string(1, text[pos]) + "' in partition");
        ++pos;
    }
    return PartitionSpec(std::move(parts));
}

std::string PartitionSpec::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(parts_[i]);
    }
    return out;
}

Graph complete_multipartite_graph(const PartitionSpec& parts) {
    return complete_multipartite_graph(parts.parts());
}

double psi(double alpha, const PartitionSpec& parts) {
    double sum = 0.0;
    for (int m : parts.parts()) {
        const double denom = alpha + m;
        if (denom == 0.0)
            throw Error(errc::pole_hit, "alpha = " + std::to_string(alpha) + " is a pole");
        sum += m / denom;
    }
    return sum;
}

double minimal_root(const PartitionSpec& parts) {
    require_k2(parts, "minimal_root");
    const double m1 = parts[0];
    const double m2 = parts[1];
    if (parts[0] == parts[1])
        throw Error(errc::precondition_violated, "minimal_root needs m1 > m2");

    // psi decreases from +inf to -inf across (-m1, -m2); start just inside
    // the poles and move the endpoints closer whenever the sign is wrong.
    double inset = 1e-9 * m1;
    double lo = -m1 + inset;
    double hi = -m2 - inset;
    for (int i = 0; i < 200 && psi(lo, parts) <= 0.0; ++i) {
        inset *= 0.5;
        lo = -m1 + inset;
    }
    inset = 1e-9 * m1;
    for (int i = 0; i < 200 && psi(hi, parts) >= 0.0; ++i) {
        inset *= 0.5;
        hi = -m2 - inset;
    }
    if (!(psi(lo, parts) > 0.0 && psi(hi, parts) < 0.0))
        throw Error(errc::invalid_argument, "failed to bracket the root of psi");

    while (hi - lo > kRootWidthTol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval at floating resolution
        const double value = psi(mid, parts);
        if (value == 0.0) return mid;
        (value > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

QecClosedForm qec_multipartite(const PartitionSpec& parts) {
    require_k2(parts, "qec_multipartite");
    QecClosedForm result;
    if (parts[0] == parts[1]) {
        result.branch = QecClosedForm::Branch::equal_top;
        result.value = -2.0 + parts[0];
        return result;
    }
    result.branch = QecClosedForm::Branch::root;
    result.alpha_star = minimal_root(parts);
    result.value = -2.0 - *result.alpha_star;
    return result;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> qec_multipartite_exact(const PartitionSpec& parts) {
    if (parts.part_count() < 2) return std::nullopt;
    const long long m1 = parts[0];
    if (parts[0] == parts[1]) return Rational{m1 - 2, 1};
    if (parts.part_count() == 2) {
        const long long m2 = parts[1];
        return reduced(2 * (m1 - 1) * (m2 - 1) - 2, m1 + m2);
    }
    if (rest_are_ones(parts)) {
        const long long ones = parts.part_count() - 1;
        return reduced((m1 - 2) * (ones - 1) - 2, m1 + ones);
    }
    return std::nullopt;
}

double qec_bipartite(int m, int n) {
    if (m < 1 || n < 1)
        throw Error(errc::invalid_argument, "part sizes must be >= 1");
    return (2.0 * (m - 1) * (n - 1) - 2.0) / (m + n);
}

double qec_tripartite(int l, int m, int n) {
    if (l < 1 || m < 1 || n < 1)
        throw Error(errc::invalid_argument, "part sizes must be >= 1");
    const long long e2 = static_cast<long long>(l) * m + static_cast<long long>(m) * n +
                         static_cast<long long>(n) * l;
    const long long s = l + m + n;
    const long long disc = e2 * e2 - 3LL * l * m * n * s;
    return -2.0 + (e2 + std::sqrt(static_cast<double>(disc))) / static_cast<double>(s);
}

double qec_complete_split(int m, int n) {
    if (m < 1 || n < 1)
        throw Error(errc::invalid_argument, "sizes must be >= 1");
    return ((m - 2.0) * (n - 1.0) - 2.0) / (m + n);
}

double qec_cocktail_party(int n) {
    if (n < 2)
        throw Error(errc::invalid_argument, "cocktail party graph needs n >= 2 pairs");
    return 0.0;
}

int non_qe_condition(const PartitionSpec& parts) {
    require_k2(parts, "non_qe_condition");
    const int k = parts.part_count();
    const int m1 = parts[0];
    const int m2 = parts[1];
    if (m1 >= 3 && m2 >= 2) return 1;
    if (!rest_are_ones(parts)) return 0;
    if (k >= 3 && m1 >= 5) return 2;
    if (k >= 4 && m1 == 4) return 3;
    if (k >= 5 && m1 == 3) return 4;
    return 0;
}

bool classify_non_qe(const PartitionSpec& parts) {
    return non_qe_condition(parts) != 0;
}

StationarySolution stationary_solution(const PartitionSpec& parts, double alpha) {
    require_k2(parts, "stationary_solution");
    const int k = parts.part_count();

    // Degenerate equal-top point: beta = 0 and the weight sits on the two
    // top parts with opposite signs.
    if (parts[0] == parts[1] && alpha == -static_cast<double>(parts[0])) {
        StationarySolution sol;
        sol.alpha = alpha;
        sol.beta = 0.0;
        sol.xi.assign(k, 0.0);
        sol.xi[0] = 1.0 / std::sqrt(2.0 * parts[0]);
        sol.xi[1] = -sol.xi[0];
        return sol;
    }

    for (int m : parts.parts())
        if (alpha + m == 0.0)
            throw Error(errc::pole_hit, "alpha = " + std::to_string(alpha) + " is a pole");

    const double residual = psi(alpha, parts);
    if (std::abs(residual) > kStationaryPsiTol)
        throw Error(errc::not_a_stationary_alpha,
                    "psi(alpha) = " + std::to_string(residual) + " exceeds " +
                        std::to_string(kStationaryPsiTol));

    double norm_sum = 0.0;
    for (int m : parts.parts()) {
        const double denom = alpha + m;
        norm_sum += m / (denom * denom);
    }
    StationarySolution sol;
    sol.alpha = alpha;
    sol.beta = 2.0 / std::sqrt(norm_sum);
    sol.xi.resize(k);
    for (int i = 0; i < k; ++i) sol.xi[i] = -(sol.beta / 2.0) / (alpha + parts[i]);
    return sol;
}

std::string to_string(PrimaryGraph tag) {
    switch (tag) {
        case PrimaryGraph::k_3_2: return "K_{3,2}";
        case PrimaryGraph::k_5_1_1: return "K_{5,1,1}";
        case PrimaryGraph::k_4_1_1_1: return "K_{4,1,1,1}";
        case PrimaryGraph::k_3_1_1_1_1: return "K_{3,1,1,1,1}";
    }
    return "?";
}

const PartitionSpec& primary_parts(PrimaryGraph tag) {
    static const PartitionSpec k32{{3, 2}};
    static const PartitionSpec k511{{5, 1, 1}};
    static const PartitionSpec k4111{{4, 1, 1, 1}};
    static const PartitionSpec k31111{{3, 1, 1, 1, 1}};
    switch (tag) {
        case PrimaryGraph::k_3_2: return k32;
        case PrimaryGraph::k_5_1_1: return k511;
        case PrimaryGraph::k_4_1_1_1: return k4111;
        case PrimaryGraph::k_3_1_1_1_1: return k31111;
    }
    return k32;
}

std::vector<PrimaryGraph> contains_primary(const PartitionSpec& parts) {
    require_k2(parts, "contains_primary");
    // Both sequences are sorted non-increasing, so a subsequence with
    // n_j <= m_{i_j} exists iff the positional comparison holds.
    auto dominated = [&](const PartitionSpec& pattern) {
        if (pattern.part_count() > parts.part_count()) return false;
        for (int j = 0; j < pattern.part_count(); ++j)
            if (parts[j] < pattern[j]) return false;
        return true;
    };
    std::vector<PrimaryGraph> found;
    for (PrimaryGraph tag : {PrimaryGraph::k_3_2, PrimaryGraph::k_5_1_1, PrimaryGraph::k_4_1_1_1,
                             PrimaryGraph::k_3_1_1_1_1})
        if (dominated(primary_parts(tag))) found.push_back(tag);
    return found;
}

} // namespace qembed
