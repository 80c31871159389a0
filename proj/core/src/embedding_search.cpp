#include "qembed/embedding_search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "qembed/graph6.hpp"
#include "qembed/spectral.hpp"

namespace qembed {

namespace {

struct EmbeddingSearch {
    const Graph& pattern;
    const Graph& host;
    const DistanceMatrix dp;
    const DistanceMatrix dh;
    const bool adjacency_only; // diam(pattern) <= 2
    std::vector<int> order;    // pattern vertices, descending degree
    std::vector<int> image;    // image[pos] = host vertex for order[pos]
    std::vector<bool> used;

    EmbeddingSearch(const Graph& p, const Graph& h)
        : pattern(p),
          host(h),
          dp(bfs_distances(p)),
          dh(bfs_distances(h)),
          adjacency_only(dp.max_entry() <= 2),
          image(p.vertex_count(), -1),
          used(h.vertex_count(), false) {
        order.resize(p.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return p.degree(a) > p.degree(b);
        });
    }

    bool compatible(int pos, int candidate) const {
        const int v = order[pos];
        for (int t = 0; t < pos; ++t) {
            const int w = order[t];
            const int u = image[t];
            if (adjacency_only) {
                if (pattern.adjacent(v, w) != host.adjacent(candidate, u)) return false;
            } else {
                if (dp(v, w) != dh(candidate, u)) return false;
            }
        }
        return true;
    }

    bool search(int pos) {
        if (pos == pattern.vertex_count()) return true;
        for (int u = 0; u < host.vertex_count(); ++u) {
            if (used[u] || !compatible(pos, u)) continue;
            used[u] = true;
            image[pos] = u;
            if (search(pos + 1)) return true;
            used[u] = false;
        }
        return false;
    }
};

void run_partitioned(int count, int jobs, const std::function<void(int)>& work) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    jobs = std::min(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    std::mutex error_mutex;
    std::exception_ptr first_error;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([=, &work, &error_mutex, &first_error]() {
            try {
                for (int i = t; i < count; i += jobs) work(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

// Non-QE connected induced proper subgraphs whose inclusion preserves
// distances, deduped by canonical code.
std::vector<std::string> non_qe_subgraph_witnesses(const Graph& g, const DistanceMatrix& dg) {
    const int n = g.vertex_count();
    std::map<CanonicalCode, std::string> found;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        const int bits = __builtin_popcount(mask);
        if (bits < 2 || bits >= n) continue;
        std::vector<int> subset;
        subset.reserve(bits);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) subset.push_back(v);
        const Graph h = induced_subgraph(g, subset);
        if (!is_connected(h)) continue;
        const DistanceMatrix dhm = bfs_distances(h);
        bool isometric = true;
        for (int i = 0; i < bits && isometric; ++i)
            for (int j = i + 1; j < bits; ++j)
                if (dhm(i, j) != dg(subset[i], subset[j])) {
                    isometric = false;
                    break;
                }
        if (!isometric) continue;
        const CanonicalCode code = canonical_label(h);
        if (found.count(code)) continue;
        if (qec_numeric(dhm).value > kNonQeThreshold)
            found.emplace(code, write_graph6(graph_from_canonical_code(code)));
    }
    std::vector<std::string> out;
    out.reserve(found.size());
    for (auto& [code, g6] : found) out.push_back(g6);
    return out;
}

ScanRecord make_record(const Graph& g) {
    ScanRecord rec;
    rec.code = canonical_label(g);
    rec.graph6 = write_graph6(g);
    rec.order = g.vertex_count();
    rec.size = g.edge_count();
    rec.degree_sequence = g.degree_sequence();
    const DistanceMatrix d = bfs_distances(g);
    const QecResult qec = qec_numeric(d);
    rec.qec = qec.value;
    double energy = 0.0;
    for (int i = 0; i < rec.order; ++i)
        for (int j = 0; j < rec.order; ++j)
            energy += qec.certificate[i] * d(i, j) * qec.certificate[j];
    rec.residual = std::abs(energy - qec.value);
    rec.non_qe = qec.value > kNonQeThreshold;
    if (rec.non_qe) {
        rec.witnesses = non_qe_subgraph_witnesses(g, d);
        rec.primary = rec.witnesses.empty();
    }
    return rec;
}

} // namespace

std::optional<IsometricWitness> find_isometric_embedding(const Graph& pattern, const Graph& host) {
    if (!is_connected(pattern) || !is_connected(host))
        throw Error(errc::disconnected_graph, "isometric embedding needs connected graphs");
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    EmbeddingSearch search(pattern, host);
    if (!search.search(0)) return std::nullopt;
    IsometricWitness witness;
    witness.mapping.assign(pattern.vertex_count(), -1);
    for (int pos = 0; pos < pattern.vertex_count(); ++pos)
        witness.mapping[search.order[pos]] = search.image[pos];
    return witness;
}

int ScanReport::non_qe_count() const {
    int c = 0;
    for (const auto& r : records) c += r.non_qe;
    return c;
}

int ScanReport::primary_count() const {
    int c = 0;
    for (const auto& r : records) c += r.non_qe && r.primary;
    return c;
}

ScanReport scan_graphs(const std::vector<Graph>& graphs, int jobs) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const int n = graphs[i].vertex_count();
        const std::string where = "scan input " + std::to_string(i);
        if (n < 2)
            throw Error(errc::invalid_argument, where + ": needs at least two vertices");
        if (n > kCanonicalLabelCap)
            throw Error(errc::too_large, where + ": canonical labeling capped at n <= " +
                                             std::to_string(kCanonicalLabelCap));
        if (!is_connected(graphs[i]))
            throw Error(errc::disconnected_graph, where + ": disconnected");
    }
    ScanReport report;
    report.records.resize(graphs.size());
    run_partitioned(static_cast<int>(graphs.size()), jobs,
                    [&](int i) { report.records[i] = make_record(graphs[i]); });
    return report;
}

ScanReport non_qe_scan(int n, int jobs) {
    if (n < 2)
        throw Error(errc::invalid_argument, "scan needs n >= 2");
    if (n > kEnumerationCap)
        throw Error(errc::too_large,
                    "scan capped at n <= " + std::to_string(kEnumerationCap));
    return scan_graphs(enumerate_connected(n), jobs);
}

ScanReport primary_scan(int n, int jobs) {
    ScanReport full = non_qe_scan(n, jobs);
    ScanReport out;
    for (auto& rec : full.records)
        if (rec.non_qe) out.records.push_back(std::move(rec));
    return out;
}

std::string to_string(PrimaryPolynomial tag) {
    switch (tag) {
        case PrimaryPolynomial::closed_form_sqrt19: return "(-4+sqrt(19))/3";
        case PrimaryPolynomial::cubic: return "5x^3+26x^2+24x-6";
        case PrimaryPolynomial::quartic: return "3x^4+14x^3+18x^2+5x-1";
    }
    return "?";
}

std::optional<PrimaryPolynomial> primary_polynomial_check(double qec_value) {
    if (!(qec_value > 0.0)) return std::nullopt;
    const double x = qec_value;
    if (std::abs(x - (-4.0 + std::sqrt(19.0)) / 3.0) <= 1e-9)
        return PrimaryPolynomial::closed_form_sqrt19;
    if (std::abs(((5.0 * x + 26.0) * x + 24.0) * x - 6.0) <= 1e-7)
        return PrimaryPolynomial::cubic;
    if (std::abs((((3.0 * x + 14.0) * x + 18.0) * x + 5.0) * x - 1.0) <= 1e-7)
        return PrimaryPolynomial::quartic;
    return std::nullopt;
}

} // namespace qembed
