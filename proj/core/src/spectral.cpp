#include "qembed/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qembed {

namespace {

constexpr double kOffDiagTol = 1e-11;
constexpr int kMaxSweeps = 100;

double sign_of(double x) { return x >= 0.0 ? 1.0 : -1.0; }

void normalize_sign(std::vector<double>& v) {
    for (double x : v) {
        if (std::abs(x) > 1e-12) {
            if (x < 0.0)
                for (double& y : v) y = -y;
            return;
        }
    }
}

} // namespace

SymMatrix SymMatrix::from_entries(int n, const std::vector<double>& entries) {
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw Error(errc::dimension_mismatch, "entry count does not match dimension");
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double a = entries[static_cast<std::size_t>(i) * n + j];
            double b = entries[static_cast<std::size_t>(j) * n + i];
            if (a != b)
                throw Error(errc::invalid_argument, "entries are not symmetric");
            m.set(i, j, a);
        }
    return m;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

SymMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    SymMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) a.set(i, j, 1.0);
    return a;
}

SymMatrix to_sym_matrix(const DistanceMatrix& d) {
    const int n = d.size();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, static_cast<double>(d(i, j)));
    return m;
}

Spectrum sym_eigen(const SymMatrix& m) {
    const int n = m.size();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m(i, j);
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<double>& w, int i, int j) -> double& {
        return w[static_cast<std::size_t>(i) * n + j];
    };
    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(a, i, j) * at(a, i, j);
        return std::sqrt(2.0 * s);
    };

    const double tol = kOffDiagTol * std::max(1.0, m.frobenius_norm());
    if (n > 1) {
        int sweep = 0;
        while (off_norm() > tol) {
            if (++sweep > kMaxSweeps)
                throw Error(errc::eigen_no_convergence,
                            "off-diagonal norm above tolerance after " +
                                std::to_string(kMaxSweeps) + " sweeps");
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    const double apq = at(a, p, q);
                    if (std::abs(apq) == 0.0) continue;
                    const double tau = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                    const double t = sign_of(tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    at(a, p, p) -= t * apq;
                    at(a, q, q) += t * apq;
                    at(a, p, q) = 0.0;
                    at(a, q, p) = 0.0;
                    for (int i = 0; i < n; ++i) {
                        if (i != p && i != q) {
                            const double aip = at(a, i, p);
                            const double aiq = at(a, i, q);
                            at(a, i, p) = c * aip - s * aiq;
                            at(a, p, i) = at(a, i, p);
                            at(a, i, q) = s * aip + c * aiq;
                            at(a, q, i) = at(a, i, q);
                        }
                        const double vip = at(v, i, p);
                        const double viq = at(v, i, q);
                        at(v, i, p) = c * vip - s * viq;
                        at(v, i, q) = s * vip + c * viq;
                    }
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return at(a, x, x) > at(a, y, y); });

    Spectrum spectrum;
    spectrum.values.reserve(n);
    spectrum.vectors.reserve(n);
    for (int k : order) {
        spectrum.values.push_back(at(a, k, k));
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = at(v, i, k);
        normalize_sign(col);
        spectrum.vectors.push_back(std::move(col));
    }
    return spectrum;
}

std::vector<std::vector<double>> ones_complement_basis(int n) {
    if (n < 2)
        throw Error(errc::invalid_argument, "basis of the ones-complement needs n >= 2");
    // Householder vector for the reflection sending e_0 to ones/sqrt(n).
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<double> w(n, -inv_sqrt_n);
    w[0] = 1.0 - inv_sqrt_n;
    double norm2 = 0.0;
    for (double x : w) norm2 += x * x;
    std::vector<std::vector<double>> b(n, std::vector<double>(n - 1));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n - 1; ++c) {
            const int j = c + 1;
            b[i][c] = (i == j ? 1.0 : 0.0) - 2.0 * w[i] * w[j] / norm2;
        }
    return b;
}

SymMatrix restrict_to_ones_complement(const SymMatrix& m) {
    const int n = m.size();
    const auto b = ones_complement_basis(n);
    // T = M B, then R = B^T T; symmetrized to kill rounding skew.
    std::vector<std::vector<double>> t(n, std::vector<double>(n - 1, 0.0));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < n - 1; ++c) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += m(i, k) * b[k][c];
            t[i][c] = s;
        }
    SymMatrix r(n - 1);
    for (int rrow = 0; rrow < n - 1; ++rrow)
        for (int c = rrow; c < n - 1; ++c) {
            double s1 = 0.0, s2 = 0.0;
            for (int k = 0; k < n; ++k) {
                s1 += b[k][rrow] * t[k][c];
                s2 += b[k][c] * t[k][rrow];
            }
            r.set(rrow, c, 0.5 * (s1 + s2));
        }
    return r;
}

std::string to_string(QecMethod method) {
    switch (method) {
        case QecMethod::eigen: return "eigen";
        case QecMethod::closed_form: return "closed-form";
        case QecMethod::root_find: return "root-find";
    }
    return "unknown";
}

QecResult qec_numeric(const DistanceMatrix& d) {
    const int n = d.size();
    if (n < 2)
        throw Error(errc::invalid_argument, "qec needs at least two vertices");
    const SymMatrix restricted = restrict_to_ones_complement(to_sym_matrix(d));
    const Spectrum spectrum = sym_eigen(restricted);
    const auto basis = ones_complement_basis(n);
    QecResult result;
    result.value = spectrum.values.front();
    result.method = QecMethod::eigen;
    result.certificate.assign(n, 0.0);
    const auto& top = spectrum.vectors.front();
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int c = 0; c < n - 1; ++c) s += basis[i][c] * top[c];
        result.certificate[i] = s;
    }
    normalize_sign(result.certificate);
    return result;
}

double alpha_min_numeric(const Graph& g) {
    const DistanceMatrix d = bfs_distances(g);
    const int diam = d.max_entry();
    if (diam < 1 || diam > 2)
        throw Error(errc::diameter_out_of_range,
                    "diameter " + std::to_string(diam) + " outside [1,2]");
    const SymMatrix restricted = restrict_to_ones_complement(adjacency_matrix(g));
    return sym_eigen(restricted).values.back();
}

Spectrum distance_spectrum(const DistanceMatrix& d) {
    return sym_eigen(to_sym_matrix(d));
}

EmbeddingCoords quadratic_embedding(const DistanceMatrix& d, double tol) {
    const int n = d.size();
    std::vector<double> row_sum(n, 0.0);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) row_sum[i] += d(i, j);
        total += row_sum[i];
    }
    SymMatrix gram(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double centered =
                d(i, j) - row_sum[i] / n - row_sum[j] / n + total / (static_cast<double>(n) * n);
            gram.set(i, j, -0.5 * centered);
        }

    const Spectrum spectrum = sym_eigen(gram);
    const double norm = std::max(std::abs(spectrum.values.front()), std::abs(spectrum.values.back()));
    const double threshold = tol * norm;
    if (spectrum.values.back() < -threshold) {
        const double qec = n >= 2 ? qec_numeric(d).value : 0.0;
        throw NotEmbeddable(qec, "distance matrix is not conditionally negative definite; qec = " +
                                     std::to_string(qec));
    }

    EmbeddingCoords coords;
    coords.n = n;
    coords.dim = 0;
    for (double lambda : spectrum.values)
        if (lambda > threshold) ++coords.dim;
    coords.points.assign(n, std::vector<double>(coords.dim, 0.0));
    for (int c = 0; c < coords.dim; ++c) {
        const double scale = std::sqrt(std::max(spectrum.values[c], 0.0));
        for (int i = 0; i < n; ++i) coords.points[i][c] = scale * spectrum.vectors[c][i];
    }
    return coords;
}

bool verify_embedding(const EmbeddingCoords& coords, const DistanceMatrix& d, double tol) {
    if (coords.n != d.size())
        throw Error(errc::dimension_mismatch, "coordinate rows do not match distance matrix");
    double worst = 0.0;
    for (int x = 0; x < coords.n; ++x)
        for (int y = x + 1; y < coords.n; ++y) {
            double sq = 0.0;
            for (int c = 0; c < coords.dim; ++c) {
                const double diff = coords.points[x][c] - coords.points[y][c];
                sq += diff * diff;
            }
            worst = std::max(worst, std::abs(sq - d(x, y)));
        }
    return worst <= tol;
}

} // namespace qembed
