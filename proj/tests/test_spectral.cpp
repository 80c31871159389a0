#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "qembed/canonical.hpp"
#include "qembed/spectral.hpp"
#include "test_util.hpp"

using namespace qembed;
using test_util::cycle_graph;
using test_util::complete_graph;
using test_util::path_graph;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

SymMatrix all_ones(int n) {
    SymMatrix j(n);
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) j.set(i, k, 1.0);
    return j;
}

} // namespace

TEST_CASE("restriction to the ones-complement") {
    SymMatrix eye3(3);
    for (int i = 0; i < 3; ++i) eye3.set(i, i, 1.0);
    SymMatrix r = restrict_to_ones_complement(eye3);
    REQUIRE(r.size() == 2);
    CHECK(r(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r(0, 1)) < 1e-12);

    SymMatrix rj = restrict_to_ones_complement(all_ones(4));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(rj(i, j)) < 1e-12);

    // restriction of D(K2) is the 1x1 matrix [-1]
    SymMatrix dk2 = to_sym_matrix(bfs_distances(complete_graph(2)));
    SymMatrix rk2 = restrict_to_ones_complement(dk2);
    REQUIRE(rk2.size() == 1);
    CHECK(rk2(0, 0) == doctest::Approx(-1.0).epsilon(1e-12));

    CHECK_THROWS_AS(restrict_to_ones_complement(SymMatrix(1)), Error);
}

TEST_CASE("basis columns are orthonormal and orthogonal to ones") {
    for (int n : {2, 3, 5, 8}) {
        const auto b = ones_complement_basis(n);
        for (int c = 0; c < n - 1; ++c) {
            double ones_dot = 0.0;
            for (int i = 0; i < n; ++i) ones_dot += b[i][c];
            CHECK(std::abs(ones_dot) < 1e-12);
            for (int c2 = c; c2 < n - 1; ++c2) {
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += b[i][c] * b[i][c2];
                CHECK(s == doctest::Approx(c == c2 ? 1.0 : 0.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("sym_eigen on closed-form matrices") {
    SymMatrix diag(3);
    diag.set(0, 0, 3.0);
    diag.set(1, 1, 1.0);
    diag.set(2, 2, 2.0);
    Spectrum s = sym_eigen(diag);
    CHECK(s.values[0] == doctest::Approx(3.0));
    CHECK(s.values[1] == doctest::Approx(2.0));
    CHECK(s.values[2] == doctest::Approx(1.0));

    Spectrum j3 = sym_eigen(all_ones(3));
    CHECK(j3.values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(j3.values[1]) < 1e-10);
    CHECK(std::abs(j3.values[2]) < 1e-10);

    // circulant distance matrix of the 4-cycle: spectrum (4, 0, -2, -2)
    Spectrum c4 = distance_spectrum(bfs_distances(cycle_graph(4)));
    CHECK(c4.values[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(c4.values[1]) < 1e-10);
    CHECK(c4.values[2] == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(c4.values[3] == doctest::Approx(-2.0).epsilon(1e-10));
}

TEST_CASE("sym_eigen satisfies the residual and orthonormality contracts") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 1 + trial % 9;
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, entry(rng));
        Spectrum s = sym_eigen(m);
        const double norm = m.frobenius_norm();
        for (int k = 0; k < n; ++k) {
            // || M v - lambda v || <= 1e-9 (1 + |lambda|) ||M||
            double residual = 0.0;
            for (int i = 0; i < n; ++i) {
                double mv = 0.0;
                for (int j = 0; j < n; ++j) mv += m(i, j) * s.vectors[k][j];
                const double r = mv - s.values[k] * s.vectors[k][i];
                residual += r * r;
            }
            CHECK(std::sqrt(residual) <= 1e-9 * (1.0 + std::abs(s.values[k])) * std::max(1.0, norm));
            for (int k2 = k; k2 < n; ++k2)
                CHECK(std::abs(dot(s.vectors[k], s.vectors[k2]) - (k == k2 ? 1.0 : 0.0)) <= 1e-9);
        }
        for (int k = 1; k < n; ++k) CHECK(s.values[k - 1] >= s.values[k]);
    }
}

TEST_CASE("qec_numeric on known families") {
    for (int n = 2; n <= 6; ++n)
        CHECK(qec_numeric(bfs_distances(complete_graph(n))).value ==
              doctest::Approx(-1.0).epsilon(1e-10));

    CHECK(qec_numeric(bfs_distances(path_graph(3))).value ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-10));
    CHECK(std::abs(qec_numeric(bfs_distances(cycle_graph(4))).value) < 1e-10);
}

TEST_CASE("qec certificate is feasible and attains the value") {
    for (const Graph& g : {complete_graph(4), cycle_graph(5), path_graph(6),
                           complete_multipartite_graph({3, 2})}) {
        const DistanceMatrix d = bfs_distances(g);
        const QecResult r = qec_numeric(d);
        CHECK(std::abs(dot(r.certificate, r.certificate) - 1.0) <= 1e-9);
        double ones = 0.0;
        for (double x : r.certificate) ones += x;
        CHECK(std::abs(ones) <= 1e-9);
        double energy = 0.0;
        for (int i = 0; i < d.size(); ++i)
            for (int j = 0; j < d.size(); ++j) energy += r.certificate[i] * d(i, j) * r.certificate[j];
        CHECK(std::abs(energy - r.value) <= 1e-8);
        CHECK(r.method == QecMethod::eigen);
    }
}

TEST_CASE("alpha_min_numeric and the diameter-2 identity") {
    CHECK(alpha_min_numeric(complete_graph(3)) == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(alpha_min_numeric(complete_multipartite_graph({3, 2})) ==
          doctest::Approx(-12.0 / 5.0).epsilon(1e-10));
    CHECK(alpha_min_numeric(cycle_graph(4)) == doctest::Approx(-2.0).epsilon(1e-10));

    CHECK_THROWS_WITH_AS(alpha_min_numeric(path_graph(4)), doctest::Contains("DiameterOutOfRange"),
                         Error);
    CHECK_THROWS_AS(alpha_min_numeric(Graph(1)), Error);

    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            if (diameter(g) > 2) continue;
            const double qec = qec_numeric(bfs_distances(g)).value;
            CHECK(std::abs(qec - (-2.0 - alpha_min_numeric(g))) <= 1e-8);
        }
}

TEST_CASE("distance spectra of small complete graphs") {
    Spectrum k2 = distance_spectrum(bfs_distances(complete_graph(2)));
    CHECK(k2.values[0] == doctest::Approx(1.0));
    CHECK(k2.values[1] == doctest::Approx(-1.0));

    Spectrum k3 = distance_spectrum(bfs_distances(complete_graph(3)));
    CHECK(k3.values[0] == doctest::Approx(2.0));
    CHECK(k3.values[1] == doctest::Approx(-1.0));
    CHECK(k3.values[2] == doctest::Approx(-1.0));
}

TEST_CASE("path and cycle closed forms") {
    using std::numbers::pi;
    for (int n = 2; n <= 12; ++n) {
        const double expected = -1.0 / (1.0 + std::cos(pi / n));
        CHECK(qec_numeric(bfs_distances(path_graph(n))).value ==
              doctest::Approx(expected).epsilon(1e-9));
    }
    for (int n = 3; n <= 12; ++n) {
        const double qec = qec_numeric(bfs_distances(cycle_graph(n))).value;
        if (n % 2 == 0) {
            CHECK(std::abs(qec) <= 1e-9);
        } else {
            const double c = std::cos(pi / n);
            CHECK(qec == doctest::Approx(-1.0 / (4.0 * c * c)).epsilon(1e-9));
        }
    }
}

TEST_CASE("quadratic embedding construction and verification") {
    // K2: two points at squared distance one
    EmbeddingCoords k2 = quadratic_embedding(bfs_distances(complete_graph(2)), 1e-9);
    CHECK(k2.dim == 1);
    CHECK(verify_embedding(k2, bfs_distances(complete_graph(2)), 1e-8));

    // C4: adjacent pairs at squared distance 1, antipodal at 2
    const DistanceMatrix dc4 = bfs_distances(cycle_graph(4));
    EmbeddingCoords c4 = quadratic_embedding(dc4, 1e-9);
    CHECK(c4.dim <= 3);
    CHECK(verify_embedding(c4, dc4, 1e-8));

    // the unit square realizes C4 by hand
    EmbeddingCoords square;
    square.n = 4;
    square.dim = 2;
    square.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(verify_embedding(square, dc4, 1e-12));
    square.points[2][0] += 0.1;
    CHECK_FALSE(verify_embedding(square, dc4, 1e-8));

    CHECK_THROWS_AS(
        (void)verify_embedding(square, bfs_distances(complete_graph(3)), 1e-8), Error);

    try {
        quadratic_embedding(bfs_distances(complete_multipartite_graph({3, 2})), 1e-9);
        FAIL("expected NotEmbeddable");
    } catch (const NotEmbeddable& e) {
        CHECK(e.qec() == doctest::Approx(0.4).epsilon(1e-8));
    }
}

TEST_CASE("Schoenberg consistency and the eigenvalue sandwich on small graphs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            const DistanceMatrix d = bfs_distances(g);
            const double qec = qec_numeric(d).value;
            bool embeddable = true;
            try {
                EmbeddingCoords coords = quadratic_embedding(d, 1e-9);
                CHECK(verify_embedding(coords, d, 1e-8));
                CHECK(coords.dim <= n - 1);
            } catch (const NotEmbeddable&) {
                embeddable = false;
            }
            CHECK(embeddable == (qec <= 1e-9));

            const Spectrum spectrum = distance_spectrum(d);
            CHECK(spectrum.values[1] - 1e-8 <= qec);
            CHECK(qec < spectrum.values[0]);
        }
}
