#ifndef QEMBED_SPECTRAL_HPP
#define QEMBED_SPECTRAL_HPP

#include <string>
#include <vector>

#include "qembed/graph.hpp"

namespace qembed {

/// Dense real symmetric matrix; entries(i,j) == entries(j,i) exactly as
/// stored.
class SymMatrix {
public:
    explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
        if (n <= 0) throw Error(errc::invalid_argument, "dimension must be positive");
    }

    static SymMatrix from_entries(int n, const std::vector<double>& entries);

    int size() const noexcept { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    void set(int i, int j, double value) {
        a_[static_cast<std::size_t>(i) * n_ + j] = value;
        a_[static_cast<std::size_t>(j) * n_ + i] = value;
    }

    double frobenius_norm() const;

private:
    int n_;
    std::vector<double> a_;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix to_sym_matrix(const DistanceMatrix& d);

/// Eigenvalues sorted descending; vectors[i] is the orthonormal eigenvector
/// for values[i], sign-normalized so its first non-negligible entry is
/// positive.
struct Spectrum {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

/// Cyclic Jacobi sweeps; converges to off-diagonal norm 1e-11 relative to
/// the input scale, capped at 100 sweeps (errc::eigen_no_convergence past
/// the cap). Deterministic for a fixed input.
Spectrum sym_eigen(const SymMatrix& m);

/// Orthonormal basis of the hyperplane orthogonal to the all-ones vector:
/// columns 1..n-1 of the Householder reflection sending the first
/// coordinate axis to 1/sqrt(n) * ones. Returned as n rows of n-1 columns.
std::vector<std::vector<double>> ones_complement_basis(int n);

/// B^T M B for the basis above; its eigenvalues are exactly the spectrum of
/// M constrained to the hyperplane <ones, f> = 0.
SymMatrix restrict_to_ones_complement(const SymMatrix& m);

enum class QecMethod { eigen, closed_form, root_find };

std::string to_string(QecMethod method);

struct QecResult {
    double value = 0.0;
    QecMethod method = QecMethod::eigen;
    /// Unit vector f with <ones,f> = 0 attaining the value (eigen method).
    std::vector<double> certificate;
};

/// Maximum of <f, D f> over unit vectors orthogonal to the all-ones vector,
/// computed as the top eigenvalue of the restricted matrix.
QecResult qec_numeric(const DistanceMatrix& d);

/// Minimum of <f, A f> under the same constraints, for graphs of diameter
/// 1 or 2; qec equals -2 - alpha_min there.
double alpha_min_numeric(const Graph& g);

/// Full unconstrained spectrum of the distance matrix.
Spectrum distance_spectrum(const DistanceMatrix& d);

/// Points realizing squared Euclidean distance == graph distance.
struct EmbeddingCoords {
    int n = 0;
    int dim = 0;
    std::vector<std::vector<double>> points; // n rows of dim coordinates
};

/// Classical scaling: Gram matrix G = -1/2 P D P with P = I - J/n. Succeeds
/// iff G is positive semidefinite up to tol * ||G||; otherwise throws
/// NotEmbeddable carrying the numeric QE constant.
EmbeddingCoords quadratic_embedding(const DistanceMatrix& d, double tol = 1e-9);

/// True iff max over pairs of |  ||p(x)-p(y)||^2 - d(x,y) | <= tol.
bool verify_embedding(const EmbeddingCoords& coords, const DistanceMatrix& d, double tol);

} // namespace qembed

#endif
