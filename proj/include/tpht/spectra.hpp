#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tpht/matrices.hpp"
#include "tpht/matrix.hpp"
#include "tpht/symbols.hpp"

namespace tpht {

struct SpectrumResult {
    /// Sorted descending.
    std::vector<double> eigenvalues;
    /// Column k pairs with eigenvalues[k]; sign-normalized so the last
    /// nonzero entry of each column is positive.
    std::optional<Matrix> eigenvectors;
    /// Largest imaginary part discarded when realifying the spectrum.
    double max_imag = 0.0;
    /// max_k ||A v_k - lambda_k v_k|| / ||v_k|| (only when vectors computed).
    double residual = 0.0;
};

struct EigenOptions {
    bool want_vectors = false;
    /// Input declared TP: imaginary parts are asserted below 1e-6 * ||A||_1
    /// and discarded; ComplexSpectrum is thrown otherwise.
    bool assume_real = false;
};

/// Eigenvalues (and optionally eigenvectors) of a real lower-Hessenberg
/// matrix. Francis double-shift QR runs directly on the Hessenberg form;
/// symmetrizable tridiagonal inputs (the m = 2 symbol case) take a dedicated
/// implicit-shift QL path. Eigenvectors come from inverse iteration on the
/// original matrix.
SpectrumResult eigen_hessenberg(const HessMatrix& a, bool want_vectors = false);
SpectrumResult eigen_hessenberg(const HessMatrix& a, const EigenOptions& opt);

/// Eigenvalues of a general dense real matrix (Householder reduction to
/// Hessenberg form, then the same QR core). Used for chop spectra.
std::vector<std::complex<double>> dense_eigenvalues(const Matrix& a);

/// (1/n) Tr(A^p) by repeated banded matrix products; no eigensolve.
double esd_moment(const HessMatrix& a, int p);

/// Same, building the band directly from the symbol (no dense storage;
/// usable at n = 10000 and beyond).
double esd_moment(const Symbol& s, std::size_t n, int p);

/// Mean of f over the computed eigenvalues.
double esd_average(const HessMatrix& a, const std::function<double(double)>& f);

/// (1/n) sum_k f(lambda_k) for an entire f given by its Taylor coefficients
/// c_j = taylor_coeff(j), evaluated as sum_j c_j (1/n)Tr(T^j) with the tail
/// controlled by the one-norm bound. This is the stable route for the
/// non-Hermitian m >= 3 truncations, where eigenvalue condition numbers grow
/// exponentially in n.
double esd_entire_average(const Symbol& s, std::size_t n,
                          const std::function<double(int)>& taylor_coeff,
                          double tol = 1e-10);

/// Strict sign changes over consecutive entries; entries below
/// 1e-12 * max|v_i| are skipped first.
int sign_variations(const std::vector<double>& v);

/// Roots of the piecewise-linear interpolant x(t), t in [1, n]: for each
/// consecutive pair with opposite strict signs the linear-interpolation root
/// t = k + x_k/(x_k - x_{k+1}); exact zero entries contribute their own
/// abscissa.
std::vector<double> piecewise_nodes(const std::vector<double>& v);

struct OscillationReport {
    std::vector<int> sign_variations;          // one count per eigenvector
    std::vector<std::vector<double>> nodes;    // sorted abscissae, per column
    std::vector<bool> interlacing_ok;          // per consecutive column pair
};

/// Sign variations, nodes and interlacing flags for the eigenvector columns
/// of a spectrum (eigenvalues must be distinct, vectors present). Node
/// extraction skips near-zero entries with the same rule as sign counting so
/// the two stay consistent on LU-dynamics iterates.
OscillationReport check_oscillation(const SpectrumResult& s);

struct Histogram {
    std::vector<double> edges;       // bins+1 edges, uniform over [min, max]
    std::vector<std::size_t> counts;
};

/// Histogram of computed eigenvalues. A degenerate spectrum (single point)
/// collapses to one bin.
Histogram esd_histogram(const HessMatrix& a, std::size_t bins);

} // namespace tpht
