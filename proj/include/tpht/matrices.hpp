#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tpht/matrix.hpp"
#include "tpht/symbols.hpp"

namespace tpht {

/// Dense real lower-Hessenberg matrix: entries (i,j) vanish for j > i+1.
/// TPHT instances additionally carry a unit superdiagonal and Toeplitz
/// structure, but the type admits any lower-Hessenberg matrix (companion
/// matrices, epsilon_Lambda, LU-dynamics iterates).
class HessMatrix {
public:
    HessMatrix() = default;

    /// Validates the Hessenberg zero pattern; throws std::invalid_argument.
    explicit HessMatrix(Matrix m);

    std::size_t size() const { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    /// Writes an entry, rejecting positions above the superdiagonal.
    void set(std::size_t i, std::size_t j, double v);

    const Matrix& dense() const { return m_; }

    /// Largest i-j over nonzero entries (0 for diagonal/upper-bidiagonal).
    std::size_t lower_bandwidth() const;

    bool has_unit_superdiagonal(double tol = 1e-12) const;

private:
    Matrix m_;
};

/// n x n truncation of the Toeplitz operator with symbol s:
/// entry (i,j) = coeffs[i-j+1] for 0 <= i-j+1 <= m, 1 on the superdiagonal.
HessMatrix tpht_truncation(const Symbol& s, std::size_t n);

/// Companion matrix for x^n + c_{n-1} x^{n-1} + ... + c_0: superdiagonal 1s,
/// last row (-c_0, ..., -c_{n-1}).
HessMatrix companion_matrix(const std::vector<double>& char_coeffs);

/// Upper bidiagonal epsilon_Lambda: diagonal lambda, unit superdiagonal.
HessMatrix epsilon_lambda(const std::vector<double>& lambda);

/// Sorted 1-based row indices; pairs with the initial |S| columns.
using MinorIndex = std::vector<std::size_t>;

/// tau_S^init(A) = det(A_{S,[|S|]}); 1 for empty S.
double tau_init(const HessMatrix& a, const MinorIndex& s);

enum class TPMode { exhaustive, neville };

struct TPWitness {
    std::vector<std::size_t> rows, cols;  // 1-based
    double value;
};

struct TPReport {
    bool is_tp = false;
    TPMode method = TPMode::exhaustive;
    /// Present iff is_tp is false and method is exhaustive.
    std::optional<TPWitness> witness;
};

/// exhaustive: every minor of every order is evaluated; the first one below
/// -1e-10 (relative to the minor's Hadamard bound) is reported as witness.
/// Guarded to n <= 10.
/// neville: complete Neville elimination of A and A^T; TP is certified when
/// all multipliers and pivots clear the same scaled cutoff (sufficient
/// certificate, no witness).
TPReport is_totally_positive(const HessMatrix& a, TPMode mode);

/// max_j sum_i |T_ij| for the truncation of s at size n; equals sum_k x_k
/// once n > m (and 2^m for all-ones roots).
double one_norm_bound(const Symbol& s, std::size_t n);

/// Tolerance below which a computed minor counts as genuinely negative.
inline constexpr double kTPTolerance = 1e-10;

} // namespace tpht
