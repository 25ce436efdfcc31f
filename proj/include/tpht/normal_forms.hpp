#pragma once

#include <vector>

#include "tpht/matrices.hpp"
#include "tpht/matrix.hpp"

namespace tpht {

/// Coefficients of det(xI - X) for a lower-Hessenberg X, low degree first,
/// length n+1 with leading coefficient 1. Uses the Hessenberg expansion
/// recurrence over leading principal blocks.
std::vector<double> hessenberg_charpoly(const HessMatrix& x);

/// The unique lower unipotent L1 with L1^{-1} X L1 = c_X for X with unit
/// superdiagonal: row k+1 of L1 holds the characteristic coefficients of the
/// leading k x k block. The conjugation residual is verified before
/// returning (VerificationFailed otherwise).
Matrix to_companion_L(const HessMatrix& x);

/// The lower unipotent L2 with L2^{-1} epsilon_Lambda L2 = c_Lambda,
/// constructed as to_companion_L(epsilon_lambda(lambda)); entrywise it is
/// (-1)^{i+j} e_{i-j}(lambda_1..lambda_{i-1}) below the diagonal.
Matrix companion_to_epsilon_L(const std::vector<double>& lambda);

/// Upper triangular U with epsilon_Lambda = U d_Lambda U^{-1}:
/// u_ij = prod_{k<i} (lambda_j - lambda_k). Requires pairwise distinct
/// lambda (RepeatedEigenvalue otherwise); the identity epsilon_Lambda U =
/// U d_Lambda is verified before returning.
Matrix epsilon_diagonalizer(const std::vector<double>& lambda);

struct NormalFormBundle {
    Matrix L1;  // X -> companion
    Matrix L2;  // companion -> epsilon_Lambda
    Matrix L;   // L2 L1^{-1}, so X = L^{-1} epsilon_Lambda L
    Matrix U;   // diagonalizer of epsilon_Lambda
    std::vector<double> lambda;
};

NormalFormBundle normal_form_bundle(const HessMatrix& x, const std::vector<double>& lambda);

/// Eigenvector matrix of X in LU-factorized form: returns (L^{-1}, U) with
/// X (L^{-1} U) = (L^{-1} U) d_Lambda. lambda must match the spectrum of X
/// (checked through characteristic coefficients; SpectrumMismatch otherwise).
struct EigenfunctionFactors {
    Matrix L_inv;
    Matrix U;
};

EigenfunctionFactors eigenfunction_factorized(const HessMatrix& x,
                                              const std::vector<double>& lambda);

} // namespace tpht
