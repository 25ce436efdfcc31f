#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tpht/matrices.hpp"
#include "tpht/matrix.hpp"

namespace tpht {

enum class LUMethod { closed_form, doolittle };

/// L lower unipotent, U upper triangular (upper bidiagonal with unit
/// superdiagonal for TPHT inputs via the closed form).
struct LUFactors {
    Matrix L, U;
    LUMethod method = LUMethod::doolittle;
};

/// Closed-form LU of a Hessenberg-Toeplitz matrix with unit superdiagonal:
///   L_ij = tau^init_{{i} u [j-1]} / tau^init_{[j]},   U_ii = tau^init_{[i]} / tau^init_{[i-1]},
/// with U's superdiagonal exactly 1. Throws ZeroLeadingMinor when some
/// tau^init_{[k]} vanishes (LU breakdown, e.g. all-zero roots).
/// With assume_tpht set, the Toeplitz structure of the input is validated.
LUFactors lu_closed_form(const HessMatrix& t, bool assume_tpht = true);

/// Standard no-pivot elimination (independent oracle for the closed form).
/// Throws ZeroPivot on breakdown.
LUFactors lu_doolittle(const HessMatrix& a);

/// One step of the isospectral LU map: A = LU -> UL.
HessMatrix lu_dynamics_step(const HessMatrix& a);

/// Trajectory [A, A^(1), ..., A^(steps)] of the LU map.
std::vector<HessMatrix> lu_dynamics_iterate(const HessMatrix& a, int steps);

/// A22 - A21 A11^{-1} A12 for the 2x2 block split after row/column k.
/// Throws SingularBlock when the leading k x k block is singular.
Matrix schur_complement(const HessMatrix& a, std::size_t k);

/// Eigenvalues of the depth-k chop: roots of det((A - xI) with the first k
/// rows and last k columns deleted), computed as the spectrum of the Schur
/// complement of the bottom-left k x k corner block in that deleted matrix.
/// These are the Ritz-value constants of motion of the LU dynamics.
/// Requires 2k < n and an invertible corner block (SingularBlock otherwise).
std::vector<std::complex<double>> chop_spectrum(const HessMatrix& a, std::size_t k);

/// 3x3 Lusztig bidiagonal factorization of the lower factor:
/// L = (I + alpha f_1)(I + beta f_2)(I + gamma f_1) with all parameters
/// positive, U from the closed-form LU.
struct LusztigFactors3 {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
    Matrix U;
};

LusztigFactors3 lusztig_factor_3(const HessMatrix& t);

} // namespace tpht
