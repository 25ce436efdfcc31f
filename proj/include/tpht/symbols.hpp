#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tpht {

/// Factored Hessenberg-type symbol phi(z) = z^{-1} prod_l (1 + a_l z).
///
/// Both representations are stored eagerly: `roots` holds the a_l (the source
/// of truth for evaluation on the circle) and `coeffs` the expanded x_0..x_m
/// (the source of truth for matrix construction), with x_k the k-th elementary
/// symmetric polynomial of the roots and x_0 = 1.
struct Symbol {
    std::vector<double> roots;
    std::vector<double> coeffs;

    static Symbol from_roots(std::vector<double> roots);

    /// Number of roots m; the matrix band is m+1 wide.
    std::size_t order() const { return roots.size(); }
};

/// (e_0, ..., e_m) by iterated multiplication of the linear factors (1 + a z).
/// Empty input gives (1).
std::vector<double> elementary_symmetric(const std::vector<double>& roots);

/// phi(e^{i theta}) evaluated in factored form to limit rounding growth.
std::complex<double> symbol_eval(const Symbol& s, double theta);

/// Coefficients of (sum_k c_k z^k)^p modulo z^{cap+1}, by repeated truncated
/// convolution. Requires p >= 1.
std::vector<double> poly_power_truncated(const std::vector<double>& coeffs, int p,
                                         std::size_t degree_cap);

/// Truncated product of two coefficient vectors (degree capped at `cap`).
std::vector<double> poly_mul_truncated(const std::vector<double>& a,
                                       const std::vector<double>& b, std::size_t cap);

} // namespace tpht
