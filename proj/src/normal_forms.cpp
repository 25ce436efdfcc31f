#include "tpht/normal_forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "tpht/errors.hpp"

namespace tpht {

namespace {

// Characteristic polynomials of all leading principal blocks, via expansion
// along the last row (valid for any lower-Hessenberg matrix):
//   p_k = (x - X_kk) p_{k-1} - sum_{j<k} X_kj (prod_{i=j..k-1} s_i) p_{j-1},
// s_i the superdiagonal entries. polys[k] has length k+1, low degree first.
std::vector<std::vector<double>> leading_charpolys(const HessMatrix& x) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> polys(n + 1);
    polys[0] = {1.0};
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& prev = polys[k - 1];
        std::vector<double> p(k + 1, 0.0);
        const double diag = x(k - 1, k - 1);
        for (std::size_t i = 0; i < k; ++i) {
            p[i + 1] += prev[i];
            p[i] -= diag * prev[i];
        }
        double prod = 1.0;
        for (std::size_t j = k - 1; j >= 1; --j) {
            prod *= x(j - 1, j);
            const double c = x(k - 1, j - 1) * prod;
            if (c != 0.0) {
                const auto& pj = polys[j - 1];
                for (std::size_t i = 0; i < j; ++i) p[i] -= c * pj[i];
            }
        }
        polys[k] = std::move(p);
    }
    return polys;
}

void require_unit_superdiagonal(const HessMatrix& x, const char* who) {
    if (!x.has_unit_superdiagonal())
        throw std::invalid_argument(std::string(who) + ": unit superdiagonal required");
}

} // namespace

std::vector<double> hessenberg_charpoly(const HessMatrix& x) {
    return leading_charpolys(x).back();
}

Matrix to_companion_L(const HessMatrix& x) {
    require_unit_superdiagonal(x, "to_companion_L");
    const std::size_t n = x.size();
    const auto polys = leading_charpolys(x);

    Matrix l1 = Matrix::identity(n);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = 0; i < k; ++i) l1(k, i) = polys[k][i];

    std::vector<double> char_coeffs(polys[n].begin(), polys[n].end() - 1);
    const HessMatrix cx = companion_matrix(char_coeffs);

    // L1^{-1} X L1 must be c_X; an unverifiable output is an error. The
    // residual is compared at the scale the conjugation is computed at
    // (||L1^{-1}|| ||X|| ||L1||), so an ill-conditioned but correct L1
    // verifies while a wrong one still lands many orders above the cutoff.
    const Matrix l1_inv = invert_unit_lower(l1);
    const Matrix conj = l1_inv * x.dense() * l1;
    const double res = frobenius_norm(conj - cx.dense());
    const double scale = std::max(1.0, frobenius_norm(x.dense())) *
                         std::max(1.0, frobenius_norm(l1) * frobenius_norm(l1_inv));
    if (res > 1e-8 * scale) {
        std::ostringstream msg;
        msg << "to_companion_L: conjugation residual " << res << " at scale " << scale;
        throw VerificationFailed(msg.str());
    }
    return l1;
}

Matrix companion_to_epsilon_L(const std::vector<double>& lambda) {
    return to_companion_L(epsilon_lambda(lambda));
}

Matrix epsilon_diagonalizer(const std::vector<double>& lambda) {
    const std::size_t n = lambda.size();
    if (n == 0) throw std::invalid_argument("epsilon_diagonalizer: empty spectrum");
    double max_abs_l = 0.0;
    for (double v : lambda) max_abs_l = std::max(max_abs_l, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(lambda[i] - lambda[j]) <= 1e-10 * std::max(1.0, max_abs_l))
                throw RepeatedEigenvalue("epsilon_diagonalizer: lambda_" + std::to_string(i + 1) +
                                         " and lambda_" + std::to_string(j + 1) + " coincide");

    Matrix u(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double prod = 1.0;
        u(0, j) = 1.0;
        for (std::size_t i = 1; i <= j; ++i) {
            prod *= lambda[j] - lambda[i - 1];
            u(i, j) = prod;
        }
    }

    const HessMatrix eps = epsilon_lambda(lambda);
    Matrix rhs = u;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) rhs(i, j) *= lambda[j];
    const double res = frobenius_norm(eps.dense() * u - rhs);
    const double scale = std::max(1.0, frobenius_norm(u) * (1.0 + max_abs_l));
    if (res > 1e-9 * scale)
        throw VerificationFailed("epsilon_diagonalizer: residual " + std::to_string(res));
    return u;
}

NormalFormBundle normal_form_bundle(const HessMatrix& x, const std::vector<double>& lambda) {
    if (lambda.size() != x.size())
        throw std::invalid_argument("normal_form_bundle: spectrum size mismatch");
    NormalFormBundle b;
    b.lambda = lambda;
    b.L1 = to_companion_L(x);
    b.L2 = companion_to_epsilon_L(lambda);
    b.L = b.L2 * invert_unit_lower(b.L1);
    b.U = epsilon_diagonalizer(lambda);
    return b;
}

EigenfunctionFactors eigenfunction_factorized(const HessMatrix& x,
                                              const std::vector<double>& lambda) {
    const std::size_t n = x.size();
    if (lambda.size() != n)
        throw std::invalid_argument("eigenfunction_factorized: spectrum size mismatch");

    // lambda must reproduce the characteristic coefficients of X.
    const std::vector<double> cx = hessenberg_charpoly(x);
    std::vector<double> cl{1.0};
    for (double lam : lambda) {
        std::vector<double> next(cl.size() + 1, 0.0);
        for (std::size_t i = 0; i < cl.size(); ++i) {
            next[i + 1] += cl[i];
            next[i] -= lam * cl[i];
        }
        cl = std::move(next);
    }
    double coeff_scale = 1.0;
    for (std::size_t i = 0; i <= n; ++i)
        coeff_scale = std::max({coeff_scale, std::abs(cx[i]), std::abs(cl[i])});
    for (std::size_t i = 0; i <= n; ++i)
        if (std::abs(cx[i] - cl[i]) > 1e-6 * coeff_scale)
            throw SpectrumMismatch("eigenfunction_factorized: lambda does not match spec(X)");

    const NormalFormBundle b = normal_form_bundle(x, lambda);
    EigenfunctionFactors out;
    out.L_inv = b.L1 * invert_unit_lower(b.L2);
    out.U = b.U;

    const Matrix e = out.L_inv * out.U;
    Matrix rhs = e;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) rhs(i, j) *= lambda[j];
    const double res = frobenius_norm(x.dense() * e - rhs);
    const double scale = std::max(1.0, frobenius_norm(x.dense())) *
                         std::max(1.0, frobenius_norm(out.L_inv) * frobenius_norm(out.U));
    if (res > 1e-7 * scale) {
        std::ostringstream msg;
        msg << "eigenfunction_factorized: residual " << res << " at scale " << scale;
        throw VerificationFailed(msg.str());
    }
    return out;
}

} // namespace tpht
