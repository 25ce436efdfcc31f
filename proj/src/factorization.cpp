#include "tpht/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tpht/errors.hpp"
#include "tpht/spectra.hpp"

namespace tpht {

namespace {

void require_unit_superdiagonal(const HessMatrix& t, const char* who) {
    if (!t.has_unit_superdiagonal())
        throw std::invalid_argument(std::string(who) + ": unit superdiagonal required");
}

void require_toeplitz(const HessMatrix& t, const char* who) {
    const std::size_t n = t.size();
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            if (std::abs(t(i, j) - t(i - 1, j - 1)) > 1e-12 * (1.0 + std::abs(t(i, j))))
                throw std::invalid_argument(std::string(who) + ": Toeplitz structure required");
}

} // namespace

LUFactors lu_closed_form(const HessMatrix& t, bool assume_tpht) {
    require_unit_superdiagonal(t, "lu_closed_form");
    if (assume_tpht) require_toeplitz(t, "lu_closed_form");
    const std::size_t n = t.size();

    // Leading initial minors tau_[k], k = 0..n. Breakdown means a structural
    // zero (or full underflow): for positive roots these minors are strictly
    // positive, and graded cases like a^k for tiny a are still legitimate.
    std::vector<double> lead(n + 1, 1.0);
    for (std::size_t k = 1; k <= n; ++k) {
        MinorIndex s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = i + 1;
        lead[k] = tau_init(t, s);
        if (lead[k] == 0.0)
            throw ZeroLeadingMinor("lu_closed_form: tau_[" + std::to_string(k) + "] vanishes");
    }

    LUFactors f;
    f.method = LUMethod::closed_form;
    f.L = Matrix(n, n);
    f.U = Matrix(n, n);
    for (std::size_t j = 1; j <= n; ++j) {
        f.L(j - 1, j - 1) = 1.0;
        for (std::size_t i = j + 1; i <= n; ++i) {
            MinorIndex s;
            for (std::size_t q = 1; q < j; ++q) s.push_back(q);
            s.push_back(i);
            f.L(i - 1, j - 1) = tau_init(t, s) / lead[j];
        }
    }
    for (std::size_t i = 1; i <= n; ++i) {
        f.U(i - 1, i - 1) = lead[i] / lead[i - 1];
        if (i < n) f.U(i - 1, i) = 1.0;
    }
    return f;
}

LUFactors lu_doolittle(const HessMatrix& a) {
    const std::size_t n = a.size();
    LUFactors f;
    f.method = LUMethod::doolittle;
    f.L = Matrix::identity(n);
    Matrix u = a.dense();
    const double tiny = 1e-13 * std::max(1.0, max_abs(u));
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(u(k, k)) <= tiny && k + 1 < n)
            throw ZeroPivot("lu_doolittle: zero pivot at step " + std::to_string(k + 1));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double m = u(i, k) / u(k, k);
            f.L(i, k) = m;
            u(i, k) = 0.0;
            if (m == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) u(i, j) -= m * u(k, j);
        }
    }
    f.U = std::move(u);
    return f;
}

HessMatrix lu_dynamics_step(const HessMatrix& a) {
    const LUFactors f = lu_doolittle(a);
    return HessMatrix(f.U * f.L);
}

std::vector<HessMatrix> lu_dynamics_iterate(const HessMatrix& a, int steps) {
    if (steps < 0) throw std::invalid_argument("lu_dynamics_iterate: steps >= 0 required");
    std::vector<HessMatrix> traj;
    traj.reserve(static_cast<std::size_t>(steps) + 1);
    traj.push_back(a);
    for (int k = 0; k < steps; ++k) traj.push_back(lu_dynamics_step(traj.back()));
    return traj;
}

Matrix schur_complement(const HessMatrix& a, std::size_t k) {
    const std::size_t n = a.size();
    if (k < 1 || k >= n) throw std::invalid_argument("schur_complement: split index out of range");
    Matrix a11(k, k), a12(k, n - k), a21(n - k, k), a22(n - k, n - k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double v = a(i, j);
            if (i < k && j < k) a11(i, j) = v;
            else if (i < k) a12(i, j - k) = v;
            else if (j < k) a21(i - k, j) = v;
            else a22(i - k, j - k) = v;
        }
    const PivotedLU f = plu_factor(std::move(a11));
    if (f.singular) throw SingularBlock("schur_complement: leading block singular");
    return a22 - a21 * plu_solve(f, a12);
}

std::vector<std::complex<double>> chop_spectrum(const HessMatrix& a, std::size_t k) {
    const std::size_t n = a.size();
    if (k < 1 || 2 * k >= n) throw std::invalid_argument("chop_spectrum: need 1 <= k < n/2");
    const std::size_t mid = n - 2 * k;
    Matrix corner(k, k), left(mid, k), bottom(k, mid), center(mid, mid);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) corner(i, j) = a(n - k + i, j);
    for (std::size_t i = 0; i < mid; ++i)
        for (std::size_t j = 0; j < k; ++j) left(i, j) = a(k + i, j);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < mid; ++j) bottom(i, j) = a(n - k + i, k + j);
    for (std::size_t i = 0; i < mid; ++i)
        for (std::size_t j = 0; j < mid; ++j) center(i, j) = a(k + i, k + j);
    const PivotedLU f = plu_factor(std::move(corner));
    if (f.singular) throw SingularBlock("chop_spectrum: corner block singular");
    return dense_eigenvalues(center - left * plu_solve(f, bottom));
}

LusztigFactors3 lusztig_factor_3(const HessMatrix& t) {
    if (t.size() != 3) throw std::invalid_argument("lusztig_factor_3: 3x3 input required");
    const LUFactors f = lu_closed_form(t, true);
    const double l21 = f.L(1, 0), l31 = f.L(2, 0), l32 = f.L(2, 1);
    if (l32 <= 0.0)
        throw DegenerateFactorization("lusztig_factor_3: L32 <= 0");
    LusztigFactors3 out;
    out.beta = l32;
    out.gamma = l31 / l32;
    out.alpha = l21 - out.gamma;
    out.U = f.U;
    if (out.alpha <= 0.0 || out.gamma <= 0.0)
        throw DegenerateFactorization("lusztig_factor_3: non-positive parameter");
    return out;
}

} // namespace tpht
