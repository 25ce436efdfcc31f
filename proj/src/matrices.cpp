#include "tpht/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tpht {

HessMatrix::HessMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::invalid_argument("HessMatrix: square input required");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = i + 2; j < m_.cols(); ++j)
            if (m_(i, j) != 0.0)
                throw std::invalid_argument("HessMatrix: nonzero entry above the superdiagonal");
}

void HessMatrix::set(std::size_t i, std::size_t j, double v) {
    if (j > i + 1) throw std::invalid_argument("HessMatrix::set: position above the superdiagonal");
    m_(i, j) = v;
}

std::size_t HessMatrix::lower_bandwidth() const {
    std::size_t band = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m_(i, j) != 0.0) { band = std::max(band, i - j); break; }
    return band;
}

bool HessMatrix::has_unit_superdiagonal(double tol) const {
    for (std::size_t i = 0; i + 1 < size(); ++i)
        if (std::abs(m_(i, i + 1) - 1.0) > tol) return false;
    return true;
}

HessMatrix tpht_truncation(const Symbol& s, std::size_t n) {
    if (n < 1) throw std::invalid_argument("tpht_truncation: n >= 1 required");
    const std::size_t m = s.order();
    Matrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) t(i, i + 1) = 1.0;
        for (std::size_t j = (i + 1 >= m ? i + 1 - m : 0); j <= i; ++j) {
            const std::size_t k = i - j + 1;
            if (k <= m) t(i, j) = s.coeffs[k];
        }
    }
    return HessMatrix(std::move(t));
}

HessMatrix companion_matrix(const std::vector<double>& char_coeffs) {
    const std::size_t n = char_coeffs.size();
    if (n == 0) throw std::invalid_argument("companion_matrix: empty coefficient vector");
    Matrix c(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1.0;
    for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = -char_coeffs[j];
    return HessMatrix(std::move(c));
}

HessMatrix epsilon_lambda(const std::vector<double>& lambda) {
    const std::size_t n = lambda.size();
    if (n == 0) throw std::invalid_argument("epsilon_lambda: empty spectrum");
    Matrix e(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        e(i, i) = lambda[i];
        if (i + 1 < n) e(i, i + 1) = 1.0;
    }
    return HessMatrix(std::move(e));
}

double tau_init(const HessMatrix& a, const MinorIndex& s) {
    if (s.empty()) return 1.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) throw std::invalid_argument("tau_init: index set must be sorted");
    if (s.front() < 1 || s.back() > n) throw std::invalid_argument("tau_init: row index out of range");
    const std::size_t k = s.size();
    Matrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(s[i] - 1, j);
    return determinant(sub);
}

namespace {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t pos = k; pos-- > 0;) {
        if (idx[pos] < n - k + pos) {
            ++idx[pos];
            for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
            return true;
        }
    }
    return false;
}

// A minor counts as negative only below -1e-10 relative to its Hadamard
// bound: exactly-zero minors of k x k submatrices with entries ~40 carry
// elimination rounding around 1e-4 in absolute terms, so a flat cutoff
// misclassifies genuine TP inputs.
double hadamard_bound(const Matrix& sub) {
    double bound = 1.0;
    for (std::size_t i = 0; i < sub.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < sub.cols(); ++j) row += sub(i, j) * sub(i, j);
        bound *= std::sqrt(row);
    }
    return bound;
}

TPReport exhaustive_tp(const HessMatrix& a) {
    const std::size_t n = a.size();
    TPReport rep;
    rep.method = TPMode::exhaustive;
    Matrix sub;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> rows(k), cols(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                sub = Matrix(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
                const double d = determinant(sub);
                if (d < -kTPTolerance * std::max(1.0, hadamard_bound(sub))) {
                    rep.is_tp = false;
                    TPWitness w;
                    w.value = d;
                    for (std::size_t i = 0; i < k; ++i) {
                        w.rows.push_back(rows[i] + 1);
                        w.cols.push_back(cols[i] + 1);
                    }
                    rep.witness = std::move(w);
                    return rep;
                }
            } while (next_combination(cols, n));
        } while (next_combination(rows, n));
    }
    rep.is_tp = true;
    return rep;
}

// One Neville pass: zero out the strict lower triangle with adjacent-row
// operations, bottom-up in each column. Returns false when a required
// elimination has a zero directly above a nonzero (certificate failure);
// otherwise reports the smallest multiplier/pivot seen.
bool neville_pass(Matrix m, double tiny, double& min_value) {
    const std::size_t n = m.rows();
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (std::size_t i = n - 1; i > j; --i) {
            if (std::abs(m(i, j)) <= tiny) continue;
            if (std::abs(m(i - 1, j)) <= tiny) return false;
            const double mult = m(i, j) / m(i - 1, j);
            min_value = std::min(min_value, mult);
            for (std::size_t q = j; q < n; ++q) m(i, q) -= mult * m(i - 1, q);
            m(i, j) = 0.0;
        }
    }
    for (std::size_t i = 0; i < n; ++i) min_value = std::min(min_value, m(i, i));
    return true;
}

TPReport neville_tp(const HessMatrix& a) {
    TPReport rep;
    rep.method = TPMode::neville;
    const double scale = std::max(1.0, max_abs(a.dense()));
    const double tiny = 1e-13 * scale;
    double min_value = 0.0;
    const bool lower_ok = neville_pass(a.dense(), tiny, min_value);
    const bool upper_ok = lower_ok && neville_pass(transpose(a.dense()), tiny, min_value);
    rep.is_tp = lower_ok && upper_ok && min_value >= -kTPTolerance * scale;
    return rep;
}

} // namespace

TPReport is_totally_positive(const HessMatrix& a, TPMode mode) {
    if (mode == TPMode::exhaustive) {
        if (a.size() > 10)
            throw std::invalid_argument("is_totally_positive: exhaustive mode capped at n = 10, got n = " +
                                        std::to_string(a.size()));
        return exhaustive_tp(a);
    }
    return neville_tp(a);
}

double one_norm_bound(const Symbol& s, std::size_t n) {
    if (n < 1) throw std::invalid_argument("one_norm_bound: n >= 1 required");
    const std::size_t m = s.order();
    double best = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t k0 = (j >= 2) ? 0 : 1;
        const std::size_t k1 = std::min(m, n - j + 1);
        double sum = 0.0;
        for (std::size_t k = k0; k <= k1; ++k) sum += std::abs(s.coeffs[k]);
        best = std::max(best, sum);
    }
    return best;
}

} // namespace tpht
