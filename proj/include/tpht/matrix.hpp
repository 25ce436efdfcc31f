#pragma once

#include <cstddef>
#include <vector>

namespace tpht {

/// Dense row-major real matrix. Value semantics throughout; all sizes in this
/// project are small enough (n <= 4000) that dense storage is the right call.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);
double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double one_norm(const Matrix& a);

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x);

/// Dense LU with partial pivoting, used for linear solves (inverse iteration,
/// Schur complements, residual checks). Singularity is reported via the flag;
/// callers decide whether it is an error.
struct PivotedLU {
    Matrix lu;                      // L below diagonal (unit), U on and above
    std::vector<std::size_t> perm;  // row permutation applied to the input
    int sign = 1;
    bool singular = false;
};

PivotedLU plu_factor(Matrix a);
std::vector<double> plu_solve(const PivotedLU& f, std::vector<double> b);
Matrix plu_solve(const PivotedLU& f, const Matrix& b);

/// Determinant by fraction-free (Bareiss) elimination with partial pivoting.
/// Exact for integer-valued inputs, well-scaled otherwise; minors here are
/// small so cost is irrelevant.
double determinant(const Matrix& a);

/// Inverse of a unit lower triangular matrix by forward substitution.
Matrix invert_unit_lower(const Matrix& l);

} // namespace tpht
