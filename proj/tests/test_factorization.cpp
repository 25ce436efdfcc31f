#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "tpht/errors.hpp"
#include "tpht/factorization.hpp"
#include "tpht/matrices.hpp"
#include "tpht/normal_forms.hpp"
#include "tpht/rng.hpp"
#include "tpht/spectra.hpp"

using namespace tpht;

namespace {

Matrix dense_from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

std::vector<double> random_roots(RngStream& rng, std::size_t m, double lo, double hi) {
    std::vector<double> r(m);
    for (double& x : r) x = lo + (hi - lo) * rng.next_uniform();
    return r;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

std::vector<double> sorted_reals(std::vector<std::complex<double>> v) {
    std::vector<double> out;
    for (const auto& z : v) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("lu_closed_form on the m=2 tridiagonal, against the Doolittle oracle") {
    const HessMatrix t = tpht_truncation(Symbol::from_roots({1, 1}), 3);
    const LUFactors f = lu_closed_form(t);
    CHECK(f.method == LUMethod::closed_form);
    CHECK(f.L(1, 0) == doctest::Approx(0.5));
    CHECK(f.L(2, 0) == doctest::Approx(0.0));
    CHECK(f.L(2, 1) == doctest::Approx(2.0 / 3.0));
    CHECK(f.U(0, 0) == doctest::Approx(2.0));
    CHECK(f.U(1, 1) == doctest::Approx(1.5));
    CHECK(f.U(2, 2) == doctest::Approx(4.0 / 3.0));

    const LUFactors oracle = lu_doolittle(t);
    CHECK(frobenius_norm(f.L - oracle.L) < 1e-12);
    CHECK(frobenius_norm(f.U - oracle.U) < 1e-12);
}

TEST_CASE("lu_closed_form matches the symbolic 3x3 entries") {
    // roots (1,1,1): (a1, a2, a3) = (3, 3, 1)
    const HessMatrix t = tpht_truncation(Symbol::from_roots({1, 1, 1}), 3);
    const double a1 = 3, a2 = 3, a3 = 1;
    const LUFactors f = lu_closed_form(t);
    CHECK(f.L(1, 0) == doctest::Approx(a2 / a1));
    CHECK(f.L(2, 0) == doctest::Approx(a3 / a1));
    CHECK(f.L(2, 1) == doctest::Approx((a1 * a2 - a3) / (a1 * a1 - a2)));
    CHECK(f.U(0, 0) == doctest::Approx(a1));
    CHECK(f.U(1, 1) == doctest::Approx((a1 * a1 - a2) / a1));
    // tau_[3]/tau_[2] = (a1^3 - 2 a1 a2 + a3)/(a1^2 - a2)
    CHECK(f.U(2, 2) ==
          doctest::Approx((a1 * a1 * a1 - 2 * a1 * a2 + a3) / (a1 * a1 - a2)));
    // reconstruction pins the sign: 5/3, not 7/6-adjacent variants
    CHECK(frobenius_norm(f.L * f.U - t.dense()) < 1e-12);
}

TEST_CASE("lu_closed_form breaks down on zero roots") {
    const HessMatrix shift = tpht_truncation(Symbol::from_roots({}), 4);
    CHECK_THROWS_AS(lu_closed_form(shift), ZeroLeadingMinor);
}

TEST_CASE("lu_doolittle basics") {
    const HessMatrix a{dense_from_rows({{2, 1}, {1, 2}})};
    const LUFactors f = lu_doolittle(a);
    CHECK(f.L.data() == std::vector<double>{1, 0, 0.5, 1});
    CHECK(f.U(0, 0) == doctest::Approx(2.0));
    CHECK(f.U(0, 1) == doctest::Approx(1.0));
    CHECK(f.U(1, 0) == 0.0);
    CHECK(f.U(1, 1) == doctest::Approx(1.5));

    const HessMatrix id{Matrix::identity(3)};
    const LUFactors fid = lu_doolittle(id);
    CHECK(frobenius_norm(fid.L - Matrix::identity(3)) == 0.0);
    CHECK(frobenius_norm(fid.U - Matrix::identity(3)) == 0.0);

    const HessMatrix swap{dense_from_rows({{0, 1}, {1, 0}})};
    CHECK_THROWS_AS(lu_doolittle(swap), ZeroPivot);
}

TEST_CASE("oracle equivalence: closed form vs Doolittle on random TPHT") {
    RngStream rng(17, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 6;
        const std::size_t n = 1 + rng.next_u64() % 12;
        const HessMatrix t = tpht_truncation(
            Symbol::from_roots(random_roots(rng, m, 1e-9, 2.0)), n);
        const LUFactors a = lu_closed_form(t);
        const LUFactors b = lu_doolittle(t);
        const double scale = std::max(max_abs(a.L), max_abs(a.U));
        CHECK(max_abs(a.L - b.L) <= 1e-9 * scale);
        CHECK(max_abs(a.U - b.U) <= 1e-9 * scale);
        // U strictly upper-bidiagonal with exact unit superdiagonal
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (j == i + 1)
                    CHECK(a.U(i, j) == 1.0);
                else
                    CHECK(a.U(i, j) == 0.0);
            }
        CHECK(frobenius_norm(a.L * a.U - t.dense()) <=
              1e-10 * std::max(1.0, frobenius_norm(t.dense())));
    }
}

TEST_CASE("nesting: leading blocks of L and U factor the leading blocks of T") {
    RngStream rng(19, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 8;
        const HessMatrix t = tpht_truncation(
            Symbol::from_roots(random_roots(rng, 1 + rng.next_u64() % 5, 0.1, 2.0)), n);
        const LUFactors f = lu_closed_form(t);
        for (std::size_t k = 1; k <= n; ++k) {
            Matrix lk(k, k), uk(k, k), tk(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    lk(i, j) = f.L(i, j);
                    uk(i, j) = f.U(i, j);
                    tk(i, j) = t(i, j);
                }
            CHECK(frobenius_norm(lk * uk - tk) <= 1e-10 * std::max(1.0, frobenius_norm(tk)));
        }
    }
}

TEST_CASE("lu_dynamics_step") {
    // already-upper inputs are fixed points
    const HessMatrix b{dense_from_rows({{3, 1, 0}, {0, 2, 1}, {0, 0, 1}})};
    CHECK(frobenius_norm(lu_dynamics_step(b).dense() - b.dense()) < 1e-14);

    const HessMatrix a{dense_from_rows({{2, 1}, {1, 2}})};
    const HessMatrix next = lu_dynamics_step(a);
    CHECK(next(0, 0) == doctest::Approx(2.5));
    CHECK(next(0, 1) == doctest::Approx(1.0));
    CHECK(next(1, 0) == doctest::Approx(0.75));
    CHECK(next(1, 1) == doctest::Approx(1.5));

    // isospectral on the all-ones 5x5
    const HessMatrix t5 = tpht_truncation(Symbol::from_roots(std::vector<double>(5, 1.0)), 5);
    const auto ev0 = eigen_hessenberg(t5).eigenvalues;
    const auto ev1 = eigen_hessenberg(lu_dynamics_step(t5)).eigenvalues;
    const std::vector<double> reference{11.0024, 7.9317, 4.3187, 1.5285, 0.2187};
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(std::abs(ev1[k] - ev0[k]) < 1e-8);
        CHECK(std::abs(ev1[k] - reference[k]) < 5e-4);
    }
}

TEST_CASE("lu_dynamics_iterate") {
    const HessMatrix a{dense_from_rows({{2, 1}, {1, 2}})};
    CHECK(lu_dynamics_iterate(a, 0).size() == 1);

    const auto traj = lu_dynamics_iterate(a, 30);
    const HessMatrix& last = traj.back();
    CHECK(std::abs(last(1, 0)) < 1e-6);
    CHECK(last(0, 0) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(last(1, 1) == doctest::Approx(1.0).epsilon(1e-9));

    const HessMatrix t5 = tpht_truncation(Symbol::from_roots(std::vector<double>(5, 1.0)), 5);
    for (const HessMatrix& step : lu_dynamics_iterate(t5, 10))
        CHECK(is_totally_positive(step, TPMode::exhaustive).is_tp);
}

TEST_CASE("characteristic polynomial is preserved by the LU step") {
    RngStream rng(29, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 9;
        const HessMatrix a = tpht_truncation(
            Symbol::from_roots(random_roots(rng, 1 + rng.next_u64() % 4, 0.1, 1.5)), n);
        const auto c0 = hessenberg_charpoly(a);
        const auto c1 = hessenberg_charpoly(lu_dynamics_step(a));
        double scale = 1.0;
        for (double c : c0) scale = std::max(scale, std::abs(c));
        for (std::size_t i = 0; i < c0.size(); ++i)
            CHECK(std::abs(c0[i] - c1[i]) <= 1e-8 * scale);
    }
}

TEST_CASE("schur_complement") {
    const HessMatrix id{Matrix::identity(4)};
    CHECK(frobenius_norm(schur_complement(id, 2) - Matrix::identity(2)) == 0.0);

    const HessMatrix a{dense_from_rows({{2, 1}, {1, 2}})};
    const Matrix s = schur_complement(a, 1);
    CHECK(s.rows() == 1);
    CHECK(s(0, 0) == doctest::Approx(1.5));

    // TP inputs have TP Schur complements
    RngStream rng(37, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + rng.next_u64() % 4;
        const HessMatrix t = tpht_truncation(
            Symbol::from_roots(random_roots(rng, n, 0.2, 1.5)), n);
        for (std::size_t k = 1; k < n; ++k) {
            const Matrix sc = schur_complement(t, k);
            HessMatrix wrapped{sc};  // Schur complements of Hessenberg stay Hessenberg
            CHECK(is_totally_positive(wrapped, TPMode::exhaustive).is_tp);
        }
    }

    const HessMatrix singular{dense_from_rows({{0, 1}, {1, 0}})};
    CHECK_THROWS_AS(schur_complement(singular, 1), SingularBlock);
}

TEST_CASE("chop spectra are constants of motion of the LU dynamics") {
    RngStream rng(41, 0);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 5 + rng.next_u64() % 2;
        const HessMatrix t = tpht_truncation(
            Symbol::from_roots(random_roots(rng, n, 0.1, 2.0)), n);
        for (std::size_t k = 1; 2 * k < n; ++k) {
            const auto base = sorted_reals(chop_spectrum(t, k));
            HessMatrix cur = t;
            for (int step = 0; step < 5; ++step) {
                cur = lu_dynamics_step(cur);
                const auto now = sorted_reals(chop_spectrum(cur, k));
                REQUIRE(now.size() == base.size());
                for (std::size_t i = 0; i < base.size(); ++i)
                    CHECK(std::abs(now[i] - base[i]) <=
                          1e-6 * std::max(1.0, std::abs(base[i])));
            }
        }
    }
}

TEST_CASE("plain block Schur complement eigenvalues are NOT invariant") {
    // Documents why chop_spectrum exists: the naive reading fails.
    const HessMatrix t = tpht_truncation(Symbol::from_roots({0.9, 1.3, 0.4}), 5);
    const auto before = sorted_reals(dense_eigenvalues(schur_complement(t, 1)));
    const auto after =
        sorted_reals(dense_eigenvalues(schur_complement(lu_dynamics_step(t), 1)));
    double drift = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i)
        drift = std::max(drift, std::abs(before[i] - after[i]));
    CHECK(drift > 1e-3);
}

TEST_CASE("lusztig_factor_3") {
    const HessMatrix t = tpht_truncation(Symbol::from_roots({1, 1, 1}), 3);
    const LusztigFactors3 f = lusztig_factor_3(t);
    CHECK(f.alpha == doctest::Approx(0.75));
    CHECK(f.beta == doctest::Approx(4.0 / 3.0));
    CHECK(f.gamma == doctest::Approx(0.25));

    // third-factor closed form a3 (a1^2 - a2) / (a1 (a1 a2 - a3))
    const double a1 = 3, a2 = 3, a3 = 1;
    CHECK(f.gamma == doctest::Approx(a3 * (a1 * a1 - a2) / (a1 * (a1 * a2 - a3))));

    // reconstruction (I + alpha f1)(I + beta f2)(I + gamma f1) U = T
    Matrix f1a = Matrix::identity(3), f2 = Matrix::identity(3), f1b = Matrix::identity(3);
    f1a(1, 0) = f.alpha;
    f2(2, 1) = f.beta;
    f1b(1, 0) = f.gamma;
    CHECK(frobenius_norm(f1a * f2 * f1b * f.U - t.dense()) < 1e-10);

    // a1 a2 = a3 makes L32 vanish
    const HessMatrix degenerate{dense_from_rows({{2, 1, 0}, {1, 2, 1}, {2, 1, 2}})};
    CHECK_THROWS_AS(lusztig_factor_3(degenerate), DegenerateFactorization);
}

TEST_CASE("ritz invariance fails gracefully on too-deep chops") {
    const HessMatrix t = tpht_truncation(Symbol::from_roots({1, 1, 1}), 4);
    CHECK_THROWS_AS(chop_spectrum(t, 2), std::invalid_argument);
}
