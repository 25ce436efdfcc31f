#include <doctest.h>

#include <cmath>
#include <vector>

#include "tpht/matrices.hpp"
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

HessMatrix ones_matrix(std::size_t n) {
    return tpht_truncation(Symbol::from_roots(std::vector<double>(n, 1.0)), n);
}

std::vector<double> random_roots(RngStream& rng, std::size_t m, double lo, double hi) {
    std::vector<double> r(m);
    for (double& x : r) x = lo + (hi - lo) * rng.next_uniform();
    return r;
}

} // namespace

TEST_CASE("tpht_truncation: small cases from the symbol") {
    const HessMatrix t2 = tpht_truncation(Symbol::from_roots({1, 1}), 2);
    CHECK(t2.dense().data() == std::vector<double>{2, 1, 1, 2});

    const HessMatrix t5 = ones_matrix(5);
    const Matrix expect = dense_from_rows({{5, 1, 0, 0, 0},
                                           {10, 5, 1, 0, 0},
                                           {10, 10, 5, 1, 0},
                                           {5, 10, 10, 5, 1},
                                           {1, 5, 10, 10, 5}});
    CHECK(frobenius_norm(t5.dense() - expect) == 0.0);

    const HessMatrix shift = tpht_truncation(Symbol::from_roots({}), 3);
    const Matrix expect_shift = dense_from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(frobenius_norm(shift.dense() - expect_shift) == 0.0);
}

TEST_CASE("companion_matrix") {
    // x^2 - 4x + 3 = (x-1)(x-3): c = (3, -4)
    const HessMatrix c = companion_matrix({3, -4});
    CHECK(c.dense().data() == std::vector<double>{0, 1, -3, 4});

    const HessMatrix c1 = companion_matrix({-5});
    CHECK(c1(0, 0) == 5.0);

    const HessMatrix c3 = companion_matrix({0, 0, 0});
    CHECK(c3.dense().data() == std::vector<double>{0, 1, 0, 0, 0, 1, 0, 0, 0});
}

TEST_CASE("epsilon_lambda") {
    const HessMatrix e = epsilon_lambda({1, 2});
    CHECK(e.dense().data() == std::vector<double>{1, 1, 0, 2});
    const HessMatrix e2 = epsilon_lambda({3, 1});
    CHECK(e2.dense().data() == std::vector<double>{3, 1, 0, 1});
    const HessMatrix nil = epsilon_lambda({0, 0, 0});
    CHECK(nil.dense().data() == std::vector<double>{0, 1, 0, 0, 0, 1, 0, 0, 0});
}

TEST_CASE("tau_init on the all-ones 5x5 matrix") {
    const HessMatrix t5 = ones_matrix(5);
    CHECK(tau_init(t5, {}) == 1.0);
    CHECK(tau_init(t5, {1}) == 5.0);
    CHECK(tau_init(t5, {1, 2}) == doctest::Approx(15.0));  // det [[5,1],[10,5]]
}

TEST_CASE("tau_init reproduces leading principal minors") {
    RngStream rng(5, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 4;
        const std::size_t n = 2 + rng.next_u64() % 6;
        const HessMatrix a = tpht_truncation(Symbol::from_roots(random_roots(rng, m, 0.1, 2.0)), n);
        for (std::size_t k = 1; k <= n; ++k) {
            MinorIndex s(k);
            for (std::size_t i = 0; i < k; ++i) s[i] = i + 1;
            Matrix block(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) block(i, j) = a(i, j);
            const double oracle = determinant(block);
            CHECK(tau_init(a, s) ==
                  doctest::Approx(oracle).epsilon(1e-10));
        }
    }
}

TEST_CASE("is_totally_positive: exhaustive") {
    const TPReport ones = is_totally_positive(ones_matrix(5), TPMode::exhaustive);
    CHECK(ones.is_tp);
    CHECK_FALSE(ones.witness.has_value());  // witness only on exhaustive failures

    const HessMatrix bad{dense_from_rows({{1, 2}, {3, 4}})};
    const TPReport rep = is_totally_positive(bad, TPMode::exhaustive);
    CHECK_FALSE(rep.is_tp);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->rows == std::vector<std::size_t>{1, 2});
    CHECK(rep.witness->cols == std::vector<std::size_t>{1, 2});
    CHECK(rep.witness->value == doctest::Approx(-2.0));

    const HessMatrix id{Matrix::identity(3)};
    CHECK(is_totally_positive(id, TPMode::exhaustive).is_tp);
    CHECK(is_totally_positive(id, TPMode::neville).is_tp);
}

TEST_CASE("is_totally_positive: exhaustive guard at n > 10") {
    CHECK_THROWS_AS(is_totally_positive(ones_matrix(11), TPMode::exhaustive),
                    std::invalid_argument);
}

TEST_CASE("random TPHT truncations are TP (exhaustive, 200 draws)") {
    RngStream rng(7, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 5;
        const std::size_t n = 1 + rng.next_u64() % 8;
        const HessMatrix a = tpht_truncation(Symbol::from_roots(random_roots(rng, m, 0.0, 2.0)), n);
        CHECK(is_totally_positive(a, TPMode::exhaustive).is_tp);
    }
}

TEST_CASE("neville mode agrees with exhaustive on TP and non-TP inputs") {
    RngStream rng(9, 0);
    int non_tp_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng.next_u64() % 7;
        HessMatrix a = tpht_truncation(
            Symbol::from_roots(random_roots(rng, 1 + rng.next_u64() % 4, 0.05, 2.0)), n);
        if (trial % 2 == 1) {
            // break positivity somewhere in the lower triangle
            const std::size_t i = 1 + rng.next_u64() % (n - 1);
            const std::size_t j = rng.next_u64() % i;
            a.set(i, j, a(i, j) - 2.0 - rng.next_uniform());
        }
        const TPReport ex = is_totally_positive(a, TPMode::exhaustive);
        const TPReport nev = is_totally_positive(a, TPMode::neville);
        CHECK(ex.is_tp == nev.is_tp);
        CHECK_FALSE(nev.witness.has_value());
        if (!ex.is_tp) ++non_tp_seen;
    }
    CHECK(non_tp_seen > 20);
}

TEST_CASE("one_norm_bound") {
    CHECK(one_norm_bound(Symbol::from_roots({1, 1, 1}), 10) == doctest::Approx(8.0));
    CHECK(one_norm_bound(Symbol::from_roots(std::vector<double>(8, 1.0)), 4000) ==
          doctest::Approx(256.0));
    CHECK(one_norm_bound(Symbol::from_roots({2, 3}), 5) == doctest::Approx(12.0));
}

TEST_CASE("eigenvalues bounded by one_norm_bound") {
    RngStream rng(13, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 4;
        const std::size_t n = 2 + rng.next_u64() % 14;
        const Symbol s = Symbol::from_roots(random_roots(rng, m, 0.0, 2.0));
        const HessMatrix a = tpht_truncation(s, n);
        const double bound = one_norm_bound(s, n);
        for (double lam : eigen_hessenberg(a).eigenvalues)
            CHECK(std::abs(lam) <= bound + 1e-8 * std::max(1.0, bound));
    }
}
