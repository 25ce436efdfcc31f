#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "tpht/rng.hpp"
#include "tpht/symbols.hpp"

using namespace tpht;

namespace {

// Untruncated convolution, the oracle for truncated products and powers.
std::vector<double> poly_mul_full(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<double> poly_pow_full(const std::vector<double>& a, int p) {
    std::vector<double> c{1.0};
    for (int k = 0; k < p; ++k) c = poly_mul_full(c, a);
    return c;
}

} // namespace

TEST_CASE("elementary_symmetric: binomial row for all-ones roots") {
    const auto e = elementary_symmetric({1, 1, 1, 1, 1});
    CHECK(e == std::vector<double>{1, 5, 10, 10, 5, 1});
}

TEST_CASE("elementary_symmetric: empty product") {
    CHECK(elementary_symmetric({}) == std::vector<double>{1});
}

TEST_CASE("elementary_symmetric: (2,3) expands (1+2z)(1+3z)") {
    // oracle: direct polynomial multiplication
    const auto oracle = poly_mul_full({1, 2}, {1, 3});
    CHECK(oracle == std::vector<double>{1, 5, 6});
    CHECK(elementary_symmetric({2, 3}) == oracle);
}

TEST_CASE("elementary_symmetric is permutation-invariant") {
    RngStream rng(11, 0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> roots(6);
        for (double& r : roots) r = 3.0 * rng.next_uniform();
        auto shuffled = roots;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[rng.next_u64() % i]);
        const auto a = elementary_symmetric(roots);
        const auto b = elementary_symmetric(shuffled);
        for (std::size_t k = 0; k < a.size(); ++k)
            CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-13));
    }
}

TEST_CASE("symbol_eval: (1+1)^2 cases on the circle") {
    const Symbol s = Symbol::from_roots({1, 1});
    const auto at0 = symbol_eval(s, 0.0);
    CHECK(at0.real() == doctest::Approx(4.0));
    CHECK(at0.imag() == doctest::Approx(0.0));

    const auto at_pi = symbol_eval(s, M_PI);
    CHECK(std::abs(at_pi) == doctest::Approx(0.0).epsilon(1e-14));

    // (1+i)^2 / i = 2; also the real-valued form 2(1 + Re z)
    const auto at_half = symbol_eval(s, M_PI / 2);
    CHECK(at_half.real() == doctest::Approx(2.0));
    CHECK(at_half.imag() == doctest::Approx(0.0));
    CHECK(at_half.real() == doctest::Approx(2.0 * (1.0 + std::cos(M_PI / 2))));
}

TEST_CASE("symbol_eval: factored form matches expanded form") {
    RngStream rng(23, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 20;
        std::vector<double> roots(m);
        for (double& r : roots) r = 10.0 * rng.next_uniform();
        const Symbol s = Symbol::from_roots(roots);
        // the expanded sum works at the scale of its largest coefficient, so
        // agreement is relative to sum_k |e_k| (phi itself can be tiny near a
        // zero of the symbol while the coefficients reach 1e15 at m=20)
        double coeff_scale = 1.0;
        for (double c : s.coeffs) coeff_scale += std::abs(c);
        for (int k = 0; k < 8; ++k) {
            const double theta = 2.0 * M_PI * rng.next_uniform();
            const std::complex<double> z = std::polar(1.0, theta);
            std::complex<double> expanded = 0.0;
            for (std::size_t q = 0; q < s.coeffs.size(); ++q)
                expanded += s.coeffs[q] * std::pow(z, static_cast<double>(q));
            expanded /= z;
            const std::complex<double> factored = symbol_eval(s, theta);
            CHECK(std::abs(factored - expanded) <= 1e-12 * coeff_scale);
        }
    }
}

TEST_CASE("poly_power_truncated: binomial square") {
    CHECK(poly_power_truncated({1, 1}, 2, 2) == std::vector<double>{1, 2, 1});
}

TEST_CASE("poly_power_truncated: (1+z)^6 prefix") {
    // oracle: full expansion of ((1+z)^2)^3
    const auto full = poly_pow_full({1, 2, 1}, 3);
    CHECK(full[0] == 1);
    CHECK(full[1] == 6);
    CHECK(full[2] == 15);
    CHECK(full[3] == 20);
    CHECK(poly_power_truncated({1, 2, 1}, 3, 3) == std::vector<double>{1, 6, 15, 20});
}

TEST_CASE("poly_power_truncated: pure truncation at p = 1") {
    CHECK(poly_power_truncated({1, 1, 1, 1}, 1, 2) == std::vector<double>{1, 1, 1});
}

TEST_CASE("poly_power_truncated agrees with full power then truncation") {
    RngStream rng(31, 0);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t deg = rng.next_u64() % 7;
        std::vector<double> c(deg + 1);
        for (double& x : c) x = static_cast<double>(rng.next_u64() % 9) - 4.0;
        const int p = 1 + static_cast<int>(rng.next_u64() % 4);
        const std::size_t cap = rng.next_u64() % 12;
        auto full = poly_pow_full(c, p);
        full.resize(cap + 1, 0.0);
        const auto fast = poly_power_truncated(c, p, cap);
        REQUIRE(fast.size() == full.size());
        for (std::size_t i = 0; i < full.size(); ++i)
            CHECK(fast[i] == doctest::Approx(full[i]).epsilon(1e-12));
    }
}

TEST_CASE("Symbol invariants: coeffs are elementary symmetric, nonnegative") {
    const Symbol s = Symbol::from_roots({0.5, 2.0, 0.0, 3.5});
    CHECK(s.coeffs[0] == 1.0);
    CHECK(s.coeffs == elementary_symmetric(s.roots));
    for (double c : s.coeffs) CHECK(c >= 0.0);
}
