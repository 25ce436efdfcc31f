#include "tpht/gs_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tpht/errors.hpp"

namespace tpht {

namespace {

constexpr std::uint32_t kLimbBase = 1000000000u;

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v, std::size_t lo,
                                  std::size_t hi) {
    if (hi - lo <= 8) {
        std::complex<double> s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += v[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

std::uint64_t binom_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i);
        r /= static_cast<std::uint64_t>(i);
    }
    return r;
}

} // namespace

GSLimit gs_moment_exact(const Symbol& s, int p) {
    if (p < 1) throw std::invalid_argument("gs_moment_exact: p >= 1 required");
    const std::vector<double> c = poly_power_truncated(s.coeffs, p, static_cast<std::size_t>(p));
    GSLimit out;
    out.value = c[static_cast<std::size_t>(p)];
    out.method = GSMethod::coefficient;
    return out;
}

GSLimit gs_average_quadrature(const Symbol& s,
                              const std::function<std::complex<double>(std::complex<double>)>& f,
                              std::size_t nodes) {
    if (nodes < 64) throw std::invalid_argument("gs_average_quadrature: nodes >= 64 required");
    std::vector<std::complex<double>> vals(nodes);
    const double step = 2.0 * M_PI / static_cast<double>(nodes);
    for (std::size_t j = 0; j < nodes; ++j)
        vals[j] = f(symbol_eval(s, step * static_cast<double>(j)));
    const std::complex<double> total = pairwise_sum(vals, 0, nodes);
    GSLimit out;
    out.method = GSMethod::quadrature;
    out.nodes_used = nodes;
    out.value = total.real() / static_cast<double>(nodes);
    out.imag_residue = std::abs(total.imag()) / static_cast<double>(nodes);
    if (out.imag_residue > 1e-6)
        throw ImagResidueTooLarge("gs_average_quadrature: imaginary residue " +
                                  std::to_string(out.imag_residue));
    return out;
}

BigUInt::BigUInt(std::uint64_t v) {
    do {
        limbs_.push_back(static_cast<std::uint32_t>(v % kLimbBase));
        v /= kLimbBase;
    } while (v > 0);
}

void BigUInt::mul_small(std::uint64_t f) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        const std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
        limb = static_cast<std::uint32_t>(cur % kLimbBase);
        carry = cur / kLimbBase;
    }
    while (carry > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % kLimbBase));
        carry /= kLimbBase;
    }
}

void BigUInt::divexact_small(std::uint64_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t cur = rem * kLimbBase + limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

bool BigUInt::fits_u64() const {
    // 3 limbs cover up to ~1e27 > 2^64, so check by reconstructing carefully.
    if (limbs_.size() > 3) return false;
    long double v = 0.0L;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kLimbBase + limbs_[i];
    return v <= static_cast<long double>(UINT64_MAX);
}

std::uint64_t BigUInt::as_u64() const {
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kLimbBase + limbs_[i];
    return v;
}

double BigUInt::to_double() const {
    double v = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * kLimbBase + limbs_[i];
    return v;
}

std::string BigUInt::to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

BigUInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return BigUInt(0);
    if (k > n - k) k = n - k;
    BigUInt r(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.divexact_small(i);
    }
    return r;
}

BigUInt binom_mp_p(int m, int p) {
    if (m < 0 || p < 0) throw std::invalid_argument("binom_mp_p: m, p >= 0 required");
    return binomial(static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(p),
                    static_cast<std::uint64_t>(p));
}

bool composition_identity_holds(int m, int p) {
    if (m < 1) return p == 0;
    // Recursive sweep over compositions i_1 + ... + i_m = p.
    std::uint64_t total = 0;
    std::vector<int> parts(static_cast<std::size_t>(m), 0);
    std::function<void(int, int, std::uint64_t)> rec = [&](int idx, int left, std::uint64_t prod) {
        if (idx == m - 1) {
            total += prod * binom_u64(p, left);
            return;
        }
        for (int i = 0; i <= left; ++i) rec(idx + 1, left - i, prod * binom_u64(p, i));
    };
    rec(0, p, 1);
    const BigUInt expect = binom_mp_p(m, p);
    return expect.fits_u64() && expect.as_u64() == total;
}

double bessel_i0(double x) {
    if (std::abs(x) > 50.0) throw std::invalid_argument("bessel_i0: |x| <= 50 required");
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

} // namespace tpht
