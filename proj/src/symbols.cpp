#include "tpht/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tpht {

Symbol Symbol::from_roots(std::vector<double> roots) {
    Symbol s;
    s.coeffs = elementary_symmetric(roots);
    s.roots = std::move(roots);
    return s;
}

std::vector<double> elementary_symmetric(const std::vector<double>& roots) {
    for (double a : roots) {
        if (!std::isfinite(a)) throw std::invalid_argument("elementary_symmetric: non-finite root");
    }
    std::vector<double> e(roots.size() + 1, 0.0);
    e[0] = 1.0;
    std::size_t used = 0;
    for (double a : roots) {
        ++used;
        for (std::size_t j = used; j >= 1; --j) e[j] += a * e[j - 1];
    }
    return e;
}

std::complex<double> symbol_eval(const Symbol& s, double theta) {
    const std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> v = 1.0 / z;
    for (double a : s.roots) v *= (1.0 + a * z);
    return v;
}

std::vector<double> poly_mul_truncated(const std::vector<double>& a,
                                       const std::vector<double>& b, std::size_t cap) {
    if (a.empty() || b.empty()) return {};
    const std::size_t out_deg = std::min(cap, a.size() + b.size() - 2);
    std::vector<double> c(out_deg + 1, 0.0);
    for (std::size_t i = 0; i < a.size() && i <= out_deg; ++i) {
        if (a[i] == 0.0) continue;
        const std::size_t jmax = std::min(b.size() - 1, out_deg - i);
        for (std::size_t j = 0; j <= jmax; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

std::vector<double> poly_power_truncated(const std::vector<double>& coeffs, int p,
                                         std::size_t degree_cap) {
    if (p < 1) throw std::invalid_argument("poly_power_truncated: p >= 1 required");
    std::vector<double> base = coeffs;
    if (base.size() > degree_cap + 1) base.resize(degree_cap + 1);
    std::vector<double> acc{1.0};
    for (int k = 0; k < p; ++k) acc = poly_mul_truncated(acc, base, degree_cap);
    acc.resize(degree_cap + 1, 0.0);
    return acc;
}

} // namespace tpht
