#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tpht/symbols.hpp"

namespace tpht {

enum class GSMethod { coefficient, quadrature, closed_form };

struct GSLimit {
    double value = 0.0;
    GSMethod method = GSMethod::coefficient;
    std::size_t nodes_used = 0;      // quadrature only
    double imag_residue = 0.0;       // quadrature only, diagnostic
};

/// Exact Grenander-Szego p-th moment limit [z^p] (prod_j (1 + a_j z))^p
/// via truncated polynomial powers.
GSLimit gs_moment_exact(const Symbol& s, int p);

/// (1/2pi) int f(phi(e^{i theta})) d theta by the trapezoid rule on a uniform
/// grid (spectrally accurate for entire f). Requires nodes >= 64. The real
/// part is returned; an imaginary residue above 1e-6 throws
/// ImagResidueTooLarge.
GSLimit gs_average_quadrature(const Symbol& s,
                              const std::function<std::complex<double>(std::complex<double>)>& f,
                              std::size_t nodes);

/// Minimal unsigned big integer: enough for exact binomial coefficients
/// (C(200,20) and friends exceed 64 bits).
class BigUInt {
public:
    BigUInt() : limbs_{0} {}
    explicit BigUInt(std::uint64_t v);

    void mul_small(std::uint64_t f);
    void divexact_small(std::uint64_t d);

    bool fits_u64() const;
    std::uint64_t as_u64() const;
    double to_double() const;
    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, base 1e9
};

BigUInt binomial(std::uint64_t n, std::uint64_t k);

/// C(mp, p), the all-ones-roots moment limit.
BigUInt binom_mp_p(int m, int p);

/// Checks C(mp, p) = sum over compositions i_1+..+i_m = p of prod_j C(p, i_j)
/// by direct enumeration (exact in 64-bit for the small m, p this is used on).
bool composition_identity_holds(int m, int p);

/// Modified Bessel function of the first kind, order 0, by its power series.
double bessel_i0(double x);

} // namespace tpht
