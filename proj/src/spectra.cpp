#include "tpht/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tpht/errors.hpp"

namespace tpht {

namespace {

constexpr double kDeflateTol = 1e-12;
constexpr double kMachEps = std::numeric_limits<double>::epsilon();

inline double sign_of(double magnitude, double carrier) {
    return carrier >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
// Deflation uses |h(l,l-1)| <= 1e-12 (|h(l-1,l-1)| + |h(l,l)|); exceptional
// shifts fire every 10 stalled sweeps; a global cap of 30n sweeps applies.
std::vector<std::complex<double>> hqr_eigenvalues(Matrix a) {
    const int n = static_cast<int>(a.rows());
    std::vector<std::complex<double>> wri(n);
    if (n == 0) return wri;

    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::abs(a(i, j));

    long sweeps = 0;
    const long cap = 30L * n;
    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                double s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
                if (s == 0.0) s = anorm;
                if (std::abs(a(l, l - 1)) <= kDeflateTol * s) {
                    a(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 0) l = 0;
            double x = a(nn, nn);
            if (l == nn) {
                wri[nn--] = x + t;
            } else {
                double y = a(nn - 1, nn - 1);
                double w = a(nn, nn - 1) * a(nn - 1, nn);
                if (l == nn - 1) {
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + sign_of(z, p);
                        wri[nn - 1] = wri[nn] = x + z;
                        if (z != 0.0) wri[nn] = x - w / z;
                    } else {
                        wri[nn] = std::complex<double>(x + p, -z);
                        wri[nn - 1] = std::conj(wri[nn]);
                    }
                    nn -= 2;
                } else {
                    if (sweeps >= cap)
                        throw NoConvergence("eigen_hessenberg: QR sweep cap of 30n exceeded");
                    if (its > 0 && its % 10 == 0) {
                        t += x;
                        for (int i = 0; i <= nn; ++i) a(i, i) -= x;
                        double s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    ++sweeps;
                    int m;
                    double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
                    for (m = nn - 2; m >= l; --m) {
                        z = a(m, m);
                        double rr = x - z;
                        double ss = y - z;
                        p = (rr * ss - w) / a(m + 1, m) + a(m, m + 1);
                        q = a(m + 1, m + 1) - z - rr - ss;
                        r = a(m + 2, m + 1);
                        double s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v =
                            std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) +
                                           std::abs(a(m + 1, m + 1)));
                        if (u <= kMachEps * v) break;
                    }
                    for (int i = m; i < nn - 1; ++i) {
                        a(i + 2, i) = 0.0;
                        if (i != m) a(i + 2, i - 1) = 0.0;
                    }
                    for (int k = m; k < nn; ++k) {
                        if (k != m) {
                            p = a(k, k - 1);
                            q = a(k + 1, k - 1);
                            r = 0.0;
                            if (k + 1 != nn) r = a(k + 2, k - 1);
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
                        if (s == 0.0) continue;
                        if (k == m) {
                            if (l != m) a(k, k - 1) = -a(k, k - 1);
                        } else {
                            a(k, k - 1) = -s * x;
                        }
                        p += s;
                        x = p / s;
                        y = q / s;
                        z = r / s;
                        q /= p;
                        r /= p;
                        for (int j = k; j <= nn; ++j) {
                            double pp = a(k, j) + q * a(k + 1, j);
                            if (k + 1 != nn) {
                                pp += r * a(k + 2, j);
                                a(k + 2, j) -= pp * z;
                            }
                            a(k + 1, j) -= pp * y;
                            a(k, j) -= pp * x;
                        }
                        const int mmin = nn < k + 3 ? nn : k + 3;
                        for (int i = l; i <= mmin; ++i) {
                            double pp = x * a(i, k) + y * a(i, k + 1);
                            if (k + 1 != nn) {
                                pp += z * a(i, k + 2);
                                a(i, k + 2) -= pp * r;
                            }
                            a(i, k + 1) -= pp * q;
                            a(i, k) -= pp;
                        }
                    }
                }
            }
        } while (l + 1 < nn);
    }
    return wri;
}

// Implicit-shift QL for a symmetric tridiagonal matrix given by diagonal d
// and off-diagonal e (length n-1). Eigenvalues land in d.
void tql_implicit(std::vector<double>& d, std::vector<double>& e) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.resize(n, 0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kMachEps * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw NoConvergence("symmetric QL: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + sign_of(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Tridiagonal with nonnegative products of paired off-diagonals is similar to
// a symmetric tridiagonal with e_i = sqrt(sub_i * super_i); zero products
// decouple blocks, which e_i = 0 reproduces.
bool symmetrizable_tridiagonal(const HessMatrix& a, std::vector<double>& d,
                               std::vector<double>& e) {
    const std::size_t n = a.size();
    if (a.lower_bandwidth() > 1) return false;
    d.resize(n);
    e.assign(n > 0 ? n - 1 : 0, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double prod = a(i + 1, i) * a(i, i + 1);
        if (prod < 0.0) return false;
        e[i] = std::sqrt(prod);
    }
    return true;
}

// Householder reduction of a dense matrix to upper Hessenberg form.
Matrix hessenberg_reduce(Matrix a) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) norm += a(i, k) * a(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = -sign_of(norm, a(k + 1, k));
        std::vector<double> u(n, 0.0);
        u[k + 1] = a(k + 1, k) - alpha;
        for (std::size_t i = k + 2; i < n; ++i) u[i] = a(i, k);
        double unorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) unorm2 += u[i] * u[i];
        if (unorm2 == 0.0) continue;
        const double beta = 2.0 / unorm2;
        // A <- (I - beta u u^T) A
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += u[i] * a(i, j);
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= s * u[i];
        }
        // A <- A (I - beta u u^T)
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * u[j];
            s *= beta;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * u[j];
        }
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
        a(k + 1, k) = alpha;
    }
    return a;
}

// O(n^2) solver for (A - mu I) v = b with A lower Hessenberg: QR of the
// transposed (upper Hessenberg) matrix by Givens rotations, M^T = R^T G, so
// a solve is one forward substitution plus the rotation chain.
class ShiftedHessSolver {
public:
    ShiftedHessSolver(const HessMatrix& a, double mu) : n_(a.size()), r_(transpose(a.dense())) {
        for (std::size_t i = 0; i < n_; ++i) r_(i, i) -= mu;
        const double guard = kMachEps * std::max(1.0, one_norm(a.dense()));
        rot_.resize(n_ > 0 ? n_ - 1 : 0);
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            const double x = r_(k, k);
            const double y = r_(k + 1, k);
            const double denom = std::hypot(x, y);
            const double c = denom == 0.0 ? 1.0 : x / denom;
            const double s = denom == 0.0 ? 0.0 : y / denom;
            rot_[k] = {c, s};
            for (std::size_t j = k; j < n_; ++j) {
                const double rk = r_(k, j);
                const double rk1 = r_(k + 1, j);
                r_(k, j) = c * rk + s * rk1;
                r_(k + 1, j) = -s * rk + c * rk1;
            }
        }
        for (std::size_t i = 0; i < n_; ++i)
            if (std::abs(r_(i, i)) < guard) r_(i, i) = r_(i, i) >= 0.0 ? guard : -guard;
    }

    std::vector<double> solve(const std::vector<double>& b) const {
        // R^T w = b (forward substitution), then v = G^T w.
        std::vector<double> w(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            double s = b[i];
            for (std::size_t j = 0; j < i; ++j) s -= r_(j, i) * w[j];
            w[i] = s / r_(i, i);
        }
        for (std::size_t k = n_ > 1 ? n_ - 1 : 0; k-- > 0;) {
            const auto [c, s] = rot_[k];
            const double wk = w[k];
            const double wk1 = w[k + 1];
            w[k] = c * wk - s * wk1;
            w[k + 1] = s * wk + c * wk1;
        }
        return w;
    }

private:
    std::size_t n_;
    Matrix r_;
    std::vector<std::pair<double, double>> rot_;
};

// Inverse iteration on the original matrix; shifts are separated by a small
// index-dependent offset so near-equal eigenvalues get distinct vectors.
Matrix inverse_iteration_vectors(const HessMatrix& a, const std::vector<double>& lambdas,
                                 double& residual_out) {
    const std::size_t n = a.size();
    const double scale = std::max(1.0, one_norm(a.dense()));
    Matrix vecs(n, n);
    residual_out = 0.0;
    for (std::size_t k = 0; k < lambdas.size(); ++k) {
        const double mu = lambdas[k] + scale * (1e-10 + 1e-12 * static_cast<double>(k));
        const ShiftedHessSolver solver(a, mu);
        std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
        double best_res = std::numeric_limits<double>::infinity();
        std::vector<double> best_v = v;
        for (int it = 0; it < 6; ++it) {
            v = solver.solve(v);
            double nv = 0.0;
            for (double x : v) nv += x * x;
            nv = std::sqrt(nv);
            if (!(nv > 0.0) || !std::isfinite(nv)) { v.assign(n, 1.0); continue; }
            for (double& x : v) x /= nv;
            std::vector<double> av = matvec(a.dense(), v);
            double res = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double r = av[i] - lambdas[k] * v[i];
                res += r * r;
            }
            res = std::sqrt(res);
            if (res < best_res) { best_res = res; best_v = v; }
            if (it >= 1 && res <= 1e-12 * scale) break;
        }
        // last nonzero entry positive
        std::size_t last = n;
        for (std::size_t i = n; i-- > 0;) {
            if (best_v[i] != 0.0) { last = i; break; }
        }
        if (last < n && best_v[last] < 0.0)
            for (double& x : best_v) x = -x;
        for (std::size_t i = 0; i < n; ++i) vecs(i, k) = best_v[i];
        residual_out = std::max(residual_out, best_res);
    }
    return vecs;
}

// Banded square matrix: nonzeros confined to i-j in [-hi, lo].
struct Band {
    std::size_t n = 0, lo = 0, hi = 0;
    std::vector<double> v;  // row i, diagonal offset d = i-j at (i, d+hi)

    Band(std::size_t n_, std::size_t lo_, std::size_t hi_)
        : n(n_), lo(lo_), hi(hi_), v(n_ * (lo_ + hi_ + 1), 0.0) {}

    double get(std::size_t i, std::size_t j) const {
        const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
        if (d < -static_cast<std::ptrdiff_t>(hi) || d > static_cast<std::ptrdiff_t>(lo)) return 0.0;
        return v[i * (lo + hi + 1) + static_cast<std::size_t>(d + static_cast<std::ptrdiff_t>(hi))];
    }
    void set(std::size_t i, std::size_t j, double x) {
        const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(j);
        v[i * (lo + hi + 1) + static_cast<std::size_t>(d + static_cast<std::ptrdiff_t>(hi))] = x;
    }
};

Band band_multiply(const Band& a, const Band& b) {
    const std::size_t n = a.n;
    Band c(n, std::min(n - 1, a.lo + b.lo), std::min(n - 1, a.hi + b.hi));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t jlo = i > c.lo ? i - c.lo : 0;
        const std::size_t jhi = std::min(n - 1, i + c.hi);
        for (std::size_t j = jlo; j <= jhi; ++j) {
            const std::size_t klo = std::max(i > a.lo ? i - a.lo : 0, j > b.hi ? j - b.hi : 0);
            const std::size_t khi = std::min({n - 1, i + a.hi, j + b.lo});
            double s = 0.0;
            for (std::size_t k = klo; k <= khi; ++k) s += a.get(i, k) * b.get(k, j);
            c.set(i, j, s);
        }
    }
    return c;
}

double band_trace(const Band& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.n; ++i) s += a.get(i, i);
    return s;
}

Band band_from_symbol(const Symbol& s, std::size_t n) {
    const std::size_t m = s.order();
    Band b(n, m > 0 ? m - 1 : 0, 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i + 1 < n) b.set(i, i + 1, 1.0);
        for (std::size_t k = 1; k <= m && k <= i + 1; ++k) {
            if (i + 1 - k < n) b.set(i, i + 1 - k, s.coeffs[k]);
        }
    }
    return b;
}

Band band_from_hess(const HessMatrix& a) {
    const std::size_t n = a.size();
    Band b(n, a.lower_bandwidth(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t jlo = i > b.lo ? i - b.lo : 0;
        for (std::size_t j = jlo; j <= std::min(n - 1, i + 1); ++j) b.set(i, j, a(i, j));
    }
    return b;
}

double banded_moment(const Band& b, int p) {
    if (p < 1) throw std::invalid_argument("esd_moment: p >= 1 required");
    if (p == 1) return band_trace(b) / static_cast<double>(b.n);
    Band acc = b;
    for (int k = 2; k <= p; ++k) acc = band_multiply(acc, b);
    return band_trace(acc) / static_cast<double>(b.n);
}

std::vector<std::pair<double, double>> kept_entries(const std::vector<double>& v) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    std::vector<std::pair<double, double>> kept;  // (abscissa, value), 1-based
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) >= 1e-12 * vmax && v[i] != 0.0)
            kept.emplace_back(static_cast<double>(i + 1), v[i]);
    return kept;
}

std::vector<double> nodes_skip_aware(const std::vector<double>& v) {
    const auto kept = kept_entries(v);
    std::vector<double> out;
    for (std::size_t q = 0; q + 1 < kept.size(); ++q) {
        const auto [t1, x1] = kept[q];
        const auto [t2, x2] = kept[q + 1];
        if ((x1 > 0.0) != (x2 > 0.0)) out.push_back(t1 + x1 * (t2 - t1) / (x1 - x2));
    }
    return out;
}

} // namespace

SpectrumResult eigen_hessenberg(const HessMatrix& a, bool want_vectors) {
    EigenOptions opt;
    opt.want_vectors = want_vectors;
    return eigen_hessenberg(a, opt);
}

SpectrumResult eigen_hessenberg(const HessMatrix& a, const EigenOptions& opt) {
    const std::size_t n = a.size();
    SpectrumResult out;
    if (n == 0) return out;

    std::vector<double> d, e;
    if (symmetrizable_tridiagonal(a, d, e)) {
        tql_implicit(d, e);
        out.eigenvalues = std::move(d);
        out.max_imag = 0.0;
    } else {
        const std::vector<std::complex<double>> w = hqr_eigenvalues(transpose(a.dense()));
        out.eigenvalues.reserve(n);
        for (const auto& z : w) {
            out.eigenvalues.push_back(z.real());
            out.max_imag = std::max(out.max_imag, std::abs(z.imag()));
        }
        if (opt.assume_real) {
            const double bound = 1e-6 * std::max(1.0, one_norm(a.dense()));
            if (out.max_imag > bound)
                throw ComplexSpectrum("eigen_hessenberg: imaginary parts " +
                                      std::to_string(out.max_imag) +
                                      " exceed the TP tolerance " + std::to_string(bound));
        }
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<double>());

    if (opt.want_vectors) {
        double res = 0.0;
        out.eigenvectors = inverse_iteration_vectors(a, out.eigenvalues, res);
        out.residual = res;
    }
    return out;
}

std::vector<std::complex<double>> dense_eigenvalues(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("dense_eigenvalues: square input required");
    return hqr_eigenvalues(hessenberg_reduce(a));
}

double esd_moment(const HessMatrix& a, int p) { return banded_moment(band_from_hess(a), p); }

double esd_moment(const Symbol& s, std::size_t n, int p) {
    return banded_moment(band_from_symbol(s, n), p);
}

double esd_average(const HessMatrix& a, const std::function<double(double)>& f) {
    const SpectrumResult spec = eigen_hessenberg(a, false);
    double s = 0.0;
    for (double lam : spec.eigenvalues) s += f(lam);
    return s / static_cast<double>(spec.eigenvalues.size());
}

double esd_entire_average(const Symbol& s, std::size_t n,
                          const std::function<double(int)>& taylor_coeff, double tol) {
    const double bound = one_norm_bound(s, n);
    const Band b = band_from_symbol(s, n);
    double acc = taylor_coeff(0);
    Band power = b;
    const int kmax = 400;
    for (int k = 1; k <= kmax; ++k) {
        if (k > 1) power = band_multiply(power, b);
        const double c = taylor_coeff(k);
        acc += c * band_trace(power) / static_cast<double>(n);
        const double next = std::abs(taylor_coeff(k + 1)) * std::pow(bound, k + 1);
        if (std::isfinite(next) && k >= static_cast<int>(bound) + 2 &&
            next <= tol * std::max(1.0, std::abs(acc)))
            return acc;
    }
    throw NoConvergence("esd_entire_average: series did not settle within 400 terms");
}

int sign_variations(const std::vector<double>& v) {
    const auto kept = kept_entries(v);
    int count = 0;
    for (std::size_t q = 0; q + 1 < kept.size(); ++q)
        if ((kept[q].second > 0.0) != (kept[q + 1].second > 0.0)) ++count;
    return count;
}

std::vector<double> piecewise_nodes(const std::vector<double>& v) {
    std::vector<double> out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0.0) out.push_back(static_cast<double>(k + 1));
        if (k + 1 < v.size() && v[k] * v[k + 1] < 0.0)
            out.push_back(static_cast<double>(k + 1) + v[k] / (v[k] - v[k + 1]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

OscillationReport check_oscillation(const SpectrumResult& s) {
    if (!s.eigenvectors)
        throw std::invalid_argument("check_oscillation: eigenvectors required");
    const Matrix& vecs = *s.eigenvectors;
    const std::size_t n = vecs.cols();
    const double scale = s.eigenvalues.empty() ? 1.0 : std::abs(s.eigenvalues.front());
    for (std::size_t k = 0; k + 1 < s.eigenvalues.size(); ++k)
        if (std::abs(s.eigenvalues[k] - s.eigenvalues[k + 1]) <= 1e-12 * std::max(1.0, scale))
            throw std::invalid_argument("check_oscillation: eigenvalues must be distinct");

    OscillationReport rep;
    std::vector<double> col(vecs.rows());
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < vecs.rows(); ++i) col[i] = vecs(i, k);
        rep.sign_variations.push_back(sign_variations(col));
        rep.nodes.push_back(nodes_skip_aware(col));
    }
    const double tol = 1e-9;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto& a = rep.nodes[k];
        const auto& b = rep.nodes[k + 1];
        bool ok = (b.size() == a.size() + 1);
        for (std::size_t i = 0; ok && i < a.size(); ++i)
            ok = (b[i] - a[i] < tol) && (a[i] - b[i + 1] < tol);
        rep.interlacing_ok.push_back(ok);
    }
    return rep;
}

Histogram esd_histogram(const HessMatrix& a, std::size_t bins) {
    if (bins < 1) throw std::invalid_argument("esd_histogram: bins >= 1 required");
    const SpectrumResult spec = eigen_hessenberg(a, false);
    const auto& ev = spec.eigenvalues;
    Histogram h;
    const double hi = ev.front();
    const double lo = ev.back();
    if (hi == lo) {
        h.edges = {lo - 0.5, lo + 0.5};
        h.counts = {ev.size()};
        return h;
    }
    h.edges.resize(bins + 1);
    for (std::size_t k = 0; k <= bins; ++k)
        h.edges[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(bins);
    h.counts.assign(bins, 0);
    for (double x : ev) {
        std::size_t idx = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
        if (idx >= bins) idx = bins - 1;
        ++h.counts[idx];
    }
    return h;
}

} // namespace tpht
