#include "tpht/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "tpht/errors.hpp"
#include "tpht/gs_asymptotics.hpp"
#include "tpht/spectra.hpp"
#include "tpht/symbols.hpp"

namespace tpht {

DistSpec DistSpec::lognormal_iid(double sigma, std::size_t m) {
    if (sigma <= 0.0) throw std::invalid_argument("DistSpec: sigma > 0 required");
    DistSpec d;
    d.kind = Kind::lognormal;
    d.m = m;
    d.sigmas.assign(m, sigma);
    return d;
}

DistSpec DistSpec::lognormal(std::vector<double> sigmas) {
    for (double s : sigmas)
        if (s <= 0.0) throw std::invalid_argument("DistSpec: sigma > 0 required");
    DistSpec d;
    d.kind = Kind::lognormal;
    d.m = sigmas.size();
    d.sigmas = std::move(sigmas);
    return d;
}

DistSpec DistSpec::exponential(double mean, std::size_t m) {
    if (mean <= 0.0) throw std::invalid_argument("DistSpec: mean > 0 required");
    DistSpec d;
    d.kind = Kind::exponential;
    d.m = m;
    d.mean = mean;
    return d;
}

DistSpec DistSpec::bernoulli(double q, std::size_t m) {
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("DistSpec: q in [0,1] required");
    DistSpec d;
    d.kind = Kind::bernoulli;
    d.m = m;
    d.q = q;
    return d;
}

std::vector<double> sample_roots(const DistSpec& dist, RngStream& rng) {
    std::vector<double> roots(dist.m);
    switch (dist.kind) {
        case DistSpec::Kind::lognormal:
            for (std::size_t i = 0; i < dist.m; ++i)
                roots[i] = std::exp(dist.sigmas[i] * rng.next_normal());
            break;
        case DistSpec::Kind::exponential:
            for (std::size_t i = 0; i < dist.m; ++i) roots[i] = rng.next_exponential(dist.mean);
            break;
        case DistSpec::Kind::bernoulli:
            for (std::size_t i = 0; i < dist.m; ++i)
                roots[i] = rng.next_uniform() < dist.q ? 1.0 : 0.0;
            break;
    }
    return roots;
}

double lhs_moment_sample(const DistSpec& dist, std::size_t n, int p, RngStream& rng) {
    const Symbol s = Symbol::from_roots(sample_roots(dist, rng));
    return esd_moment(s, n, p);
}

double rhs_moment_sample(const DistSpec& dist, int p, RngStream& rng) {
    const Symbol s = Symbol::from_roots(sample_roots(dist, rng));
    const std::vector<double> c = poly_power_truncated(s.coeffs, p, static_cast<std::size_t>(p));
    return c[static_cast<std::size_t>(p)];
}

namespace {

double binom_log(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double exp_or_overflow(double log_value, const char* who) {
    if (log_value > 709.0) throw NumericalError(std::string(who) + ": value overflows double range");
    return std::exp(log_value);
}

} // namespace

MomentBounds expected_moment_lognormal(const std::vector<double>& sigmas, int p) {
    if (p < 1) throw std::invalid_argument("expected_moment_lognormal: p >= 1 required");
    const int m = static_cast<int>(sigmas.size());
    if (m < 1) throw std::invalid_argument("expected_moment_lognormal: at least one sigma");

    double max_sigma2 = 0.0, inv_sum = 0.0;
    for (double s : sigmas) {
        max_sigma2 = std::max(max_sigma2, s * s);
        inv_sum += (s == 0.0) ? std::numeric_limits<double>::infinity() : 1.0 / (s * s);
    }
    const double pd = static_cast<double>(p);
    const double log_binom = binom_log(m * p, p);

    MomentBounds out;
    out.lower = exp_or_overflow(log_binom + pd * pd / (2.0 * inv_sum), "expected_moment_lognormal");
    out.upper =
        exp_or_overflow(log_binom + pd * pd * max_sigma2 / 2.0, "expected_moment_lognormal");

    // mean = [z^p] prod_j sum_i C(p,i) e^{i^2 sigma_j^2 / 2} z^i  (independence
    // pushes the expectation into each factor). Direct convolution while the
    // exponents stay in range, log-sum-exp convolution past that.
    const double max_exp = pd * pd * max_sigma2 / 2.0;
    if (max_exp <= 700.0) {
        std::vector<double> acc{1.0};
        for (int j = 0; j < m; ++j) {
            std::vector<double> factor(static_cast<std::size_t>(p) + 1);
            for (int i = 0; i <= p; ++i)
                factor[static_cast<std::size_t>(i)] =
                    std::exp(binom_log(p, i) + 0.5 * i * i * sigmas[static_cast<std::size_t>(j)] *
                                                   sigmas[static_cast<std::size_t>(j)]);
            acc = poly_mul_truncated(acc, factor, static_cast<std::size_t>(p));
        }
        acc.resize(static_cast<std::size_t>(p) + 1, 0.0);
        out.mean_exact = acc[static_cast<std::size_t>(p)];
    } else {
        const double neg_inf = -std::numeric_limits<double>::infinity();
        std::vector<double> acc{0.0};  // log coefficients
        for (int j = 0; j < m; ++j) {
            std::vector<double> factor(static_cast<std::size_t>(p) + 1);
            for (int i = 0; i <= p; ++i)
                factor[static_cast<std::size_t>(i)] =
                    binom_log(p, i) + 0.5 * i * i * sigmas[static_cast<std::size_t>(j)] *
                                          sigmas[static_cast<std::size_t>(j)];
            const std::size_t deg = std::min<std::size_t>(acc.size() - 1 + factor.size() - 1,
                                                          static_cast<std::size_t>(p));
            std::vector<double> next(deg + 1, neg_inf);
            for (std::size_t a = 0; a < acc.size(); ++a)
                for (std::size_t b = 0; b < factor.size() && a + b <= deg; ++b) {
                    const double term = acc[a] + factor[b];
                    double& slot = next[a + b];
                    slot = (slot == neg_inf) ? term
                                             : std::max(slot, term) +
                                                   std::log1p(std::exp(-std::abs(slot - term)));
                }
            acc = std::move(next);
        }
        out.mean_exact = exp_or_overflow(acc[static_cast<std::size_t>(p)],
                                         "expected_moment_lognormal");
    }
    return out;
}

std::vector<BernoulliAtom> bernoulli_moment_law(int m, double q, int p) {
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("bernoulli_moment_law: q in [0,1]");
    if (m < 0 || p < 1) throw std::invalid_argument("bernoulli_moment_law: m >= 0, p >= 1");
    std::vector<BernoulliAtom> law(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        BernoulliAtom& atom = law[static_cast<std::size_t>(k)];
        atom.k = k;
        atom.value = binomial(static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(k),
                              static_cast<std::uint64_t>(p))
                         .to_double();
        atom.prob = std::exp(binom_log(m, k)) * std::pow(q, k) * std::pow(1.0 - q, m - k);
    }
    return law;
}

double ks_distance(std::vector<double> x, std::vector<double> y) {
    if (x.empty() || y.empty()) throw std::invalid_argument("ks_distance: nonempty samples required");
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) ++i;
        while (j < y.size() && y[j] == v) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
    }
    if (i < x.size()) d = std::max(d, 1.0 - static_cast<double>(i) / nx);
    if (j < y.size()) d = std::max(d, 1.0 - static_cast<double>(j) / ny);
    return d;
}

namespace {

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

} // namespace

EnsembleRun run_ensemble(const EnsembleConfig& cfg) {
    EnsembleRun run;
    run.cfg = cfg;
    const std::size_t n_samples = cfg.samples;
    run.lhs_samples.resize(n_samples);
    run.rhs_samples.resize(n_samples);
    if (n_samples == 0) return run;

    const auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            if (cfg.mode == SampleMode::simultaneous) {
                RngStream rng(cfg.seed, i);
                const Symbol s = Symbol::from_roots(sample_roots(cfg.dist, rng));
                run.lhs_samples[i] = esd_moment(s, cfg.n, cfg.p);
                const std::vector<double> c =
                    poly_power_truncated(s.coeffs, cfg.p, static_cast<std::size_t>(cfg.p));
                run.rhs_samples[i] = c[static_cast<std::size_t>(cfg.p)];
            } else {
                RngStream lhs_rng(cfg.seed, 2 * i);
                RngStream rhs_rng(cfg.seed, 2 * i + 1);
                run.lhs_samples[i] = lhs_moment_sample(cfg.dist, cfg.n, cfg.p, lhs_rng);
                run.rhs_samples[i] = rhs_moment_sample(cfg.dist, cfg.p, rhs_rng);
            }
        }
    };

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, std::max<std::size_t>(1, n_samples / 64)));
    if (threads <= 1) {
        worker(0, n_samples);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n_samples + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = static_cast<std::size_t>(t) * chunk;
            const std::size_t end = std::min(n_samples, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    EnsembleSummary& s = run.summary;
    s.lhs_mean = mean_of(run.lhs_samples);
    s.rhs_mean = mean_of(run.rhs_samples);
    s.lhs_median = median_of(run.lhs_samples);
    s.rhs_median = median_of(run.rhs_samples);
    double var = 0.0;
    for (double x : run.rhs_samples) var += (x - s.rhs_mean) * (x - s.rhs_mean);
    var /= std::max<std::size_t>(1, n_samples - 1);
    s.rhs_stderr = std::sqrt(var / static_cast<double>(n_samples));
    s.ks = ks_distance(run.lhs_samples, run.rhs_samples);

    // Skewness of log(rhs) over the positive samples (Bernoulli draws can be 0).
    std::vector<double> logs;
    logs.reserve(n_samples);
    for (double x : run.rhs_samples)
        if (x > 0.0) logs.push_back(std::log(x));
    if (logs.size() >= 3) {
        const double mu = mean_of(logs);
        double m2 = 0.0, m3 = 0.0;
        for (double x : logs) {
            const double dlt = x - mu;
            m2 += dlt * dlt;
            m3 += dlt * dlt * dlt;
        }
        m2 /= static_cast<double>(logs.size());
        m3 /= static_cast<double>(logs.size());
        s.log_skewness = m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
    }
    return run;
}

} // namespace tpht
