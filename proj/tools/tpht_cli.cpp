// tpht: construction, factorization, spectra, Grenander-Szego limits and
// Monte-Carlo runs for the totally positive Hessenberg Toeplitz ensemble.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tpht/ensemble.hpp"
#include "tpht/errors.hpp"
#include "tpht/factorization.hpp"
#include "tpht/gs_asymptotics.hpp"
#include "tpht/io.hpp"
#include "tpht/matrices.hpp"
#include "tpht/normal_forms.hpp"
#include "tpht/spectra.hpp"
#include "tpht/svg.hpp"
#include "tpht/symbols.hpp"

using nlohmann::json;

namespace {

using tpht::kDefaultSeed;  // override with --seed or TPHT_SEED

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::vector<double> parse_roots(const std::string& text) {
    std::vector<double> roots;
    if (text.empty()) return roots;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("cannot parse root '" + tok + "'");
        }
        if (used != tok.size()) throw UsageError("cannot parse root '" + tok + "'");
        roots.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return roots;
}

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t flag_value) {
    if (seed_opt->count() > 0) return flag_value;
    if (const char* env = std::getenv("TPHT_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
        throw UsageError("TPHT_SEED is not an integer");
    }
    return kDefaultSeed;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open " + out_path);
        f << j.dump(2) << "\n";
    }
}

json spectrum_json(const tpht::SpectrumResult& spec) {
    json j;
    j["eigenvalues"] = spec.eigenvalues;
    j["max_imag"] = spec.max_imag;
    if (spec.eigenvectors) {
        j["eigenvectors"] = tpht::matrix_to_json(*spec.eigenvectors);
        j["residual"] = spec.residual;
    }
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"totally positive Hessenberg Toeplitz (TPHT) toolkit"};
    app.require_subcommand(1);

    std::string roots_text, format = "json", out_path, svg_path, csv_path;
    std::size_t n = 5;
    int p = 3;
    int dynamics = 0;
    std::size_t hist_bins = 0;
    bool oscillation = false;
    std::size_t quad_nodes = 4096;
    bool table = false;
    std::string function_name;

    auto* cmd_matrix = app.add_subcommand("matrix", "print the TPHT truncation");
    cmd_matrix->add_option("--roots", roots_text, "comma-separated symbol roots")->required();
    cmd_matrix->add_option("--n", n, "matrix size")->required();
    cmd_matrix->add_option("--format", format, "json|csv");
    cmd_matrix->add_option("--out", out_path, "output file (default stdout)");

    auto* cmd_lu = app.add_subcommand("lu", "closed-form LU and LU dynamics");
    cmd_lu->add_option("--roots", roots_text)->required();
    cmd_lu->add_option("--n", n)->required();
    cmd_lu->add_option("--dynamics", dynamics, "number of LU-map steps to trace");
    cmd_lu->add_option("--out", out_path);

    auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues and oscillation analysis");
    cmd_spectrum->add_option("--roots", roots_text)->required();
    cmd_spectrum->add_option("--n", n)->required();
    cmd_spectrum->add_flag("--oscillation", oscillation, "sign variations, nodes, interlacing");
    cmd_spectrum->add_option("--hist", hist_bins, "histogram bin count");
    cmd_spectrum->add_option("--svg", svg_path, "write oscillation panels");
    cmd_spectrum->add_option("--out", out_path);

    auto* cmd_gs = app.add_subcommand("gs", "Grenander-Szego limits and finite-n table");
    cmd_gs->add_option("--roots", roots_text)->required();
    auto* gs_p = cmd_gs->add_option("--p", p, "moment order");
    cmd_gs->add_option("--function", function_name, "entire function (exp)");
    cmd_gs->add_option("--nodes", quad_nodes, "quadrature nodes");
    cmd_gs->add_flag("--table", table, "include n = 100, 1000, 10000 comparison");
    cmd_gs->add_option("--out", out_path);

    std::string dist_name = "lognormal", mode_name = "indep";
    double sigma = 1.0, mean = 1.0, q = 0.5;
    std::size_t m_roots = 3, samples = 10000;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;

    auto* cmd_mc = app.add_subcommand("mc", "random-symbol Monte-Carlo moments");
    cmd_mc->add_option("--dist", dist_name, "lognormal|exp|bernoulli");
    cmd_mc->add_option("--sigma", sigma, "lognormal sigma");
    cmd_mc->add_option("--mean", mean, "exponential mean");
    cmd_mc->add_option("--q", q, "bernoulli success probability");
    cmd_mc->add_option("--m", m_roots, "number of roots")->required();
    cmd_mc->add_option("--n", n, "matrix size for the LHS");
    cmd_mc->add_option("--p", p, "moment order")->required();
    cmd_mc->add_option("--samples", samples);
    auto* seed_opt = cmd_mc->add_option("--seed", seed);
    cmd_mc->add_option("--mode", mode_name, "sim|indep");
    cmd_mc->add_option("--threads", threads, "worker count (0 = hardware)");
    cmd_mc->add_option("--svg", svg_path, "log-scale histogram of RHS samples");
    cmd_mc->add_option("--csv", csv_path, "histogram data as CSV");
    cmd_mc->add_option("--out", out_path);

    auto* cmd_fp = app.add_subcommand("fpdemo",
                                      "floating-point eigenvalue scatter vs symbol curve");
    cmd_fp->add_option("--roots", roots_text)->required();
    cmd_fp->add_option("--n", n)->required();
    cmd_fp->add_option("--svg", svg_path);
    cmd_fp->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_matrix) {
            const tpht::Symbol s = tpht::Symbol::from_roots(parse_roots(roots_text));
            const tpht::HessMatrix t = tpht::tpht_truncation(s, n);
            if (format == "csv") {
                const std::string csv = tpht::matrix_to_csv(t.dense());
                if (out_path.empty()) {
                    std::cout << csv;
                } else {
                    std::ofstream f(out_path);
                    f << csv;
                }
            } else if (format == "json") {
                json j;
                j["roots"] = s.roots;
                j["coeffs"] = s.coeffs;
                j["matrix"] = tpht::matrix_to_json(t.dense());
                j["one_norm_bound"] = tpht::one_norm_bound(s, n);
                emit(j, out_path);
            } else {
                throw UsageError("unknown format '" + format + "'");
            }
        } else if (*cmd_lu) {
            const tpht::Symbol s = tpht::Symbol::from_roots(parse_roots(roots_text));
            const tpht::HessMatrix t = tpht::tpht_truncation(s, n);
            const tpht::LUFactors f = tpht::lu_closed_form(t);
            json j;
            j["L"] = tpht::matrix_to_json(f.L);
            j["U"] = tpht::matrix_to_json(f.U);
            if (dynamics > 0) {
                const auto traj = tpht::lu_dynamics_iterate(t, dynamics);
                const auto ev0 = tpht::eigen_hessenberg(traj.front()).eigenvalues;
                json steps = json::array();
                for (std::size_t k = 0; k < traj.size(); ++k) {
                    const auto ev = tpht::eigen_hessenberg(traj[k]).eigenvalues;
                    double drift = 0.0;
                    for (std::size_t i = 0; i < ev.size(); ++i)
                        drift = std::max(drift, std::abs(ev[i] - ev0[i]));
                    const tpht::TPReport rep = tpht::is_totally_positive(
                        traj[k], n <= 8 ? tpht::TPMode::exhaustive : tpht::TPMode::neville);
                    steps.push_back({{"step", k},
                                     {"eigenvalue_drift", drift},
                                     {"is_tp", rep.is_tp}});
                }
                j["dynamics"] = std::move(steps);
            }
            emit(j, out_path);
        } else if (*cmd_spectrum) {
            const tpht::Symbol s = tpht::Symbol::from_roots(parse_roots(roots_text));
            const tpht::HessMatrix t = tpht::tpht_truncation(s, n);
            tpht::EigenOptions opt;
            opt.want_vectors = oscillation || !svg_path.empty();
            opt.assume_real = true;
            const tpht::SpectrumResult spec = tpht::eigen_hessenberg(t, opt);
            json j = spectrum_json(spec);
            if (oscillation || !svg_path.empty()) {
                const tpht::OscillationReport rep = tpht::check_oscillation(spec);
                j["sign_variations"] = rep.sign_variations;
                j["nodes"] = rep.nodes;
                j["interlacing_ok"] = rep.interlacing_ok;
                if (!svg_path.empty())
                    tpht::svg::write_oscillation(svg_path, *spec.eigenvectors, rep.nodes,
                                                 "eigenvector oscillation, n=" + std::to_string(n));
            }
            if (hist_bins > 0) {
                const tpht::Histogram h = tpht::esd_histogram(t, hist_bins);
                j["histogram"] = {{"edges", h.edges}, {"counts", h.counts}};
            }
            emit(j, out_path);
        } else if (*cmd_gs) {
            const tpht::Symbol s = tpht::Symbol::from_roots(parse_roots(roots_text));
            json j;
            j["roots"] = s.roots;
            const std::vector<std::size_t> table_sizes{100, 1000, 10000};
            if (!function_name.empty()) {
                if (function_name != "exp")
                    throw UsageError("unsupported --function '" + function_name + "'");
                const tpht::GSLimit lim = tpht::gs_average_quadrature(
                    s, [](std::complex<double> z) { return std::exp(z); }, quad_nodes);
                j["limit"] = lim.value;
                j["nodes_used"] = lim.nodes_used;
                j["imag_residue"] = lim.imag_residue;
                if (table) {
                    json tbl;
                    for (std::size_t size : table_sizes) {
                        // Trace Taylor series: stable for the non-Hermitian m >= 3 cases.
                        const double v = tpht::esd_entire_average(
                            s, size, [](int k) { return 1.0 / std::tgamma(k + 1.0); });
                        tbl[std::to_string(size)] = v;
                    }
                    j["finite_n"] = std::move(tbl);
                }
            } else {
                if (gs_p->count() == 0) throw UsageError("gs: need --p or --function");
                if (p < 1) throw UsageError("gs: p >= 1 required");
                const tpht::GSLimit lim = tpht::gs_moment_exact(s, p);
                j["p"] = p;
                j["limit"] = lim.value;
                if (table) {
                    json tbl;
                    for (std::size_t size : table_sizes)
                        tbl[std::to_string(size)] = tpht::esd_moment(s, size, p);
                    j["finite_n"] = std::move(tbl);
                }
            }
            emit(j, out_path);
        } else if (*cmd_mc) {
            tpht::EnsembleConfig cfg;
            if (dist_name == "lognormal") {
                cfg.dist = tpht::DistSpec::lognormal_iid(sigma, m_roots);
            } else if (dist_name == "exp") {
                cfg.dist = tpht::DistSpec::exponential(mean, m_roots);
            } else if (dist_name == "bernoulli") {
                cfg.dist = tpht::DistSpec::bernoulli(q, m_roots);
            } else {
                throw UsageError("unknown --dist '" + dist_name + "'");
            }
            if (mode_name == "sim") {
                cfg.mode = tpht::SampleMode::simultaneous;
            } else if (mode_name == "indep") {
                cfg.mode = tpht::SampleMode::independent;
            } else {
                throw UsageError("unknown --mode '" + mode_name + "'");
            }
            if (p < 1) throw UsageError("mc: p >= 1 required");
            cfg.n = n;
            cfg.p = p;
            cfg.samples = samples;
            cfg.seed = resolve_seed(seed_opt, seed);
            cfg.threads = threads;

            const tpht::EnsembleRun run = tpht::run_ensemble(cfg);
            json j;
            j["seed"] = cfg.seed;
            j["samples"] = samples;
            j["mode"] = mode_name;
            const double all_ones = tpht::binom_mp_p(static_cast<int>(m_roots), p).to_double();
            j["all_ones_moment"] = all_ones;
            if (samples > 0) {
                j["summary"] = {{"lhs_mean", run.summary.lhs_mean},
                                {"rhs_mean", run.summary.rhs_mean},
                                {"lhs_median", run.summary.lhs_median},
                                {"rhs_median", run.summary.rhs_median},
                                {"rhs_stderr", run.summary.rhs_stderr},
                                {"ks_distance", run.summary.ks},
                                {"log_skewness", run.summary.log_skewness}};
            }
            if (cfg.dist.kind == tpht::DistSpec::Kind::lognormal) {
                const tpht::MomentBounds b = tpht::expected_moment_lognormal(cfg.dist.sigmas, p);
                j["bounds"] = {{"lower", b.lower}, {"upper", b.upper}, {"mean_exact", b.mean_exact}};
            }
            if (cfg.dist.kind == tpht::DistSpec::Kind::bernoulli) {
                json law = json::array();
                for (const auto& atom :
                     tpht::bernoulli_moment_law(static_cast<int>(m_roots), q, p))
                    law.push_back({{"k", atom.k}, {"value", atom.value}, {"prob", atom.prob}});
                j["bernoulli_law"] = std::move(law);
            }

            if ((!svg_path.empty() || !csv_path.empty()) && samples > 0) {
                std::vector<double> pos;
                for (double x : run.rhs_samples)
                    if (x > 0.0) pos.push_back(x);
                if (!pos.empty()) {
                    const auto [lo_it, hi_it] = std::minmax_element(pos.begin(), pos.end());
                    const double lo = std::log10(*lo_it), hi = std::log10(*hi_it);
                    const std::size_t bins = 60;
                    std::vector<double> edges(bins + 1);
                    for (std::size_t k = 0; k <= bins; ++k)
                        edges[k] = std::pow(
                            10.0, lo + (hi - lo) * static_cast<double>(k) /
                                           static_cast<double>(bins));
                    std::vector<std::size_t> counts(bins, 0);
                    for (double x : pos) {
                        const double f = (std::log10(x) - lo) / std::max(hi - lo, 1e-12);
                        std::size_t idx = static_cast<std::size_t>(f * static_cast<double>(bins));
                        if (idx >= bins) idx = bins - 1;
                        ++counts[idx];
                    }
                    if (!svg_path.empty()) {
                        std::vector<std::pair<double, std::string>> marks{
                            {all_ones, "all-ones"}};
                        if (cfg.dist.kind == tpht::DistSpec::Kind::lognormal) {
                            const tpht::MomentBounds b =
                                tpht::expected_moment_lognormal(cfg.dist.sigmas, p);
                            marks.push_back({b.lower, "lower"});
                            marks.push_back({b.upper, "upper"});
                        }
                        tpht::svg::write_histogram(svg_path, edges, counts,
                                                   "RHS moment samples (log scale)", true, marks);
                    }
                    if (!csv_path.empty()) {
                        std::ofstream f(csv_path);
                        f << tpht::vector_to_csv(edges);
                        f << tpht::vector_to_csv(std::vector<double>(counts.begin(), counts.end()));
                    }
                }
            }
            emit(j, out_path);
        } else if (*cmd_fp) {
            const tpht::Symbol s = tpht::Symbol::from_roots(parse_roots(roots_text));
            const tpht::HessMatrix t = tpht::tpht_truncation(s, n);
            const auto ev = tpht::dense_eigenvalues(tpht::transpose(t.dense()));
            json scatter = json::array();
            std::vector<double> xs, ys;
            for (const auto& z : ev) {
                scatter.push_back({z.real(), z.imag()});
                xs.push_back(z.real());
                ys.push_back(z.imag());
            }
            json curve = json::array();
            std::vector<double> cx, cy;
            const std::size_t curve_nodes = 720;
            for (std::size_t k = 0; k <= curve_nodes; ++k) {
                const double theta = 2.0 * M_PI * static_cast<double>(k) /
                                     static_cast<double>(curve_nodes);
                const std::complex<double> w = tpht::symbol_eval(s, theta);
                curve.push_back({w.real(), w.imag()});
                cx.push_back(w.real());
                cy.push_back(w.imag());
            }
            json j;
            j["scatter"] = std::move(scatter);
            j["symbol_curve"] = std::move(curve);
            j["norm_interval"] = {0.0, tpht::one_norm_bound(s, n)};
            if (!svg_path.empty())
                tpht::svg::write_scatter(svg_path, xs, ys, cx, cy,
                                         "computed eigenvalues vs symbol curve");
            emit(j, out_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const tpht::NumericalError& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
