// Command-line front end: single evaluations of the Laplace-transform stack,
// saddlepoint solves, tail probability/density approximations, exact tilted
// sampling, and the built-in reference tables.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lognsum/cramer.hpp"
#include "lognsum/format.hpp"
#include "lognsum/laplace.hpp"
#include "lognsum/montecarlo.hpp"
#include "lognsum/saddlepoint.hpp"
#include "lognsum/tables.hpp"
#include "lognsum/tilted.hpp"

namespace {

using namespace lognsum;

struct GlobalOpts {
    std::string format = "plain";
    std::uint64_t seed = 0;
    int threads = 0;
    QuadratureConfig cfg;
};

void emit(const OutputTable& t, const GlobalOpts& g) {
    if (g.format == "csv") {
        std::cout << to_csv(t);
    } else if (g.format == "json") {
        std::cout << to_json(t);
    } else {
        std::cout << to_plain(t);
    }
}

void add_meta(OutputTable& t, const std::string& k, const std::string& v) {
    t.meta.emplace_back(k, v);
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_grid(const std::string& s) {
    // "a:b:k" -> k equally spaced points from a to b inclusive
    const auto p1 = s.find(':');
    const auto p2 = s.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) {
        throw UsageError("--x-grid expects start:stop:count");
    }
    const double a = std::stod(s.substr(0, p1));
    const double b = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
    const int k = std::stoi(s.substr(p2 + 1));
    if (k < 1) throw UsageError("--x-grid count must be >= 1");
    std::vector<double> xs;
    for (int i = 0; i < k; ++i) {
        xs.push_back(k == 1 ? a : a + (b - a) * i / (k - 1));
    }
    return xs;
}

int run(int argc, char** argv) {
    GlobalOpts g;
    if (const char* env = std::getenv("LOGNSUM_QUAD_NODES")) {
        g.cfg.nodes = std::atoi(env);
    }

    CLI::App app{"left-tail probabilities and densities of lognormal sums"};
    app.require_subcommand(1);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"plain", "csv", "json"}));
    app.add_option("--seed", g.seed, "RNG seed for stochastic commands");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)");

    double sigma = 0.25, theta = 1.0, x = 0.5;
    int k = 0, n = 1, power = 1;
    long long R = 100000;
    bool refine = false;
    std::string mode, method = "saddle2", pdf_variant = "loo", strategy = "product";
    std::string asym_form = "corrected", table_id, algo = "auto", xgrid;
    long long count = 10;
    std::vector<double> xs;

    auto* laplace_cmd = app.add_subcommand("laplace", "Laplace transform L_k(theta) of LN(0, sigma^2)");
    laplace_cmd->add_option("--sigma", sigma)->required();
    laplace_cmd->add_option("--theta", theta)->required();
    laplace_cmd->add_option("--k", k)->check(CLI::Range(0, 4));
    laplace_cmd->add_option("--power", power, "report L_k(theta)^power")->check(CLI::PositiveNumber);
    laplace_cmd->add_option("--R", R, "replications for --is");
    auto* f_numeric = laplace_cmd->add_flag("--numeric", "quadrature evaluation (default)");
    auto* f_asym = laplace_cmd->add_flag("--asymptotic", "closed-form approximation");
    auto* f_is = laplace_cmd->add_flag("--is", "importance-sampling estimate");
    laplace_cmd->add_option("--asym-form", asym_form, "plain|corrected (with --asymptotic)")
        ->check(CLI::IsMember({"plain", "corrected"}));
    laplace_cmd
        ->add_option("--strategy", strategy, "plain|bias-corrected|product (with --is and --power > 1)")
        ->check(CLI::IsMember({"plain", "bias-corrected", "product"}));

    auto* theta_cmd = app.add_subcommand("theta", "saddlepoint theta(x): closed form and refinement");
    theta_cmd->add_option("--sigma", sigma)->required();
    theta_cmd->add_option("--x", x)->required();
    theta_cmd->add_flag("--refine", refine, "Newton-refine theta_tilde(x)");

    auto* cdf_cmd = app.add_subcommand("cdf", "left-tail probability P(S_n <= n x)");
    auto* pdf_cmd = app.add_subcommand("pdf", "density of S_n at n x");
    for (auto* cmd : {cdf_cmd, pdf_cmd}) {
        cmd->add_option("--sigma", sigma)->required();
        cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--x", xs, "per-summand target(s)");
        cmd->add_option("--x-grid", xgrid, "start:stop:count");
        cmd->add_option("--method", method)->check(CLI::IsMember({"saddle1", "saddle2", "mc"}));
        cmd->add_option("--R", R)->check(CLI::PositiveNumber);
    }
    cdf_cmd->add_option("--mode", mode, "mc Laplace factor: numeric|product|single")
        ->check(CLI::IsMember({"numeric", "product", "single"}));
    pdf_cmd->add_option("--variant", pdf_variant, "mc weighting: sum|loo")
        ->check(CLI::IsMember({"sum", "loo"}));

    auto* sample_cmd = app.add_subcommand("sample", "exact draws from the tilted law");
    sample_cmd->add_option("--sigma", sigma)->required();
    sample_cmd->add_option("--theta", theta)->required();
    sample_cmd->add_option("--count", count)->check(CLI::PositiveNumber);
    sample_cmd->add_option("--algo", algo)->check(CLI::IsMember({"naive", "gamma", "auto"}));

    std::vector<std::string> table_ids;
    for (const auto& t : reference_tables()) table_ids.push_back(t.id);
    auto* tables_cmd = app.add_subcommand("tables", "built-in reference tables");
    tables_cmd->add_option("--table", table_id)->required()->check(CLI::IsMember(table_ids));
    tables_cmd->add_option("--R", R, "0 = deterministic columns only");

    // global options (--format, --seed, --threads) may follow the subcommand
    for (auto* cmd : {laplace_cmd, theta_cmd, cdf_cmd, pdf_cmd, sample_cmd, tables_cmd}) {
        cmd->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const LognormalModel model(sigma);

    if (*laplace_cmd) {
        OutputTable t;
        add_meta(t, "sigma", format_double(sigma));
        if (*f_is) {
            if (k != 0) throw UsageError("laplace --is: only k = 0 is estimable");
            PowerStrategy strat = PowerStrategy::product;
            if (strategy == "plain") strat = PowerStrategy::plain_power;
            if (strategy == "bias-corrected") strat = PowerStrategy::bias_corrected;
            const MonteCarloEstimate e = laplace_power_estimate(model, theta, power, R, strat, g.seed, g.threads);
            t.columns = {"theta", "k", "value", "half_width"};
            t.rows.push_back({theta, static_cast<double>(k), e.value, e.half_width});
            add_meta(t, "R", std::to_string(R));
            add_meta(t, "seed", std::to_string(g.seed));
        } else if (*f_asym) {
            double lv;
            if (k == 0) {
                const AsymptoticForm form =
                    (asym_form == "plain") ? AsymptoticForm::plain : AsymptoticForm::corrected;
                lv = log_laplace_asymptotic(model, theta, form);
            } else {
                lv = log_moment_asymptotic(model, theta, k);
            }
            t.columns = {"theta", "k", "value"};
            t.rows.push_back({theta, static_cast<double>(k), std::exp(power * lv)});
        } else {
            (void)f_numeric;
            const double lv = log_laplace_k(model, theta, k, g.cfg);
            t.columns = {"theta", "k", "value"};
            t.rows.push_back({theta, static_cast<double>(k), std::exp(power * lv)});
        }
        if (power != 1) add_meta(t, "power", std::to_string(power));
        emit(t, g);
        return 0;
    }

    if (*theta_cmd) {
        OutputTable t;
        add_meta(t, "sigma", format_double(sigma));
        if (refine) {
            const SaddleSolve s = theta_solve(model, x, g.cfg);
            t.columns = {"x", "gamma", "theta_tilde", "theta", "iterations", "residual"};
            t.rows.push_back({x, s.gamma_x, s.theta_tilde, s.theta,
                              static_cast<double>(s.iterations), s.residual});
        } else {
            t.columns = {"x", "gamma", "theta_tilde"};
            t.rows.push_back({x, gamma_of_x(model, x), theta_tilde(model, x)});
        }
        emit(t, g);
        return 0;
    }

    if (*cdf_cmd || *pdf_cmd) {
        if (!xgrid.empty()) {
            auto grid = parse_grid(xgrid);
            xs.insert(xs.end(), grid.begin(), grid.end());
        }
        if (xs.empty()) throw UsageError("cdf/pdf: provide --x or --x-grid");
        const bool is_pdf = static_cast<bool>(*pdf_cmd);
        OutputTable t;
        add_meta(t, "sigma", format_double(sigma));
        add_meta(t, "n", std::to_string(n));
        add_meta(t, "method", method);
        bool degenerate = false;
        if (method == "mc") {
            t.columns = {"x", "nx", "theta_tilde", "value", "half_width"};
            std::size_t row = 0;
            for (double xi : xs) {
                MonteCarloEstimate e;
                if (is_pdf) {
                    const PdfVariant pv =
                        (pdf_variant == "sum") ? PdfVariant::sum_weight : PdfVariant::leave_one_out_weight;
                    e = pdf_is_estimate(model, n, xi, R, pv, derive_seed(g.seed, row), g.cfg, g.threads);
                } else {
                    LaplaceMode lm = LaplaceMode::numeric;
                    if (mode == "product") lm = LaplaceMode::is_product;
                    if (mode == "single") lm = LaplaceMode::is_single;
                    e = cdf_is_estimate(model, n, xi, R, lm, derive_seed(g.seed, row), g.cfg, g.threads);
                }
                degenerate = degenerate || e.degenerate;
                t.rows.push_back({xi, n * xi, theta_tilde(model, xi), e.value, e.half_width});
                ++row;
            }
            add_meta(t, "R", std::to_string(R));
            add_meta(t, "seed", std::to_string(g.seed));
            if (degenerate) add_meta(t, "warning", "degenerate sample: all indicators zero");
        } else {
            const int ord = (method == "saddle1") ? 1 : 2;
            t.columns = {"x", "nx", "theta", "value"};
            for (double xi : xs) {
                const SaddlepointResult r = saddlepoint_eval(model, n, xi, g.cfg);
                double v;
                if (is_pdf) {
                    v = (ord == 1) ? r.pdf1 : r.pdf2;
                } else {
                    v = (ord == 1) ? r.cdf1 : r.cdf2;
                }
                t.rows.push_back({xi, n * xi, r.theta_x, v});
            }
        }
        emit(t, g);
        return 0;
    }

    if (*sample_cmd) {
        OutputTable t;
        t.columns = {"draw"};
        SamplerReport rep;
        Rng rng(g.seed);
        const TiltedSampler sampler =
            (algo == "auto")
                ? TiltedSampler(model, theta, g.cfg)
                : TiltedSampler(model, theta,
                                algo == "naive" ? TiltedSampler::Algo::naive
                                                : TiltedSampler::Algo::gamma_proposal);
        for (long long i = 0; i < count; ++i) t.rows.push_back({sampler.draw(rng, &rep)});
        add_meta(t, "sigma", format_double(sigma));
        add_meta(t, "theta", format_double(theta));
        add_meta(t, "seed", std::to_string(g.seed));
        add_meta(t, "algorithm",
                 sampler.algo() == TiltedSampler::Algo::naive ? "naive" : "gamma");
        add_meta(t, "accepted", std::to_string(rep.draws_accepted));
        add_meta(t, "proposals", std::to_string(rep.proposals_used));
        add_meta(t, "acceptance", format_double(rep.acceptance()));
        emit(t, g);
        return 0;
    }

    if (*tables_cmd) {
        const TableSpec& spec = find_table(table_id);
        OutputTable t = compute_table(spec, R, g.seed, g.cfg, g.threads);
        add_meta(t, "table", spec.id);
        add_meta(t, "sigma", format_double(spec.sigma));
        add_meta(t, "n", std::to_string(spec.n));
        if (R > 0) {
            add_meta(t, "R", std::to_string(R));
            add_meta(t, "seed", std::to_string(g.seed));
        }
        emit(t, g);
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const lognsum::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
