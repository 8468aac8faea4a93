// tailfence command-line tool: sampling, fence/probability theory, tail
// parameter estimation and the replicated simulation study, all through the
// public C API.
#include "tailfence/tailfence.h"

#include "CLI11.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

int exit_code_for(tf_status status) {
    switch (status) {
        case TF_OK: return 0;
        case TF_ERR_INVALID_ARGUMENT:
        case TF_ERR_PARSE: return 2;
        case TF_ERR_NOT_APPLICABLE:
        case TF_ERR_DEGENERATE: return 3;
        case TF_ERR_NO_BRACKET:
        case TF_ERR_NON_CONVERGENCE: return 4;
        default: return 1;
    }
}

// Returns the mapped exit code after reporting a failed call.
int report_failure(tf_status status) {
    std::cerr << "error: " << tf_last_error_message() << "\n";
    return exit_code_for(status);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// --seed flag with TAILFENCE_SEED fallback (flag wins).
bool resolve_seed(const std::optional<std::uint64_t>& flag, std::uint64_t& out) {
    if (flag) { out = *flag; return true; }
    if (const char* env = std::getenv("TAILFENCE_SEED")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && end != env) { out = std::uint64_t(v); return true; }
        std::cerr << "error: TAILFENCE_SEED is not an unsigned integer\n";
        return false;
    }
    std::cerr << "error: --seed required (or set TAILFENCE_SEED)\n";
    return false;
}

struct DistHandle {
    tf_dist* ptr = nullptr;
    ~DistHandle() { tf_dist_destroy(ptr); }
};

struct SampleHandle {
    tf_sample* ptr = nullptr;
    ~SampleHandle() { tf_sample_destroy(ptr); }
};

int run_sample(double alpha, double lambda, double mu, double sigma,
               std::size_t n, const std::optional<std::uint64_t>& seed_flag,
               const std::string& out_path) {
    std::uint64_t seed = 0;
    if (!resolve_seed(seed_flag, seed)) return 2;
    DistHandle dist;
    tf_status st = tf_dist_create(alpha, lambda, mu, sigma, &dist.ptr);
    if (st != TF_OK) return report_failure(st);
    std::vector<double> values(n);
    st = tf_dist_draw(dist.ptr, n, seed, values.data());
    if (st != TF_OK) return report_failure(st);
    st = tf_write_sample_file(out_path.c_str(), values.data(), n);
    if (st != TF_OK) return report_failure(st);
    return 0;
}

int run_theory(double alpha, double lambda, double mu, double sigma,
               const std::vector<double>& ps) {
    DistHandle dist;
    tf_status st = tf_dist_create(alpha, lambda, mu, sigma, &dist.ptr);
    if (st != TF_OK) return report_failure(st);
    double p0 = 0.0;
    st = tf_p0_threshold(dist.ptr, &p0);
    if (st != TF_OK) return report_failure(st);
    std::string out = "p,left_fence,right_fence,p_left,p_right,p0\n";
    for (double p : ps) {
        double lf = 0, rf = 0, pl = 0, pr = 0;
        if ((st = tf_left_fence(dist.ptr, p, &lf)) != TF_OK) return report_failure(st);
        if ((st = tf_right_fence(dist.ptr, p, &rf)) != TF_OK) return report_failure(st);
        if ((st = tf_prob_left_outside(dist.ptr, p, &pl)) != TF_OK) return report_failure(st);
        if ((st = tf_prob_right_outside(dist.ptr, p, &pr)) != TF_OK) return report_failure(st);
        out += g17(p) + "," + g17(lf) + "," + g17(rf) + "," + g17(pl) + "," +
               g17(pr) + "," + g17(p0) + "\n";
    }
    std::cout << out;
    return 0;
}

int run_estimate(const std::string& in_path, const std::string& method,
                 double p1, double p2,
                 const std::optional<double>& mu_flag,
                 const std::optional<double>& sigma_flag,
                 const std::optional<std::pair<double, double>>& match_q) {
    double* values = nullptr;
    std::size_t n = 0;
    tf_status st = tf_read_sample_file(in_path.c_str(), &values, &n);
    if (st != TF_OK) return report_failure(st);
    SampleHandle sample;
    st = tf_sample_create(values, n, &sample.ptr);
    tf_free_buffer(values);
    if (st != TF_OK) return report_failure(st);

    const double mu = mu_flag.value_or(0.0);
    const double sigma = sigma_flag.value_or(1.0);

    tf_estimate est{};
    if (method == "iapo")
        st = tf_iapo_estimate(sample.ptr, p1, p2, mu, sigma, &est);
    else
        st = tf_iapo_nm_estimate(sample.ptr, p1, p2, &est);
    if (st != TF_OK) return report_failure(st);

    double mu_out = std::nan(""), sigma_out = std::nan("");
    if (match_q) {
        st = tf_match_location_scale(sample.ptr, est.alpha_hat, est.lambda_hat,
                                     match_q->first, match_q->second, &mu_out, &sigma_out);
        if (st != TF_OK) return report_failure(st);
    } else if (mu_flag || sigma_flag || method == "iapo") {
        mu_out = mu;
        sigma_out = sigma;
    }

    std::cout << "method,alpha_hat,lambda_hat,product,mu_hat,sigma_hat,residual,iterations\n"
              << method << "," << g17(est.alpha_hat) << "," << g17(est.lambda_hat) << ","
              << g17(est.alpha_hat * est.lambda_hat) << "," << g17(mu_out) << ","
              << g17(sigma_out) << "," << g17(est.residual) << "," << est.iterations
              << "\n";
    return 0;
}

bool parse_estimators(const std::string& list, unsigned& mask) {
    mask = 0;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const std::size_t comma = list.find(',', pos);
        const std::string token =
            list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (token == "iapo") mask |= TF_EST_IAPO;
        else if (token == "iapo-nm") mask |= TF_EST_IAPO_NM;
        else if (token == "hill") mask |= TF_EST_HILL;
        else if (token == "pickands") mask |= TF_EST_PICKANDS;
        else if (token == "dedh") mask |= TF_EST_DEDH;
        else {
            std::cerr << "error: unknown estimator '" << token << "'\n";
            return false;
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return mask != 0;
}

int run_study_command(bool compare, double alpha, double lambda, double mu, double sigma,
                      int reps, int n_min, int n_max, int n_step, double p1, double p2,
                      const std::optional<std::uint64_t>& seed_flag, int workers,
                      const std::string& estimators, const std::string& out_path) {
    std::uint64_t seed = 0;
    if (!resolve_seed(seed_flag, seed)) return 2;
    unsigned mask = 0;
    if (!parse_estimators(estimators, mask)) return 2;

    tf_study_config cfg{};
    cfg.alpha = alpha;
    cfg.lambda = lambda;
    cfg.mu = mu;
    cfg.sigma = sigma;
    cfg.reps = reps;
    cfg.n_min = n_min;
    cfg.n_max = n_max;
    cfg.n_step = n_step;
    cfg.p1 = p1;
    cfg.p2 = p2;
    cfg.master_seed = seed;
    cfg.estimators = mask;
    cfg.workers = workers;

    char* csv = nullptr;
    const tf_status st = compare ? tf_compare_csv(&cfg, &csv) : tf_run_study_csv(&cfg, &csv);
    if (st != TF_OK) return report_failure(st);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        tf_free_string(csv);
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return 2;
    }
    out << csv;
    tf_free_string(csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymmetric p-fences and tail parameter estimation for the "
                 "Exponentiated-Frechet family"};
    app.require_subcommand(1);

    // ---- sample ----
    auto* cmd_sample = app.add_subcommand("sample", "Draw a reproducible sample to a file");
    double s_alpha = 0, s_lambda = 0, s_mu = 0, s_sigma = 1;
    std::size_t s_n = 0;
    std::optional<std::uint64_t> s_seed;
    std::string s_out;
    cmd_sample->add_option("--alpha", s_alpha)->required();
    cmd_sample->add_option("--lambda", s_lambda)->required();
    cmd_sample->add_option("--mu", s_mu);
    cmd_sample->add_option("--sigma", s_sigma);
    cmd_sample->add_option("--n", s_n)->required();
    cmd_sample->add_option("--seed", s_seed);
    cmd_sample->add_option("--out", s_out)->required();

    // ---- theory ----
    auto* cmd_theory = app.add_subcommand("theory", "Print fences and outside probabilities");
    double t_alpha = 0, t_lambda = 0, t_mu = 0, t_sigma = 1;
    std::vector<double> t_ps;
    cmd_theory->add_option("--alpha", t_alpha)->required();
    cmd_theory->add_option("--lambda", t_lambda)->required();
    cmd_theory->add_option("--mu", t_mu);
    cmd_theory->add_option("--sigma", t_sigma);
    cmd_theory->add_option("--p", t_ps)->required();

    // ---- estimate ----
    auto* cmd_estimate = app.add_subcommand("estimate", "Estimate (alpha, lambda) from a sample file");
    std::string e_in, e_method;
    double e_p1 = 0, e_p2 = 0;
    std::optional<double> e_mu, e_sigma;
    std::string e_match;
    cmd_estimate->add_option("--in", e_in)->required();
    cmd_estimate->add_option("--method", e_method)->required()
        ->check(CLI::IsMember({"iapo", "iapo-nm"}));
    cmd_estimate->add_option("--p1", e_p1)->required();
    cmd_estimate->add_option("--p2", e_p2)->required();
    auto* mu_opt = cmd_estimate->add_option("--mu", e_mu);
    auto* sigma_opt = cmd_estimate->add_option("--sigma", e_sigma);
    auto* match_opt = cmd_estimate->add_option("--match-quantiles", e_match,
                                               "q_lo,q_hi for location/scale matching");
    match_opt->excludes(mu_opt)->excludes(sigma_opt);

    // ---- simulate / compare ----
    const double third = 0.3333333333333333, fifth = 0.2;
    struct StudyFlags {
        double alpha = 0, lambda = 0, mu = 0, sigma = 1;
        int reps = 1000, n_min = 30, n_max = 500, n_step = 1, workers = 0;
        double p1, p2;
        std::optional<std::uint64_t> seed;
        std::string estimators, out;
    } sim, cmp;
    sim.p1 = cmp.p1 = third;
    sim.p2 = cmp.p2 = fifth;
    sim.estimators = "iapo,iapo-nm";
    cmp.estimators = "iapo,iapo-nm,hill,pickands,dedh";

    auto add_study_flags = [](CLI::App* cmd, StudyFlags& f) {
        cmd->add_option("--alpha", f.alpha)->required();
        cmd->add_option("--lambda", f.lambda)->required();
        cmd->add_option("--mu", f.mu);
        cmd->add_option("--sigma", f.sigma);
        cmd->add_option("--reps", f.reps);
        cmd->add_option("--n-min", f.n_min);
        cmd->add_option("--n-max", f.n_max);
        cmd->add_option("--n-step", f.n_step);
        cmd->add_option("--p1", f.p1);
        cmd->add_option("--p2", f.p2);
        cmd->add_option("--seed", f.seed);
        cmd->add_option("--workers", f.workers);
        cmd->add_option("--estimators", f.estimators, "comma list: iapo,iapo-nm,hill,pickands,dedh");
        cmd->add_option("--out", f.out)->required();
    };
    auto* cmd_simulate = app.add_subcommand("simulate", "Run the replicated simulation study");
    add_study_flags(cmd_simulate, sim);
    auto* cmd_compare = app.add_subcommand("compare", "RMSE comparison table across estimators");
    add_study_flags(cmd_compare, cmp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return 2;
    }

    if (cmd_sample->parsed())
        return run_sample(s_alpha, s_lambda, s_mu, s_sigma, s_n, s_seed, s_out);
    if (cmd_theory->parsed())
        return run_theory(t_alpha, t_lambda, t_mu, t_sigma, t_ps);
    if (cmd_estimate->parsed()) {
        std::optional<std::pair<double, double>> match;
        if (!e_match.empty()) {
            double lo = 0, hi = 0;
            if (std::sscanf(e_match.c_str(), "%lf,%lf", &lo, &hi) != 2) {
                std::cerr << "error: --match-quantiles expects q_lo,q_hi\n";
                return 2;
            }
            match = std::make_pair(lo, hi);
        }
        return run_estimate(e_in, e_method, e_p1, e_p2, e_mu, e_sigma, match);
    }
    const bool is_compare = cmd_compare->parsed();
    const StudyFlags& f = is_compare ? cmp : sim;
    return run_study_command(is_compare, f.alpha, f.lambda, f.mu, f.sigma, f.reps,
                             f.n_min, f.n_max, f.n_step, f.p1, f.p2, f.seed,
                             f.workers, f.estimators, f.out);
}
