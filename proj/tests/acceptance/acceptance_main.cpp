// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Each criterion carries its own pinned tolerances and wall-clock budget.
#include "core/baselines.hpp"
#include "core/dist.hpp"
#include "core/empirical.hpp"
#include "core/estimators.hpp"
#include "core/fences.hpp"
#include "core/rng.hpp"
#include "core/sample.hpp"
#include "core/study.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

using namespace tailfence;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int g_failures = 0;
std::string g_cli_path;
std::string g_work_dir;

void run_criterion(int id, const char* title, double budget_s,
                   const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("unexpected exception: ") + e.what();
    }
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = dt < budget_s;
    const bool pass = o.pass && in_budget;
    if (!pass) ++g_failures;
    std::printf("%s  criterion %d: %s (%s) [%.2fs, budget %.0fs]\n",
                pass ? "PASS" : "FAIL", id, title, o.detail.c_str(), dt, budget_s);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b);
    return buf;
}

// ---- criterion 1: identifiability round trip on the shape grid ----

Outcome round_trip_grid() {
    const double grid[] = {0.25, 0.5, 1.0, 1.3, 2.0};
    const double p1 = 1.0 / 3.0, p2 = 0.2;
    double worst_iapo = 0.0, worst_nm = 0.0;
    for (double a : grid) {
        for (double l : grid) {
            const DistParams truth{a, l};
            const auto fp = make_frequency_pair(
                p1, right_fence_theory(truth, p1), prob_right_outside(truth, p1),
                p2, right_fence_theory(truth, p2), prob_right_outside(truth, p2),
                0.0, 1.0);
            const auto ia = iapo_solve(fp);
            worst_iapo = std::max({worst_iapo, std::fabs(ia.alpha_hat - a) / a,
                                   std::fabs(ia.lambda_hat - l) / l});
            const auto nm = iapo_nm_solve(fp);
            worst_nm = std::max({worst_nm, std::fabs(nm.alpha_hat - a) / a,
                                 std::fabs(nm.lambda_hat - l) / l});
        }
    }
    Outcome o;
    o.pass = worst_iapo <= 1e-6 && worst_nm <= 1e-4;
    o.detail = fmt("max rel err: root solver %.3g, simplex %.3g", worst_iapo, worst_nm);
    return o;
}

// ---- criterion 2: both fences and probabilities collapse at p = 0.5 ----

Outcome median_identities() {
    const double grid[] = {0.25, 0.5, 1.0, 1.3, 2.0};
    double worst = 0.0;
    for (double a : grid) {
        for (double l : grid) {
            for (const DistParams& params :
                 {DistParams{a, l}, DistParams{a, l, -2.0, 3.0}}) {
                const double med = quantile(params, 0.5);
                worst = std::max(worst, std::fabs(right_fence_theory(params, 0.5) - med) /
                                            std::max(1.0, std::fabs(med)));
                worst = std::max(worst, std::fabs(left_fence_theory(params, 0.5) - med) /
                                            std::max(1.0, std::fabs(med)));
                worst = std::max(worst, std::fabs(prob_right_outside(params, 0.5) - 0.5));
                worst = std::max(worst, std::fabs(prob_left_outside(params, 0.5) - 0.5));
            }
        }
    }
    Outcome o;
    o.pass = worst <= 1e-12;
    o.detail = fmt("max deviation %.3g", worst);
    return o;
}

// ---- criterion 3: location-scale invariance / equivariance ----

Outcome invariance_suite() {
    const std::pair<double, double> shapes[] = {{1.0, 1.0}, {0.5, 1.3}, {2.0, 0.5}};
    const double levels[] = {0.2, 1.0 / 3.0, 0.45};
    double worst = 0.0;
    auto rel = [](double got, double want) {
        return std::fabs(got - want) / std::max(1.0, std::fabs(want));
    };
    for (auto [a, l] : shapes) {
        const DistParams base{a, l};
        const double p0_base = p0_threshold(base);
        for (double mu : {-5.0, 0.0, 5.0}) {
            for (double sigma : {0.5, 1.0, 10.0}) {
                const DistParams moved{a, l, mu, sigma};
                worst = std::max(worst, rel(p0_threshold(moved), p0_base));
                for (double p : levels) {
                    worst = std::max(worst, rel(prob_right_outside(moved, p),
                                                prob_right_outside(base, p)));
                    worst = std::max(worst, rel(prob_left_outside(moved, p),
                                                prob_left_outside(base, p)));
                    worst = std::max(worst, rel(right_fence_theory(moved, p),
                                                mu + sigma * right_fence_theory(base, p)));
                    worst = std::max(worst, rel(left_fence_theory(moved, p),
                                                mu + sigma * left_fence_theory(base, p)));
                }
            }
        }
    }
    Outcome o;
    o.pass = worst <= 1e-10;
    o.detail = fmt("max rel deviation %.3g", worst);
    return o;
}

// ---- criterion 4: ordering of the outside probability in each shape ----

Outcome monotonicity() {
    const double alphas[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    const double lambdas[] = {0.5, 1.0, 2.0};
    int violations = 0;
    for (double p : {0.2, 1.0 / 3.0}) {
        for (double l : lambdas) { // decreasing in alpha at fixed lambda
            for (std::size_t i = 1; i < std::size(alphas); ++i) {
                const double lo = prob_right_outside(DistParams{alphas[i], l}, p);
                const double hi = prob_right_outside(DistParams{alphas[i - 1], l}, p);
                if (!(lo < hi)) ++violations;
            }
        }
        for (double a : alphas) { // decreasing in lambda at fixed alpha
            for (std::size_t i = 1; i < std::size(lambdas); ++i) {
                const double lo = prob_right_outside(DistParams{a, lambdas[i]}, p);
                const double hi = prob_right_outside(DistParams{a, lambdas[i - 1]}, p);
                if (!(lo < hi)) ++violations;
            }
        }
    }
    Outcome o;
    o.pass = violations == 0;
    o.detail = fmt("%.0f ordering violations", double(violations));
    return o;
}

// ---- criterion 5: replicated outside frequencies meet the law of large numbers ----

Outcome lln_agreement() {
    StudyConfig cfg;
    cfg.params = DistParams{1.0, 1.0};
    cfg.reps = 1000;
    cfg.n_min = cfg.n_max = 500;
    cfg.master_seed = 9001;
    cfg.estimators = {StudyEstimator::hill}; // frequencies are sample-level rows
    const auto rows = run_study(cfg);

    double z1 = 0.0, z2 = 0.0;
    for (const auto& r : rows) {
        if (r.estimator != "sample") continue;
        if (r.target == "freq_p1")
            z1 = std::fabs(r.mean - prob_right_outside(cfg.params, cfg.p1)) / r.std_err;
        if (r.target == "freq_p2")
            z2 = std::fabs(r.mean - prob_right_outside(cfg.params, cfg.p2)) / r.std_err;
    }
    Outcome o;
    o.pass = z1 > 0.0 && z2 > 0.0 && z1 <= 3.0 && z2 <= 3.0;
    o.detail = fmt("|z| = %.2f at p=1/3, %.2f at p=1/5", z1, z2);
    return o;
}

// ---- criterion 6: shrinking standard error and bounded bias of the product ----

Outcome consistency_trend() {
    Outcome o;
    o.pass = true;
    std::string detail;
    std::uint64_t seed = 9002;
    for (auto [a, l] : {std::pair{1.0, 1.0}, {0.5, 1.3}}) {
        StudyConfig cfg;
        cfg.params = DistParams{a, l};
        cfg.reps = 500;
        cfg.n_min = 50;
        cfg.n_max = 500;
        cfg.n_step = 450; // sweep {50, 500}
        cfg.master_seed = seed++;
        cfg.estimators = {StudyEstimator::iapo};
        const auto rows = run_study(cfg);

        double se_small = -1.0, se_large = -1.0, mean_large = 0.0;
        for (const auto& r : rows) {
            if (r.estimator != "IAPO" || r.target != "product") continue;
            if (r.n == 50) se_small = r.std_err;
            if (r.n == 500) {
                se_large = r.std_err;
                mean_large = r.mean;
            }
        }
        const double truth = a * l;
        const double bias = std::fabs(mean_large - truth) / truth;
        if (!(se_large > 0.0 && se_small > se_large && bias <= 0.10)) o.pass = false;
        detail += fmt("se %.4f->%.4f, ", se_small, se_large) + fmt("bias %.1f%%; ", 100 * bias);
    }
    o.detail = detail;
    return o;
}

// ---- criterion 7: type-1 quantile equals an independent linear-scan form ----

Outcome quantile_oracle() {
    std::mt19937_64 gen(12345);
    auto unit = [&]() { return (double(gen() >> 11) + 0.5) * 0x1p-53; };
    long checked = 0, mismatches = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 1 + rep % 50;
        std::vector<double> v(n);
        for (auto& x : v) {
            const double u = unit();
            x = (u < 0.5) ? std::floor(20.0 * u) / 2.0 : 1.0 / (1.0 - u); // ties + heavy tail
        }
        const SortedSample s{std::move(v)};
        auto by_scan = [&](double p) {
            const double t = p * double(n);
            for (std::size_t k = 1; k <= n; ++k)
                if (double(k) >= t) return s.order_stat(k);
            return s.order_stat(n);
        };
        auto probe = [&](double p) {
            ++checked;
            if (emp_quantile(s, p) != by_scan(p)) ++mismatches;
        };
        for (int j = 1; j <= 997; ++j) probe(j / 997.0);
        for (std::size_t i = 1; i <= n; ++i) probe(double(i) / double(n));
        probe(1.0);
        probe(1e-9);
    }
    Outcome o;
    o.pass = mismatches == 0;
    o.detail = fmt("%.0f probes, %.0f mismatches", double(checked), double(mismatches));
    return o;
}

// ---- criterion 8: baselines recover the Frechet extreme-value index ----

Outcome baseline_sanity() {
    const DistParams frechet{1.0, 1.0}; // gamma = 1/lambda = 1
    const std::size_t n = 100000, k = 1000;
    double sum_hill = 0.0, sum_pick = 0.0, sum_dedh = 0.0;
    const int reps = 20;
    for (int rep = 0; rep < reps; ++rep) {
        RngStream stream(child_seed(777, std::uint64_t(rep)));
        const SortedSample s = sample(frechet, n, stream);
        sum_hill += hill(s, k).gamma_hat;
        sum_pick += pickands(s, k).gamma_hat;
        sum_dedh += dedh_moment(s, k).gamma_hat;
    }
    const double mh = sum_hill / reps, mp = sum_pick / reps, md = sum_dedh / reps;
    Outcome o;
    o.pass = std::fabs(mh - 1.0) <= 0.10 && std::fabs(mp - 1.0) <= 0.25 &&
             std::fabs(md - 1.0) <= 0.15;
    o.detail = fmt("mean gamma: hill %.4f, pickands %.4f, ", mh, mp) + fmt("moment %.4f", md);
    return o;
}

// ---- criterion 9: simulation CSV is byte-identical across runs and workers ----

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism() {
    Outcome o;
    if (g_cli_path.empty()) {
        o.detail = "command-line binary path not supplied";
        return o;
    }
    auto run = [&](int workers, const std::string& out) {
        const std::string cmd = g_cli_path +
                                " simulate --alpha 1 --lambda 1 --reps 100 --n-min 30"
                                " --n-max 200 --seed 42 --workers " +
                                std::to_string(workers) + " --out " + out +
                                " >/dev/null 2>&1";
        const int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    const std::string f1 = g_work_dir + "/w1.csv";
    const std::string f4 = g_work_dir + "/w4.csv";
    const std::string f4b = g_work_dir + "/w4b.csv";
    if (run(1, f1) != 0 || run(4, f4) != 0 || run(4, f4b) != 0) {
        o.detail = "simulate run failed";
        return o;
    }
    const std::string a = slurp(f1), b = slurp(f4), c = slurp(f4b);
    o.pass = !a.empty() && a == b && b == c;
    o.detail = fmt("%.0f bytes, ", double(a.size())) +
               (a == b ? "workers 1 == 4" : "workers 1 != 4") +
               (b == c ? ", rerun identical" : ", rerun differs");
    return o;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    char tmpl[] = "/tmp/tailfence_acceptance_XXXXXX";
    if (mkdtemp(tmpl)) g_work_dir = tmpl;

    run_criterion(1, "exact-input round trip on the shape grid", 5.0, round_trip_grid);
    run_criterion(2, "fences and outside probabilities collapse at the median", 1.0,
                  median_identities);
    run_criterion(3, "location-scale invariance and equivariance", 1.0, invariance_suite);
    run_criterion(4, "outside probability decreases in each shape parameter", 1.0,
                  monotonicity);
    run_criterion(5, "replicated frequencies match the theoretical probabilities", 60.0,
                  lln_agreement);
    run_criterion(6, "product estimator tightens and stays near the truth", 300.0,
                  consistency_trend);
    run_criterion(7, "empirical quantile equals the linear-scan reference", 5.0,
                  quantile_oracle);
    run_criterion(8, "baseline estimators recover the extreme-value index", 60.0,
                  baseline_sanity);
    run_criterion(9, "simulation output is byte-identical across runs and workers", 120.0,
                  determinism);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
