#include "core/study.hpp"
#include "core/baselines.hpp"
#include "core/empirical.hpp"
#include "core/errors.hpp"
#include "core/estimators.hpp"
#include "core/rng.hpp"
#include "core/sample.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

namespace tailfence {

namespace {

constexpr std::array<StudyEstimator, 5> kEstimatorOrder = {
    StudyEstimator::iapo, StudyEstimator::iapo_nm, StudyEstimator::hill,
    StudyEstimator::pickands, StudyEstimator::dedh};

bool requested(const StudyConfig& cfg, StudyEstimator e) {
    return std::find(cfg.estimators.begin(), cfg.estimators.end(), e) !=
           cfg.estimators.end();
}

bool is_iapo_family(StudyEstimator e) {
    return e == StudyEstimator::iapo || e == StudyEstimator::iapo_nm;
}

struct Welford {
    // two-pass is unnecessary; mean/SSE accumulation in replication order
    long n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    void add(double x) {
        ++n;
        const double d = x - mean;
        mean += d / double(n);
        m2 += d * (x - mean);
    }
    double std_err() const {
        if (n < 2) return 0.0;
        return std::sqrt(m2 / double(n - 1)) / std::sqrt(double(n));
    }
};

StudyRow make_row(int n, const std::string& estimator, const std::string& target,
                  const Welford& w, int n_failed) {
    StudyRow row;
    row.n = n;
    row.estimator = estimator;
    row.target = target;
    row.mean = w.mean;
    row.std_err = w.std_err();
    row.ci_lo = w.mean - 1.96 * row.std_err;
    row.ci_hi = w.mean + 1.96 * row.std_err;
    row.n_failed = n_failed;
    return row;
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<Replication> run_all_replications(const StudyConfig& cfg) {
    std::vector<Replication> reps(cfg.reps);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int r = next.fetch_add(1); r < cfg.reps; r = next.fetch_add(1))
            reps[r] = run_replication(cfg, r);
    };
    unsigned pool = cfg.workers > 0 ? unsigned(cfg.workers)
                                    : std::max(1u, std::thread::hardware_concurrency());
    pool = std::min<unsigned>(pool, unsigned(cfg.reps));
    std::vector<std::thread> threads;
    for (unsigned i = 1; i < pool; ++i) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    return reps;
}

} // namespace

const char* study_estimator_label(StudyEstimator e) {
    switch (e) {
        case StudyEstimator::iapo: return "IAPO";
        case StudyEstimator::iapo_nm: return "IAPO-NM";
        case StudyEstimator::hill: return "Hill";
        case StudyEstimator::pickands: return "Pickands";
        default: return "DEdH";
    }
}

void validate_config(const StudyConfig& cfg) {
    if (cfg.reps < 1)
        throw domain_error("study: reps must be >= 1");
    if (cfg.n_min < 30 || cfg.n_min > cfg.n_max)
        throw domain_error("study: need 30 <= n_min <= n_max");
    if (cfg.n_step < 1)
        throw domain_error("study: n_step must be >= 1");
    if (!(cfg.p1 > 0.0) || !(cfg.p1 < 0.5) || !(cfg.p2 > 0.0) || !(cfg.p2 < 0.5) ||
        cfg.p1 == cfg.p2)
        throw domain_error("study: p1, p2 must be distinct values in (0, 0.5)");
    if (cfg.estimators.empty())
        throw domain_error("study: at least one estimator required");
    if (cfg.workers < 0)
        throw domain_error("study: workers must be >= 0");
}

std::vector<int> sweep_sizes(const StudyConfig& cfg) {
    std::vector<int> sizes;
    for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) sizes.push_back(n);
    return sizes;
}

Replication run_replication(const StudyConfig& cfg, int rep_id) {
    const std::vector<int> sizes = sweep_sizes(cfg);
    RngStream stream(child_seed(cfg.master_seed, std::uint64_t(rep_id)));
    const std::vector<double> raw = draw_raw(cfg.params, std::size_t(cfg.n_max), stream);

    Replication rep;
    rep.fence_p1.resize(sizes.size());
    rep.fence_p2.resize(sizes.size());
    rep.freq_p1.resize(sizes.size());
    rep.freq_p2.resize(sizes.size());
    rep.estimates.resize(sizes.size());

    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const int n = sizes[si];
        const SortedSample s(std::vector<double>(raw.begin(), raw.begin() + n));
        rep.fence_p1[si] = emp_right_fence(s, cfg.p1);
        rep.fence_p2[si] = emp_right_fence(s, cfg.p2);
        rep.freq_p1[si] = count_outside(s, cfg.p1).freq_right;
        rep.freq_p2[si] = count_outside(s, cfg.p2).freq_right;

        for (StudyEstimator e : cfg.estimators) {
            RepEstimate& slot = rep.estimates[si][std::size_t(e)];
            try {
                if (e == StudyEstimator::iapo) {
                    const EstimateResult r = iapo_estimate(s, cfg.p1, cfg.p2,
                                                           cfg.params.mu, cfg.params.sigma);
                    slot = {true, r.alpha_hat, r.lambda_hat, r.alpha_hat * r.lambda_hat};
                } else if (e == StudyEstimator::iapo_nm) {
                    const EstimateResult r = iapo_nm_estimate(s, cfg.p1, cfg.p2);
                    slot = {true, r.alpha_hat, r.lambda_hat, r.alpha_hat * r.lambda_hat};
                } else {
                    const std::size_t k = default_k(std::size_t(n));
                    TailIndexEstimate t{};
                    if (e == StudyEstimator::hill) t = hill(s, k);
                    else if (e == StudyEstimator::pickands) t = pickands(s, k);
                    else t = dedh_moment(s, k);
                    slot = {true, 0.0, 0.0, t.tail_index()};
                }
            } catch (const not_applicable_error&) {
            } catch (const no_bracket_error&) {
            } catch (const degenerate_error&) {
            } catch (const non_convergence_error&) {
            } catch (const domain_error&) {
                // e.g. nonpositive order statistics for a log-based baseline
            }
        }
    }
    return rep;
}

std::vector<StudyRow> run_study(const StudyConfig& cfg) {
    validate_config(cfg);
    const std::vector<int> sizes = sweep_sizes(cfg);
    const std::vector<Replication> reps = run_all_replications(cfg);

    std::vector<StudyRow> rows;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        const int n = sizes[si];

        // sample-level aggregates (fences and frequencies); never fail
        Welford wf1, wf2, wq1, wq2;
        for (const Replication& rep : reps) {
            wf1.add(rep.fence_p1[si]);
            wf2.add(rep.fence_p2[si]);
            wq1.add(rep.freq_p1[si]);
            wq2.add(rep.freq_p2[si]);
        }
        rows.push_back(make_row(n, "sample", "fence_p1", wf1, 0));
        rows.push_back(make_row(n, "sample", "fence_p2", wf2, 0));
        rows.push_back(make_row(n, "sample", "freq_p1", wq1, 0));
        rows.push_back(make_row(n, "sample", "freq_p2", wq2, 0));

        for (StudyEstimator e : kEstimatorOrder) {
            if (!requested(cfg, e)) continue;
            Welford wa, wl, wp;
            int failed = 0;
            for (const Replication& rep : reps) {
                const RepEstimate& r = rep.estimates[si][std::size_t(e)];
                if (!r.ok) { ++failed; continue; }
                if (is_iapo_family(e)) {
                    wa.add(r.alpha);
                    wl.add(r.lambda);
                }
                wp.add(r.product);
            }
            if (wp.n == 0)
                throw not_applicable_error(std::string("study: estimator ") +
                                           study_estimator_label(e) +
                                           " failed in every replication at n=" +
                                           std::to_string(n));
            const std::string label = study_estimator_label(e);
            if (is_iapo_family(e)) {
                rows.push_back(make_row(n, label, "alpha", wa, failed));
                rows.push_back(make_row(n, label, "lambda", wl, failed));
            }
            rows.push_back(make_row(n, label, "product", wp, failed));
        }
    }
    return rows;
}

std::string study_csv(const std::vector<StudyRow>& rows) {
    std::string out = "n,estimator,target,mean,std_err,ci_lo,ci_hi,n_failed\n";
    for (const StudyRow& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += r.estimator;
        out += ',';
        out += r.target;
        out += ',';
        out += format_g17(r.mean);
        out += ',';
        out += format_g17(r.std_err);
        out += ',';
        out += format_g17(r.ci_lo);
        out += ',';
        out += format_g17(r.ci_hi);
        out += ',';
        out += std::to_string(r.n_failed);
        out += '\n';
    }
    return out;
}

std::vector<CompareRow> compare_baselines(const StudyConfig& cfg) {
    validate_config(cfg);
    bool has_baseline = false, has_iapo = false;
    for (StudyEstimator e : cfg.estimators)
        (is_iapo_family(e) ? has_iapo : has_baseline) = true;
    if (!has_baseline || !has_iapo)
        throw domain_error("compare: need at least one IAPO variant and one baseline");

    const std::vector<int> sizes = sweep_sizes(cfg);
    const std::vector<Replication> reps = run_all_replications(cfg);
    const double truth = tail_index(cfg.params);

    std::vector<CompareRow> rows;
    for (std::size_t si = 0; si < sizes.size(); ++si) {
        CompareRow row;
        row.n = sizes[si];
        row.rmse.fill(std::nan(""));
        for (StudyEstimator e : kEstimatorOrder) {
            if (!requested(cfg, e)) continue;
            double sse = 0.0;
            long m = 0;
            for (const Replication& rep : reps) {
                const RepEstimate& r = rep.estimates[si][std::size_t(e)];
                if (!r.ok) continue;
                sse += (r.product - truth) * (r.product - truth);
                ++m;
            }
            if (m > 0) row.rmse[std::size_t(e)] = std::sqrt(sse / double(m));
        }
        rows.push_back(row);
    }
    return rows;
}

std::string compare_csv(const StudyConfig& cfg, const std::vector<CompareRow>& rows) {
    std::string out = "n";
    for (StudyEstimator e : kEstimatorOrder)
        if (requested(cfg, e)) { out += ','; out += study_estimator_label(e); }
    out += '\n';
    for (const CompareRow& r : rows) {
        out += std::to_string(r.n);
        for (StudyEstimator e : kEstimatorOrder)
            if (requested(cfg, e)) { out += ','; out += format_g17(r.rmse[std::size_t(e)]); }
        out += '\n';
    }
    return out;
}

} // namespace tailfence
