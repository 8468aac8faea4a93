#pragma once

#include "core/dist.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tailfence {

enum class StudyEstimator { iapo, iapo_nm, hill, pickands, dedh };

const char* study_estimator_label(StudyEstimator e);

struct StudyConfig {
    DistParams params{1.0, 1.0, 0.0, 1.0};
    int reps = 1000;
    int n_min = 30;
    int n_max = 500;
    int n_step = 1;
    double p1 = 1.0 / 3.0;
    double p2 = 1.0 / 5.0;
    std::uint64_t master_seed = 0;
    std::vector<StudyEstimator> estimators{StudyEstimator::iapo, StudyEstimator::iapo_nm};
    int workers = 0; // 0 = all available cores
};

// Validates invariants (reps >= 1, 30 <= n_min <= n_max, step >= 1, distinct
// levels in (0,0.5)); throws domain_error on violation.
void validate_config(const StudyConfig& cfg);

// Sample sizes of the sweep: n_min, n_min+n_step, ..., <= n_max.
std::vector<int> sweep_sizes(const StudyConfig& cfg);

struct StudyRow {
    int n = 0;
    std::string estimator;
    std::string target;
    double mean = 0.0;
    double std_err = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    int n_failed = 0;
};

// Raw per-replication results for one estimator at one sample size.
struct RepEstimate {
    bool ok = false;
    double alpha = 0.0;
    double lambda = 0.0;
    double product = 0.0; // tail-index estimate
};

// Per-replication record across the n sweep.
struct Replication {
    // indexed by position in sweep_sizes()
    std::vector<double> fence_p1, fence_p2, freq_p1, freq_p2;
    std::vector<std::array<RepEstimate, 5>> estimates; // slot = StudyEstimator value
};

// Draws ONE sample of size n_max from the child stream of (master_seed,
// rep_id); every sweep size n uses the first n draws (re-sorted), so smaller
// samples are nested inside larger ones.  Estimator failures are recorded,
// never thrown.
Replication run_replication(const StudyConfig& cfg, int rep_id);

// Runs all replications (parallel across a worker pool, deterministic
// regardless of worker count) and aggregates mean / standard error / 0.95 CI
// per (n, estimator, target).  Throws not_applicable_error if a requested
// estimator failed in every replication at some n.
std::vector<StudyRow> run_study(const StudyConfig& cfg);

// CSV serialization of study rows: fixed header, 17 significant digits,
// LF line endings.
std::string study_csv(const std::vector<StudyRow>& rows);

struct CompareRow {
    int n = 0;
    // RMSE of the tail-index estimate per estimator, NaN when never applicable
    std::array<double, 5> rmse{};
};

// RMSE of the tail-index estimate against the true alpha*lambda, per
// estimator per n.  Purely reporting: no ordering assertion.
std::vector<CompareRow> compare_baselines(const StudyConfig& cfg);

std::string compare_csv(const StudyConfig& cfg, const std::vector<CompareRow>& rows);

} // namespace tailfence
