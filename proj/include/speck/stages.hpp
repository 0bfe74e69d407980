#pragma once

#include <span>

#include "speck/timing.hpp"

namespace speck::stages {

// One row of a builtin stage table.  `parallel_fraction` is the share of the
// stage's computational volume that runs across workers; 0 marks a strictly
// sequential stage.  The instrumented kernels emit exactly these labels, so
// the tables here are the single source of truth for both the catalog and
// the phase instrumentation.
struct StageSpec {
    const char* label;
    double weight;
    double parallel_fraction;
};

constexpr PhaseRole role_of(const StageSpec& s) {
    return s.parallel_fraction > 0.0 ? PhaseRole::parallel : PhaseRole::serial;
}

// Apriori: the ten pseudocode steps; the three bare assignments and the
// outer while loop cannot be spread across workers.
inline constexpr StageSpec apriori[] = {
    {"find_large_1_itemsets", 1.0, 1.0},
    {"init_k", 1.0, 0.0},
    {"while_control", 1.0, 0.0},
    {"gen_candidates", 1.0, 1.0},
    {"transaction_loop", 1.0, 1.0},
    {"subset_select", 1.0, 1.0},
    {"candidate_loop", 1.0, 1.0},
    {"count_increment", 1.0, 0.0},
    {"filter_frequent", 1.0, 1.0},
    {"advance_k", 1.0, 0.0},
};

// kNN: nine steps; the assignments and the final vote-sum branch stay serial.
inline constexpr StageSpec knn[] = {
    {"init_k", 1.0, 0.0},
    {"distance_loop", 1.0, 1.0},
    {"euclidean_metric", 1.0, 1.0},
    {"sort_distances", 1.0, 1.0},
    {"init_votes", 1.0, 0.0},
    {"vote_loop", 1.0, 1.0},
    {"membership_test", 1.0, 1.0},
    {"vote_assign", 1.0, 0.0},
    {"majority_branch", 1.0, 0.0},
};

// CDF 9/7 lifting: 21 stages, 14 separable.  Named after the sections of the
// lifting implementation; the per-sample passes are separable, the setup,
// boundary and loop-control steps are not.
inline constexpr StageSpec cdf97[] = {
    {"validate_args", 1.0, 0.0},
    {"plan_levels", 1.0, 0.0},
    {"load_input", 1.0, 1.0},
    {"predict1_products", 1.0, 1.0},
    {"predict1_accumulate", 1.0, 1.0},
    {"predict1_boundary", 1.0, 0.0},
    {"update1_products", 1.0, 1.0},
    {"update1_accumulate", 1.0, 1.0},
    {"update1_boundary", 1.0, 0.0},
    {"predict2_products", 1.0, 1.0},
    {"predict2_accumulate", 1.0, 1.0},
    {"predict2_boundary", 1.0, 0.0},
    {"update2_products", 1.0, 1.0},
    {"update2_accumulate", 1.0, 1.0},
    {"update2_boundary", 1.0, 0.0},
    {"scale_even", 1.0, 1.0},
    {"scale_odd", 1.0, 1.0},
    {"deinterleave_approx", 1.0, 1.0},
    {"deinterleave_detail", 1.0, 1.0},
    {"emit_coefficients", 1.0, 1.0},
    {"level_control", 1.0, 0.0},
};

// FFT: profiled weights in percent of runtime.  The butterfly's outer stage
// loop is sequential, its two inner loops are not, hence 2/3.  The remaining
// 34.6% of the runtime is carried as an explicitly serial "other" stage.
inline constexpr StageSpec fft[] = {
    {"twiddle", 25.4, 1.0},
    {"butterfly", 21.8, 2.0 / 3.0},
    {"complex-multiply", 18.2, 1.0},
    {"other", 34.6, 0.0},
};

// Naive Bayes: nine operations, four of which fan out across workers.  The
// last three mirror the global-table step: search, classification by
// probability products, write-back.
inline constexpr StageSpec nbc[] = {
    {"partition_data", 1.0, 1.0},
    {"count_labels", 1.0, 1.0},
    {"count_features", 1.0, 1.0},
    {"merge_counts", 1.0, 0.0},
    {"compute_model", 1.0, 0.0},
    {"table_search", 1.0, 0.0},
    {"posterior_products", 1.0, 1.0},
    {"argmax_select", 1.0, 0.0},
    {"table_write", 1.0, 0.0},
};

// Seeds a PhaseTimings with every stage label at zero elapsed time so the
// emitted label set always equals the declared decomposition, including
// stages that end up with no measurable work on a given input.
inline void seed_labels(PhaseTimings& timings, std::span<const StageSpec> table) {
    for (const auto& stage : table) {
        timings.add(stage.label, role_of(stage), 0);
    }
}

} // namespace speck::stages
