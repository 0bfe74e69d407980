#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "speck/timing.hpp"

namespace speck {

// ---------------------------------------------------------------------------
// Apriori frequent-itemset mining
// ---------------------------------------------------------------------------

using Itemset = std::vector<int>; // sorted ascending, no duplicates

struct TransactionDb {
    std::vector<std::vector<int>> transactions; // item ids, need not be sorted
    std::vector<std::string> item_names;        // optional, index = item id
};

struct AprioriResult {
    // All frequent itemsets with their support counts, grouped by size and
    // lexicographic within each size.
    std::vector<std::pair<Itemset, int>> frequent;
    PhaseTimings timings;
};

/// Every itemset with support count >= min_support.  The per-level candidate
/// generation, subset counting and filtering fan out across `workers`; the
/// levels themselves run strictly one after another.
AprioriResult apriori(const TransactionDb& db, int min_support, int workers);

// ---------------------------------------------------------------------------
// k-nearest-neighbours classification
// ---------------------------------------------------------------------------

struct LabeledPoints {
    std::vector<std::vector<double>> points; // uniform dimension
    std::vector<int> labels;                 // class ids 0..num_classes-1
    std::vector<std::string> class_names;    // optional, index = class id

    int num_classes() const;
    std::size_t dimension() const;
};

struct KnnResult {
    int label = -1;
    PhaseTimings timings;
};

/// Majority vote among the k nearest training points by Euclidean distance.
/// k must be odd and <= the number of training points.  Equal distances
/// break by smallest training-point index, vote ties by smallest class id,
/// so the result never depends on the worker count.
KnnResult knn_classify(const LabeledPoints& train, std::span<const double> query,
                       int k, int workers);

// ---------------------------------------------------------------------------
// CDF 9/7 wavelet transform (lifting scheme)
// ---------------------------------------------------------------------------

struct WaveletResult {
    std::vector<double> data; // [approx | detail_L | ... | detail_1] layout
    PhaseTimings timings;
};

/// Forward transform over `levels` octaves; signal length must be a multiple
/// of 2^levels and at least 2^levels.
WaveletResult cdf97_forward(std::span<const double> signal, int levels, int workers);

/// Inverse transform; reproduces the input of cdf97_forward to ~1e-15.
WaveletResult cdf97_inverse(std::span<const double> coefficients, int levels,
                            int workers);

// ---------------------------------------------------------------------------
// Fast Fourier transform (iterative radix-2 decimation in time)
// ---------------------------------------------------------------------------

struct FftResult {
    std::vector<std::complex<double>> spectrum;
    PhaseTimings timings;
};

/// X[k] = sum_n x[n] e^(-2 pi i k n / N) for power-of-two N >= 1.  The stage
/// loop is sequential; twiddle precomputation and the per-stage multiply and
/// butterfly passes fan out across workers.
FftResult fft(std::span<const std::complex<double>> input, int workers);

// ---------------------------------------------------------------------------
// Naive Bayes classifier (categorical features)
// ---------------------------------------------------------------------------

struct CategoricalPoints {
    std::vector<std::vector<int>> points; // value ids >= 0, uniform dimension
    std::vector<int> labels;              // class ids 0..num_classes-1
    std::vector<std::string> class_names; // optional
};

struct NbcModel {
    int num_classes = 0;
    int num_features = 0;
    std::vector<int> feature_cardinality;      // values seen per feature
    std::vector<std::int64_t> class_counts;    // per class
    std::int64_t total_count = 0;
    std::vector<double> log_prior;             // [class]
    std::vector<std::vector<double>> log_likelihood; // [class][feature * card + value]
    std::vector<std::string> class_names;

    double log_likelihood_of(int cls, int feature, int value) const;

    // "Global table": memo of previously classified samples.  Shared between
    // copies of the model; safe under concurrent classify calls.
    struct Memo;
    std::shared_ptr<Memo> memo;
};

struct NbcModel::Memo {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, int> table; // key = packed sample
};

struct NbcTrainResult {
    NbcModel model;
    PhaseTimings timings;
};

struct NbcClassifyResult {
    int label = -1;
    bool from_cache = false;
    PhaseTimings timings;
};

/// Counts class priors and per-feature conditional frequencies; the counting
/// passes fan out across workers and merge deterministically.
NbcTrainResult nbc_train(const CategoricalPoints& train, int workers);

/// argmax over classes of prior * product of add-one-smoothed likelihoods,
/// computed in log space.  Repeat queries are served from the global table;
/// a cache hit emits only the "table_search" phase.
NbcClassifyResult nbc_classify(const NbcModel& model, std::span<const int> sample,
                               int workers);

} // namespace speck
