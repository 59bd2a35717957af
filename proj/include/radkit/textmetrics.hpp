#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radkit/domain.hpp"

namespace radkit::textmetrics {

// Tokenization used by every lexical metric: lowercase (ASCII), every
// non-alphanumeric byte becomes a space, split on whitespace.
std::vector<std::string> tokenize(std::string_view text);

// LCS-based F-measure over tokens (beta = 1), scaled to 0..100. Returns 0
// when either side has no tokens.
double rouge_l(std::string_view candidate, std::string_view reference);

// Geometric mean of modified 1..4-gram precisions with brevity penalty,
// scaled to 0..100. A zero n-gram precision is smoothed to
// 1 / (2 * candidate n-gram count); levels where the candidate has no
// n-grams are skipped. Returns 0 when either side has no tokens.
double bleu_4(std::string_view candidate, std::string_view reference);

struct PrfScore {
    double precision = 0;
    double recall = 0;
    double f1 = 0;
};

// Multiset token overlap: P = |overlap| / |candidate|, R = |overlap| /
// |reference|, F1 the harmonic mean, each scaled to 0..100. Both sides empty
// scores (100,100,100); exactly one side empty scores (0,0,0).
PrfScore token_f1(std::string_view candidate, std::string_view reference);

struct MacroScore {
    double f1 = 0;
    double precision = 0;
    double recall = 0;
};

// Macro-averaged multi-label scores over the label universe given by the
// union of all labels seen in predictions or references. Per-label
// zero-division yields 0. Throws LengthMismatch / EmptyInput.
MacroScore multilabel_macro_f1(const std::vector<LabelSet>& predictions,
                               const std::vector<LabelSet>& references);

// 3-class macro-averaged scores; classes absent from both sides contribute 0.
MacroScore nli_scores(const std::vector<NliLabel>& predictions,
                      const std::vector<NliLabel>& references);

// One scored metric, 0..100, with an optional bootstrap interval.
struct MetricResult {
    std::string name;
    double point = 0;
    std::optional<double> ci_low;
    std::optional<double> ci_high;
    std::size_t n = 0;

    bool operator==(const MetricResult&) const = default;
};

// "66.66 [65.64, 67.48]" / "66.66" cell text.
std::string format_metric_cell(const MetricResult& m);

struct BootstrapResult {
    double point = 0;
    double ci_low = 0;
    double ci_high = 0;
};

double mean(const std::vector<double>& values);

using Aggregate = std::function<double(const std::vector<double>&)>;

// Bootstrap interval over per-example scores: the point is the aggregate of
// the original list; each of `resamples` resamples draws n indices with
// replacement from a generator seeded with seed + resample index, and the
// interval is the min/max of the resample aggregates. Deterministic for a
// fixed seed. Throws EmptyInput.
BootstrapResult bootstrap_ci(const std::vector<double>& per_example_scores,
                             const Aggregate& aggregate, std::size_t resamples = 10,
                             std::uint64_t seed = kDefaultSeed);
BootstrapResult bootstrap_ci(const std::vector<double>& per_example_scores,
                             std::size_t resamples = 10, std::uint64_t seed = kDefaultSeed);

// Same resampling scheme for metrics that are a function of the whole example
// set (macro F1 and friends): `metric` is called with the resampled index
// multiset. Used with identity indices 0..n-1 for the point estimate.
BootstrapResult bootstrap_metric(std::size_t n_examples,
                                 const std::function<double(const std::vector<std::size_t>&)>& metric,
                                 std::size_t resamples = 10,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace radkit::textmetrics
