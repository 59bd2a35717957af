#include "radkit/textmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "radkit/errors.hpp"
#include "radkit/rng.hpp"
#include "radkit/text.hpp"

namespace radkit::textmetrics {

namespace {

bool is_alnum(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

double harmonic(double p, double r) { return p + r > 0 ? 2.0 * p * r / (p + r) : 0.0; }

// N-gram multiset keyed by joined tokens; '\x1f' cannot occur inside a token.
std::map<std::string, std::size_t> ngram_counts(const std::vector<std::string>& tokens,
                                                std::size_t n) {
    std::map<std::string, std::size_t> counts;
    if (tokens.size() < n) return counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        std::string key = tokens[i];
        for (std::size_t j = 1; j < n; ++j) {
            key += '\x1f';
            key += tokens[i + j];
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (is_alnum(c)) {
            current += ascii_lower(c);
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

double rouge_l(std::string_view candidate, std::string_view reference) {
    auto cand = tokenize(candidate);
    auto ref = tokenize(reference);
    if (cand.empty() || ref.empty()) return 0.0;

    // Classic LCS table, rolling rows.
    std::vector<std::size_t> prev(ref.size() + 1, 0), curr(ref.size() + 1, 0);
    for (std::size_t i = 1; i <= cand.size(); ++i) {
        for (std::size_t j = 1; j <= ref.size(); ++j) {
            if (cand[i - 1] == ref[j - 1])
                curr[j] = prev[j - 1] + 1;
            else
                curr[j] = std::max(prev[j], curr[j - 1]);
        }
        std::swap(prev, curr);
    }
    auto lcs = static_cast<double>(prev[ref.size()]);
    if (lcs == 0) return 0.0;
    double p = lcs / static_cast<double>(cand.size());
    double r = lcs / static_cast<double>(ref.size());
    return harmonic(p, r) * 100.0;
}

double bleu_4(std::string_view candidate, std::string_view reference) {
    auto cand = tokenize(candidate);
    auto ref = tokenize(reference);
    if (cand.empty() || ref.empty()) return 0.0;

    double log_sum = 0;
    std::size_t levels = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        if (cand.size() < n) break;  // no candidate n-grams at this level
        auto cand_counts = ngram_counts(cand, n);
        auto ref_counts = ngram_counts(ref, n);
        std::size_t total = cand.size() - n + 1;
        std::size_t clipped = 0;
        for (const auto& [gram, count] : cand_counts) {
            auto it = ref_counts.find(gram);
            if (it != ref_counts.end()) clipped += std::min(count, it->second);
        }
        double precision = clipped > 0
                               ? static_cast<double>(clipped) / static_cast<double>(total)
                               : 1.0 / (2.0 * static_cast<double>(total));
        log_sum += std::log(precision);
        ++levels;
    }
    double geo = std::exp(log_sum / static_cast<double>(levels));
    double bp = cand.size() >= ref.size()
                    ? 1.0
                    : std::exp(1.0 - static_cast<double>(ref.size()) /
                                         static_cast<double>(cand.size()));
    return bp * geo * 100.0;
}

PrfScore token_f1(std::string_view candidate, std::string_view reference) {
    auto cand = tokenize(candidate);
    auto ref = tokenize(reference);
    if (cand.empty() && ref.empty()) return {100.0, 100.0, 100.0};
    if (cand.empty() || ref.empty()) return {0.0, 0.0, 0.0};

    std::map<std::string, std::size_t> ref_counts;
    for (const auto& t : ref) ++ref_counts[t];
    std::size_t overlap = 0;
    for (const auto& t : cand) {
        auto it = ref_counts.find(t);
        if (it != ref_counts.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    double p = static_cast<double>(overlap) / static_cast<double>(cand.size());
    double r = static_cast<double>(overlap) / static_cast<double>(ref.size());
    return {p * 100.0, r * 100.0, harmonic(p, r) * 100.0};
}

MacroScore multilabel_macro_f1(const std::vector<LabelSet>& predictions,
                               const std::vector<LabelSet>& references) {
    if (predictions.size() != references.size())
        throw LengthMismatch("predictions and references differ in length");
    if (predictions.empty()) throw EmptyInput("no examples");

    std::set<std::string> universe;
    for (const auto& s : predictions) universe.insert(s.labels.begin(), s.labels.end());
    for (const auto& s : references) universe.insert(s.labels.begin(), s.labels.end());
    if (universe.empty()) return {};

    MacroScore macro;
    for (const auto& label : universe) {
        std::size_t tp = 0, fp = 0, fn = 0;
        for (std::size_t i = 0; i < predictions.size(); ++i) {
            bool in_pred = predictions[i].labels.count(label) > 0;
            bool in_ref = references[i].labels.count(label) > 0;
            if (in_pred && in_ref) ++tp;
            if (in_pred && !in_ref) ++fp;
            if (!in_pred && in_ref) ++fn;
        }
        double p = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        double r = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        macro.precision += p;
        macro.recall += r;
        macro.f1 += harmonic(p, r);
    }
    auto k = static_cast<double>(universe.size());
    return {macro.f1 / k * 100.0, macro.precision / k * 100.0, macro.recall / k * 100.0};
}

MacroScore nli_scores(const std::vector<NliLabel>& predictions,
                      const std::vector<NliLabel>& references) {
    if (predictions.size() != references.size())
        throw LengthMismatch("predictions and references differ in length");
    if (predictions.empty()) throw EmptyInput("no examples");

    MacroScore macro;
    for (NliLabel cls : kNliLabels) {
        std::size_t tp = 0, fp = 0, fn = 0;
        for (std::size_t i = 0; i < predictions.size(); ++i) {
            if (predictions[i] == cls && references[i] == cls) ++tp;
            if (predictions[i] == cls && references[i] != cls) ++fp;
            if (predictions[i] != cls && references[i] == cls) ++fn;
        }
        double p = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        double r = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        macro.precision += p;
        macro.recall += r;
        macro.f1 += harmonic(p, r);
    }
    auto k = static_cast<double>(kNliLabels.size());
    return {macro.f1 / k * 100.0, macro.precision / k * 100.0, macro.recall / k * 100.0};
}

std::string format_metric_cell(const MetricResult& m) {
    char buf[96];
    if (m.ci_low && m.ci_high)
        std::snprintf(buf, sizeof buf, "%.2f [%.2f, %.2f]", m.point, *m.ci_low, *m.ci_high);
    else
        std::snprintf(buf, sizeof buf, "%.2f", m.point);
    return buf;
}

double mean(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    double sum = 0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

BootstrapResult bootstrap_metric(
    std::size_t n_examples,
    const std::function<double(const std::vector<std::size_t>&)>& metric,
    std::size_t resamples, std::uint64_t seed) {
    if (n_examples == 0) throw EmptyInput("no examples to resample");

    std::vector<std::size_t> identity(n_examples);
    for (std::size_t i = 0; i < n_examples; ++i) identity[i] = i;
    BootstrapResult out;
    out.point = metric(identity);

    double lo = 0, hi = 0;
    for (std::size_t r = 0; r < resamples; ++r) {
        // Per-resample derived seed keeps results independent of scheduling
        // if resamples ever run in parallel.
        SplitMix64 rng(seed + r);
        std::vector<std::size_t> indices(n_examples);
        for (std::size_t i = 0; i < n_examples; ++i)
            indices[i] = static_cast<std::size_t>(rng.bounded(n_examples));
        double value = metric(indices);
        if (r == 0) {
            lo = hi = value;
        } else {
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
    }
    if (resamples == 0) lo = hi = out.point;
    out.ci_low = lo;
    out.ci_high = hi;
    return out;
}

BootstrapResult bootstrap_ci(const std::vector<double>& per_example_scores,
                             const Aggregate& aggregate, std::size_t resamples,
                             std::uint64_t seed) {
    if (per_example_scores.empty()) throw EmptyInput("no scores");
    return bootstrap_metric(
        per_example_scores.size(),
        [&](const std::vector<std::size_t>& indices) {
            std::vector<double> sample;
            sample.reserve(indices.size());
            for (auto i : indices) sample.push_back(per_example_scores[i]);
            return aggregate(sample);
        },
        resamples, seed);
}

BootstrapResult bootstrap_ci(const std::vector<double>& per_example_scores,
                             std::size_t resamples, std::uint64_t seed) {
    return bootstrap_ci(per_example_scores, Aggregate(&mean), resamples, seed);
}

}  // namespace radkit::textmetrics
