#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace radkit {

// Single seed that all randomness in the toolkit defaults to, so any run is
// reproducible from the command line alone.
inline constexpr std::uint64_t kDefaultSeed = 42;

// ---------------------------------------------------------------------------
// Report sections

enum class SectionName {
    ClinicalHistory,
    Comparison,
    Technique,
    ProcedureComments,
    Findings,
    Impression,
    EndOfImpression,
    Summary,
};

inline constexpr std::array<SectionName, 8> kSectionOrder = {
    SectionName::ClinicalHistory, SectionName::Comparison,
    SectionName::Technique,       SectionName::ProcedureComments,
    SectionName::Findings,        SectionName::Impression,
    SectionName::EndOfImpression, SectionName::Summary,
};

// Canonical display string, e.g. "Clinical History", "End Of Impression".
std::string_view display_name(SectionName s);

// Case-insensitive lookup by display name ("Clinical History") or compact
// identifier ("ClinicalHistory"). Returns nullopt for unknown names.
std::optional<SectionName> section_from_name(std::string_view name);

// A radiology report decomposed into the eight named sections plus residual
// text (preamble/footer material not assigned to any section). Absent
// sections render as "N/A".
struct SectionedReport {
    std::map<SectionName, std::string> sections;
    std::optional<std::string> residual;
    std::string source_id;

    // Trims; empty text clears the section (present bodies are always
    // non-empty after trimming).
    void set_section(SectionName s, std::string_view text);
    std::optional<std::string_view> section(SectionName s) const;

    bool operator==(const SectionedReport&) const = default;
};

// ---------------------------------------------------------------------------
// Temporal change summary

enum class ConditionChangeCategory { New, Resolved, Stable, Improved, Worsened, Negatives };
enum class DeviceChangeCategory { New, Removed, Unchanged, Changed, Recommendations };

inline constexpr std::array<ConditionChangeCategory, 6> kConditionCategories = {
    ConditionChangeCategory::New,      ConditionChangeCategory::Resolved,
    ConditionChangeCategory::Stable,   ConditionChangeCategory::Improved,
    ConditionChangeCategory::Worsened, ConditionChangeCategory::Negatives,
};

inline constexpr std::array<DeviceChangeCategory, 5> kDeviceCategories = {
    DeviceChangeCategory::New,     DeviceChangeCategory::Removed,
    DeviceChangeCategory::Unchanged, DeviceChangeCategory::Changed,
    DeviceChangeCategory::Recommendations,
};

std::string_view category_name(ConditionChangeCategory c);
std::string_view category_name(DeviceChangeCategory c);
std::optional<ConditionChangeCategory> condition_category_from_name(std::string_view name);
std::optional<DeviceChangeCategory> device_category_from_name(std::string_view name);

// Typed diff of a report against its prior. Every category is always
// present; an empty list means "nothing in this category".
struct ChangeSummary {
    std::array<std::vector<std::string>, kConditionCategories.size()> conditions;
    std::array<std::vector<std::string>, kDeviceCategories.size()> devices;
    std::string source_id;

    std::vector<std::string>& items(ConditionChangeCategory c) {
        return conditions[static_cast<std::size_t>(c)];
    }
    const std::vector<std::string>& items(ConditionChangeCategory c) const {
        return conditions[static_cast<std::size_t>(c)];
    }
    std::vector<std::string>& items(DeviceChangeCategory c) {
        return devices[static_cast<std::size_t>(c)];
    }
    const std::vector<std::string>& items(DeviceChangeCategory c) const {
        return devices[static_cast<std::size_t>(c)];
    }

    bool empty() const;

    // Throws SchemaError when an item is empty after trimming or when an
    // item appears in two condition categories of the same summary.
    void validate() const;

    bool operator==(const ChangeSummary&) const = default;
};

// ---------------------------------------------------------------------------
// Labels

// Canonicalized multi-label annotation. Equality is over the label members
// only; vocabulary_id is metadata.
struct LabelSet {
    std::set<std::string> labels;
    std::string vocabulary_id;

    friend bool operator==(const LabelSet& a, const LabelSet& b) {
        return a.labels == b.labels;
    }
};

// Lowercases (ASCII), collapses internal whitespace runs to single spaces,
// trims. Idempotent. Throws EmptyLabel when nothing remains.
std::string canonicalize_label(std::string_view raw);

// Splits a comma-separated label string, canonicalizes and deduplicates.
// Empty or all-separator input yields an empty set (meaning "no findings").
LabelSet parse_label_list(std::string_view raw, std::string vocabulary_id = "");

// ---------------------------------------------------------------------------
// Tasks and instruction examples

enum class TaskKind {
    ImpressionPrediction,
    CleanupText,
    AbnormalityLabels,
    TubesLinesLabels,
    QaComprehension,
    ExtractFindings,
    ExtractImpression,
    Nli,
    ReportSegmentation,
    TemporalChangeSummary,
    PadchestLabels,
    RadiologyQa,
};

inline constexpr std::array<TaskKind, 12> kAllTasks = {
    TaskKind::ImpressionPrediction, TaskKind::CleanupText,
    TaskKind::AbnormalityLabels,    TaskKind::TubesLinesLabels,
    TaskKind::QaComprehension,      TaskKind::ExtractFindings,
    TaskKind::ExtractImpression,    TaskKind::Nli,
    TaskKind::ReportSegmentation,   TaskKind::TemporalChangeSummary,
    TaskKind::PadchestLabels,       TaskKind::RadiologyQa,
};

std::string_view task_name(TaskKind t);  // snake_case, e.g. "impression_prediction"
std::optional<TaskKind> task_from_name(std::string_view name);

enum class Split { Train, Validation, Test };

std::string_view split_name(Split s);  // "train" / "validation" / "test"
std::optional<Split> split_from_name(std::string_view name);

// One prompt/reference pair for a named task.
struct InstructionExample {
    std::string id;
    TaskKind task{};
    std::string prompt;
    std::string reference;
    Split split{};
    std::map<std::string, std::string> strata;

    bool operator==(const InstructionExample&) const = default;
};

// ---------------------------------------------------------------------------
// NLI

enum class NliLabel { Positive, Negated, Neutral };

inline constexpr std::array<NliLabel, 3> kNliLabels = {
    NliLabel::Positive, NliLabel::Negated, NliLabel::Neutral};

std::string_view nli_label_name(NliLabel l);
std::optional<NliLabel> nli_label_from_name(std::string_view name);

}  // namespace radkit
