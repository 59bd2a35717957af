#include "radkit/domain.hpp"

#include <algorithm>

#include "radkit/errors.hpp"
#include "radkit/text.hpp"

namespace radkit {

std::string_view display_name(SectionName s) {
    switch (s) {
        case SectionName::ClinicalHistory: return "Clinical History";
        case SectionName::Comparison: return "Comparison";
        case SectionName::Technique: return "Technique";
        case SectionName::ProcedureComments: return "Procedure Comments";
        case SectionName::Findings: return "Findings";
        case SectionName::Impression: return "Impression";
        case SectionName::EndOfImpression: return "End Of Impression";
        case SectionName::Summary: return "Summary";
    }
    return "";
}

std::optional<SectionName> section_from_name(std::string_view name) {
    std::string compact;
    for (char c : trim(name))
        if (c != ' ') compact += ascii_lower(c);
    for (SectionName s : kSectionOrder) {
        std::string want;
        for (char c : display_name(s))
            if (c != ' ') want += ascii_lower(c);
        if (compact == want) return s;
    }
    return std::nullopt;
}

void SectionedReport::set_section(SectionName s, std::string_view text) {
    auto t = trim(text);
    if (t.empty())
        sections.erase(s);
    else
        sections[s] = std::string(t);
}

std::optional<std::string_view> SectionedReport::section(SectionName s) const {
    auto it = sections.find(s);
    if (it == sections.end()) return std::nullopt;
    return std::string_view(it->second);
}

std::string_view category_name(ConditionChangeCategory c) {
    switch (c) {
        case ConditionChangeCategory::New: return "New";
        case ConditionChangeCategory::Resolved: return "Resolved";
        case ConditionChangeCategory::Stable: return "Stable";
        case ConditionChangeCategory::Improved: return "Improved";
        case ConditionChangeCategory::Worsened: return "Worsened";
        case ConditionChangeCategory::Negatives: return "Negatives";
    }
    return "";
}

std::string_view category_name(DeviceChangeCategory c) {
    switch (c) {
        case DeviceChangeCategory::New: return "New";
        case DeviceChangeCategory::Removed: return "Removed";
        case DeviceChangeCategory::Unchanged: return "Unchanged";
        case DeviceChangeCategory::Changed: return "Changed";
        case DeviceChangeCategory::Recommendations: return "Recommendations";
    }
    return "";
}

std::optional<ConditionChangeCategory> condition_category_from_name(std::string_view name) {
    auto t = trim(name);
    for (auto c : kConditionCategories)
        if (iequals(t, category_name(c))) return c;
    return std::nullopt;
}

std::optional<DeviceChangeCategory> device_category_from_name(std::string_view name) {
    auto t = trim(name);
    for (auto c : kDeviceCategories)
        if (iequals(t, category_name(c))) return c;
    return std::nullopt;
}

bool ChangeSummary::empty() const {
    for (const auto& v : conditions)
        if (!v.empty()) return false;
    for (const auto& v : devices)
        if (!v.empty()) return false;
    return true;
}

void ChangeSummary::validate() const {
    auto check_items = [](std::string_view where, const std::vector<std::string>& items) {
        for (const auto& item : items)
            if (trim(item).empty())
                throw SchemaError(std::string(where), "empty item");
    };
    for (auto c : kConditionCategories)
        check_items(std::string("Diseases_Change_Summary.") + std::string(category_name(c)),
                    items(c));
    for (auto c : kDeviceCategories)
        check_items(std::string("Tubes_Lines_Change_Summary.") + std::string(category_name(c)),
                    items(c));

    // No finding may appear in two condition categories of the same summary.
    std::set<std::string> seen;
    for (auto c : kConditionCategories) {
        for (const auto& item : items(c)) {
            auto key = std::string(trim(item));
            if (!seen.insert(key).second)
                throw SchemaError("Diseases_Change_Summary",
                                  "item appears in two categories: " + key);
        }
    }
}

std::string canonicalize_label(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (kWhitespace.find(c) != std::string_view::npos) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += ascii_lower(c);
    }
    if (out.empty()) throw EmptyLabel("label empty after trimming");
    return out;
}

LabelSet parse_label_list(std::string_view raw, std::string vocabulary_id) {
    LabelSet set;
    set.vocabulary_id = std::move(vocabulary_id);
    std::size_t pos = 0;
    while (pos <= raw.size()) {
        auto comma = raw.find(',', pos);
        auto item = raw.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - pos);
        if (!trim(item).empty()) set.labels.insert(canonicalize_label(item));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return set;
}

std::string_view task_name(TaskKind t) {
    switch (t) {
        case TaskKind::ImpressionPrediction: return "impression_prediction";
        case TaskKind::CleanupText: return "cleanup_text";
        case TaskKind::AbnormalityLabels: return "abnormality_labels";
        case TaskKind::TubesLinesLabels: return "tubes_lines_labels";
        case TaskKind::QaComprehension: return "qa_comprehension";
        case TaskKind::ExtractFindings: return "extract_findings";
        case TaskKind::ExtractImpression: return "extract_impression";
        case TaskKind::Nli: return "nli";
        case TaskKind::ReportSegmentation: return "report_segmentation";
        case TaskKind::TemporalChangeSummary: return "temporal_change_summary";
        case TaskKind::PadchestLabels: return "padchest_labels";
        case TaskKind::RadiologyQa: return "radiology_qa";
    }
    return "";
}

std::optional<TaskKind> task_from_name(std::string_view name) {
    auto t = trim(name);
    for (TaskKind k : kAllTasks)
        if (iequals(t, task_name(k))) return k;
    return std::nullopt;
}

std::string_view split_name(Split s) {
    switch (s) {
        case Split::Train: return "train";
        case Split::Validation: return "validation";
        case Split::Test: return "test";
    }
    return "";
}

std::optional<Split> split_from_name(std::string_view name) {
    auto t = trim(name);
    if (iequals(t, "train")) return Split::Train;
    if (iequals(t, "validation") || iequals(t, "valid") || iequals(t, "val"))
        return Split::Validation;
    if (iequals(t, "test")) return Split::Test;
    return std::nullopt;
}

std::string_view nli_label_name(NliLabel l) {
    switch (l) {
        case NliLabel::Positive: return "positive";
        case NliLabel::Negated: return "negated";
        case NliLabel::Neutral: return "neutral";
    }
    return "";
}

std::optional<NliLabel> nli_label_from_name(std::string_view name) {
    auto t = trim(name);
    for (NliLabel l : kNliLabels)
        if (iequals(t, nli_label_name(l))) return l;
    return std::nullopt;
}

}  // namespace radkit
