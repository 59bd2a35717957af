#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radkit/domain.hpp"

namespace radkit::changes {

// Validates the two-object extraction schema:
//   {"Diseases_Change_Summary": {"New": [...], "Resolved": [...], "Stable": [...],
//                                "Improved": [...], "Worsened": [...], "Negatives": [...]},
//    "Tubes_Lines_Change_Summary": {"New": [...], "Removed": [...], "Unchanged": [...],
//                                   "Changed": [...], "Recommendations": [...]}}
// Missing keys, extra keys and non-string-list values are rejected.
// Throws SyntaxError on malformed JSON, SchemaError naming the violating path.
ChangeSummary parse_change_summary_json(std::string_view doc, std::string source_id = "");

std::string serialize_change_summary_json(const ChangeSummary& cs);

// Appendix is the instruction-dataset layout (Diseases_Change_Summary: /
// Tubes_Lines_Change_Summary: headings, every category always listed).
// RadGraph2 is the benchmark layout (Change summary of medical devices: /
// Change summary of medical conditions: / No change summary: headings, empty
// categories omitted, Stable listed under "No change summary").
enum class RenderProfile { Appendix, RadGraph2 };

std::string render_change_summary(const ChangeSummary& cs,
                                  RenderProfile profile = RenderProfile::Appendix);

// Inverse of render_change_summary on well-formed input; accepts either
// profile's headings and is indentation-tolerant. Throws ParseFailure when no
// heading is recognized.
ChangeSummary parse_rendered_change_summary(std::string_view text, std::string source_id = "");

struct CategoryScore {
    bool is_condition = true;
    std::string name;                 // category display name, e.g. "Stable"
    std::optional<double> bleu4;      // absent when support is zero
    std::optional<double> rouge_l;
    std::optional<double> token_f1;
    std::size_t support = 0;          // total reference items in the category
    std::size_t pairs_scored = 0;     // pairs with a non-empty reference category
};

// Scores (predicted, reference) pairs per category. For each category the
// items are joined with newline into one candidate/reference string per pair
// and BLEU-4 / ROUGE-L / token F1 are averaged over the pairs whose reference
// category is non-empty. Throws EmptyInput for an empty pair list.
std::vector<CategoryScore> score_change_summaries(
    const std::vector<std::pair<ChangeSummary, ChangeSummary>>& pairs);

// "conditions.Stable" / "devices.New" style key used in report tables.
std::string category_key(const CategoryScore& score);

}  // namespace radkit::changes
