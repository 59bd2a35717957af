#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radkit/domain.hpp"

namespace radkit::segmenter {

// Maps header strings found in raw report text to a section. Patterns are
// matched case-insensitively at line start (after optional whitespace) and
// always include the trailing colon.
struct HeaderRule {
    SectionName section{};
    std::vector<std::string> patterns;
};

struct RuleTable {
    std::vector<HeaderRule> rules;
    // Pseudo-headers (PREAMBLE:, NARRATIVE:, ...) whose bodies are not one of
    // the eight scored sections; their text goes to residual.
    std::vector<std::string> residual_patterns;

    static RuleTable defaults();

    // Array of {"section": name-or-"Residual", "patterns": [...]}.
    static RuleTable from_json(std::string_view text);
    static RuleTable from_json_file(const std::string& path);

    // Every section needs at least one pattern and patterns must be unique
    // across sections. Throws ConfigError.
    void validate() const;
};

struct HeaderMatch {
    bool to_residual = false;
    SectionName section{};
    std::size_t body_offset = 0;  // index into the line just past the pattern
};

// Tests whether a line is a header under the given rules. Longest matching
// pattern wins.
std::optional<HeaderMatch> match_header(std::string_view line, const RuleTable& rules);

// Splits raw report text into sections. Each detected header starts a section
// whose body runs to the next header or end of text; text before the first
// header (and bodies of residual-routed pseudo-headers) goes to residual.
// Section bodies are trimmed; a section seen twice has its bodies joined.
SectionedReport segment_report(std::string_view raw,
                               const RuleTable& rules = RuleTable::defaults(),
                               std::string source_id = "");

// Canonical textual form used as model output for the segmentation task:
// every section in fixed order as "<Display Name>:" followed by the body
// indented four spaces, absent sections rendered with body "N/A".
std::string render_sections(const SectionedReport& report);

// Inverse of render_sections on well-formed input. Headers are recognized by
// display name, case-insensitively; "N/A" bodies map to absent; lines before
// the first recognized header accumulate into residual. Throws ParseFailure
// when no section header is recognized at all.
SectionedReport parse_rendered_sections(std::string_view text, std::string source_id = "");

}  // namespace radkit::segmenter
