#include "radkit/segmenter.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "radkit/errors.hpp"
#include "radkit/text.hpp"

namespace radkit::segmenter {

namespace {

std::string with_colon(std::string_view pattern) {
    auto t = trim(pattern);
    std::string out(t);
    if (out.empty() || out.back() != ':') out += ':';
    return out;
}

constexpr std::string_view kIndent = "    ";

}  // namespace

RuleTable RuleTable::defaults() {
    // INDICATION/HISTORY are the Mimic-CXR spellings of CLINICAL HISTORY.
    RuleTable t;
    t.rules = {
        {SectionName::ClinicalHistory, {"CLINICAL HISTORY:", "HISTORY:", "INDICATION:"}},
        {SectionName::Comparison, {"COMPARISON:"}},
        {SectionName::Technique, {"TECHNIQUE:"}},
        {SectionName::ProcedureComments, {"PROCEDURE COMMENTS:"}},
        {SectionName::Findings, {"FINDINGS:"}},
        {SectionName::Impression, {"IMPRESSION:"}},
        {SectionName::EndOfImpression, {"END OF IMPRESSION:"}},
        {SectionName::Summary, {"SUMMARY:"}},
    };
    t.residual_patterns = {"PREAMBLE:", "NARRATIVE:", "EXAMINATION:", "LAST_PARAGRAPH:",
                           "ACCESSION NUMBER:"};
    return t;
}

RuleTable RuleTable::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("rule table is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("rule table must be a JSON array");
    RuleTable t;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("section") || !entry.contains("patterns"))
            throw ConfigError("rule entries need {section, patterns}");
        std::vector<std::string> patterns;
        for (const auto& p : entry.at("patterns")) {
            if (!p.is_string()) throw ConfigError("patterns must be strings");
            patterns.push_back(with_colon(p.get<std::string>()));
        }
        auto name = entry.at("section").get<std::string>();
        if (iequals(trim(name), "residual")) {
            for (auto& p : patterns) t.residual_patterns.push_back(std::move(p));
            continue;
        }
        auto section = section_from_name(name);
        if (!section) throw ConfigError("unknown section name: " + name);
        t.rules.push_back({*section, std::move(patterns)});
    }
    t.validate();
    return t;
}

RuleTable RuleTable::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open rule table: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

void RuleTable::validate() const {
    std::map<SectionName, std::size_t> counts;
    std::map<std::string, int> seen;
    for (const auto& rule : rules) {
        counts[rule.section] += rule.patterns.size();
        for (const auto& p : rule.patterns) ++seen[to_lower(p)];
    }
    for (const auto& p : residual_patterns) ++seen[to_lower(p)];
    for (SectionName s : kSectionOrder)
        if (counts[s] == 0)
            throw ConfigError(std::string("no header pattern for section ") +
                              std::string(display_name(s)));
    for (const auto& [pattern, n] : seen)
        if (n > 1) throw ConfigError("duplicate header pattern: " + pattern);
}

std::optional<HeaderMatch> match_header(std::string_view line, const RuleTable& rules) {
    auto start = line.find_first_not_of(kWhitespace);
    if (start == std::string_view::npos) return std::nullopt;
    auto content = line.substr(start);

    std::optional<HeaderMatch> best;
    std::size_t best_len = 0;
    auto consider = [&](std::string_view pattern, bool to_residual, SectionName section) {
        if (pattern.size() > best_len && istarts_with(content, pattern)) {
            best = HeaderMatch{to_residual, section, start + pattern.size()};
            best_len = pattern.size();
        }
    };
    for (const auto& rule : rules.rules)
        for (const auto& p : rule.patterns) consider(p, false, rule.section);
    for (const auto& p : rules.residual_patterns)
        consider(p, true, SectionName::ClinicalHistory);
    return best;
}

SectionedReport segment_report(std::string_view raw, const RuleTable& rules,
                               std::string source_id) {
    std::map<SectionName, std::vector<std::string_view>> bodies;
    std::vector<std::string_view> residual;

    // Current sink; nullptr while in residual.
    std::vector<std::string_view>* current = &residual;

    for (auto line : split_lines(raw)) {
        if (auto header = match_header(line, rules)) {
            current = header->to_residual ? &residual : &bodies[header->section];
            auto rest = line.substr(header->body_offset);
            if (!trim(rest).empty()) current->push_back(trim(rest));
            continue;
        }
        current->push_back(line);
    }

    SectionedReport report;
    report.source_id = std::move(source_id);
    for (const auto& [section, lines] : bodies)
        report.set_section(section, join(lines, "\n"));
    auto res = trim(join(residual, "\n"));
    if (!res.empty()) report.residual = std::string(res);
    return report;
}

std::string render_sections(const SectionedReport& report) {
    std::string out;
    for (SectionName s : kSectionOrder) {
        out += display_name(s);
        out += ":\n";
        auto body = report.section(s);
        for (auto line : split_lines(body ? *body : std::string_view("N/A"))) {
            out += kIndent;
            out += line;
            out += '\n';
        }
    }
    return out;
}

SectionedReport parse_rendered_sections(std::string_view text, std::string source_id) {
    // Matches "<Display Name>:" at line start, tolerating case differences
    // and an inline body after the colon.
    auto match_display_header = [](std::string_view line)
        -> std::optional<std::pair<SectionName, std::size_t>> {
        auto start = line.find_first_not_of(kWhitespace);
        if (start == std::string_view::npos) return std::nullopt;
        auto content = line.substr(start);
        std::optional<std::pair<SectionName, std::size_t>> best;
        std::size_t best_len = 0;
        for (SectionName s : kSectionOrder) {
            std::string pattern = std::string(display_name(s)) + ":";
            if (pattern.size() > best_len && istarts_with(content, pattern)) {
                best = {s, start + pattern.size()};
                best_len = pattern.size();
            }
        }
        return best;
    };

    std::map<SectionName, std::vector<std::string>> bodies;
    std::vector<std::string> residual;
    std::vector<std::string>* current = &residual;
    bool any_header = false;

    for (auto line : split_lines(text)) {
        if (auto header = match_display_header(line)) {
            any_header = true;
            current = &bodies[header->first];
            auto rest = line.substr(header->second);
            if (!trim(rest).empty()) current->push_back(std::string(trim(rest)));
            continue;
        }
        // Strip the render indent; deeper or absent indentation is kept as-is.
        std::string_view body = line;
        if (body.substr(0, kIndent.size()) == kIndent) body.remove_prefix(kIndent.size());
        current->push_back(std::string(body));
    }

    if (!any_header)
        throw ParseFailure("no section header recognized", std::string(text));

    SectionedReport report;
    report.source_id = std::move(source_id);
    for (const auto& [section, lines] : bodies) {
        auto body = trim(join(lines, "\n"));
        if (body == "N/A") continue;
        report.set_section(section, body);
    }
    auto res = trim(join(residual, "\n"));
    if (!res.empty()) report.residual = std::string(res);
    return report;
}

}  // namespace radkit::segmenter
