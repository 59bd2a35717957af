#include "radkit/changes.hpp"

#include <json.hpp>

#include "radkit/errors.hpp"
#include "radkit/text.hpp"
#include "radkit/textmetrics.hpp"

namespace radkit::changes {

namespace {

constexpr std::string_view kDiseasesHeading = "Diseases_Change_Summary:";
constexpr std::string_view kTubesHeading = "Tubes_Lines_Change_Summary:";
constexpr std::string_view kRg2Devices = "Change summary of medical devices:";
constexpr std::string_view kRg2Conditions = "Change summary of medical conditions:";
constexpr std::string_view kRg2NoChange = "No change summary:";

constexpr std::string_view kIndent1 = "    ";
constexpr std::string_view kIndent2 = "        ";

void read_category_object(const nlohmann::json& obj, std::string_view heading,
                          ChangeSummary& out, bool conditions) {
    auto path = [&](std::string_view key) {
        return std::string(heading) + "." + std::string(key);
    };
    if (!obj.is_object()) throw SchemaError(std::string(heading), "expected an object");

    auto read_items = [&](std::string_view key, std::vector<std::string>& into) {
        if (!obj.contains(std::string(key)))
            throw SchemaError(path(key), "missing key");
        const auto& value = obj.at(std::string(key));
        if (!value.is_array()) throw SchemaError(path(key), "expected a list of strings");
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (!value[i].is_string())
                throw SchemaError(path(key) + "[" + std::to_string(i) + "]",
                                  "expected a string");
            auto item = trim(value[i].get<std::string>());
            if (item.empty())
                throw SchemaError(path(key) + "[" + std::to_string(i) + "]", "empty item");
            into.emplace_back(item);
        }
    };

    std::size_t expected = 0;
    if (conditions) {
        for (auto c : kConditionCategories) read_items(category_name(c), out.items(c));
        expected = kConditionCategories.size();
    } else {
        for (auto c : kDeviceCategories) read_items(category_name(c), out.items(c));
        expected = kDeviceCategories.size();
    }
    if (obj.size() != expected) {
        // Schema keys are fixed and matched exactly; anything else is rejected.
        for (const auto& [key, _] : obj.items()) {
            bool exact = false;
            if (conditions)
                for (auto c : kConditionCategories) exact |= (key == category_name(c));
            else
                for (auto c : kDeviceCategories) exact |= (key == category_name(c));
            if (!exact) throw SchemaError(path(key), "unexpected key");
        }
    }
}

}  // namespace

ChangeSummary parse_change_summary_json(std::string_view doc, std::string source_id) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(doc);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("malformed JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw SchemaError("", "expected a JSON object");
    if (!parsed.contains("Diseases_Change_Summary"))
        throw SchemaError("Diseases_Change_Summary", "missing key");
    if (!parsed.contains("Tubes_Lines_Change_Summary"))
        throw SchemaError("Tubes_Lines_Change_Summary", "missing key");
    if (parsed.size() != 2)
        for (const auto& [key, _] : parsed.items())
            if (key != "Diseases_Change_Summary" && key != "Tubes_Lines_Change_Summary")
                throw SchemaError(key, "unexpected key");

    ChangeSummary cs;
    cs.source_id = std::move(source_id);
    read_category_object(parsed.at("Diseases_Change_Summary"), "Diseases_Change_Summary", cs,
                         true);
    read_category_object(parsed.at("Tubes_Lines_Change_Summary"), "Tubes_Lines_Change_Summary",
                         cs, false);
    cs.validate();
    return cs;
}

std::string serialize_change_summary_json(const ChangeSummary& cs) {
    nlohmann::ordered_json diseases, tubes;
    for (auto c : kConditionCategories)
        diseases[std::string(category_name(c))] = cs.items(c);
    for (auto c : kDeviceCategories)
        tubes[std::string(category_name(c))] = cs.items(c);
    nlohmann::ordered_json doc;
    doc["Diseases_Change_Summary"] = diseases;
    doc["Tubes_Lines_Change_Summary"] = tubes;
    return doc.dump(2);
}

std::string render_change_summary(const ChangeSummary& cs, RenderProfile profile) {
    std::string out;
    auto emit_items = [&](const std::vector<std::string>& items) {
        for (const auto& item : items) {
            out += kIndent2;
            out += item;
            out += '\n';
        }
    };

    if (profile == RenderProfile::Appendix) {
        out += kDiseasesHeading;
        out += '\n';
        for (auto c : kConditionCategories) {
            out += kIndent1;
            out += category_name(c);
            out += ":\n";
            emit_items(cs.items(c));
        }
        out += kTubesHeading;
        out += '\n';
        for (auto c : kDeviceCategories) {
            out += kIndent1;
            out += category_name(c);
            out += ":\n";
            emit_items(cs.items(c));
        }
        return out;
    }

    // RadGraph2 layout: headings always present, empty categories omitted,
    // Stable reported under "No change summary".
    out += kRg2Devices;
    out += '\n';
    for (auto c : kDeviceCategories) {
        if (cs.items(c).empty()) continue;
        out += kIndent1;
        out += category_name(c);
        out += ":\n";
        emit_items(cs.items(c));
    }
    out += kRg2Conditions;
    out += '\n';
    for (auto c : kConditionCategories) {
        if (c == ConditionChangeCategory::Stable || cs.items(c).empty()) continue;
        out += kIndent1;
        out += category_name(c);
        out += ":\n";
        emit_items(cs.items(c));
    }
    out += kRg2NoChange;
    out += '\n';
    if (!cs.items(ConditionChangeCategory::Stable).empty()) {
        out += kIndent1;
        out += "Stable:\n";
        emit_items(cs.items(ConditionChangeCategory::Stable));
    }
    return out;
}

ChangeSummary parse_rendered_change_summary(std::string_view text, std::string source_id) {
    enum class Context { None, Conditions, Devices, NoChange };
    Context context = Context::None;
    bool any_heading = false;

    ChangeSummary cs;
    cs.source_id = std::move(source_id);
    std::vector<std::string>* current = nullptr;

    for (auto raw_line : split_lines(text)) {
        auto line = trim(raw_line);
        if (line.empty()) continue;

        if (iequals(line, kDiseasesHeading) || iequals(line, kRg2Conditions)) {
            context = Context::Conditions;
            any_heading = true;
            current = nullptr;
            continue;
        }
        if (iequals(line, kTubesHeading) || iequals(line, kRg2Devices)) {
            context = Context::Devices;
            any_heading = true;
            current = nullptr;
            continue;
        }
        if (iequals(line, kRg2NoChange)) {
            context = Context::NoChange;
            any_heading = true;
            current = nullptr;
            continue;
        }

        // Category markers are "<Name>:" lines; matching is case-insensitive
        // per the parsing contract and ignores indentation (model outputs are
        // not reliably indented).
        if (context != Context::None && line.back() == ':') {
            auto name = line.substr(0, line.size() - 1);
            if (context == Context::Devices) {
                if (auto c = device_category_from_name(name)) {
                    current = &cs.items(*c);
                    continue;
                }
            } else {
                // "No change summary" blocks carry condition categories
                // (Stable in the RadGraph2 data).
                if (auto c = condition_category_from_name(name)) {
                    current = &cs.items(*c);
                    continue;
                }
            }
        }

        // Anything else is an item of the current category; stray lines
        // before the first category marker are ignored.
        if (current) current->push_back(std::string(line));
    }

    if (!any_heading)
        throw ParseFailure("no change-summary heading recognized", std::string(text));
    return cs;
}

std::vector<CategoryScore> score_change_summaries(
    const std::vector<std::pair<ChangeSummary, ChangeSummary>>& pairs) {
    if (pairs.empty()) throw EmptyInput("no prediction/reference pairs");

    std::vector<CategoryScore> table;
    auto score_category = [&](bool is_condition, std::string_view name,
                              auto items_of) {
        CategoryScore row;
        row.is_condition = is_condition;
        row.name = std::string(name);
        double bleu = 0, rouge = 0, f1 = 0;
        for (const auto& [pred, ref] : pairs) {
            const auto& ref_items = items_of(ref);
            row.support += ref_items.size();
            if (ref_items.empty()) continue;
            auto candidate = join(items_of(pred), "\n");
            auto reference = join(ref_items, "\n");
            bleu += textmetrics::bleu_4(candidate, reference);
            rouge += textmetrics::rouge_l(candidate, reference);
            f1 += textmetrics::token_f1(candidate, reference).f1;
            ++row.pairs_scored;
        }
        if (row.pairs_scored > 0) {
            auto n = static_cast<double>(row.pairs_scored);
            row.bleu4 = bleu / n;
            row.rouge_l = rouge / n;
            row.token_f1 = f1 / n;
        }
        table.push_back(std::move(row));
    };

    for (auto c : kConditionCategories)
        score_category(true, category_name(c),
                       [c](const ChangeSummary& cs) -> const std::vector<std::string>& {
                           return cs.items(c);
                       });
    for (auto c : kDeviceCategories)
        score_category(false, category_name(c),
                       [c](const ChangeSummary& cs) -> const std::vector<std::string>& {
                           return cs.items(c);
                       });
    return table;
}

std::string category_key(const CategoryScore& score) {
    return (score.is_condition ? "conditions." : "devices.") + score.name;
}

}  // namespace radkit::changes
