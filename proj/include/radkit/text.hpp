#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace radkit {

inline constexpr std::string_view kWhitespace = " \t\r\n\v\f";

inline std::string_view trim(std::string_view s) {
    auto b = s.find_first_not_of(kWhitespace);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(kWhitespace);
    return s.substr(b, e - b + 1);
}

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = ascii_lower(c);
    return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    return true;
}

inline bool istarts_with(std::string_view hay, std::string_view prefix) {
    return hay.size() >= prefix.size() && iequals(hay.substr(0, prefix.size()), prefix);
}

// Splits on '\n'; a trailing '\r' on each line is dropped. No trailing empty
// line is produced for text ending in '\n'.
inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        auto line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    return lines;
}

template <typename Seq>
std::string join(const Seq& parts, std::string_view sep) {
    std::string out;
    bool first = true;
    for (const auto& p : parts) {
        if (!first) out += sep;
        out += p;
        first = false;
    }
    return out;
}

}  // namespace radkit
