#include "guibl/preprocess.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace guibl {
namespace {

constexpr std::array<std::string_view, 53> kJavaKeywords = {
    "abstract", "assert",       "boolean",   "break",      "byte",      "case",
    "catch",    "char",         "class",     "const",      "continue",  "default",
    "do",       "double",       "else",      "enum",       "extends",   "final",
    "finally",  "float",        "for",       "goto",       "if",        "implements",
    "import",   "instanceof",   "int",       "interface",  "long",      "native",
    "new",      "package",      "private",   "protected",  "public",    "return",
    "short",    "static",       "strictfp",  "super",      "switch",    "synchronized",
    "this",     "throw",        "throws",    "transient",  "try",       "void",
    "volatile", "while",        "true",      "false",      "null"};

constexpr bool is_upper(char c) noexcept { return c >= 'A' && c <= 'Z'; }
constexpr bool is_lower(char c) noexcept { return c >= 'a' && c <= 'z'; }
constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
constexpr bool is_alnum(char c) noexcept { return is_upper(c) || is_lower(c) || is_digit(c); }

}  // namespace

bool is_java_keyword(std::string_view word) noexcept {
    return std::find(kJavaKeywords.begin(), kJavaKeywords.end(), word) != kJavaKeywords.end();
}

std::vector<std::string> split_camel_case(std::string_view chunk) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 1; i < chunk.size(); ++i) {
        const char prev = chunk[i - 1];
        const char cur = chunk[i];
        const bool lower_to_upper = is_lower(prev) && is_upper(cur);
        const bool acronym_end =
            is_upper(prev) && is_upper(cur) && i + 1 < chunk.size() && is_lower(chunk[i + 1]);
        if (lower_to_upper || acronym_end) {
            parts.emplace_back(chunk.substr(start, i - start));
            start = i;
        }
    }
    if (start < chunk.size()) {
        parts.emplace_back(chunk.substr(start));
    }
    return parts;
}

TokenList preprocess_text(std::string_view raw) {
    TokenList out;
    std::size_t i = 0;
    while (i < raw.size()) {
        while (i < raw.size() && !is_alnum(raw[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < raw.size() && is_alnum(raw[j])) {
            ++j;
        }
        if (j > i) {
            for (auto& part : split_camel_case(raw.substr(i, j - i))) {
                std::string term;
                term.reserve(part.size());
                for (char c : part) {
                    if (is_digit(c)) {
                        continue;
                    }
                    term.push_back(is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c);
                }
                if (term.size() >= 3 && !is_java_keyword(term)) {
                    out.push_back(std::move(term));
                }
            }
        }
        i = j;
    }
    return out;
}

std::vector<TokenList> segment_tokens(const TokenList& tokens, std::size_t max_len) {
    if (max_len == 0) {
        throw std::invalid_argument("segment_tokens: max_len must be positive");
    }
    std::vector<TokenList> segments;
    for (std::size_t pos = 0; pos < tokens.size(); pos += max_len) {
        const auto end = std::min(tokens.size(), pos + max_len);
        segments.emplace_back(tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                              tokens.begin() + static_cast<std::ptrdiff_t>(end));
    }
    return segments;
}

}  // namespace guibl
