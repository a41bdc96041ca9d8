#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace guibl {

// Ordered list of normalized terms. Every term is lowercase ASCII letters
// only, at least three characters long, and not a Java reserved word.
using TokenList = std::vector<std::string>;

// Java SE 8 reserved words plus the literals true/false/null.
bool is_java_keyword(std::string_view word) noexcept;

// Splits an identifier-like chunk on camelCase boundaries. A boundary sits
// between a lowercase letter and an uppercase letter, and before the last
// capital of an acronym run that is followed by a lowercase letter
// ("XMLHttp" -> "XML", "Http"). Digits never open a boundary.
std::vector<std::string> split_camel_case(std::string_view chunk);

// Full query/document normalization pipeline:
//   1. split on anything that is not an ASCII letter or digit
//   2. split camelCase boundaries (original compounds are not kept)
//   3. strip digits
//   4. lowercase
//   5. drop terms shorter than three characters
//   6. drop Java keywords
TokenList preprocess_text(std::string_view raw);

// Contiguous chunks of at most max_len tokens, in order.
std::vector<TokenList> segment_tokens(const TokenList& tokens, std::size_t max_len);

}  // namespace guibl
