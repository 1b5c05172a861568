#ifndef CHUNKALIGN_UNICODE_H_
#define CHUNKALIGN_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers. Normalization and character classes are backed by ICU.
namespace chunkalign::unicode {

bool is_valid_utf8(std::string_view text);

// Throws Error(kInvalidUtf8) on malformed input.
std::u32string decode(std::string_view text);
std::string encode(std::u32string_view text);
std::string encode(char32_t c);

bool is_space(char32_t c);
bool is_punct(char32_t c);

// Number of code points that are not whitespace.
std::size_t count_non_space(std::string_view text);

// Canonical composition (NFC).
std::string nfc(std::string_view text);

// NFC followed by full lowercase mapping (root locale), recomposed.
std::string nfc_lower(std::string_view text);

// Splits on Unicode whitespace.
std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace chunkalign::unicode

#endif  // CHUNKALIGN_UNICODE_H_
