#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace emotive::utf8 {

inline constexpr char32_t kInvalid = 0xFFFFFFFF;

/// Decodes the code point starting at text[pos] and advances pos past it.
/// Malformed sequences consume one byte and yield kInvalid.
char32_t next(std::string_view text, std::size_t& pos);

void append(std::string& out, char32_t cp);

/// Number of code points, counting each malformed byte as one.
std::size_t length(std::string_view text);

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
/// The ASCII punctuation set !"#$%&'()*+,-./:;<=>?@[\]^_`{|}~
inline bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

std::string to_lower_ascii(std::string_view text);

}  // namespace emotive::utf8
