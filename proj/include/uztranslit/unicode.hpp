#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace uztranslit::unicode {

inline constexpr char32_t kReplacementChar = 0xFFFD;

/// One decoded scalar value and the number of bytes it occupied.
/// Ill-formed sequences decode to `valid == false` covering one byte, so
/// callers can pass raw bytes through untouched.
struct Decoded {
  char32_t cp;
  std::size_t length;
  bool valid;
};

Decoded decode_at(std::string_view utf8, std::size_t offset);

/// Ill-formed bytes become U+FFFD.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

/// Canonical composition (NFC).
std::string nfc(std::string_view utf8);

bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
inline bool is_cased(char32_t cp) { return is_upper(cp) || is_lower(cp); }
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

/// Simple (code point to code point) case mapping; length is preserved.
std::u32string to_lower(std::u32string_view text);
std::u32string to_upper(std::u32string_view text);
std::string to_lower(std::string_view utf8);

}  // namespace uztranslit::unicode
