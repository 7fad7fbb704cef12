#include "uztranslit/unicode.hpp"

#include <stdexcept>

#include <unicode/bytestream.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace uztranslit::unicode {

Decoded decode_at(std::string_view utf8, std::size_t offset) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto length = static_cast<int32_t>(utf8.size());
  auto i = static_cast<int32_t>(offset);
  UChar32 c = 0;
  U8_NEXT(bytes, i, length, c);
  if (c < 0) {
    return {kReplacementChar, 1, false};
  }
  return {static_cast<char32_t>(c), static_cast<std::size_t>(i) - offset, true};
}

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  for (std::size_t i = 0; i < utf8.size();) {
    const auto d = decode_at(utf8, i);
    out.push_back(d.cp);
    i += d.length;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  char buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<uint8_t*>(buf), n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    append_utf8(out, kReplacementChar);
    return;
  }
  out.append(buf, static_cast<std::size_t>(n));
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : text) {
    append_utf8(out, cp);
  }
  return out;
}

namespace {

void append_nfc_run(const icu::Normalizer2& normalizer, std::string_view run, std::string& out) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::StringPiece piece(run.data(), static_cast<int32_t>(run.size()));
  if (normalizer.isNormalizedUTF8(piece, status) && U_SUCCESS(status)) {
    out.append(run);
    return;
  }
  status = U_ZERO_ERROR;
  icu::StringByteSink<std::string> sink(&out, static_cast<int32_t>(run.size()));
  normalizer.normalizeUTF8(0, piece, sink, nullptr, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("NFC normalization failed: ") + u_errorName(status));
  }
}

}  // namespace

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error(std::string("ICU NFC normalizer unavailable: ") + u_errorName(status));
  }
  // Ill-formed bytes are copied through; only well-formed runs are composed.
  std::string out;
  out.reserve(utf8.size());
  std::size_t run_start = 0;
  for (std::size_t i = 0; i < utf8.size();) {
    const auto d = decode_at(utf8, i);
    if (!d.valid) {
      append_nfc_run(*normalizer, utf8.substr(run_start, i - run_start), out);
      out.push_back(utf8[i]);
      run_start = i + 1;
    }
    i += d.length;
  }
  append_nfc_run(*normalizer, utf8.substr(run_start), out);
  return out;
}

bool is_upper(char32_t cp) { return u_isupper(static_cast<UChar32>(cp)); }
bool is_lower(char32_t cp) { return u_islower(static_cast<UChar32>(cp)); }
char32_t to_lower(char32_t cp) { return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp))); }
char32_t to_upper(char32_t cp) { return static_cast<char32_t>(u_toupper(static_cast<UChar32>(cp))); }

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (auto& cp : out) cp = to_lower(cp);
  return out;
}

std::u32string to_upper(std::u32string_view text) {
  std::u32string out(text);
  for (auto& cp : out) cp = to_upper(cp);
  return out;
}

std::string to_lower(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (std::size_t i = 0; i < utf8.size();) {
    const auto d = decode_at(utf8, i);
    if (d.valid) {
      append_utf8(out, to_lower(d.cp));
    } else {
      out.push_back(utf8[i]);
    }
    i += d.length;
  }
  return out;
}

}  // namespace uztranslit::unicode
