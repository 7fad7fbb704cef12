#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uztranslit {

enum class TokenKind { Word, NonWord };

/// A slice of the input. `begin`/`end` are byte offsets into the original
/// text; `text` starts out as that exact substring and may be replaced by
/// a converted form before reuniting.
struct Token {
  TokenKind kind;
  std::string text;
  std::size_t begin;
  std::size_t end;

  bool operator==(const Token&) const = default;
};

/// Splits into maximal runs of alphabet letters (Word) and everything else
/// (NonWord). U+02BB/U+02BC join a word only once it has started with a letter.
/// Lossless for any byte sequence, including ill-formed UTF-8.
std::vector<Token> tokenize(std::string_view text);

std::string reunite(std::span<const Token> tokens);

}  // namespace uztranslit
