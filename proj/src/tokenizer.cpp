#include "uztranslit/tokenizer.hpp"

#include "uztranslit/alphabet.hpp"
#include "uztranslit/unicode.hpp"

namespace uztranslit {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  bool prev_in_word = false;
  for (std::size_t i = 0; i < text.size();) {
    const auto d = unicode::decode_at(text, i);
    bool in_word = false;
    if (d.valid) {
      in_word = is_word_letter(d.cp) ||
                (prev_in_word && (d.cp == chars::kOkina || d.cp == chars::kGlottalStop));
    }
    const TokenKind kind = in_word ? TokenKind::Word : TokenKind::NonWord;
    if (tokens.empty() || tokens.back().kind != kind) {
      tokens.push_back({kind, {}, i, i});
    }
    auto& tok = tokens.back();
    tok.text.append(text.substr(i, d.length));
    tok.end = i + d.length;
    prev_in_word = in_word;
    i += d.length;
  }
  return tokens;
}

std::string reunite(std::span<const Token> tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

}  // namespace uztranslit
