#include "uztranslit/pipeline.hpp"

#include <stdexcept>

#include "uztranslit/tokenizer.hpp"
#include "uztranslit/unicode.hpp"

namespace uztranslit {

Transliterator::Transliterator(ExceptionLexicon lexicon) : lexicon_(std::move(lexicon)) {
  for (const auto d : all_directions()) {
    const auto& rs = ruleset_for(d);
    if (rs.group_count() != expected_group_count(d)) {
      throw std::logic_error("rule set " + direction_name(d) + " has " +
                             std::to_string(rs.group_count()) + " groups, expected " +
                             std::to_string(expected_group_count(d)));
    }
  }
}

Transliterator Transliterator::with_default_lexicon() {
  return Transliterator(ExceptionLexicon::load_default());
}

std::u32string Transliterator::transliterate_word(std::u32string_view word, AlphabetId source,
                                                  AlphabetId target) const {
  if (source == target || word.empty()) return std::u32string(word);
  const RuleSet& rules = ruleset_for({source, target});
  const std::u32string lower = unicode::to_lower(word);
  if (const auto match = lexicon_.match_prefix(std::u32string_view(lower), source)) {
    // The suffix is converted in place so that the lemma still provides
    // left context (e.g. е after a vowel-final stem).
    const std::u32string suffix = apply_rules(word, rules, match->prefix_length);
    return unicode::to_u32(
        apply_exception(*match->entry, unicode::to_utf8(suffix), target, classify_case(word)));
  }
  return apply_rules(word, rules);
}

std::string Transliterator::transliterate_word(std::string_view word, AlphabetId source,
                                               AlphabetId target) const {
  return unicode::to_utf8(transliterate_word(std::u32string_view(unicode::to_u32(word)), source, target));
}

std::string Transliterator::transliterate(std::string_view text, const TranslitOptions& options) const {
  std::string normalized;
  if (options.normalize_apostrophes) {
    normalized = normalize_apostrophes(text);
    text = normalized;
  }
  if (options.source == options.target) return std::string(text);

  auto tokens = tokenize(text);
  for (auto& tok : tokens) {
    if (tok.kind == TokenKind::Word) {
      tok.text = transliterate_word(tok.text, options.source, options.target);
    }
  }
  return reunite(tokens);
}

}  // namespace uztranslit
