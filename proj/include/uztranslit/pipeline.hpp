#pragma once

#include <string>
#include <string_view>

#include "uztranslit/alphabet.hpp"
#include "uztranslit/exception_lexicon.hpp"
#include "uztranslit/rule_engine.hpp"

namespace uztranslit {

struct TranslitOptions {
  AlphabetId source = AlphabetId::Cyrillic;
  AlphabetId target = AlphabetId::Latin;
  bool normalize_apostrophes = true;
};

/// Exception lexicon plus the six rule sets. Immutable after construction,
/// so one instance can serve any number of threads.
class Transliterator {
 public:
  /// Throws std::logic_error if a rule set's group count is off.
  explicit Transliterator(ExceptionLexicon lexicon);

  static Transliterator with_default_lexicon();

  /// normalize -> tokenize -> per-word conversion -> reunite. Non-word
  /// tokens are copied byte for byte. With source == target the
  /// (optionally normalized) input is returned.
  std::string transliterate(std::string_view text, const TranslitOptions& options) const;

  /// One word token: exception lookup on the lowercased word (longest
  /// prefix), else the rule set for the direction.
  std::string transliterate_word(std::string_view word, AlphabetId source, AlphabetId target) const;
  std::u32string transliterate_word(std::u32string_view word, AlphabetId source, AlphabetId target) const;

  const ExceptionLexicon& lexicon() const noexcept { return lexicon_; }
  const RuleSet& ruleset(Direction d) const { return ruleset_for(d); }

 private:
  ExceptionLexicon lexicon_;
};

inline std::string transliterate(std::string_view text, const TranslitOptions& options,
                                 const Transliterator& t) {
  return t.transliterate(text, options);
}

}  // namespace uztranslit
