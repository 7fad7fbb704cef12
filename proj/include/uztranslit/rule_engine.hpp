#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uztranslit/alphabet.hpp"

namespace uztranslit {

/// Condition on the source character just before a match.
enum class LeftContext {
  Any,
  /// Word start, or preceded by a vowel or a glottal-stop sign.
  WordStartOrAfterVowel,
  /// Preceded by a vowel (Latin oʻ counts as a vowel).
  AfterVowel,
};

/// Condition on the source character just after a match.
enum class RightContext {
  Any,
  BeforeVowel,
  /// Not followed by U+02BB (keeps "yo"+"ʻ" and "ng"+"ʻ" apart).
  NotBeforeOkina,
};

/// A lowercase pattern and its lowercase replacement. Matching is
/// case-insensitive; output case is rendered from the matched source.
struct ContextRule {
  std::u32string pattern;
  std::u32string replacement;
  LeftContext left = LeftContext::Any;
  RightContext right = RightContext::Any;
  std::size_t group = 0;
};

/// One letter-level phenomenon (all its rules, both cases) counted once.
struct RuleGroup {
  std::string source;   // e.g. "ц"
  std::string targets;  // e.g. "ts | s"
  bool contextual = false;
};

/// Lowercase grapheme-to-grapheme table applied after the contextual rules.
/// Keys are usually single letters; multi-letter keys (Cyrillic нг toward
/// New Latin ñ) are matched longest first. Unmapped characters pass through.
class CharMap {
 public:
  CharMap() = default;
  explicit CharMap(std::vector<std::pair<std::u32string, std::u32string>> entries);

  struct Hit {
    std::size_t length;
    const std::u32string* replacement;
  };
  /// Looks up the lowercased text at the start of `lower_tail`.
  std::optional<Hit> lookup(std::u32string_view lower_tail) const;

  const std::map<std::u32string, std::u32string>& entries() const noexcept { return map_; }
  bool injective() const;

 private:
  std::map<std::u32string, std::u32string> map_;
  std::size_t max_key_ = 0;
};

struct RuleSet {
  Direction direction;
  std::vector<RuleGroup> groups;
  /// Ordered by priority: longer patterns first, then declaration order.
  std::vector<ContextRule> rules;
  CharMap char_map;

  std::size_t group_count() const noexcept { return groups.size(); }
};

/// Rule-group counts for each alphabet pair: 5 between the two Latin
/// alphabets, 6 between New Latin and Cyrillic, 11 between Latin and
/// Cyrillic (both directions).
std::size_t expected_group_count(Direction d);

/// Static rule data. Throws std::invalid_argument when source == target.
const RuleSet& ruleset_for(Direction d);

/// Left-to-right single pass over `word` starting at `from` (earlier
/// characters still provide context). At each position the first matching
/// contextual rule fires, else the char map applies, else the character is
/// copied.
std::u32string apply_rules(std::u32string_view word, const RuleSet& rules, std::size_t from = 0);
std::string apply_rules(std::string_view word, const RuleSet& rules);

/// Case of a multi-letter replacement for an uppercase source letter:
/// ALL CAPS when the adjacent source letter (the next one if present,
/// otherwise the previous one) is uppercase, Title otherwise. A lowercase
/// source returns the replacement unchanged.
std::u32string render_digraph_case(std::u32string_view replacement, bool source_is_upper,
                                   std::optional<bool> next_is_upper,
                                   std::optional<bool> prev_is_upper);

/// Human-readable listing of the contextual rule groups and the char map.
std::string rule_table_dump(Direction d);

namespace detail {
/// Builds the six rule sets; used once by ruleset_for.
std::vector<RuleSet> build_rulesets();
}  // namespace detail

}  // namespace uztranslit
