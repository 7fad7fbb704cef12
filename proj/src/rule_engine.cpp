#include "uztranslit/rule_engine.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uztranslit/unicode.hpp"

namespace uztranslit {

CharMap::CharMap(std::vector<std::pair<std::u32string, std::u32string>> entries) {
  for (auto& [key, value] : entries) {
    max_key_ = std::max(max_key_, key.size());
    map_.insert_or_assign(std::move(key), std::move(value));
  }
}

std::optional<CharMap::Hit> CharMap::lookup(std::u32string_view lower_tail) const {
  for (std::size_t len = std::min(max_key_, lower_tail.size()); len > 0; --len) {
    auto it = map_.find(std::u32string(lower_tail.substr(0, len)));
    if (it != map_.end()) return Hit{len, &it->second};
  }
  return std::nullopt;
}

bool CharMap::injective() const {
  std::set<std::u32string> seen;
  for (const auto& [key, value] : map_) {
    if (!seen.insert(value).second) return false;
  }
  return true;
}

std::size_t expected_group_count(Direction d) {
  auto is_pair = [&](AlphabetId a, AlphabetId b) {
    return (d.source == a && d.target == b) || (d.source == b && d.target == a);
  };
  if (is_pair(AlphabetId::Latin, AlphabetId::NewLatin)) return 5;
  if (is_pair(AlphabetId::NewLatin, AlphabetId::Cyrillic)) return 6;
  if (is_pair(AlphabetId::Latin, AlphabetId::Cyrillic)) return 11;
  throw std::invalid_argument("identity direction has no rule set");
}

const RuleSet& ruleset_for(Direction d) {
  static const std::vector<RuleSet> kRuleSets = detail::build_rulesets();
  if (d.source == d.target) {
    throw std::invalid_argument("identity direction has no rule set: " + direction_name(d));
  }
  for (const auto& rs : kRuleSets) {
    if (rs.direction == d) return rs;
  }
  throw std::logic_error("missing rule set for " + direction_name(d));
}

namespace {

// Class of the letter just before `pos`; Latin oʻ reads as one vowel.
CharClass class_before(std::u32string_view lower, std::size_t pos, AlphabetId alphabet) {
  const char32_t prev = lower[pos - 1];
  if (prev == chars::kOkina && alphabet == AlphabetId::Latin && pos >= 2) {
    return lower[pos - 2] == U'o' ? CharClass::Vowel : CharClass::Consonant;
  }
  return classify_char(prev, alphabet);
}

bool left_matches(LeftContext ctx, std::u32string_view lower, std::size_t pos, AlphabetId alphabet) {
  switch (ctx) {
    case LeftContext::Any:
      return true;
    case LeftContext::WordStartOrAfterVowel: {
      if (pos == 0) return true;
      const auto c = class_before(lower, pos, alphabet);
      return c == CharClass::Vowel || c == CharClass::GlottalStop;
    }
    case LeftContext::AfterVowel:
      return pos > 0 && class_before(lower, pos, alphabet) == CharClass::Vowel;
  }
  return false;
}

bool right_matches(RightContext ctx, std::u32string_view lower, std::size_t end, AlphabetId alphabet) {
  switch (ctx) {
    case RightContext::Any:
      return true;
    case RightContext::BeforeVowel:
      return end < lower.size() && classify_char(lower[end], alphabet) == CharClass::Vowel;
    case RightContext::NotBeforeOkina:
      return end >= lower.size() || lower[end] != chars::kOkina;
  }
  return false;
}

std::optional<bool> next_cased_is_upper(std::u32string_view word, std::size_t end) {
  for (std::size_t i = end; i < word.size(); ++i) {
    if (unicode::is_cased(word[i])) return unicode::is_upper(word[i]);
  }
  return std::nullopt;
}

std::optional<bool> prev_cased_is_upper(std::u32string_view word, std::size_t begin) {
  for (std::size_t i = begin; i > 0; --i) {
    if (unicode::is_cased(word[i - 1])) return unicode::is_upper(word[i - 1]);
  }
  return std::nullopt;
}

std::size_t count_cased(std::u32string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char32_t c) { return unicode::is_cased(c); }));
}

// Case of `replacement` (lowercase) given the source span word[begin, end).
std::u32string render_case(std::u32string_view word, std::size_t begin, std::size_t end,
                           std::u32string_view replacement) {
  const auto source = word.substr(begin, end - begin);
  const std::size_t repl_cased = count_cased(replacement);

  if (source.size() == 1 && !unicode::is_cased(source[0])) {
    // ʼ -> ъ: borrow the case of the surrounding letters.
    const auto next = next_cased_is_upper(word, end);
    const auto prev = prev_cased_is_upper(word, begin);
    const bool upper = (next || prev) && next.value_or(true) && prev.value_or(true);
    return upper ? unicode::to_upper(replacement) : std::u32string(replacement);
  }
  if (source.size() == 1) {
    const bool upper = unicode::is_upper(source[0]);
    if (!upper) return std::u32string(replacement);
    if (repl_cased <= 1) return unicode::to_upper(replacement);
    return render_digraph_case(replacement, true, next_cased_is_upper(word, end),
                               prev_cased_is_upper(word, begin));
  }

  std::vector<bool> source_upper;
  for (char32_t c : source) {
    if (unicode::is_cased(c)) source_upper.push_back(unicode::is_upper(c));
  }
  if (source_upper.empty()) return std::u32string(replacement);
  if (repl_cased <= 1) {
    return source_upper.front() ? unicode::to_upper(replacement) : std::u32string(replacement);
  }
  // Digraph to digraph: carry case letter by letter.
  std::u32string out(replacement);
  std::size_t k = 0;
  for (auto& c : out) {
    if (!unicode::is_cased(c)) continue;
    const bool up = source_upper[std::min(k, source_upper.size() - 1)];
    if (up) c = unicode::to_upper(c);
    ++k;
  }
  return out;
}

}  // namespace

std::u32string render_digraph_case(std::u32string_view replacement, bool source_is_upper,
                                   std::optional<bool> next_is_upper,
                                   std::optional<bool> prev_is_upper) {
  if (!source_is_upper) return std::u32string(replacement);
  const auto adjacent = next_is_upper ? next_is_upper : prev_is_upper;
  if (adjacent.value_or(false)) return unicode::to_upper(replacement);
  std::u32string out(replacement);
  for (auto& c : out) {
    if (unicode::is_cased(c)) {
      c = unicode::to_upper(c);
      break;
    }
  }
  return out;
}

std::u32string apply_rules(std::u32string_view word, const RuleSet& rules, std::size_t from) {
  const AlphabetId alphabet = rules.direction.source;
  const std::u32string lower = unicode::to_lower(word);
  const std::u32string_view lv(lower);

  std::u32string out;
  out.reserve(word.size() * 2);
  std::size_t pos = from;
  while (pos < word.size()) {
    const ContextRule* fired = nullptr;
    for (const auto& r : rules.rules) {
      const std::size_t end = pos + r.pattern.size();
      if (end > lv.size() || lv.compare(pos, r.pattern.size(), r.pattern) != 0) continue;
      if (!left_matches(r.left, lv, pos, alphabet) || !right_matches(r.right, lv, end, alphabet)) continue;
      fired = &r;
      break;
    }
    if (fired) {
      const std::size_t end = pos + fired->pattern.size();
      out += render_case(word, pos, end, fired->replacement);
      pos = end;
      continue;
    }
    if (const auto hit = rules.char_map.lookup(lv.substr(pos))) {
      out += render_case(word, pos, pos + hit->length, *hit->replacement);
      pos += hit->length;
      continue;
    }
    out.push_back(word[pos]);
    ++pos;
  }
  return out;
}

std::string apply_rules(std::string_view word, const RuleSet& rules) {
  return unicode::to_utf8(apply_rules(std::u32string_view(unicode::to_u32(word)), rules));
}

namespace {

std::string_view describe(LeftContext c) {
  switch (c) {
    case LeftContext::Any: return "";
    case LeftContext::WordStartOrAfterVowel: return "at word start or after a vowel/sign";
    case LeftContext::AfterVowel: return "after a vowel";
  }
  return "";
}

std::string_view describe(RightContext c) {
  switch (c) {
    case RightContext::Any: return "";
    case RightContext::BeforeVowel: return "before a vowel";
    case RightContext::NotBeforeOkina: return "not before ʻ";
  }
  return "";
}

std::string show(std::u32string_view s) { return s.empty() ? "∅" : unicode::to_utf8(s); }

}  // namespace

std::string rule_table_dump(Direction d) {
  const RuleSet& rs = ruleset_for(d);
  std::ostringstream out;
  out << direction_name(d) << '\n';
  out << "contextual rule groups: " << rs.group_count() << '\n';
  for (std::size_t g = 0; g < rs.groups.size(); ++g) {
    const auto& group = rs.groups[g];
    out << "  " << (g + 1) << ". " << group.source << " → " << group.targets;
    if (group.contextual) out << " (context)";
    out << '\n';
    for (const auto& r : rs.rules) {
      if (r.group != g) continue;
      out << "       " << show(r.pattern) << " → " << show(r.replacement);
      std::string cond(describe(r.left));
      if (!describe(r.right).empty()) {
        if (!cond.empty()) cond += ", ";
        cond += describe(r.right);
      }
      if (!cond.empty()) out << "  [" << cond << ']';
      out << '\n';
    }
  }
  out << "character map: " << rs.char_map.entries().size() << " entries\n";
  for (const auto& [key, value] : rs.char_map.entries()) {
    out << "  " << show(key) << " → " << show(value) << '\n';
  }
  out << "all other characters: unchanged\n";
  return out.str();
}

}  // namespace uztranslit
