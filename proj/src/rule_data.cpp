// Rewrite rules and character tables for the six directions.
//
// Each ContextRule belongs to a RuleGroup; the number of groups per alphabet
// pair is fixed (5 / 6 / 11, see expected_group_count). Letters with a plain
// one-to-one correspondence live in the CharMap instead.

#include <algorithm>

#include "uztranslit/rule_engine.hpp"

namespace uztranslit::detail {

namespace {

using L = LeftContext;
using R = RightContext;

using MapEntries = std::vector<std::pair<std::u32string, std::u32string>>;

class RuleSetBuilder {
 public:
  RuleSetBuilder(AlphabetId source, AlphabetId target) { rs_.direction = {source, target}; }

  RuleSetBuilder& group(std::string source, std::string targets, bool contextual = false) {
    rs_.groups.push_back({std::move(source), std::move(targets), contextual});
    return *this;
  }

  RuleSetBuilder& rule(std::u32string pattern, std::u32string replacement, L left = L::Any,
                       R right = R::Any) {
    rs_.rules.push_back({std::move(pattern), std::move(replacement), left, right, rs_.groups.size() - 1});
    return *this;
  }

  RuleSet build(MapEntries map) {
    std::stable_sort(rs_.rules.begin(), rs_.rules.end(), [](const ContextRule& a, const ContextRule& b) {
      return a.pattern.size() > b.pattern.size();
    });
    rs_.char_map = CharMap(std::move(map));
    return std::move(rs_);
  }

 private:
  RuleSet rs_;
};

// Letters that map one-to-one between Cyrillic and both Latin alphabets.
MapEntries cyrillic_to_latin_common() {
  return {
      {U"а", U"a"}, {U"б", U"b"}, {U"в", U"v"}, {U"г", U"g"}, {U"д", U"d"}, {U"ж", U"j"},
      {U"з", U"z"}, {U"и", U"i"}, {U"й", U"y"}, {U"к", U"k"}, {U"л", U"l"}, {U"м", U"m"},
      {U"н", U"n"}, {U"о", U"o"}, {U"п", U"p"}, {U"р", U"r"}, {U"с", U"s"}, {U"т", U"t"},
      {U"у", U"u"}, {U"ф", U"f"}, {U"х", U"x"}, {U"ҳ", U"h"}, {U"қ", U"q"}, {U"э", U"e"},
      // Soft sign is dropped; words that need it back are lexicon entries.
      {U"ь", U""},
  };
}

MapEntries latin_to_cyrillic_common() {
  return {
      {U"a", U"а"}, {U"b", U"б"}, {U"d", U"д"}, {U"f", U"ф"}, {U"g", U"г"}, {U"h", U"ҳ"},
      {U"i", U"и"}, {U"j", U"ж"}, {U"k", U"к"}, {U"l", U"л"}, {U"m", U"м"}, {U"n", U"н"},
      {U"o", U"о"}, {U"p", U"п"}, {U"q", U"қ"}, {U"r", U"р"}, {U"s", U"с"}, {U"t", U"т"},
      {U"u", U"у"}, {U"v", U"в"}, {U"x", U"х"}, {U"y", U"й"}, {U"z", U"з"},
  };
}

MapEntries with(MapEntries base, const MapEntries& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

// е/ё/ю/я/ц/ъ: shared by Cyrillic -> Latin and Cyrillic -> New Latin.
void add_cyrillic_vowel_groups(RuleSetBuilder& b) {
  b.group("е", "ye | e", true)
      .rule(U"е", U"ye", L::WordStartOrAfterVowel)
      .rule(U"е", U"e");
  b.group("ё", "yo").rule(U"ё", U"yo");
  b.group("ю", "yu").rule(U"ю", U"yu");
  b.group("я", "ya").rule(U"я", U"ya");
  b.group("ц", "ts | s", true)
      .rule(U"ц", U"ts", L::AfterVowel)
      .rule(U"ц", U"s");
}

// Reverse of the above for either Latin alphabet.
void add_latin_vowel_groups(RuleSetBuilder& b) {
  b.group("ye | e", "е | э", true)
      .rule(U"ye", U"е", L::WordStartOrAfterVowel)
      .rule(U"e", U"э", L::WordStartOrAfterVowel)
      .rule(U"e", U"е");
  b.group("yo", "ё").rule(U"yo", U"ё", L::Any, R::NotBeforeOkina);
  b.group("yu", "ю").rule(U"yu", U"ю");
  b.group("ya", "я").rule(U"ya", U"я");
  b.group("ts", "ц | тс", true).rule(U"ts", U"ц", L::AfterVowel, R::BeforeVowel);
}

RuleSet cyrillic_to_latin() {
  RuleSetBuilder b(AlphabetId::Cyrillic, AlphabetId::Latin);
  add_cyrillic_vowel_groups(b);
  b.group("ш", "sh").rule(U"ш", U"sh").rule(U"сҳ", U"sʼh");
  b.group("ч", "ch").rule(U"ч", U"ch");
  b.group("нг", "ng").rule(U"нг", U"ng");
  b.group("ў", "oʻ").rule(U"ў", U"oʻ");
  b.group("ғ", "gʻ").rule(U"ғ", U"gʻ");
  b.group("ъ", "ʼ").rule(U"ъ", U"ʼ");
  return b.build(cyrillic_to_latin_common());
}

RuleSet latin_to_cyrillic() {
  RuleSetBuilder b(AlphabetId::Latin, AlphabetId::Cyrillic);
  add_latin_vowel_groups(b);
  b.group("sh", "ш").rule(U"sh", U"ш").rule(U"sʼh", U"сҳ");
  b.group("ch", "ч").rule(U"ch", U"ч");
  b.group("ng", "нг").rule(U"ng", U"нг", L::Any, R::NotBeforeOkina);
  b.group("oʻ", "ў").rule(U"oʻ", U"ў");
  b.group("gʻ", "ғ").rule(U"gʻ", U"ғ");
  b.group("ʼ", "ъ").rule(U"ʼ", U"ъ");
  return b.build(latin_to_cyrillic_common());
}

RuleSet latin_to_new_latin() {
  RuleSetBuilder b(AlphabetId::Latin, AlphabetId::NewLatin);
  b.group("sh", "ş").rule(U"sh", U"ş").rule(U"sʼh", U"sh");
  b.group("ch", "ç").rule(U"ch", U"ç").rule(U"cʼh", U"ch");
  b.group("oʻ", "ō").rule(U"oʻ", U"ō");
  b.group("gʻ", "ḡ").rule(U"gʻ", U"ḡ");
  b.group("ng", "ñ").rule(U"ng", U"ñ", L::Any, R::NotBeforeOkina);
  return b.build({});
}

RuleSet new_latin_to_latin() {
  RuleSetBuilder b(AlphabetId::NewLatin, AlphabetId::Latin);
  b.group("ş", "sh").rule(U"ş", U"sh").rule(U"sh", U"sʼh");
  b.group("ç", "ch").rule(U"ç", U"ch").rule(U"ch", U"cʼh");
  b.group("ō", "oʻ").rule(U"ō", U"oʻ");
  b.group("ḡ", "gʻ").rule(U"ḡ", U"gʻ");
  b.group("ñ", "ng").rule(U"ñ", U"ng");
  return b.build({});
}

RuleSet cyrillic_to_new_latin() {
  RuleSetBuilder b(AlphabetId::Cyrillic, AlphabetId::NewLatin);
  add_cyrillic_vowel_groups(b);
  b.group("ъ", "ʼ").rule(U"ъ", U"ʼ");
  return b.build(with(cyrillic_to_latin_common(),
                      {{U"ш", U"ş"}, {U"ч", U"ç"}, {U"ў", U"ō"}, {U"ғ", U"ḡ"}, {U"нг", U"ñ"}}));
}

RuleSet new_latin_to_cyrillic() {
  RuleSetBuilder b(AlphabetId::NewLatin, AlphabetId::Cyrillic);
  add_latin_vowel_groups(b);
  b.group("ʼ", "ъ").rule(U"ʼ", U"ъ");
  return b.build(with(latin_to_cyrillic_common(),
                      {{U"ş", U"ш"}, {U"ç", U"ч"}, {U"ō", U"ў"}, {U"ḡ", U"ғ"}, {U"ñ", U"нг"}}));
}

}  // namespace

std::vector<RuleSet> build_rulesets() {
  std::vector<RuleSet> out;
  out.push_back(cyrillic_to_latin());
  out.push_back(latin_to_cyrillic());
  out.push_back(latin_to_new_latin());
  out.push_back(new_latin_to_latin());
  out.push_back(cyrillic_to_new_latin());
  out.push_back(new_latin_to_cyrillic());
  return out;
}

}  // namespace uztranslit::detail
