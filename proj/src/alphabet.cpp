#include "uztranslit/alphabet.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "uztranslit/unicode.hpp"

namespace uztranslit {

namespace {

constexpr std::u32string_view kLatinVowels = U"aeiou";
constexpr std::u32string_view kLatinConsonants = U"bcdfghjklmnpqrstvwxyz";
constexpr std::u32string_view kNewLatinVowels = U"aeiouō";
constexpr std::u32string_view kNewLatinConsonants = U"bcdfghjklmnpqrstvwxyzşçḡñ";
constexpr std::u32string_view kCyrillicVowels = U"аеёиоуэюяў";
constexpr std::u32string_view kCyrillicConsonants = U"бвгджзйклмнпрстфхцчшқғҳ";
constexpr std::u32string_view kCyrillicSigns = U"ъь";

bool contains(std::u32string_view set, char32_t ch) {
  return set.find(ch) != std::u32string_view::npos;
}

}  // namespace

std::string_view alphabet_name(AlphabetId id) {
  switch (id) {
    case AlphabetId::Cyrillic: return "cyrillic";
    case AlphabetId::Latin: return "latin";
    case AlphabetId::NewLatin: return "new_latin";
  }
  return "";
}

std::string_view alphabet_label(AlphabetId id) {
  switch (id) {
    case AlphabetId::Cyrillic: return "Cyrillic";
    case AlphabetId::Latin: return "Latin";
    case AlphabetId::NewLatin: return "New Latin";
  }
  return "";
}

std::optional<AlphabetId> parse_alphabet(std::string_view name) {
  for (auto id : kAlphabets) {
    if (alphabet_name(id) == name) return id;
  }
  return std::nullopt;
}

std::array<Direction, 6> all_directions() {
  std::array<Direction, 6> out{};
  std::size_t n = 0;
  for (auto source : kAlphabets) {
    for (auto target : kAlphabets) {
      if (source != target) out[n++] = {source, target};
    }
  }
  return out;
}

std::string direction_name(Direction d) {
  return std::string(alphabet_name(d.source)) + "->" + std::string(alphabet_name(d.target));
}

std::string_view to_string(CharClass c) {
  switch (c) {
    case CharClass::Vowel: return "vowel";
    case CharClass::Consonant: return "consonant";
    case CharClass::ModifierApostrophe: return "modifier_apostrophe";
    case CharClass::GlottalStop: return "glottal_stop";
    case CharClass::NonLetter: return "non_letter";
  }
  return "";
}

std::string_view to_string(CaseClass c) {
  switch (c) {
    case CaseClass::Lower: return "lower";
    case CaseClass::Title: return "title";
    case CaseClass::AllCaps: return "all_caps";
    case CaseClass::Mixed: return "mixed";
    case CaseClass::Caseless: return "caseless";
  }
  return "";
}

CharClass classify_char(char32_t ch, AlphabetId alphabet) {
  const char32_t lower = unicode::to_lower(ch);
  switch (alphabet) {
    case AlphabetId::Latin:
      if (contains(kLatinVowels, lower)) return CharClass::Vowel;
      if (contains(kLatinConsonants, lower)) return CharClass::Consonant;
      if (ch == chars::kOkina) return CharClass::ModifierApostrophe;
      if (ch == chars::kGlottalStop) return CharClass::GlottalStop;
      return CharClass::NonLetter;
    case AlphabetId::NewLatin:
      if (contains(kNewLatinVowels, lower)) return CharClass::Vowel;
      if (contains(kNewLatinConsonants, lower)) return CharClass::Consonant;
      if (ch == chars::kGlottalStop) return CharClass::GlottalStop;
      return CharClass::NonLetter;
    case AlphabetId::Cyrillic:
      if (contains(kCyrillicVowels, lower)) return CharClass::Vowel;
      if (contains(kCyrillicConsonants, lower)) return CharClass::Consonant;
      // ъ and ь are both glottal-stop signs in Uzbek Cyrillic.
      if (contains(kCyrillicSigns, lower)) return CharClass::GlottalStop;
      return CharClass::NonLetter;
  }
  return CharClass::NonLetter;
}

bool is_word_letter(char32_t ch) {
  if (ch == chars::kOkina || ch == chars::kGlottalStop) return false;
  return std::any_of(kAlphabets.begin(), kAlphabets.end(),
                     [ch](AlphabetId a) { return classify_char(ch, a) != CharClass::NonLetter; });
}

bool is_apostrophe_like(char32_t ch) {
  switch (ch) {
    case 0x0027:
    case 0x0060:
    case 0x2018:
    case 0x2019:
    case chars::kOkina:
    case chars::kGlottalStop:
      return true;
    default:
      return false;
  }
}

CaseClass classify_case(std::u32string_view word) {
  if (word.empty()) {
    throw std::invalid_argument("classify_case: empty word");
  }
  std::size_t cased = 0;
  std::size_t upper = 0;
  bool first_upper = false;
  bool rest_lower = true;
  for (char32_t ch : word) {
    if (!unicode::is_cased(ch)) continue;
    const bool is_up = unicode::is_upper(ch);
    if (cased == 0) {
      first_upper = is_up;
    } else if (is_up) {
      rest_lower = false;
    }
    ++cased;
    if (is_up) ++upper;
  }
  if (cased == 0) return CaseClass::Caseless;
  if (upper == 0) return CaseClass::Lower;
  // A lone capital is read as Title, not as an acronym.
  if (first_upper && rest_lower) return CaseClass::Title;
  if (upper == cased) return CaseClass::AllCaps;
  return CaseClass::Mixed;
}

CaseClass classify_case(std::string_view word) {
  return classify_case(unicode::to_u32(word));
}

std::string normalize_apostrophes(std::string_view text) {
  const std::string composed = unicode::nfc(text);

  // Work on decoded positions but keep ill-formed bytes verbatim.
  std::vector<unicode::Decoded> units;
  units.reserve(composed.size());
  for (std::size_t i = 0; i < composed.size();) {
    units.push_back(unicode::decode_at(composed, i));
    i += units.back().length;
  }

  auto letter_at = [&](std::size_t k) { return units[k].valid && is_word_letter(units[k].cp); };

  std::string out;
  out.reserve(composed.size());
  std::size_t offset = 0;
  for (std::size_t k = 0; k < units.size(); ++k) {
    const auto& u = units[k];
    if (!u.valid) {
      out.push_back(composed[offset]);
      offset += u.length;
      continue;
    }
    char32_t cp = u.cp;
    if (is_apostrophe_like(cp)) {
      const bool prev_valid = k > 0 && units[k - 1].valid;
      const char32_t prev = prev_valid ? units[k - 1].cp : 0;
      if (prev == U'o' || prev == U'O' || prev == U'g' || prev == U'G') {
        cp = chars::kOkina;
      } else if (k > 0 && k + 1 < units.size() && letter_at(k - 1) && letter_at(k + 1)) {
        cp = chars::kGlottalStop;
      }
    }
    if (cp == u.cp) {
      out.append(composed, offset, u.length);
    } else {
      unicode::append_utf8(out, cp);
    }
    offset += u.length;
  }
  return out;
}

}  // namespace uztranslit
