#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace uztranslit {

enum class AlphabetId { Cyrillic, Latin, NewLatin };

inline constexpr std::array<AlphabetId, 3> kAlphabets{AlphabetId::Latin, AlphabetId::Cyrillic,
                                                      AlphabetId::NewLatin};

/// Snake-case token used by the CLI and the HTTP API: "latin", "cyrillic", "new_latin".
std::string_view alphabet_name(AlphabetId id);
/// Human-readable column label: "Latin", "Cyrillic", "New Latin".
std::string_view alphabet_label(AlphabetId id);
std::optional<AlphabetId> parse_alphabet(std::string_view name);

/// An ordered pair of alphabets. Transliteration directions are the six
/// pairs with source != target.
struct Direction {
  AlphabetId source;
  AlphabetId target;

  bool operator==(const Direction&) const = default;
};

std::array<Direction, 6> all_directions();
std::string direction_name(Direction d);  // "latin->cyrillic"

/// Canonical code points. Everything downstream of input normalization
/// sees only these forms.
namespace chars {
inline constexpr char32_t kOkina = 0x02BB;        // oʻ gʻ
inline constexpr char32_t kGlottalStop = 0x02BC;  // tutuq belgisi
inline constexpr char32_t kLatinOMacron = 0x014D;
inline constexpr char32_t kLatinGMacron = 0x1E21;
inline constexpr char32_t kLatinSCedilla = 0x015F;
inline constexpr char32_t kLatinCCedilla = 0x00E7;
inline constexpr char32_t kLatinNTilde = 0x00F1;
inline constexpr char32_t kCyrKa = 0x049B;     // қ
inline constexpr char32_t kCyrGhe = 0x0493;    // ғ
inline constexpr char32_t kCyrHa = 0x04B3;     // ҳ
inline constexpr char32_t kCyrShortU = 0x045E; // ў
}  // namespace chars

enum class CharClass { Vowel, Consonant, ModifierApostrophe, GlottalStop, NonLetter };

enum class CaseClass { Lower, Title, AllCaps, Mixed, Caseless };

std::string_view to_string(CharClass c);
std::string_view to_string(CaseClass c);

/// Total over all scalar values. Characters outside the alphabet's
/// inventory are NonLetter. Case-insensitive.
CharClass classify_char(char32_t ch, AlphabetId alphabet);

/// True for letters of any of the three inventories, including the Cyrillic
/// hard and soft signs. U+02BB and U+02BC are not counted here.
bool is_word_letter(char32_t ch);

/// U+0027, U+0060, U+2018, U+2019, U+02BB, U+02BC.
bool is_apostrophe_like(char32_t ch);

/// Throws std::invalid_argument on an empty word.
CaseClass classify_case(std::u32string_view word);
CaseClass classify_case(std::string_view word);

/// Composes the input (NFC) and then rewrites apostrophe variants:
/// after o/O/g/G they become U+02BB, between two letters U+02BC, and
/// anything else is left alone as punctuation. Idempotent.
std::string normalize_apostrophes(std::string_view text);

}  // namespace uztranslit
