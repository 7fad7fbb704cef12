#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "uztranslit/alphabet.hpp"
#include "uztranslit/word_forms.hpp"

namespace uztranslit {

using ExceptionEntry = WordForms;

/// Code-point trie answering "which stored key is the longest prefix of
/// this word".
class PrefixIndex {
 public:
  PrefixIndex();

  /// Returns the id already stored under `key`, if any, without replacing it.
  std::optional<std::size_t> insert(std::u32string_view key, std::size_t id);

  struct Hit {
    std::size_t id;
    std::size_t length;  // code points
  };
  std::optional<Hit> longest_prefix(std::u32string_view word) const;

 private:
  static constexpr std::size_t kNoId = static_cast<std::size_t>(-1);
  struct Node {
    std::map<char32_t, std::uint32_t> next;
    std::size_t id = kNoId;
  };
  std::vector<Node> nodes_;
};

struct LexiconMatch {
  const ExceptionEntry* entry;
  std::size_t prefix_length;  // code points of the matched source form
  std::string suffix;         // remainder of the (lowercase) query word
};

/// Words whose three spellings are not related by the rewrite rules.
/// Immutable once built; reloading produces a new instance.
class ExceptionLexicon {
 public:
  ExceptionLexicon() = default;
  /// Entries are canonicalized and validated. Throws DuplicateError when two
  /// entries share a surface form in the same alphabet, and ParseError when a
  /// form is empty.
  explicit ExceptionLexicon(std::vector<ExceptionEntry> entries);

  static ExceptionLexicon load(std::istream& in);
  static ExceptionLexicon load_file(const std::filesystem::path& path);
  /// The bundled lexicon compiled into the library.
  static ExceptionLexicon load_default();

  /// Entry whose `source` form is the longest prefix of `word_lower`.
  std::optional<LexiconMatch> match_prefix(std::string_view word_lower, AlphabetId source) const;
  std::optional<LexiconMatch> match_prefix(std::u32string_view word_lower, AlphabetId source) const;

  const ExceptionEntry* find(std::string_view form, AlphabetId alphabet) const;

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<ExceptionEntry>& entries() const noexcept { return entries_; }

  void save(std::ostream& out) const;

 private:
  void add(ExceptionEntry entry, std::size_t line);

  std::vector<ExceptionEntry> entries_;
  PrefixIndex latin_;
  PrefixIndex cyrillic_;
  PrefixIndex new_latin_;

  const PrefixIndex& index(AlphabetId alphabet) const;
  PrefixIndex& index(AlphabetId alphabet);
};

/// Target form of `entry` re-cased to `word_case` (Title capitalizes the
/// first letter, AllCaps everything; other classes keep the stored
/// lowercase), followed by the already converted suffix.
std::string apply_exception(const ExceptionEntry& entry, std::string_view converted_suffix,
                            AlphabetId target, CaseClass word_case);

/// Raw TSV of the bundled lexicon.
std::string_view default_lexicon_tsv();

}  // namespace uztranslit
