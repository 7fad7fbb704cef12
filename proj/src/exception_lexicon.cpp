#include "uztranslit/exception_lexicon.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "uztranslit/error.hpp"
#include "uztranslit/unicode.hpp"

namespace uztranslit {

PrefixIndex::PrefixIndex() : nodes_(1) {}

std::optional<std::size_t> PrefixIndex::insert(std::u32string_view key, std::size_t id) {
  std::uint32_t node = 0;
  for (char32_t ch : key) {
    auto it = nodes_[node].next.find(ch);
    if (it == nodes_[node].next.end()) {
      nodes_.emplace_back();
      const auto child = static_cast<std::uint32_t>(nodes_.size() - 1);
      nodes_[node].next.emplace(ch, child);
      node = child;
    } else {
      node = it->second;
    }
  }
  if (nodes_[node].id != kNoId) return nodes_[node].id;
  nodes_[node].id = id;
  return std::nullopt;
}

std::optional<PrefixIndex::Hit> PrefixIndex::longest_prefix(std::u32string_view word) const {
  std::optional<Hit> best;
  std::uint32_t node = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto it = nodes_[node].next.find(word[i]);
    if (it == nodes_[node].next.end()) break;
    node = it->second;
    if (nodes_[node].id != kNoId) best = Hit{nodes_[node].id, i + 1};
  }
  return best;
}

ExceptionLexicon::ExceptionLexicon(std::vector<ExceptionEntry> entries) {
  entries_.reserve(entries.size());
  for (auto& e : entries) {
    add({unicode::to_lower(normalize_apostrophes(e.latin)),
         unicode::to_lower(normalize_apostrophes(e.cyrillic)),
         unicode::to_lower(normalize_apostrophes(e.new_latin))},
        0);
  }
}

const PrefixIndex& ExceptionLexicon::index(AlphabetId alphabet) const {
  switch (alphabet) {
    case AlphabetId::Latin: return latin_;
    case AlphabetId::Cyrillic: return cyrillic_;
    case AlphabetId::NewLatin: return new_latin_;
  }
  return latin_;
}

PrefixIndex& ExceptionLexicon::index(AlphabetId alphabet) {
  return const_cast<PrefixIndex&>(std::as_const(*this).index(alphabet));
}

void ExceptionLexicon::add(ExceptionEntry entry, std::size_t line) {
  const std::size_t id = entries_.size();
  for (auto alphabet : kAlphabets) {
    const auto& form = entry.form(alphabet);
    if (form.empty()) throw ParseError("empty form", line);
    if (index(alphabet).insert(unicode::to_u32(form), id)) {
      throw DuplicateError(form, line);
    }
  }
  entries_.push_back(std::move(entry));
}

ExceptionLexicon ExceptionLexicon::load(std::istream& in) {
  ExceptionLexicon lex;
  for (auto& row : read_triples(in)) {
    lex.add(std::move(row.forms), row.line);
  }
  return lex;
}

ExceptionLexicon ExceptionLexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open lexicon file: " + path.string());
  }
  return load(in);
}

ExceptionLexicon ExceptionLexicon::load_default() {
  std::istringstream in{std::string(default_lexicon_tsv())};
  return load(in);
}

std::optional<LexiconMatch> ExceptionLexicon::match_prefix(std::u32string_view word_lower,
                                                           AlphabetId source) const {
  const auto hit = index(source).longest_prefix(word_lower);
  if (!hit) return std::nullopt;
  return LexiconMatch{&entries_[hit->id], hit->length, unicode::to_utf8(word_lower.substr(hit->length))};
}

std::optional<LexiconMatch> ExceptionLexicon::match_prefix(std::string_view word_lower,
                                                           AlphabetId source) const {
  return match_prefix(std::u32string_view(unicode::to_u32(word_lower)), source);
}

const ExceptionEntry* ExceptionLexicon::find(std::string_view form, AlphabetId alphabet) const {
  const auto key = unicode::to_u32(form);
  const auto hit = index(alphabet).longest_prefix(key);
  if (!hit || hit->length != key.size()) return nullptr;
  return &entries_[hit->id];
}

void ExceptionLexicon::save(std::ostream& out) const { write_triples(out, entries_); }

std::string apply_exception(const ExceptionEntry& entry, std::string_view converted_suffix,
                            AlphabetId target, CaseClass word_case) {
  std::u32string form = unicode::to_u32(entry.form(target));
  switch (word_case) {
    case CaseClass::Title:
      if (!form.empty()) form[0] = unicode::to_upper(form[0]);
      break;
    case CaseClass::AllCaps:
      form = unicode::to_upper(form);
      break;
    case CaseClass::Lower:
    case CaseClass::Mixed:
    case CaseClass::Caseless:
      break;
  }
  std::string out = unicode::to_utf8(form);
  out.append(converted_suffix);
  return out;
}

}  // namespace uztranslit
