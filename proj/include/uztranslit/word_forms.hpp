#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "uztranslit/alphabet.hpp"

namespace uztranslit {

/// One word written in all three alphabets: lowercase, composed, with
/// canonical apostrophes. Row shape of both lexicon files.
struct WordForms {
  std::string latin;
  std::string cyrillic;
  std::string new_latin;

  const std::string& form(AlphabetId alphabet) const;

  bool operator==(const WordForms&) const = default;
  auto operator<=>(const WordForms&) const = default;
};

/// A parsed row plus the line it came from.
struct NumberedRow {
  std::size_t line;
  WordForms forms;
};

inline constexpr const char* kTripleHeader = "latin\tcyrillic\tnew_latin";

/// Reads the shared TSV layout: optional `#` comment lines and blank lines,
/// the header, then three tab-separated columns per row. Cells are
/// canonicalized (NFC, apostrophes, lowercase).
///
/// Throws ParseError for a missing header, a wrong column count or an empty
/// cell.
std::vector<NumberedRow> read_triples(std::istream& in);

void write_triples(std::ostream& out, const std::vector<WordForms>& rows);

}  // namespace uztranslit
