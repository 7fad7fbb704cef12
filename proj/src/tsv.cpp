#include <ostream>
#include <string_view>

#include "uztranslit/error.hpp"
#include "uztranslit/unicode.hpp"
#include "uztranslit/word_forms.hpp"

namespace uztranslit {

const std::string& WordForms::form(AlphabetId alphabet) const {
  switch (alphabet) {
    case AlphabetId::Latin: return latin;
    case AlphabetId::Cyrillic: return cyrillic;
    case AlphabetId::NewLatin: return new_latin;
  }
  return latin;
}

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::string canonical_cell(const std::string& cell) {
  return unicode::to_lower(normalize_apostrophes(cell));
}

}  // namespace

std::vector<NumberedRow> read_triples(std::istream& in) {
  std::vector<NumberedRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != kTripleHeader) {
        throw ParseError("expected header 'latin<TAB>cyrillic<TAB>new_latin'", line_no);
      }
      seen_header = true;
      continue;
    }
    auto cells = split_tabs(line);
    if (cells.size() != 3) {
      throw ParseError("expected 3 columns, found " + std::to_string(cells.size()), line_no);
    }
    for (const auto& c : cells) {
      if (c.empty()) throw ParseError("empty cell", line_no);
    }
    rows.push_back({line_no, {canonical_cell(cells[0]), canonical_cell(cells[1]), canonical_cell(cells[2])}});
  }
  if (!seen_header) {
    throw ParseError("missing header 'latin<TAB>cyrillic<TAB>new_latin'", line_no ? line_no : 1);
  }
  return rows;
}

void write_triples(std::ostream& out, const std::vector<WordForms>& rows) {
  out << kTripleHeader << '\n';
  for (const auto& r : rows) {
    out << r.latin << '\t' << r.cyrillic << '\t' << r.new_latin << '\n';
  }
}

}  // namespace uztranslit
