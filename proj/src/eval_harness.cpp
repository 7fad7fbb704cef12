#include "uztranslit/eval_harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uztranslit/error.hpp"
#include "uztranslit/unicode.hpp"

namespace uztranslit {

ParallelLexicon::ParallelLexicon(std::vector<WordForms> rows) {
  std::set<WordForms> seen;
  for (auto& r : rows) {
    for (auto a : kAlphabets) {
      if (r.form(a).empty()) throw ParseError("empty cell", 0);
    }
    if (!seen.insert(r).second) throw DuplicateError(r.latin, 0);
    rows_.push_back(std::move(r));
  }
}

ParallelLexicon ParallelLexicon::load(std::istream& in) {
  ParallelLexicon lex;
  std::set<WordForms> seen;
  for (auto& row : read_triples(in)) {
    if (!seen.insert(row.forms).second) {
      throw DuplicateError(row.forms.latin + "\t" + row.forms.cyrillic + "\t" + row.forms.new_latin,
                           row.line);
    }
    lex.rows_.push_back(std::move(row.forms));
  }
  return lex;
}

ParallelLexicon ParallelLexicon::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open parallel lexicon: " + path.string());
  }
  return load(in);
}

const DirectionScore& EvalReport::at(Direction d) const {
  for (const auto& s : scores) {
    if (s.direction == d) return s;
  }
  throw std::out_of_range("no score for " + direction_name(d));
}

double micro_f1(std::size_t correct, std::size_t total) {
  if (total == 0) throw std::invalid_argument("micro_f1: no instances");
  if (correct > total) throw std::invalid_argument("micro_f1: correct exceeds total");
  return static_cast<double>(correct) / static_cast<double>(total);
}

EvalReport evaluate(const ParallelLexicon& lexicon, const Transliterator& t) {
  if (lexicon.empty()) throw std::invalid_argument("evaluate: empty lexicon");
  EvalReport report;
  for (const auto d : all_directions()) {
    DirectionScore score{d};
    const TranslitOptions options{d.source, d.target, true};
    for (const auto& row : lexicon.rows()) {
      const std::string predicted = unicode::to_lower(t.transliterate(row.form(d.source), options));
      ++score.total;
      if (predicted == row.form(d.target)) ++score.correct;
    }
    score.micro_f1 = micro_f1(score.correct, score.total);
    report.scores.push_back(score);
  }
  return report;
}

namespace {

void check_complete(const EvalReport& report) {
  for (const auto d : all_directions()) {
    if (report.at(d).total == 0) {
      throw std::invalid_argument("report has no words for " + direction_name(d));
    }
  }
}

std::string two_decimals(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Display width in code points; the labels are ASCII anyway.
std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string report_render(const EvalReport& report) {
  check_complete(report);
  constexpr std::size_t kFirst = 11;
  constexpr std::size_t kCell = 10;
  std::ostringstream out;
  out << pad("Alphabets", kFirst);
  for (auto target : kAlphabets) out << "| " << pad(std::string(alphabet_label(target)), kCell);
  out << '\n';
  out << std::string(kFirst, '-');
  for (std::size_t i = 0; i < kAlphabets.size(); ++i) out << '+' << std::string(kCell + 1, '-');
  out << '\n';
  for (auto source : kAlphabets) {
    out << pad(std::string(alphabet_label(source)), kFirst);
    for (auto target : kAlphabets) {
      const std::string cell = source == target ? "-" : two_decimals(report.at({source, target}).micro_f1);
      out << "| " << pad(cell, kCell);
    }
    out << '\n';
  }
  return out.str();
}

std::string report_render_kv(const EvalReport& report) {
  check_complete(report);
  std::ostringstream out;
  out << std::fixed << std::setprecision(4);
  for (const auto d : all_directions()) {
    out << direction_name(d) << '=' << report.at(d).micro_f1 << '\n';
  }
  return out.str();
}

}  // namespace uztranslit
