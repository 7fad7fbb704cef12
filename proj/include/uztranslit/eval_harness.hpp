#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "uztranslit/alphabet.hpp"
#include "uztranslit/pipeline.hpp"
#include "uztranslit/word_forms.hpp"

namespace uztranslit {

/// Gold word triples for word-level evaluation.
class ParallelLexicon {
 public:
  ParallelLexicon() = default;
  /// Throws ParseError on empty cells and DuplicateError on repeated triples.
  explicit ParallelLexicon(std::vector<WordForms> rows);

  static ParallelLexicon load(std::istream& in);
  static ParallelLexicon load_file(const std::filesystem::path& path);

  const std::vector<WordForms>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

 private:
  std::vector<WordForms> rows_;
};

struct DirectionScore {
  Direction direction;
  std::size_t total = 0;
  std::size_t correct = 0;
  double micro_f1 = 0.0;
};

struct EvalReport {
  std::vector<DirectionScore> scores;  // one per direction, in all_directions() order

  /// Throws std::out_of_range if the direction is missing.
  const DirectionScore& at(Direction d) const;
};

/// With exactly one prediction per gold word, micro precision and micro
/// recall are both correct/total, so micro-F1 reduces to word accuracy.
/// Throws std::invalid_argument when total == 0 or correct > total.
double micro_f1(std::size_t correct, std::size_t total);

/// Transliterates every word in all six directions and compares exactly
/// (case-sensitive, both sides lowercase) with the gold cell.
/// Throws std::invalid_argument for an empty lexicon.
EvalReport evaluate(const ParallelLexicon& lexicon, const Transliterator& t);

/// 3x3 table, rows are sources, columns targets, "-" on the diagonal,
/// two-decimal scores. Throws std::invalid_argument if a direction is
/// missing or has no words.
std::string report_render(const EvalReport& report);

/// One `source->target=score` line per direction.
std::string report_render_kv(const EvalReport& report);

}  // namespace uztranslit
