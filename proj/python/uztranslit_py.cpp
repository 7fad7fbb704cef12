#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "uztranslit/alphabet.hpp"
#include "uztranslit/error.hpp"
#include "uztranslit/eval_harness.hpp"
#include "uztranslit/pipeline.hpp"
#include "uztranslit/rule_engine.hpp"
#include "uztranslit/tokenizer.hpp"

namespace py = pybind11;
using namespace uztranslit;

namespace {

AlphabetId alphabet_arg(const py::object& value) {
  if (py::isinstance<AlphabetId>(value)) return value.cast<AlphabetId>();
  const auto name = value.cast<std::string>();
  if (auto id = parse_alphabet(name)) return *id;
  throw py::value_error("unknown alphabet '" + name + "' (valid: latin, cyrillic, new_latin)");
}

const Transliterator& default_engine() {
  static const Transliterator engine = Transliterator::with_default_lexicon();
  return engine;
}

py::dict report_to_dict(const EvalReport& report) {
  py::dict out;
  for (const auto& s : report.scores) {
    py::dict entry;
    entry["total"] = s.total;
    entry["correct"] = s.correct;
    entry["micro_f1"] = s.micro_f1;
    out[py::str(direction_name(s.direction))] = entry;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rule-based transliteration between the Uzbek Cyrillic, Latin and New Latin alphabets";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  py::enum_<AlphabetId>(m, "Alphabet")
      .value("CYRILLIC", AlphabetId::Cyrillic)
      .value("LATIN", AlphabetId::Latin)
      .value("NEW_LATIN", AlphabetId::NewLatin);

  py::enum_<CaseClass>(m, "CaseClass")
      .value("LOWER", CaseClass::Lower)
      .value("TITLE", CaseClass::Title)
      .value("ALL_CAPS", CaseClass::AllCaps)
      .value("MIXED", CaseClass::Mixed)
      .value("CASELESS", CaseClass::Caseless);

  py::class_<Transliterator>(m, "Transliterator")
      .def(py::init([]() { return Transliterator::with_default_lexicon(); }),
           "Engine with the bundled exception lexicon.")
      .def(py::init([](const std::filesystem::path& lexicon) {
             return Transliterator(ExceptionLexicon::load_file(lexicon));
           }),
           py::arg("lexicon"), "Engine with an exception lexicon loaded from a TSV file.")
      .def(
          "transliterate",
          [](const Transliterator& t, std::string_view text, const py::object& source,
             const py::object& target, bool normalize) {
            const TranslitOptions options{alphabet_arg(source), alphabet_arg(target), normalize};
            py::gil_scoped_release release;
            return t.transliterate(text, options);
          },
          py::arg("text"), py::arg("source"), py::arg("target"), py::arg("normalize") = true)
      .def(
          "transliterate_word",
          [](const Transliterator& t, std::string_view word, const py::object& source,
             const py::object& target) {
            return t.transliterate_word(word, alphabet_arg(source), alphabet_arg(target));
          },
          py::arg("word"), py::arg("source"), py::arg("target"))
      .def_property_readonly("lexicon_size", [](const Transliterator& t) { return t.lexicon().size(); });

  m.def(
      "transliterate",
      [](std::string_view text, const py::object& source, const py::object& target, bool normalize) {
        const TranslitOptions options{alphabet_arg(source), alphabet_arg(target), normalize};
        py::gil_scoped_release release;
        return default_engine().transliterate(text, options);
      },
      py::arg("text"), py::arg("source"), py::arg("target"), py::arg("normalize") = true,
      "Transliterate text with the bundled exception lexicon.");

  m.def("normalize_apostrophes", [](std::string_view text) { return normalize_apostrophes(text); },
        py::arg("text"));

  m.def("classify_case", [](std::string_view word) { return classify_case(word); }, py::arg("word"));

  m.def(
      "tokenize",
      [](std::string_view text) {
        py::list out;
        for (const auto& tok : tokenize(text)) {
          out.append(py::make_tuple(tok.kind == TokenKind::Word ? "word" : "non_word", tok.text,
                                    tok.begin, tok.end));
        }
        return out;
      },
      py::arg("text"), "List of (kind, text, begin_byte, end_byte).");

  m.def(
      "rule_table_dump",
      [](const py::object& source, const py::object& target) {
        return rule_table_dump({alphabet_arg(source), alphabet_arg(target)});
      },
      py::arg("source"), py::arg("target"));

  m.def(
      "rule_group_count",
      [](const py::object& source, const py::object& target) {
        return ruleset_for({alphabet_arg(source), alphabet_arg(target)}).group_count();
      },
      py::arg("source"), py::arg("target"));

  m.def("micro_f1", &micro_f1, py::arg("correct"), py::arg("total"));

  m.def(
      "evaluate",
      [](const std::filesystem::path& data, const Transliterator* engine) {
        const auto gold = ParallelLexicon::load_file(data);
        return report_to_dict(evaluate(gold, engine ? *engine : default_engine()));
      },
      py::arg("data"), py::arg("engine") = nullptr,
      "Score all six directions on a parallel TSV; returns {direction: {total, correct, micro_f1}}.");
}
