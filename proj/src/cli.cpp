#include "uztranslit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "uztranslit/error.hpp"
#include "uztranslit/eval_harness.hpp"
#include "uztranslit/pipeline.hpp"

namespace uztranslit::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string valid_names() {
  std::string s;
  for (auto a : kAlphabets) {
    if (!s.empty()) s += ", ";
    s += alphabet_name(a);
  }
  return s;
}

const CLI::Validator kAlphabetName(
    [](std::string& value) -> std::string {
      if (parse_alphabet(value)) return {};
      return "unknown alphabet '" + value + "' (valid: " + valid_names() + ")";
    },
    "ALPHABET", "alphabet name");

ExceptionLexicon load_lexicon(const std::string& flag_path) {
  std::string path = flag_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kLexiconEnv); env && *env) path = env;
  }
  if (path.empty()) return ExceptionLexicon::load_default();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read lexicon file: " + path);
  try {
    return ExceptionLexicon::load(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what(), 0);
  }
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path.empty() || path == "-") return read_all(stdin_stream);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read input file: " + path);
  return read_all(in);
}

void write_output(const std::string& path, const std::string& payload, std::ostream& stdout_stream) {
  if (path.empty() || path == "-") {
    stdout_stream << payload;
    stdout_stream.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write output file: " + path);
  out << payload;
  if (!out) throw IoError("write failed: " + path);
}

bool is_subcommand(const std::string& s) {
  return s == "translit" || s == "eval" || s == "rules" || s == "-h" || s == "--help";
}

}  // namespace

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transliterate Uzbek text between Cyrillic, Latin and New Latin."};
  app.name("uztranslit");
  app.require_subcommand(1);

  std::string from, to, in_path, out_path, lexicon_path, data_path, format = "table";
  bool no_normalize = false;

  auto* translit = app.add_subcommand("translit", "Transliterate text (default command)");
  translit->add_option("--from", from, "Source alphabet")->required()->check(kAlphabetName);
  translit->add_option("--to", to, "Target alphabet")->required()->check(kAlphabetName);
  translit->add_option("--in", in_path, "Input file (default: standard input)");
  translit->add_option("--out", out_path, "Output file (default: standard output)");
  translit->add_flag("--no-normalize", no_normalize, "Keep apostrophe variants as typed");
  translit->add_option("--lexicon", lexicon_path, "Exception lexicon TSV");

  auto* eval = app.add_subcommand("eval", "Score the engine against a parallel word list");
  eval->add_option("--data", data_path, "Parallel lexicon TSV")->required();
  eval->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "kv"}));
  eval->add_option("--out", out_path, "Output file (default: standard output)");
  eval->add_option("--lexicon", lexicon_path, "Exception lexicon TSV");

  auto* rules = app.add_subcommand("rules", "Print the rule table for one direction");
  rules->add_option("--from", from, "Source alphabet")->required()->check(kAlphabetName);
  rules->add_option("--to", to, "Target alphabet")->required()->check(kAlphabetName);

  std::vector<std::string> argv(args.begin(), args.end());
  if (argv.empty() || !is_subcommand(argv.front())) argv.insert(argv.begin(), "translit");
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "uztranslit: " << e.what() << '\n';
    err << "run 'uztranslit --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (rules->parsed()) {
      const Direction d{*parse_alphabet(from), *parse_alphabet(to)};
      if (d.source == d.target) {
        err << "uztranslit: --from and --to must differ for 'rules'\n";
        return kExitUsage;
      }
      out << rule_table_dump(d);
      return kExitOk;
    }

    const Transliterator t(load_lexicon(lexicon_path));

    if (eval->parsed()) {
      std::ifstream data(data_path, std::ios::binary);
      if (!data) throw IoError("cannot read data file: " + data_path);
      ParallelLexicon gold;
      try {
        gold = ParallelLexicon::load(data);
      } catch (const DataError& e) {
        throw DataError(data_path + ": " + e.what(), 0);
      }
      if (gold.empty()) throw DataError(data_path + ": no words to evaluate", 0);
      const EvalReport report = evaluate(gold, t);
      write_output(out_path, format == "kv" ? report_render_kv(report) : report_render(report), out);
      return kExitOk;
    }

    const TranslitOptions options{*parse_alphabet(from), *parse_alphabet(to), !no_normalize};
    const std::string input = read_input(in_path, in);
    write_output(out_path, t.transliterate(input, options), out);
    return kExitOk;
  } catch (const IoError& e) {
    err << "uztranslit: " << e.what() << '\n';
    return kExitData;
  } catch (const DataError& e) {
    err << "uztranslit: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "uztranslit: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace uztranslit::cli
