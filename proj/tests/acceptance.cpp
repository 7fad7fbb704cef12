// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <httplib.h>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "f1_oracle.hpp"
#include "uztranslit/eval_harness.hpp"
#include "uztranslit/http_service.hpp"
#include "uztranslit/pipeline.hpp"
#include "uztranslit/tokenizer.hpp"
#include "uztranslit/unicode.hpp"

using namespace uztranslit;
using json = nlohmann::json;

namespace {

constexpr auto Cyr = AlphabetId::Cyrillic;
constexpr auto Lat = AlphabetId::Latin;
constexpr auto New = AlphabetId::NewLatin;

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<WordForms> rows_of(const std::string& name) {
  std::ifstream in(std::string(UZTRANSLIT_DATA_DIR) + "/" + name, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + name);
  std::vector<WordForms> out;
  for (auto& r : read_triples(in)) out.push_back(r.forms);
  return out;
}

std::string tr(const Transliterator& t, std::string_view text, AlphabetId from, AlphabetId to) {
  return t.transliterate(text, {from, to, true});
}

// 1
Outcome loanwords() {
  const auto start = std::chrono::steady_clock::now();
  const auto t = Transliterator::with_default_lexicon();
  const auto rows = rows_of("loanwords.tsv");
  std::size_t checks = 0, ok = 0;
  std::string first_miss;
  for (const auto& row : rows) {
    for (auto d : all_directions()) {
      ++checks;
      const auto got = tr(t, row.form(d.source), d.source, d.target);
      if (got == row.form(d.target)) {
        ++ok;
      } else if (first_miss.empty()) {
        first_miss = "; first miss " + row.form(d.source) + " -> " + got;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream detail;
  detail << ok << "/" << checks << " exact, " << rows.size() << " rows, " << secs << " s" << first_miss;
  return {rows.size() == 15 && checks == 90 && ok == 90 && secs < 1.0, detail.str()};
}

// 2
Outcome case_handling(const Transliterator& t) {
  const std::pair<const char*, const char*> cases[] = {
      {"Шўрва", "Shoʻrva"}, {"Юлдуз", "Yulduz"}, {"АҚШ", "AQSH"}, {"ЮНЕСКО", "YUNESKO"}};
  std::string detail;
  bool pass = true;
  for (const auto& [in, want] : cases) {
    const auto got = tr(t, in, Cyr, Lat);
    pass = pass && got == want;
    detail += std::string(detail.empty() ? "" : ", ") + in + "->" + got;
  }
  return {pass, detail};
}

// 3
Outcome glottal_round_trip(const Transliterator& t) {
  std::string detail;
  bool pass = true;
  for (const auto& [cyr, lat] : {std::pair{"факультет", "fakultet"}, std::pair{"кальций", "kalsiy"}}) {
    const auto there = tr(t, cyr, Cyr, Lat);
    const auto back = tr(t, there, Lat, Cyr);
    const bool from_lexicon = t.lexicon().find(cyr, Cyr) != nullptr;
    pass = pass && there == lat && back == cyr && from_lexicon;
    detail += std::string(detail.empty() ? "" : ", ") + cyr + "->" + there + "->" + back;
  }
  return {pass, detail};
}

// 4
Outcome cardinality() {
  std::string detail;
  bool pass = true;
  const std::pair<Direction, std::size_t> want[] = {
      {{Lat, New}, 5}, {{New, Lat}, 5}, {{New, Cyr}, 6}, {{Cyr, New}, 6}, {{Lat, Cyr}, 11}, {{Cyr, Lat}, 11}};
  for (const auto& [d, n] : want) {
    const auto got = ruleset_for(d).group_count();
    pass = pass && got == n;
    detail += std::string(detail.empty() ? "" : ", ") + direction_name(d) + "=" + std::to_string(got);
  }
  return {pass, detail};
}

// Latin word free of sh, ch, ng, oʻ, gʻ (any case), of the split
// spellings sʼh / cʼh, and of ʼ after o/g, which normalizes to oʻ/gʻ.
std::string digraph_free_word(std::mt19937& rng) {
  static const std::u32string pool = U"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZʼ";
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(1, 16);
  const int n = len(rng);
  std::u32string w;
  while (static_cast<int>(w.size()) < n) {
    const char32_t c = pool[pick(rng)];
    const char32_t lc = unicode::to_lower(c);
    const char32_t p1 = w.empty() ? 0 : unicode::to_lower(w.back());
    const char32_t p2 = w.size() < 2 ? 0 : unicode::to_lower(w[w.size() - 2]);
    if (lc == U'h' && (p1 == U's' || p1 == U'c')) continue;
    if (lc == U'g' && p1 == U'n') continue;
    if (c == chars::kGlottalStop && (p1 == U'o' || p1 == U'g')) continue;
    if (lc == U'h' && p1 == chars::kGlottalStop && (p2 == U's' || p2 == U'c')) continue;
    w.push_back(c);
  }
  return unicode::to_utf8(w);
}

// 5
Outcome fixed_point(const Transliterator& t) {
  std::mt19937 rng(20240521);
  constexpr int kWords = 20000;
  int failures = 0;
  std::string first;
  for (int i = 0; i < kWords; ++i) {
    const auto w = digraph_free_word(rng);
    const auto got = tr(t, w, Lat, New);
    if (got != w) {
      if (!failures) first = "; first: " + w + " -> " + got;
      ++failures;
    }
  }
  return {failures == 0, std::to_string(kWords) + " words, " + std::to_string(failures) + " changed" + first};
}

// 6
Outcome golden(const Transliterator& t) {
  const auto rows = rows_of("golden.tsv");
  std::size_t trips = 0, trip_ok = 0;
  std::string first;
  for (const auto& row : rows) {
    for (auto d : all_directions()) {
      ++trips;
      const auto back = tr(t, tr(t, row.form(d.source), d.source, d.target), d.target, d.source);
      if (back == row.form(d.source)) {
        ++trip_ok;
      } else if (first.empty()) {
        first = "; first miss " + row.form(d.source) + " -> " + back;
      }
    }
  }
  const auto report = evaluate(ParallelLexicon(rows), t);
  bool direct = true;
  for (const auto& s : report.scores) direct = direct && s.micro_f1 == 1.0;
  std::ostringstream detail;
  detail << rows.size() << " rows, round trips " << trip_ok << "/" << trips << ", direct accuracy "
         << (direct ? "1.00 in all 6 directions" : "below 1.00") << first;
  return {rows.size() >= 200 && trip_ok == trips && direct, detail.str()};
}

// 7
Outcome harness_oracle(const Transliterator& t) {
  auto base = rows_of("golden.tsv");
  base.resize(20);
  const Direction target{Lat, Cyr};
  std::string detail;
  bool pass = true;
  for (std::size_t k : {0u, 1u, 5u}) {
    auto rows = base;
    for (std::size_t i = 0; i < k; ++i) rows[i * 3].cyrillic += "қ";
    const ParallelLexicon lex(rows);
    const auto report = evaluate(lex, t);
    std::vector<std::string> gold, pred;
    for (const auto& r : lex.rows()) {
      gold.push_back(r.cyrillic);
      pred.push_back(tr(t, r.latin, Lat, Cyr));
    }
    const double reported = report.at(target).micro_f1;
    const double expected = static_cast<double>(20 - k) / 20.0;
    const double oracle = testing::brute_force_micro_f1(gold, pred);
    pass = pass && reported == expected && std::abs(oracle - reported) < 1e-12;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sk=%zu: %.4f (oracle %.4f)", detail.empty() ? "" : ", ", k, reported,
                  oracle);
    detail += buf;
  }
  return {pass, detail};
}

std::string fuzz_unicode(std::mt19937& rng) {
  // Ranges: ASCII, Latin-1/Extended, Cyrillic, modifier letters, general
  // punctuation, CJK, emoji, plus arbitrary scalars.
  static const std::pair<char32_t, char32_t> ranges[] = {
      {0x20, 0x7E},     {0x00C0, 0x024F}, {0x0400, 0x04FF}, {0x02B0, 0x02FF},
      {0x2000, 0x206F}, {0x4E00, 0x4E40}, {0x1F300, 0x1F6FF}, {0x30, 0x39}};
  std::uniform_int_distribution<std::size_t> which(0, std::size(ranges));
  std::uniform_int_distribution<int> len(0, 40);
  std::u32string s;
  for (int n = len(rng); n > 0; --n) {
    const std::size_t r = which(rng);
    if (r == std::size(ranges)) {
      char32_t c = std::uniform_int_distribution<char32_t>(1, 0x10FFFF)(rng);
      if (c >= 0xD800 && c <= 0xDFFF) c = 0xFFFD;
      s.push_back(c);
    } else {
      s.push_back(std::uniform_int_distribution<char32_t>(ranges[r].first, ranges[r].second)(rng));
    }
  }
  return unicode::to_utf8(s);
}

// 8
Outcome tokenizer_identity() {
  std::mt19937 rng(777);
  constexpr int kStrings = 20000;
  int failures = 0;
  for (int i = 0; i < kStrings; ++i) {
    const auto s = fuzz_unicode(rng);
    if (reunite(tokenize(s)) != s) ++failures;
  }
  return {failures == 0, std::to_string(kStrings) + " strings, " + std::to_string(failures) + " failures"};
}

// 9
Outcome apostrophes() {
  const char* variants[] = {"'", "`", "‘", "’", "ʻ", "ʼ"};
  int ok = 0;
  for (const char* v : variants) {
    for (const char* letter : {"o", "O", "g", "G"}) {
      const std::string in = std::string(letter) + v + "zbek";
      if (normalize_apostrophes(in) == std::string(letter) + "ʻzbek") ++ok;
    }
  }
  std::mt19937 rng(99);
  static const std::u32string apos = U"'`‘’ʻʼ";
  std::uniform_int_distribution<std::size_t> pick_apos(0, apos.size() - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  constexpr int kInputs = 20000;
  int not_idempotent = 0;
  for (int i = 0; i < kInputs; ++i) {
    auto s = unicode::to_u32(fuzz_unicode(rng));
    for (auto& c : s) {
      if (coin(rng) == 0) c = apos[pick_apos(rng)];
    }
    const auto once = normalize_apostrophes(unicode::to_utf8(s));
    if (normalize_apostrophes(once) != once) ++not_idempotent;
  }
  const int total = static_cast<int>(std::size(variants)) * 4;
  return {ok == total && not_idempotent == 0,
          std::to_string(ok) + "/" + std::to_string(total) + " variants to U+02BB, " +
              std::to_string(not_idempotent) + "/" + std::to_string(kInputs) + " not idempotent"};
}

std::string run_cli_binary(const std::string& input, const std::string& args) {
  const auto path = std::filesystem::temp_directory_path() / "uztranslit-acceptance-input.txt";
  std::ofstream(path, std::ios::binary) << input;
  const std::string cmd = std::string("\"") + UZTRANSLIT_CLI_PATH + "\" " + args + " --in \"" + path.string() + "\"";
  std::string out;
  if (FILE* p = ::popen(cmd.c_str(), "r")) {
    char buf[4096];
    for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, n);
    if (::pclose(p) != 0) out = "<cli failed>";
  }
  std::filesystem::remove(path);
  return out;
}

// 10
Outcome service(std::shared_ptr<const Transliterator> t) {
  http::Service svc(t);
  const int port = svc.bind_to_any_port("127.0.0.1");
  if (port <= 0) return {false, "could not bind"};
  std::thread server([&] { svc.listen_after_bind(); });
  svc.wait_until_ready();

  const std::string text = "Шўрва, АҚШ ва ЮНЕСКО! Октябрьда факультетга келдик 😀";
  const std::string body = json{{"text", text}, {"from", "cyrillic"}, {"to", "latin"}}.dump();
  constexpr int kClients = 100;
  std::vector<int> status(kClients, 0);
  std::vector<std::string> bodies(kClients);
  std::vector<std::thread> clients;
  for (int i = 0; i < kClients; ++i) {
    clients.emplace_back([&, i] {
      httplib::Client c("127.0.0.1", port);
      c.set_read_timeout(10, 0);
      if (auto res = c.Post("/api/transliterate", body, "application/json")) {
        status[i] = res->status;
        bodies[i] = res->body;
      }
    });
  }
  for (auto& c : clients) c.join();

  int bad_status = 0, differing = 0;
  for (int i = 0; i < kClients; ++i) {
    if (status[i] != 200) ++bad_status;
    if (bodies[i] != bodies[0]) ++differing;
  }
  std::string result;
  if (bad_status == 0) result = json::parse(bodies[0])["result"].get<std::string>();
  const std::string cli = run_cli_binary(text, "--from cyrillic --to latin");

  httplib::Client c("127.0.0.1", port);
  const auto invalid = c.Post("/api/transliterate", R"({"text":"x","from":"latin","to":"runes"})",
                              "application/json");
  const int invalid_status = invalid ? invalid->status : 0;

  svc.stop();
  server.join();

  const bool pass = bad_status == 0 && differing == 0 && result == cli && invalid_status == 400;
  std::ostringstream detail;
  detail << kClients << " concurrent POSTs: " << (kClients - bad_status) << " x 200, " << differing
         << " differing bodies, result " << (result == cli ? "==" : "!=") << " CLI output; invalid alphabet -> "
         << invalid_status;
  return {pass, detail.str()};
}

}  // namespace

int main() {
  const auto engine = std::make_shared<const Transliterator>(Transliterator::with_default_lexicon());
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"loanword conformance", [] { return loanwords(); }},
      {"case handling", [&] { return case_handling(*engine); }},
      {"glottal-stop round trip", [&] { return glottal_round_trip(*engine); }},
      {"rule-group cardinality", [] { return cardinality(); }},
      {"Latin to New Latin fixed point", [&] { return fixed_point(*engine); }},
      {"golden round trip", [&] { return golden(*engine); }},
      {"micro-F1 harness oracle", [&] { return harness_oracle(*engine); }},
      {"tokenizer identity", [] { return tokenizer_identity(); }},
      {"apostrophe normalization", [] { return apostrophes(); }},
      {"service conformance", [&] { return service(engine); }},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    ++n;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << ". " << name << ": " << o.detail << '\n';
  }
  std::cout << (n - failed) << "/" << n << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
