// Copyright (c) 2026 The bnipa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "bnipa/eval.h"
#include "bnipa/g2p.h"
#include "bnipa/lexicon.h"
#include "bnipa/normalize.h"
#include "bnipa/phoneset.h"
#include "bnipa/script.h"
#include "bnipa/unicode.h"

namespace {

using bnipa::AppendUtf8;

struct Outcome {
  bool pass = true;
  std::string summary;
};

// Failure details are capped so a broken build does not flood the log.
class Log {
 public:
  explicit Log(std::ostream& out) : out_(out) {}
  void Fail(const std::string& what) {
    ++failures_;
    if (failures_ <= 20) out_ << "  fail: " << what << "\n";
  }
  std::ostream& out() { return out_; }
  size_t failures() const { return failures_; }

 private:
  std::ostream& out_;
  size_t failures_ = 0;
};

uint64_t Fnv1a(std::string_view bytes, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Hex(uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Random Bengali words built from consonant + sign syllables.
class WordGen {
 public:
  explicit WordGen(uint64_t seed) : rng_(seed) {}

  std::string Word() {
    std::string w;
    const int syllables = Uniform(1, 4);
    for (int s = 0; s < syllables; ++s) {
      if (s == 0 && Uniform(0, 9) == 0) {
        AppendUtf8(kVowels[Uniform(0, kVowels.size() - 1)], &w);
        continue;
      }
      AppendUtf8(kConsonants[Uniform(0, kConsonants.size() - 1)], &w);
      if (Uniform(0, 7) == 0) {
        AppendUtf8(0x09CD, &w);
        AppendUtf8(kConsonants[Uniform(0, kConsonants.size() - 1)], &w);
      }
      if (Uniform(0, 2) != 0) AppendUtf8(kSigns[Uniform(0, kSigns.size() - 1)], &w);
      if (Uniform(0, 15) == 0) AppendUtf8(0x0981, &w);
      if (Uniform(0, 20) == 0) AppendUtf8(0x0982, &w);
    }
    if (Uniform(0, 12) == 0) {
      AppendUtf8(0x09AF, &w);
      AppendUtf8(0x09BC, &w);
    }
    return w;
  }

  std::string Number() {
    std::string n;
    const int len = Uniform(1, 6);
    for (int i = 0; i < len; ++i) AppendUtf8(0x09E6 + Uniform(0, 9), &n);
    return n;
  }

  std::string Sentence() {
    std::string s;
    const int words = Uniform(3, 12);
    for (int i = 0; i < words; ++i) {
      if (i) s += ' ';
      s += Uniform(0, 14) == 0 ? Number() : Word();
    }
    s += "।";
    return s;
  }

  int Uniform(int lo, size_t hi) {
    return std::uniform_int_distribution<int>(lo, static_cast<int>(hi))(rng_);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  static constexpr std::array<char32_t, 32> kConsonants = {
      0x0995, 0x0996, 0x0997, 0x0998, 0x099A, 0x099B, 0x099C, 0x099D,
      0x099F, 0x09A0, 0x09A1, 0x09A2, 0x09A3, 0x09A4, 0x09A5, 0x09A6,
      0x09A7, 0x09A8, 0x09AA, 0x09AB, 0x09AC, 0x09AD, 0x09AE, 0x09AF,
      0x09B0, 0x09B2, 0x09B6, 0x09B7, 0x09B8, 0x09B9, 0x0999, 0x099E};
  static constexpr std::array<char32_t, 10> kSigns = {
      0x09BE, 0x09BF, 0x09C0, 0x09C1, 0x09C2, 0x09C3, 0x09C7, 0x09C8, 0x09CB, 0x09CC};
  static constexpr std::array<char32_t, 8> kVowels = {
      0x0985, 0x0986, 0x0987, 0x0989, 0x098F, 0x0990, 0x0993, 0x0994};
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// AC1: worked examples against their printed transcriptions.

Outcome Golden(Log& log) {
  const bnipa::Transcriber engine;
  bnipa::TranscriptionOptions digits_opts;
  digits_opts.number_policy.mode = bnipa::NumberMode::kDigitByDigit;
  const bnipa::Transcriber digit_engine(bnipa::DefaultLexicon(), digits_opts);

  struct Fixture {
    std::string input;
    std::string printed;
    bool digit_mode;
    size_t words;
  };
  // Printed forms as they appear in the source transcriptions; "pãc" restores
  // the nasal tilde that the scanned copy renders as a macron.
  const std::vector<Fixture> fixtures = {
      {"মুসক", "muʃɔk", false, 1},
      {"এসএসসি", "esessi", false, 1},
      {"ফেইক", "feik", false, 1},
      {"ফজর", "fɔzɔr", false, 1},
      {"গরুগুলোও", "goruguloo:", false, 1},
      {"২০৬", "duɪʃo cʰoɔ̃", false, 2},
      {"২০৫০", "duɪ ʃunno pãc ʃunno", true, 4},
      {"মো.", "mohɛmmɔ̃d", false, 1},
  };
  size_t ok = 0;
  for (const Fixture& f : fixtures) {
    const bnipa::SentenceResult r =
        (f.digit_mode ? digit_engine : engine).TranscribeSentence(f.input);
    const std::string got = bnipa::NormalizeIpa(r.Ipa());
    const std::string want = bnipa::NormalizeIpa(f.printed);
    const size_t words = bnipa::SplitWords(got).size();
    log.out() << "  " << f.input << " -> " << got << " (expected " << want << ")\n";
    if (got != want || words != f.words) {
      log.Fail(f.input + ": got \"" + got + "\" want \"" + want + "\"");
      continue;
    }
    ++ok;
  }
  // The abbreviation must expand to its full form, not only match in sound.
  const bnipa::Expansion e = bnipa::ExpandAbbreviation("মো.", bnipa::DefaultLexicon());
  if (e.words != std::vector<std::string>{bnipa::NormalizeNfc("মোহাম্মদ")}) {
    log.Fail("মো. does not expand to মোহাম্মদ");
  } else {
    ++ok;
  }
  const size_t total = fixtures.size() + 1;
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " golden items"};
}

// ---------------------------------------------------------------------------
// AC2: self-consistency and k/N sensitivity of the evaluation harness.

std::string CorpusTsv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string tsv = "# id\ttext\tipa\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    tsv += "s" + std::to_string(i) + "\t" + rows[i].first + "\t" + rows[i].second + "\n";
  }
  return tsv;
}

bnipa::ParallelCorpus ParseCorpus(const std::string& tsv) {
  std::istringstream in(tsv);
  return bnipa::LoadCorpus(in);
}

Outcome SelfConsistency(Log& log) {
  const bnipa::Transcriber engine;
  WordGen gen(0x5eed0002);
  std::vector<std::pair<std::string, std::string>> rows;
  for (int i = 0; i < 1000; ++i) {
    std::string text = gen.Sentence();
    std::string ipa = engine.TranscribeSentence(text).Ipa();
    rows.emplace_back(std::move(text), std::move(ipa));
  }
  const bnipa::ParallelCorpus corpus = ParseCorpus(CorpusTsv(rows));
  const bnipa::EvalReport report = bnipa::EvaluateCorpus(corpus, engine);
  std::ostringstream written;
  report.Write(written);
  log.out() << "  self: " << report.Summary() << " ref_words " << report.wer.ref_length
            << " report " << written.str().size() << " bytes digest "
            << Hex(Fnv1a(written.str())) << "\n";
  bool pass = report.n_sentences == 1000;
  if (report.wer.edits != 0 || report.per.edits != 0 || report.cer.edits != 0 ||
      report.wer.value() != 0.0 || report.per.value() != 0.0 ||
      report.cer.value() != 0.0) {
    log.Fail("self-consistency edits " + std::to_string(report.wer.edits) + "/" +
             std::to_string(report.per.edits) + "/" + std::to_string(report.cer.edits));
    pass = false;
  }

  // Corrupt exactly k reference words across the first m sentences.
  struct Case {
    size_t sentences;
    size_t k;
  };
  const std::vector<Case> cases = {{1, 1}, {10, 1}, {50, 7}, {200, 25}, {1000, 100}};
  std::mt19937_64 rng(0x5eed0022);
  size_t case_pass = 0;
  for (const Case& c : cases) {
    std::vector<std::pair<std::string, std::string>> sub(rows.begin(),
                                                         rows.begin() + c.sentences);
    std::vector<std::pair<size_t, size_t>> slots;
    size_t n_words = 0;
    for (size_t s = 0; s < sub.size(); ++s) {
      const auto words = bnipa::SplitWords(sub[s].second);
      for (size_t w = 0; w < words.size(); ++w) slots.emplace_back(s, w);
      n_words += words.size();
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(c.k);
    for (const auto& [s, w] : slots) {
      auto words = bnipa::SplitWords(sub[s].second);
      words[w] = "zzz";
      std::string joined;
      for (size_t i = 0; i < words.size(); ++i) joined += (i ? " " : "") + words[i];
      sub[s].second = joined;
    }
    const bnipa::EvalReport r = bnipa::EvaluateCorpus(ParseCorpus(CorpusTsv(sub)), engine);
    const double want = static_cast<double>(c.k) / static_cast<double>(n_words);
    log.out() << "  k/N " << c.k << "/" << n_words << " -> wer edits " << r.wer.edits
              << " over " << r.wer.ref_length << "\n";
    if (r.wer.edits == c.k && r.wer.ref_length == n_words && r.wer.value() == want) {
      ++case_pass;
    } else {
      log.Fail("k/N case " + std::to_string(c.k) + "/" + std::to_string(n_words));
    }
  }
  // Ten ten-word sentences with one altered word, and the single-sentence
  // version of the same.
  std::vector<std::pair<std::string, std::string>> grid;
  while (grid.size() < 10) {
    std::string text;
    for (int w = 0; w < 10; ++w) text += (w ? " " : "") + gen.Word();
    std::string ipa = engine.TranscribeSentence(text).Ipa();
    if (bnipa::SplitWords(ipa).size() == 10) grid.emplace_back(std::move(text), std::move(ipa));
  }
  auto altered = bnipa::SplitWords(grid[3].second);
  altered[6] = "zzz";
  std::string joined;
  for (size_t i = 0; i < altered.size(); ++i) joined += (i ? " " : "") + altered[i];
  grid[3].second = joined;
  const bnipa::EvalReport g = bnipa::EvaluateCorpus(ParseCorpus(CorpusTsv(grid)), engine);
  const bnipa::ErrorRate one = bnipa::WordErrorRate(joined, engine.TranscribeSentence(grid[3].first).Ipa());
  log.out() << "  10x10 grid: edits " << g.wer.edits << " over " << g.wer.ref_length
            << "; single sentence " << one.edits << " over " << one.ref_length << "\n";
  const bool ten = g.wer.edits == 1 && g.wer.ref_length == 100 && g.wer.value() == 0.01 &&
                   one.value() == 0.1;
  if (!ten) log.Fail("10x10 grid WER != 0.01 or sentence WER != 0.1");
  pass = pass && case_pass == cases.size() && ten;
  return {pass, "self-consistency WER/PER/CER 0 on 1000 sentences; " +
                    std::to_string(case_pass) + "/" + std::to_string(cases.size()) +
                    " k/N pairs exact"};
}

// ---------------------------------------------------------------------------
// AC3: alignment distance against brute-force oracles.

// Explores every edit script without memoization.
size_t BruteForce(const std::vector<int>& a, size_t i, const std::vector<int>& b,
                  size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  const size_t diag = BruteForce(a, i + 1, b, j + 1) + (a[i] == b[j] ? 0 : 1);
  const size_t del = BruteForce(a, i + 1, b, j) + 1;
  const size_t ins = BruteForce(a, i, b, j + 1) + 1;
  return std::min(diag, std::min(del, ins));
}

// Top-down memoized recursion, used for pairs too long for enumeration.
size_t Memoized(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<int>> memo(a.size() + 1, std::vector<int>(b.size() + 1, -1));
  std::function<size_t(size_t, size_t)> go = [&](size_t i, size_t j) -> size_t {
    if (i == a.size()) return b.size() - j;
    if (j == b.size()) return a.size() - i;
    int& m = memo[i][j];
    if (m >= 0) return static_cast<size_t>(m);
    size_t best = go(i + 1, j + 1) + (a[i] == b[j] ? 0 : 1);
    best = std::min(best, go(i + 1, j) + 1);
    best = std::min(best, go(i, j + 1) + 1);
    m = static_cast<int>(best);
    return best;
  };
  return go(0, 0);
}

// Replays the alignment over `ref` and checks it yields `hyp`.
bool Replays(const bnipa::Alignment& al, const std::vector<int>& ref,
             const std::vector<int>& hyp) {
  std::vector<int> out;
  size_t edits = 0;
  size_t next_ref = 0;
  for (const bnipa::AlignedOp& op : al.ops) {
    switch (op.op) {
      case bnipa::EditOp::kMatch:
        if (op.ref_index != next_ref++ || ref[op.ref_index] != hyp[op.hyp_index]) {
          return false;
        }
        out.push_back(ref[op.ref_index]);
        break;
      case bnipa::EditOp::kSubstitute:
        if (op.ref_index != next_ref++) return false;
        out.push_back(hyp[op.hyp_index]);
        ++edits;
        break;
      case bnipa::EditOp::kDelete:
        if (op.ref_index != next_ref++) return false;
        ++edits;
        break;
      case bnipa::EditOp::kInsert:
        out.push_back(hyp[op.hyp_index]);
        ++edits;
        break;
    }
  }
  return next_ref == ref.size() && out == hyp && edits == al.distance;
}

std::vector<std::vector<int>> AllSequences(size_t max_len) {
  std::vector<std::vector<int>> all = {{}};
  size_t begin = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    const size_t end = all.size();
    for (size_t k = begin; k < end; ++k) {
      if (all[k].size() != len - 1) continue;
      for (int s = 0; s < 4; ++s) {
        std::vector<int> next = all[k];
        next.push_back(s);
        all.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return all;
}

Outcome AlignmentOracle(Log& log) {
  const auto seqs = AllSequences(8);
  size_t checked = 0;
  size_t mismatches = 0;
  for (const auto& a : seqs) {
    for (const auto& b : seqs) {
      if (a.size() + b.size() > 8) continue;
      const bnipa::Alignment al = bnipa::AlignSequences(a, b);
      ++checked;
      if (al.distance != BruteForce(a, 0, b, 0) || !Replays(al, a, b)) {
        ++mismatches;
        log.Fail("exhaustive pair mismatch");
      }
    }
  }
  const size_t exhaustive = checked;

  std::mt19937_64 rng(0x5eed0003);
  for (int t = 0; t < 10000; ++t) {
    std::vector<int> a(std::uniform_int_distribution<size_t>(9, 40)(rng));
    std::vector<int> b(std::uniform_int_distribution<size_t>(0, 40)(rng));
    const int alphabet = std::uniform_int_distribution<int>(2, 6)(rng);
    for (int& x : a) x = std::uniform_int_distribution<int>(0, alphabet - 1)(rng);
    for (int& x : b) x = std::uniform_int_distribution<int>(0, alphabet - 1)(rng);
    if (t % 2) std::swap(a, b);
    const bnipa::Alignment al = bnipa::AlignSequences(a, b);
    ++checked;
    if (al.distance != Memoized(a, b) || !Replays(al, a, b)) {
      ++mismatches;
      log.Fail("random pair mismatch");
    }
  }
  log.out() << "  exhaustive pairs " << exhaustive << ", random pairs "
            << checked - exhaustive << ", mismatches " << mismatches << "\n";
  return {mismatches == 0, std::to_string(exhaustive) +
                               " exhaustive pairs (|ref|+|hyp| <= 8) + 10000 random; " +
                               std::to_string(mismatches) + " mismatches"};
}

// ---------------------------------------------------------------------------
// AC4: invariant fuzz over random Bengali-block strings.

size_t CountCodepoints(const std::string& s, std::u32string_view set) {
  size_t n = 0;
  for (char32_t cp : bnipa::ToUtf32(s)) n += set.find(cp) != std::u32string_view::npos;
  return n;
}

size_t CountDiacritic(const bnipa::PhoneSeq& seq, bnipa::Diacritic d) {
  size_t n = 0;
  for (const bnipa::Phone& p : seq.phones) n += p.Has(d);
  return n;
}

std::string RandomBengaliString(std::mt19937_64& rng) {
  std::string s;
  const size_t len = std::uniform_int_distribution<size_t>(1, 14)(rng);
  for (size_t i = 0; i < len; ++i) {
    const int pick = std::uniform_int_distribution<int>(0, 19)(rng);
    char32_t cp;
    if (pick == 0) {
      cp = U' ';
    } else if (pick == 1) {
      cp = std::uniform_int_distribution<int>(0, 1)(rng) ? 0x200C : 0x200D;
    } else {
      cp = std::uniform_int_distribution<char32_t>(0x0980, 0x09FF)(rng);
    }
    AppendUtf8(cp, &s);
  }
  return s;
}

std::string RandomIpaString(std::mt19937_64& rng) {
  static const std::vector<std::string> glyphs = {
      "ɪ", "e", "ɛ", "ɐ", "ɔ", "o", "ʊ", "p", "b", "t̪", "d̪", "ʈ", "ɖ", "c", "ɟ",
      "k", "g", "m", "n", "ŋ", "ɾ", "ɽ", "s", "ʃ", "h", "z", "f", "v", "l", "j",
      "ʰ", "ʱ", "̃", "ː", "̯", "ʲ", "ʷ", ":", "æ", "ʒ", "dʒ", "tʃ", "i",
      "u", "a", "r", "t", "d", "ə", "x", "õ", "ã", " ", "  ", ".", "̪", "q",
      "ɡ", "ʝ", "̤", "ŋ̃"};
  std::string s;
  const size_t len = std::uniform_int_distribution<size_t>(0, 16)(rng);
  for (size_t i = 0; i < len; ++i) {
    s += glyphs[std::uniform_int_distribution<size_t>(0, glyphs.size() - 1)(rng)];
  }
  return s;
}

Outcome Fuzz(Log& log) {
  const bnipa::Transcriber with_lexicon;
  const bnipa::Transcriber bare{bnipa::Lexicon("empty")};
  const std::u32string voiceless_asp = U"খছঠথফ";
  const std::u32string voiced_asp = U"ঘঝঢধভ";
  std::mt19937_64 rng(0x5eed0004);
  size_t violations = 0;
  size_t asp_errors = 0;
  size_t nasal_errors = 0;
  size_t idem_errors = 0;
  size_t words = 0;
  size_t breaches = 0;
  uint64_t digest = Fnv1a("");
  for (int t = 0; t < 10000; ++t) {
    const std::string text = RandomBengaliString(rng);
    for (const bnipa::Transcriber* engine : {&with_lexicon, &bare}) {
      const bnipa::SentenceResult r = engine->TranscribeSentence(text);
      for (const bnipa::TranscriptionResult& w : r.words) {
        if (!bnipa::ValidatePhoneSeq(w.ipa).empty()) {
          ++violations;
          log.Fail("violation in " + w.text + " -> " + w.Ipa());
        }
      }
      const std::string ipa = r.Ipa();
      digest = Fnv1a(ipa + "\n", digest);
      const std::string once = bnipa::NormalizeIpa(ipa);
      if (once != ipa || bnipa::NormalizeIpa(once) != once) {
        ++idem_errors;
        log.Fail("normalize not idempotent on engine output " + ipa);
      }
    }
    // Counting invariants on bare rule output for letter words.
    const std::string nfc = bnipa::NormalizeNfc(text);
    for (const bnipa::Token& tok : bnipa::Tokenize(nfc)) {
      if (tok.kind != bnipa::TokenKind::kWord) continue;
      ++words;
      const bnipa::TranscriptionResult w = bare.TranscribeWord(tok.text);
      if (CountDiacritic(w.ipa, bnipa::Diacritic::kAspVoiceless) !=
              CountCodepoints(tok.text, voiceless_asp) ||
          CountDiacritic(w.ipa, bnipa::Diacritic::kAspVoiced) !=
              CountCodepoints(tok.text, voiced_asp)) {
        ++asp_errors;
        log.Fail("aspiration count in " + tok.text + " -> " + w.Ipa());
      }
      size_t flagged = 0;
      for (const bnipa::GraphemeCluster& c : bnipa::SegmentGraphemes(tok.text)) {
        flagged += c.has_chandrabindu;
      }
      size_t breach = 0;
      for (const bnipa::Diagnostic& d : w.warnings) breach += d.code == "InvariantBreach";
      breaches += breach;
      if (CountDiacritic(w.ipa, bnipa::Diacritic::kNasal) != flagged - breach) {
        ++nasal_errors;
        log.Fail("nasal count in " + tok.text + " -> " + w.Ipa());
      }
    }
  }
  for (int t = 0; t < 10000; ++t) {
    const std::string s = RandomIpaString(rng);
    const std::string once = bnipa::NormalizeIpa(s);
    if (bnipa::NormalizeIpa(once) != once) {
      ++idem_errors;
      log.Fail("normalize not idempotent on \"" + s + "\"");
    }
  }
  log.out() << "  strings 10000, letter words " << words << ", violations " << violations
            << ", aspiration " << asp_errors << ", nasal " << nasal_errors
            << " (reported breaches " << breaches << "), idempotence " << idem_errors
            << ", output digest " << Hex(digest) << "\n";
  const size_t total = violations + asp_errors + nasal_errors + idem_errors;
  return {total == 0, "10000 random strings + 10000 random IPA strings; " +
                          std::to_string(total) + " failures"};
}

// ---------------------------------------------------------------------------
// AC5: number verbalization against an inverse written independently here.

const std::vector<std::string>& UnitWords() {
  static const std::vector<std::string> words = {
      "শূন্য", "এক", "দুই", "তিন", "চার", "পাঁচ", "ছয়", "সাত", "আট", "নয়",
      "দশ", "এগারো", "বারো", "তেরো", "চৌদ্দ", "পনেরো", "ষোলো", "সতেরো", "আঠারো", "উনিশ",
      "বিশ", "একুশ", "বাইশ", "তেইশ", "চব্বিশ", "পঁচিশ", "ছাব্বিশ", "সাতাশ", "আটাশ", "ঊনত্রিশ",
      "ত্রিশ", "একত্রিশ", "বত্রিশ", "তেত্রিশ", "চৌত্রিশ", "পঁয়ত্রিশ", "ছত্রিশ", "সাঁইত্রিশ", "আটত্রিশ", "ঊনচল্লিশ",
      "চল্লিশ", "একচল্লিশ", "বিয়াল্লিশ", "তেতাল্লিশ", "চুয়াল্লিশ", "পঁয়তাল্লিশ", "ছেচল্লিশ", "সাতচল্লিশ", "আটচল্লিশ", "ঊনপঞ্চাশ",
      "পঞ্চাশ", "একান্ন", "বাহান্ন", "তিপ্পান্ন", "চুয়ান্ন", "পঞ্চান্ন", "ছাপ্পান্ন", "সাতান্ন", "আটান্ন", "ঊনষাট",
      "ষাট", "একষট্টি", "বাষট্টি", "তেষট্টি", "চৌষট্টি", "পঁয়ষট্টি", "ছেষট্টি", "সাতষট্টি", "আটষট্টি", "ঊনসত্তর",
      "সত্তর", "একাত্তর", "বাহাত্তর", "তিয়াত্তর", "চুয়াত্তর", "পঁচাত্তর", "ছিয়াত্তর", "সাতাত্তর", "আটাত্তর", "ঊনআশি",
      "আশি", "একাশি", "বিরাশি", "তিরাশি", "চুরাশি", "পঁচাশি", "ছিয়াশি", "সাতাশি", "অষ্টআশি", "ঊননব্বই",
      "নব্বই", "একানব্বই", "বিরানব্বই", "তিরানব্বই", "চুরানব্বই", "পঁচানব্বই", "ছিয়ানব্বই", "সাতানব্বই", "আটানব্বই", "নিরানব্বই",
  };
  return words;
}

// Returns -1 on any word it cannot place.
int64_t WordsToValue(const std::vector<std::string>& words) {
  static const std::map<std::string, int64_t> units = [] {
    std::map<std::string, int64_t> m;
    for (size_t i = 0; i < UnitWords().size(); ++i) {
      m[bnipa::NormalizeNfc(UnitWords()[i])] = static_cast<int64_t>(i);
    }
    return m;
  }();
  static const std::map<std::string, int64_t> scales = {
      {bnipa::NormalizeNfc("কোটি"), 10000000},
      {bnipa::NormalizeNfc("লাখ"), 100000},
      {bnipa::NormalizeNfc("হাজার"), 1000},
  };
  static const std::string hundred_suffix = bnipa::NormalizeNfc("শো");
  int64_t total = 0;
  int64_t group = 0;
  int64_t last_scale = 1000000000;
  for (const std::string& raw : words) {
    const std::string w = bnipa::NormalizeNfc(raw);
    if (auto it = scales.find(w); it != scales.end()) {
      if (group <= 0 || group > 99 || it->second >= last_scale) return -1;
      total += group * it->second;
      last_scale = it->second;
      group = 0;
    } else if (auto u = units.find(w); u != units.end()) {
      group += u->second;
    } else if (w.size() > hundred_suffix.size() &&
               w.compare(w.size() - hundred_suffix.size(), hundred_suffix.size(),
                         hundred_suffix) == 0) {
      const std::string head = w.substr(0, w.size() - hundred_suffix.size());
      std::string unit = head;
      // ছয়শো / নয়শো / একশো / দুইশো ... share the unit spelling.
      auto h = units.find(unit);
      if (h == units.end() || h->second < 1 || h->second > 9 || group != 0) return -1;
      group += h->second * 100;
    } else {
      return -1;
    }
  }
  return total + group;
}

Outcome Numbers(Log& log) {
  size_t failures = 0;
  size_t checked = 0;
  auto check = [&](uint64_t n) {
    ++checked;
    const auto words = bnipa::NumberToWordsCardinal(n);
    const int64_t back = WordsToValue(words);
    const bool zero_word = n != 0 && std::count(words.begin(), words.end(),
                                                bnipa::NormalizeNfc("শূন্য")) > 0;
    if (back != static_cast<int64_t>(n) || zero_word) {
      ++failures;
      log.Fail("cardinal " + std::to_string(n) + " -> " + std::to_string(back));
    }
  };
  for (uint64_t n = 0; n < 100000; ++n) check(n);
  std::mt19937_64 rng(0x5eed0005);
  for (int t = 0; t < 1000; ++t) {
    check(std::uniform_int_distribution<uint64_t>(0, 999999999)(rng));
  }
  bool out_of_range = false;
  try {
    bnipa::NumberToWordsCardinal(1000000000);
  } catch (const bnipa::NumberOutOfRange&) {
    out_of_range = true;
  }
  if (!out_of_range) {
    ++failures;
    log.Fail("10^9 accepted");
  }

  size_t digit_failures = 0;
  for (int t = 0; t < 1000; ++t) {
    const size_t len = std::uniform_int_distribution<size_t>(1, 24)(rng);
    std::string digits;
    std::vector<int> values;
    for (size_t i = 0; i < len; ++i) {
      const int d = std::uniform_int_distribution<int>(0, 9)(rng);
      values.push_back(d);
      AppendUtf8(std::uniform_int_distribution<int>(0, 1)(rng) ? 0x09E6 + d : U'0' + d,
                 &digits);
    }
    const auto words = bnipa::NumberToWordsDigits(digits);
    bool ok = words.size() == len;
    for (size_t i = 0; ok && i < len; ++i) {
      ok = words[i] == bnipa::NormalizeNfc(UnitWords()[values[i]]);
    }
    if (!ok) {
      ++digit_failures;
      log.Fail("digit reading of " + digits);
    }
  }
  log.out() << "  cardinal checked " << checked << ", failures " << failures
            << "; digit strings 1000, failures " << digit_failures << "\n";
  return {failures + digit_failures == 0,
          std::to_string(checked) + " cardinals + 1000 digit strings; " +
              std::to_string(failures + digit_failures) + " failures"};
}

// ---------------------------------------------------------------------------
// AC6: streaming throughput, single thread.

Outcome Throughput(Log& log) {
  const bnipa::Transcriber engine;
  WordGen gen(0x5eed0006);
  std::vector<std::string> vocab;
  for (int i = 0; i < 20000; ++i) vocab.push_back(gen.Word());
  constexpr size_t kSentences = 150000;
  size_t words = 0;
  size_t ipa_bytes = 0;
  const auto start = std::chrono::steady_clock::now();
  for (size_t s = 0; s < kSentences; ++s) {
    std::string sentence;
    const int n = gen.Uniform(4, 16);
    for (int i = 0; i < n; ++i) {
      if (i) sentence += ' ';
      sentence += gen.Uniform(0, 19) == 0
                      ? gen.Number()
                      : vocab[static_cast<size_t>(gen.Uniform(0, vocab.size() - 1))];
    }
    sentence += "।";
    const bnipa::SentenceResult r = engine.TranscribeSentence(sentence);
    words += static_cast<size_t>(n);
    ipa_bytes += r.Ipa().size();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const double rate = static_cast<double>(words) / secs;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%zu sentences, %zu words in %.2f s: %.0f words/s",
                kSentences, words, secs, rate);
  log.out() << "  " << buf << " (output " << ipa_bytes << " bytes)\n";
  return {rate >= 10000.0, std::string(buf) + " (target >= 10000)"};
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* id;
  const char* title;
  Outcome (*run)(Log&);
};

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> list = {
      {"AC1", "golden worked examples", Golden},
      {"AC2", "evaluation self-consistency and sensitivity", SelfConsistency},
      {"AC3", "edit-distance oracle equivalence", AlignmentOracle},
      {"AC4", "invariant fuzz", Fuzz},
      {"AC5", "number round-trip", Numbers},
      {"AC6", "corpus-scale throughput", Throughput},
  };
  return list;
}

// Runs AC1-AC5 once, returning their combined detail output.
std::string DeterministicPass(std::vector<Outcome>* outcomes) {
  std::ostringstream detail;
  for (size_t i = 0; i < 5; ++i) {
    Log log(detail);
    detail << Criteria()[i].id << "\n";
    Outcome o = Criteria()[i].run(log);
    detail << o.summary << "\n";
    if (outcomes) outcomes->push_back(std::move(o));
  }
  return detail.str();
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  bool all = true;
  auto report = [&](const char* id, const char* title, const Outcome& o, double secs) {
    char t[32];
    std::snprintf(t, sizeof(t), "%.2fs", secs);
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << " " << title << ": "
              << o.summary << " [" << t << "]\n";
    all = all && o.pass;
  };

  std::vector<Outcome> first;
  std::vector<double> times;
  std::ostringstream detail;
  for (size_t i = 0; i < 6; ++i) {
    Log log(detail);
    const auto start = std::chrono::steady_clock::now();
    first.push_back(Criteria()[i].run(log));
    times.push_back(
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    report(Criteria()[i].id, Criteria()[i].title, first.back(), times.back());
  }
  if (verbose) std::cout << detail.str();

  const auto start = std::chrono::steady_clock::now();
  const std::string run_a = DeterministicPass(nullptr);
  const std::string run_b = DeterministicPass(nullptr);
  const bool same = run_a == run_b;
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report("AC7", "determinism",
         {same, same ? "two runs of AC1-AC5 byte-identical (" +
                           std::to_string(run_a.size()) + " bytes)"
                     : "runs of AC1-AC5 differ"},
         secs);
  std::cout.flush();
  return all ? 0 : 1;
}
