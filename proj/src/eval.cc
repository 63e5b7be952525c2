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
#include "bnipa/eval.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "bnipa/unicode.h"

namespace bnipa {

namespace {

ErrorRate Score(const Alignment& a, size_t ref_length, size_t hyp_length) {
  ErrorRate r;
  r.edits = a.distance;
  r.ref_length = ref_length;
  r.hyp_length = hyp_length;
  r.degenerate = ref_length == 0;
  return r;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace

std::string_view ToString(EditOp op) {
  switch (op) {
    case EditOp::kMatch: return "match";
    case EditOp::kSubstitute: return "substitute";
    case EditOp::kDelete: return "delete";
    case EditOp::kInsert: return "insert";
  }
  return "?";
}

ErrorRate& ErrorRate::operator+=(const ErrorRate& o) {
  edits += o.edits;
  ref_length += o.ref_length;
  hyp_length += o.hyp_length;
  degenerate = ref_length == 0 && hyp_length > 0;
  return *this;
}

std::vector<std::string> SplitWords(std::string_view s) {
  std::vector<std::string> words;
  const std::string collapsed = CollapseWhitespace(s);
  size_t start = 0;
  while (start < collapsed.size()) {
    size_t sp = collapsed.find(' ', start);
    if (sp == std::string::npos) sp = collapsed.size();
    words.emplace_back(collapsed.substr(start, sp - start));
    start = sp + 1;
  }
  return words;
}

ErrorRate WordErrorRate(std::string_view ref, std::string_view hyp) {
  const auto r = SplitWords(ref);
  const auto h = SplitWords(hyp);
  return Score(AlignSequences(r, h), r.size(), h.size());
}

ErrorRate PhoneErrorRate(std::string_view ref, std::string_view hyp) {
  const auto r = ParseIpa(ref, ParseMode::kLenient).Sounds();
  const auto h = ParseIpa(hyp, ParseMode::kLenient).Sounds();
  return Score(AlignSequences(r, h), r.size(), h.size());
}

ErrorRate CharErrorRate(std::string_view ref, std::string_view hyp) {
  const std::u32string r = ToUtf32(CollapseWhitespace(ref));
  const std::u32string h = ToUtf32(CollapseWhitespace(hyp));
  const Alignment a = AlignSequences(std::span<const char32_t>(r.data(), r.size()),
                                     std::span<const char32_t>(h.data(), h.size()));
  return Score(a, r.size(), h.size());
}

CorpusError::CorpusError(std::string code, size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + code + ": " + message),
      code_(std::move(code)),
      line_(line) {}

ParallelCorpus LoadCorpus(std::istream& in, std::string split) {
  ParallelCorpus corpus;
  corpus.split = std::move(split);
  std::unordered_map<std::string, size_t> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cols = SplitTabs(line);
    if (cols.size() != 3) {
      throw CorpusError("ParseError", line_no,
                        "expected 3 tab-separated columns, found " +
                            std::to_string(cols.size()));
    }
    CorpusRecord rec{std::string(cols[0]), NormalizeNfc(cols[1]),
                     std::string(cols[2]), line_no};
    if (rec.id.empty()) throw CorpusError("ParseError", line_no, "empty id");
    if (auto it = seen.find(rec.id); it != seen.end()) {
      throw CorpusError("DuplicateId", line_no,
                        "id \"" + rec.id + "\" first seen on line " +
                            std::to_string(it->second));
    }
    seen.emplace(rec.id, line_no);
    std::vector<ParseWarning> warnings;
    ParseIpa(rec.ref_ipa, ParseMode::kLenient, &warnings);
    for (const ParseWarning& w : warnings) {
      corpus.warnings.push_back({"UnknownIpaSymbol", line_no,
                                 "id " + rec.id + ": \"" + w.symbol + "\""});
    }
    corpus.records.push_back(std::move(rec));
  }
  if (in.bad()) throw std::runtime_error("read error");
  return corpus;
}

ParallelCorpus LoadCorpusFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return LoadCorpus(in);
}

Vocabulary LoadVocabulary(std::istream& in) {
  Vocabulary vocab;
  std::string word;
  while (in >> word) vocab.insert(NormalizeNfc(word));
  return vocab;
}

namespace {

struct RecordResult {
  SentenceEval eval;
  std::vector<EvalWarning> warnings;
  size_t text_words = 0;
  size_t oov_words = 0;
};

RecordResult EvaluateRecord(const CorpusRecord& rec, const Transcriber& engine,
                            const Vocabulary* vocab) {
  RecordResult out;
  out.eval.id = rec.id;
  const SentenceResult hyp = engine.TranscribeSentence(rec.text);
  out.eval.hyp_ipa = hyp.Ipa();
  for (const Diagnostic& d : hyp.warnings) {
    out.warnings.push_back({rec.id, d.code, d.message});
  }
  const std::string ref = NormalizeIpa(rec.ref_ipa);
  const std::string h = NormalizeIpa(out.eval.hyp_ipa);
  out.eval.wer = WordErrorRate(ref, h);
  out.eval.per = PhoneErrorRate(ref, h);
  out.eval.cer = CharErrorRate(ref, h);
  if (out.eval.wer.ref_length == 0) {
    out.warnings.push_back({rec.id, "DegenerateReference", "empty reference"});
  }
  if (vocab) {
    for (const Token& t : Tokenize(rec.text)) {
      if (t.kind != TokenKind::kWord) continue;
      ++out.text_words;
      if (!vocab->count(t.text)) ++out.oov_words;
    }
  }
  return out;
}

}  // namespace

EvalReport EvaluateCorpus(const ParallelCorpus& corpus, const Transcriber& engine,
                          const EvalOptions& opts) {
  const size_t n = corpus.records.size();
  std::vector<RecordResult> results(n);
  const size_t jobs = std::max<size_t>(1, std::min(opts.jobs, n));
  auto work = [&](size_t worker) {
    for (size_t i = worker; i < n; i += jobs) {
      results[i] = EvaluateRecord(corpus.records[i], engine, opts.vocabulary);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }

  EvalReport report;
  report.n_sentences = n;
  report.has_vocabulary = opts.vocabulary != nullptr;
  for (const Diagnostic& d : corpus.warnings) {
    report.warnings.push_back({"", d.code, "line " + std::to_string(d.offset) + ": " + d.message});
  }
  for (RecordResult& r : results) {
    report.wer += r.eval.wer;
    report.per += r.eval.per;
    report.cer += r.eval.cer;
    report.text_words += r.text_words;
    report.oov_words += r.oov_words;
    for (EvalWarning& w : r.warnings) report.warnings.push_back(std::move(w));
    report.sentences.push_back(std::move(r.eval));
  }
  return report;
}

void EvalReport::Write(std::ostream& out) const {
  out << "averaging\tmicro\n"
      << "units\tipa-words\n"
      << "n_sentences\t" << n_sentences << "\n"
      << "n_ref_words\t" << wer.ref_length << "\n"
      << "n_ref_phones\t" << per.ref_length << "\n"
      << "n_ref_chars\t" << cer.ref_length << "\n"
      << "word_edits\t" << wer.edits << "\n"
      << "phone_edits\t" << per.edits << "\n"
      << "char_edits\t" << cer.edits << "\n"
      << "wer\t" << Fixed(wer.value(), 6) << "\n"
      << "per\t" << Fixed(per.value(), 6) << "\n"
      << "cer\t" << Fixed(cer.value(), 6) << "\n";
  if (has_vocabulary) {
    out << "text_words\t" << text_words << "\n"
        << "oov_words\t" << oov_words << "\n"
        << "oov_rate\t" << Fixed(oov_rate(), 6) << "\n";
  } else {
    out << "oov_rate\tna\n";
  }
  out << "\n[sentences]\nid\twer\tper\tcer\tref_words\tword_edits\thyp\n";
  for (const SentenceEval& s : sentences) {
    out << s.id << '\t' << Fixed(s.wer.value(), 6) << '\t' << Fixed(s.per.value(), 6)
        << '\t' << Fixed(s.cer.value(), 6) << '\t' << s.wer.ref_length << '\t'
        << s.wer.edits << '\t' << s.hyp_ipa << '\n';
  }
  out << "\n[warnings]\nid\tcode\tmessage\n";
  for (const EvalWarning& w : warnings) {
    out << w.id << '\t' << w.code << '\t' << w.message << '\n';
  }
}

std::string EvalReport::Summary() const {
  return "WER " + Fixed(wer.value(), 4) + " PER " + Fixed(per.value(), 4) + " CER " +
         Fixed(cer.value(), 4) + " sentences " + std::to_string(n_sentences);
}

}  // namespace bnipa
