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
// Edit-distance alignment, WER / PER / CER and parallel-corpus evaluation.

#ifndef BNIPA_EVAL_H_
#define BNIPA_EVAL_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "bnipa/g2p.h"

namespace bnipa {

enum class EditOp : uint8_t { kMatch, kSubstitute, kDelete, kInsert };

std::string_view ToString(EditOp op);

inline constexpr size_t kNoIndex = std::numeric_limits<size_t>::max();

struct AlignedOp {
  EditOp op;
  size_t ref_index;  // kNoIndex for kInsert
  size_t hyp_index;  // kNoIndex for kDelete
};

struct Alignment {
  std::vector<AlignedOp> ops;
  size_t distance = 0;
  size_t substitutions = 0;
  size_t deletions = 0;
  size_t insertions = 0;
};

// Unit-cost Levenshtein alignment. Backtrace prefers Match, then
// Substitute, then Delete, then Insert.
template <typename T>
Alignment AlignSequences(std::span<const T> ref, std::span<const T> hyp) {
  const size_t n = ref.size();
  const size_t m = hyp.size();
  const size_t w = m + 1;
  std::vector<uint32_t> d((n + 1) * w);
  for (size_t j = 0; j <= m; ++j) d[j] = static_cast<uint32_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    d[i * w] = static_cast<uint32_t>(i);
    for (size_t j = 1; j <= m; ++j) {
      const uint32_t diag = d[(i - 1) * w + j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      const uint32_t del = d[(i - 1) * w + j] + 1;
      const uint32_t ins = d[i * w + j - 1] + 1;
      d[i * w + j] = std::min(diag, std::min(del, ins));
    }
  }

  Alignment a;
  a.distance = d[n * w + m];
  size_t i = n;
  size_t j = m;
  while (i > 0 || j > 0) {
    const uint32_t here = d[i * w + j];
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] &&
        here == d[(i - 1) * w + j - 1]) {
      a.ops.push_back({EditOp::kMatch, --i, --j});
    } else if (i > 0 && j > 0 && here == d[(i - 1) * w + j - 1] + 1) {
      a.ops.push_back({EditOp::kSubstitute, --i, --j});
      ++a.substitutions;
    } else if (i > 0 && here == d[(i - 1) * w + j] + 1) {
      a.ops.push_back({EditOp::kDelete, --i, kNoIndex});
      ++a.deletions;
    } else {
      a.ops.push_back({EditOp::kInsert, kNoIndex, --j});
      ++a.insertions;
    }
  }
  std::reverse(a.ops.begin(), a.ops.end());
  return a;
}

template <typename T>
Alignment AlignSequences(const std::vector<T>& ref, const std::vector<T>& hyp) {
  return AlignSequences(std::span<const T>(ref), std::span<const T>(hyp));
}

struct ErrorRate {
  size_t edits = 0;
  size_t ref_length = 0;
  size_t hyp_length = 0;
  // Empty reference: the rate is defined as the hypothesis length.
  bool degenerate = false;

  double value() const {
    if (ref_length == 0) return static_cast<double>(edits);
    return static_cast<double>(edits) / static_cast<double>(ref_length);
  }
  ErrorRate& operator+=(const ErrorRate& o);
};

// Whitespace-separated tokens.
ErrorRate WordErrorRate(std::string_view ref, std::string_view hyp);
// Phones from a lenient parse, diacritics bound to their base.
ErrorRate PhoneErrorRate(std::string_view ref, std::string_view hyp);
// Scalar values after whitespace collapsing.
ErrorRate CharErrorRate(std::string_view ref, std::string_view hyp);

std::vector<std::string> SplitWords(std::string_view s);

struct CorpusRecord {
  std::string id;
  std::string text;
  std::string ref_ipa;
  size_t line = 0;
};

struct ParallelCorpus {
  std::vector<CorpusRecord> records;
  std::string split;
  std::vector<Diagnostic> warnings;
};

class CorpusError : public std::runtime_error {
 public:
  // `code` is ParseError or DuplicateId.
  CorpusError(std::string code, size_t line, const std::string& message);
  const std::string& code() const { return code_; }
  size_t line() const { return line_; }

 private:
  std::string code_;
  size_t line_;
};

// TSV `id<TAB>text<TAB>ipa`; '#' comment lines and blank lines skipped.
ParallelCorpus LoadCorpus(std::istream& in, std::string split = "");
ParallelCorpus LoadCorpusFile(const std::string& path);

using Vocabulary = std::unordered_set<std::string>;

// Whitespace-separated words, NFC.
Vocabulary LoadVocabulary(std::istream& in);

struct SentenceEval {
  std::string id;
  std::string hyp_ipa;
  ErrorRate wer;
  ErrorRate per;
  ErrorRate cer;
};

struct EvalWarning {
  std::string id;
  std::string code;
  std::string message;
};

struct EvalReport {
  size_t n_sentences = 0;
  ErrorRate wer;  // micro-averaged: summed edits over summed lengths
  ErrorRate per;
  ErrorRate cer;
  bool has_vocabulary = false;
  size_t text_words = 0;
  size_t oov_words = 0;
  std::vector<SentenceEval> sentences;
  std::vector<EvalWarning> warnings;

  size_t n_ref_words() const { return wer.ref_length; }
  double oov_rate() const {
    return text_words == 0 ? 0.0
                           : static_cast<double>(oov_words) / static_cast<double>(text_words);
  }
  // Key-value header, then [sentences] and [warnings] tables.
  void Write(std::ostream& out) const;
  // "WER 0.0000 PER 0.0000 CER 0.0000 sentences N"
  std::string Summary() const;
};

struct EvalOptions {
  const Vocabulary* vocabulary = nullptr;
  size_t jobs = 1;
};

// Both sides are normalized with NormalizeIpa before scoring.
EvalReport EvaluateCorpus(const ParallelCorpus& corpus, const Transcriber& engine,
                          const EvalOptions& opts = {});

}  // namespace bnipa

#endif  // BNIPA_EVAL_H_
