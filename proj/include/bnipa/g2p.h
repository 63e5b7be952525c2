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
// Rule-based Bengali grapheme-to-phoneme transcription.

#ifndef BNIPA_G2P_H_
#define BNIPA_G2P_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bnipa/diagnostic.h"
#include "bnipa/lexicon.h"
#include "bnipa/normalize.h"
#include "bnipa/phoneset.h"
#include "bnipa/script.h"

namespace bnipa {

struct TranscriptionOptions {
  // Guarantees word-initial হ surfaces as h.
  bool careful_speech = false;
  NumberReadingPolicy number_policy;
  // Long mark on emphatic / conjunctive suffix vowels.
  bool mark_morph_length = true;
  // Inserts syllable breaks into the output. Display only.
  bool emit_syllable_dots = false;
};

enum class RuleId : uint8_t {
  kLexicon,
  kBaseMap,
  kGeminate,
  kYaPhalaInitial,
  kYaPhalaMedial,
  kBaPhalaSilent,
  kBaPhalaGeminate,
  kInherentVowel,
  kInherentORaising,
  kInherentFinalDeletion,
  kInherentConjunctRetention,
  kInherentMedialDeletion,
  kInherentOAfterHighGlide,
  kCodaYaDiphthong,
  kMiddleYaPalatal,
  kOwaLabial,
  kYaApproximant,
  kChandrabinduNasal,
  kDiphthongGlide,
  kSuffixLength,
  kCarefulH,
  kAnusvara,
  kVisarga,
  kLetterName,
  kNumber,
  kAbbreviation,
  kUnmappable,
  kSilent,
};

std::string_view ToString(RuleId rule);

// One step of a derivation: `rule` produced `phones` from the grapheme bytes
// [begin, end) of the word. Rules that only delete or silence a grapheme
// produce an entry with no phones.
struct TraceEntry {
  RuleId rule;
  size_t begin;
  size_t end;
  std::vector<Phone> phones;
};

enum class ResultSource : uint8_t { kLexicon, kRules, kMixed };

std::string_view ToString(ResultSource source);

struct TranscriptionResult {
  std::string text;
  TokenKind kind = TokenKind::kWord;
  size_t begin = 0;  // token span in the sentence
  size_t end = 0;
  PhoneSeq ipa;
  ResultSource source = ResultSource::kRules;
  std::vector<TraceEntry> trace;
  std::vector<Diagnostic> warnings;

  std::string Ipa() const { return RenderIpa(ipa); }
};

struct SentenceResult {
  std::vector<TranscriptionResult> words;
  PhoneSeq ipa;
  std::vector<Diagnostic> warnings;

  std::string Ipa() const { return RenderIpa(ipa); }
};

// Intermediate state of one word, exposed for tests.
struct DraftSlot {
  enum class Kind : uint8_t { kConsonant, kVowel, kInherent, kGlide };

  Phone phone;
  size_t cluster = 0;
  RuleId rule = RuleId::kBaseMap;
  Kind kind = Kind::kConsonant;
  bool deleted = false;
  bool deletable = true;  // independent অ is raisable but never deleted
};

struct WordDraft {
  std::vector<GraphemeCluster> clusters;
  std::vector<DraftSlot> slots;
  // Index of the cluster carrying an emphatic / conjunctive suffix, or -1.
  int suffix_cluster = -1;
  std::vector<Diagnostic> warnings;

  PhoneSeq Phones() const;
};

// Runs the rule pipeline on one NFC word, no lexicon. Letter-name mode keeps
// every inherent vowel as ɔ.
WordDraft BuildWordDraft(std::string_view word, const TranscriptionOptions& opts,
                         bool letter_names = false);

// Immutable after construction; all methods are safe to call concurrently.
class Transcriber {
 public:
  explicit Transcriber(TranscriptionOptions opts = {});
  Transcriber(Lexicon lexicon, TranscriptionOptions opts = {});

  // Lexicon entry verbatim on a hit, the rule pipeline otherwise.
  TranscriptionResult TranscribeWord(std::string_view word) const;

  // Tokenizes, verbalizes numbers and abbreviations, transcribes every word
  // and joins the results with word boundaries. Punctuation is dropped.
  SentenceResult TranscribeSentence(std::string_view text) const;

  const Lexicon& lexicon() const { return *lexicon_; }
  const TranscriptionOptions& options() const { return opts_; }

 private:
  TranscriptionResult TranscribeRules(std::string_view word,
                                      bool letter_names) const;
  TranscriptionResult TranscribeExpansion(const Token& token,
                                          const Expansion& expansion,
                                          RuleId rule) const;

  std::shared_ptr<const Lexicon> lexicon_;
  TranscriptionOptions opts_;
};

}  // namespace bnipa

#endif  // BNIPA_G2P_H_
