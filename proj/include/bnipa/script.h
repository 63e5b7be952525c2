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

// Unicode-level analysis of Bengali text: codepoint classes, grapheme
// clusters and tokens.

#ifndef BNIPA_SCRIPT_H_
#define BNIPA_SCRIPT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bnipa/diagnostic.h"

namespace bnipa {

enum class CodepointClass : uint8_t {
  kIndependentVowel,
  kConsonantLetter,
  kVowelSign,
  kVirama,
  kChandrabindu,
  kAnusvara,
  kVisarga,
  kNukta,
  kBengaliDigit,
  kLatinDigit,
  kJoiner,
  kPunctuation,
  kWhitespace,
  kOther,
};

std::string_view ToString(CodepointClass c);

// Total over all scalar values. Every value in U+0980..U+09FF maps to a
// class other than kOther; unassigned and symbol positions in the block are
// kPunctuation.
CodepointClass ClassifyCodepoint(char32_t cp);

namespace bn {
// Letters the rule engine refers to by name.
inline constexpr char32_t kVirama = 0x09CD;
inline constexpr char32_t kNukta = 0x09BC;
inline constexpr char32_t kChandrabindu = 0x0981;
inline constexpr char32_t kAnusvara = 0x0982;
inline constexpr char32_t kVisarga = 0x0983;
inline constexpr char32_t kKhandaTa = 0x09CE;
inline constexpr char32_t kYa = 0x09AF;         // য
inline constexpr char32_t kYya = 0x09DF;        // য় (precomposed form)
inline constexpr char32_t kBa = 0x09AC;         // ব
inline constexpr char32_t kMa = 0x09AE;         // ম
inline constexpr char32_t kRa = 0x09B0;         // র
inline constexpr char32_t kHa = 0x09B9;         // হ
inline constexpr char32_t kVowelA = 0x0985;     // অ
inline constexpr char32_t kVowelE = 0x098F;     // এ
inline constexpr char32_t kVowelI = 0x0987;     // ই
inline constexpr char32_t kVowelO = 0x0993;     // ও
inline constexpr char32_t kSignAa = 0x09BE;     // া
inline constexpr char32_t kSignE = 0x09C7;      // ে
inline constexpr char32_t kZwnj = 0x200C;
inline constexpr char32_t kZwj = 0x200D;
inline constexpr char32_t kDanda = 0x0964;
}  // namespace bn

// One orthographic unit. Nukta forms are folded into their precomposed
// letter in `bases` (য + ় is recorded as য়) while `text` keeps the source
// bytes untouched.
struct GraphemeCluster {
  enum class Kind : uint8_t { kConsonant, kIndependentVowel, kDigit, kSymbol };

  Kind kind = Kind::kSymbol;
  size_t offset = 0;  // byte offset of `text` in the segmented string
  std::string text;
  std::vector<char32_t> bases;
  std::optional<char32_t> independent_vowel;
  std::optional<char32_t> vowel_sign;
  bool has_virama_final = false;
  bool has_chandrabindu = false;
  // অ্যা / এ্যা spelling: an independent vowel carrying a য-phala.
  bool ya_phala_vowel = false;
  bool degenerate = false;
  std::vector<char32_t> trailing_marks;  // anusvara / visarga
  char32_t symbol = 0;                   // digit or symbol clusters

  bool is_consonant() const { return kind == Kind::kConsonant; }
};

// Splits NFC text into grapheme clusters. Concatenating the `text` fields
// reproduces the input byte for byte. Malformed orthography (dangling signs,
// double virama) is reported through `issues` as "MalformedSequence" and the
// offending cluster is flagged `degenerate`.
std::vector<GraphemeCluster> SegmentGraphemes(
    std::string_view text, std::vector<Diagnostic>* issues = nullptr);

enum class TokenKind : uint8_t { kWord, kNumber, kMixed, kAbbreviation, kPunct };

std::string_view ToString(TokenKind kind);

struct Token {
  std::string text;
  TokenKind kind = TokenKind::kWord;
  size_t begin = 0;  // byte span [begin, end) in the source
  size_t end = 0;
};

// Whitespace split followed by refinement into digit / letter / punctuation
// runs. A Bengali letter run of one or two grapheme clusters directly
// followed by "." becomes a single Abbreviation token that includes the dot.
std::vector<Token> Tokenize(std::string_view text);

bool IsBengaliDigit(char32_t cp);
bool IsDigit(char32_t cp);
// Value of a Bengali or Latin digit; -1 otherwise.
int DigitValue(char32_t cp);

}  // namespace bnipa

#endif  // BNIPA_SCRIPT_H_
