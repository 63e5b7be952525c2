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
// Verbalization of numbers, mixed digit/letter tokens and dotted
// abbreviations into Bengali word sequences.

#ifndef BNIPA_NORMALIZE_H_
#define BNIPA_NORMALIZE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnipa/diagnostic.h"
#include "bnipa/lexicon.h"

namespace bnipa {

enum class NumberMode : uint8_t { kCardinal, kDigitByDigit, kAuto };

std::string_view ToString(NumberMode mode);
bool ParseNumberMode(std::string_view s, NumberMode* mode);

struct NumberReadingPolicy {
  NumberMode mode = NumberMode::kAuto;
  size_t digit_threshold = 7;

  // Cardinal or DigitByDigit, never Auto.
  NumberMode Resolve(size_t digit_count, bool context_flag) const;
};

// Word forms for 0-99, the fused hundreds 100..900, the scale words and
// the ordinals 1-10. Loaded from a lexicon-format TSV whose tag=number rows
// appear in that order.
class NumberWordTable {
 public:
  static NumberWordTable FromTsv(std::string_view tsv);
  static const NumberWordTable& Default();

  const std::string& Unit(int n) const { return units_.at(n); }
  const std::string& Hundreds(int n) const { return hundreds_.at(n - 1); }
  const std::string& Ordinal(int n) const { return ordinals_.at(n - 1); }
  const std::string& Digit(int d) const { return units_.at(d); }
  const std::string& HundredWord() const { return scale_[0]; }
  const std::string& Thousand() const { return scale_[1]; }
  const std::string& Lakh() const { return scale_[2]; }
  const std::string& Crore() const { return scale_[3]; }

 private:
  std::array<std::string, 100> units_;
  std::array<std::string, 9> hundreds_;
  std::array<std::string, 4> scale_;
  std::array<std::string, 10> ordinals_;
};

inline constexpr uint64_t kCardinalLimit = 1000000000;

class NumberOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// South-Asian grouping: crore, lakh, thousand, fused hundred, 0-99 tail.
// Throws NumberOutOfRange for value >= 10^9.
std::vector<std::string> NumberToWordsCardinal(
    uint64_t value, const NumberWordTable& table = NumberWordTable::Default());

// One digit name per digit. Throws std::invalid_argument on an empty string
// or a non-digit codepoint.
std::vector<std::string> NumberToWordsDigits(
    std::string_view digits,
    const NumberWordTable& table = NumberWordTable::Default());

// Words after which a number is read digit by digit in Auto mode.
bool IsNumberContextWord(std::string_view word);

struct Expansion {
  std::vector<std::string> words;
  std::vector<Diagnostic> warnings;
  // Words are letter names (unknown abbreviation) rather than lexical words.
  bool letter_names = false;
  bool ordinal = false;
};

// Reads a digit run according to `policy`. Out-of-range cardinals fall back
// to digit names with a NumberOutOfRange warning.
Expansion VerbalizeNumber(std::string_view digits,
                          const NumberReadingPolicy& policy,
                          bool context_flag = false,
                          const NumberWordTable& table = NumberWordTable::Default());

// Ordinal suffixes that select the ordinal form for numbers 1-10.
bool IsOrdinalSuffix(std::string_view s);

Expansion ExpandMixed(std::string_view token, const NumberReadingPolicy& policy,
                      bool context_flag = false,
                      const NumberWordTable& table = NumberWordTable::Default());

// Lexicon expansion of a dotted abbreviation. Unknown abbreviations yield
// their grapheme clusters as letter names plus an UnknownAbbreviation
// warning.
Expansion ExpandAbbreviation(std::string_view token, const Lexicon& lexicon);

}  // namespace bnipa

#endif  // BNIPA_NORMALIZE_H_
