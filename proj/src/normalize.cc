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
#include "bnipa/normalize.h"

#include <algorithm>
#include <array>
#include <string>

#include "bnipa/script.h"
#include "bnipa/unicode.h"

namespace bnipa {

namespace {

constexpr size_t kUnitRows = 100;
constexpr size_t kHundredRows = 9;
constexpr size_t kScaleRows = 4;
constexpr size_t kOrdinalRows = 10;
constexpr size_t kTableRows = kUnitRows + kHundredRows + kScaleRows + kOrdinalRows;

constexpr std::array<std::string_view, 7> kContextWords = {
    "ফোন", "মোবাইল", "নম্বর", "নং", "বাসা", "বাড়ি", "হোল্ডিং",
};

constexpr std::array<std::string_view, 5> kOrdinalSuffixes = {
    "ম", "য়", "ই", "র্থ", "ষ্ঠ",
};

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

size_t CountCodepoints(std::string_view s) {
  size_t n = 0;
  size_t pos = 0;
  while (pos < s.size()) {
    DecodeUtf8(s, &pos);
    ++n;
  }
  return n;
}

// Value of a digit run, saturating at kCardinalLimit.
uint64_t DigitRunValue(std::string_view digits) {
  uint64_t v = 0;
  size_t pos = 0;
  while (pos < digits.size()) {
    v = v * 10 + static_cast<uint64_t>(DigitValue(DecodeUtf8(digits, &pos)));
    if (v >= kCardinalLimit) return kCardinalLimit;
  }
  return v;
}

}  // namespace

std::string_view ToString(NumberMode mode) {
  switch (mode) {
    case NumberMode::kCardinal: return "cardinal";
    case NumberMode::kDigitByDigit: return "digits";
    case NumberMode::kAuto: return "auto";
  }
  return "?";
}

bool ParseNumberMode(std::string_view s, NumberMode* mode) {
  if (s == "cardinal") *mode = NumberMode::kCardinal;
  else if (s == "digits") *mode = NumberMode::kDigitByDigit;
  else if (s == "auto") *mode = NumberMode::kAuto;
  else return false;
  return true;
}

NumberMode NumberReadingPolicy::Resolve(size_t digit_count,
                                        bool context_flag) const {
  if (mode != NumberMode::kAuto) return mode;
  if (digit_count >= digit_threshold || context_flag) {
    return NumberMode::kDigitByDigit;
  }
  return NumberMode::kCardinal;
}

NumberWordTable NumberWordTable::FromTsv(std::string_view tsv) {
  NumberWordTable table;
  size_t row = 0;
  size_t line_no = 0;
  size_t start = 0;
  while (start < tsv.size()) {
    size_t nl = tsv.find('\n', start);
    if (nl == std::string_view::npos) nl = tsv.size();
    std::string_view line = tsv.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = SplitTabs(line);
    if (cols.size() < 3 || cols[2] != "number") continue;
    if (row >= kTableRows) {
      throw LexiconError("ParseError", line_no, "too many number rows");
    }
    std::string word = NormalizeNfc(cols[0]);
    if (row < kUnitRows) {
      table.units_[row] = std::move(word);
    } else if (row < kUnitRows + kHundredRows) {
      table.hundreds_[row - kUnitRows] = std::move(word);
    } else if (row < kUnitRows + kHundredRows + kScaleRows) {
      table.scale_[row - kUnitRows - kHundredRows] = std::move(word);
    } else {
      table.ordinals_[row - kUnitRows - kHundredRows - kScaleRows] = std::move(word);
    }
    ++row;
  }
  if (row != kTableRows) {
    throw LexiconError("ParseError", line_no,
                       "expected " + std::to_string(kTableRows) +
                           " number rows, found " + std::to_string(row));
  }
  return table;
}

const NumberWordTable& NumberWordTable::Default() {
  static const NumberWordTable table = FromTsv(NumberWordsTsv());
  return table;
}

std::vector<std::string> NumberToWordsCardinal(uint64_t value,
                                               const NumberWordTable& table) {
  if (value >= kCardinalLimit) {
    throw NumberOutOfRange("cardinal reading limited to values below 10^9");
  }
  std::vector<std::string> words;
  if (value == 0) {
    words.push_back(table.Unit(0));
    return words;
  }
  const auto crore = static_cast<int>(value / 10000000);
  const auto lakh = static_cast<int>(value / 100000 % 100);
  const auto thousand = static_cast<int>(value / 1000 % 100);
  const auto hundred = static_cast<int>(value / 100 % 10);
  const auto tail = static_cast<int>(value % 100);
  if (crore > 0) {
    words.push_back(table.Unit(crore));
    words.push_back(table.Crore());
  }
  if (lakh > 0) {
    words.push_back(table.Unit(lakh));
    words.push_back(table.Lakh());
  }
  if (thousand > 0) {
    words.push_back(table.Unit(thousand));
    words.push_back(table.Thousand());
  }
  if (hundred > 0) words.push_back(table.Hundreds(hundred));
  if (tail > 0) words.push_back(table.Unit(tail));
  return words;
}

std::vector<std::string> NumberToWordsDigits(std::string_view digits,
                                             const NumberWordTable& table) {
  if (digits.empty()) throw std::invalid_argument("empty digit string");
  std::vector<std::string> words;
  size_t pos = 0;
  while (pos < digits.size()) {
    const int d = DigitValue(DecodeUtf8(digits, &pos));
    if (d < 0) throw std::invalid_argument("non-digit in digit string");
    words.push_back(table.Digit(d));
  }
  return words;
}

bool IsNumberContextWord(std::string_view word) {
  const std::string nfc = NormalizeNfc(word);
  return std::find(kContextWords.begin(), kContextWords.end(), nfc) !=
         kContextWords.end();
}

bool IsOrdinalSuffix(std::string_view s) {
  const std::string nfc = NormalizeNfc(s);
  for (std::string_view suffix : kOrdinalSuffixes) {
    if (NormalizeNfc(suffix) == nfc) return true;
  }
  return false;
}

Expansion VerbalizeNumber(std::string_view digits,
                          const NumberReadingPolicy& policy, bool context_flag,
                          const NumberWordTable& table) {
  Expansion out;
  const size_t n = CountCodepoints(digits);
  if (policy.Resolve(n, context_flag) == NumberMode::kDigitByDigit) {
    out.words = NumberToWordsDigits(digits, table);
    return out;
  }
  const uint64_t value = DigitRunValue(digits);
  if (value >= kCardinalLimit) {
    out.warnings.push_back({"NumberOutOfRange", 0,
                            "number too large for a cardinal reading; "
                            "reading digit by digit"});
    out.words = NumberToWordsDigits(digits, table);
    return out;
  }
  out.words = NumberToWordsCardinal(value, table);
  return out;
}

Expansion ExpandMixed(std::string_view token, const NumberReadingPolicy& policy,
                      bool context_flag, const NumberWordTable& table) {
  struct Run {
    std::string_view text;
    size_t offset;
    bool digits;
  };
  std::vector<Run> runs;
  size_t pos = 0;
  while (pos < token.size()) {
    const size_t start = pos;
    const bool digit = IsDigit(DecodeUtf8(token, &pos));
    if (!runs.empty() && runs.back().digits == digit) {
      runs.back().text = token.substr(runs.back().offset, pos - runs.back().offset);
    } else {
      runs.push_back({token.substr(start, pos - start), start, digit});
    }
  }

  Expansion out;
  for (size_t i = 0; i < runs.size(); ++i) {
    const Run& run = runs[i];
    if (!run.digits) {
      out.words.emplace_back(NormalizeNfc(run.text));
      continue;
    }
    const bool next_is_suffix =
        i + 1 < runs.size() && IsOrdinalSuffix(runs[i + 1].text);
    if (next_is_suffix) {
      const uint64_t value = DigitRunValue(run.text);
      if (value >= 1 && value <= 10) {
        out.words.push_back(table.Ordinal(static_cast<int>(value)));
        out.ordinal = true;
        ++i;
        continue;
      }
    }
    Expansion part = VerbalizeNumber(run.text, policy, context_flag, table);
    for (Diagnostic& d : part.warnings) {
      d.offset += run.offset;
      out.warnings.push_back(std::move(d));
    }
    for (std::string& w : part.words) out.words.push_back(std::move(w));
  }
  return out;
}

Expansion ExpandAbbreviation(std::string_view token, const Lexicon& lexicon) {
  Expansion out;
  if (const LexiconEntry* entry = lexicon.Lookup(token)) {
    if (!entry->expansion.empty()) {
      out.words = entry->expansion;
      return out;
    }
  }
  std::string_view body = token;
  while (!body.empty() && body.back() == '.') body.remove_suffix(1);
  out.warnings.push_back(
      {"UnknownAbbreviation", 0,
       "no expansion for \"" + std::string(token) + "\"; reading letter names"});
  out.letter_names = true;
  for (const GraphemeCluster& c : SegmentGraphemes(NormalizeNfc(body))) {
    out.words.push_back(c.text);
  }
  return out;
}

}  // namespace bnipa
