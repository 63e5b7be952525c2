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

#include "bnipa/script.h"

#include <utility>

#include "bnipa/unicode.h"
#include "unicode/uchar.h"

namespace bnipa {

std::string_view ToString(CodepointClass c) {
  switch (c) {
    case CodepointClass::kIndependentVowel: return "IndependentVowel";
    case CodepointClass::kConsonantLetter: return "ConsonantLetter";
    case CodepointClass::kVowelSign: return "VowelSign";
    case CodepointClass::kVirama: return "Virama";
    case CodepointClass::kChandrabindu: return "Chandrabindu";
    case CodepointClass::kAnusvara: return "Anusvara";
    case CodepointClass::kVisarga: return "Visarga";
    case CodepointClass::kNukta: return "Nukta";
    case CodepointClass::kBengaliDigit: return "BengaliDigit";
    case CodepointClass::kLatinDigit: return "LatinDigit";
    case CodepointClass::kJoiner: return "Joiner";
    case CodepointClass::kPunctuation: return "Punctuation";
    case CodepointClass::kWhitespace: return "Whitespace";
    case CodepointClass::kOther: return "Other";
  }
  return "Other";
}

std::string_view ToString(TokenKind kind) {
  switch (kind) {
    case TokenKind::kWord: return "Word";
    case TokenKind::kNumber: return "Number";
    case TokenKind::kMixed: return "Mixed";
    case TokenKind::kAbbreviation: return "Abbreviation";
    case TokenKind::kPunct: return "Punct";
  }
  return "Punct";
}

namespace {

CodepointClass ClassifyBengaliBlock(char32_t cp) {
  using C = CodepointClass;
  switch (cp) {
    case 0x0981: return C::kChandrabindu;
    case 0x0982: return C::kAnusvara;
    case 0x0983: return C::kVisarga;
    case 0x09BC: return C::kNukta;
    case 0x09CD: return C::kVirama;
    case 0x09CE: return C::kConsonantLetter;  // khanda ta
    case 0x09D7: return C::kVowelSign;        // au length mark
    case 0x09B2: return C::kConsonantLetter;
    case 0x09DC: case 0x09DD: case 0x09DF:
    case 0x09F0: case 0x09F1:
      return C::kConsonantLetter;
    case 0x098F: case 0x0990: case 0x0993: case 0x0994:
    case 0x09E0: case 0x09E1:
      return C::kIndependentVowel;
    case 0x09C7: case 0x09C8: case 0x09CB: case 0x09CC:
    case 0x09E2: case 0x09E3:
      return C::kVowelSign;
    default:
      break;
  }
  if (cp >= 0x0985 && cp <= 0x098C) return C::kIndependentVowel;
  if (cp >= 0x0995 && cp <= 0x09A8) return C::kConsonantLetter;
  if (cp >= 0x09AA && cp <= 0x09B0) return C::kConsonantLetter;
  if (cp >= 0x09B6 && cp <= 0x09B9) return C::kConsonantLetter;
  if (cp >= 0x09BE && cp <= 0x09C4) return C::kVowelSign;
  if (cp >= 0x09E6 && cp <= 0x09EF) return C::kBengaliDigit;
  // Avagraha, currency and numeric symbols, isshar, unassigned positions.
  return C::kPunctuation;
}

}  // namespace

CodepointClass ClassifyCodepoint(char32_t cp) {
  if (cp >= 0x0980 && cp <= 0x09FF) return ClassifyBengaliBlock(cp);
  if (cp >= '0' && cp <= '9') return CodepointClass::kLatinDigit;
  if (cp == bn::kZwnj || cp == bn::kZwj) return CodepointClass::kJoiner;
  if (IsWhitespace(cp)) return CodepointClass::kWhitespace;
  if (cp == 0x0964 || cp == 0x0965) return CodepointClass::kPunctuation;
  if (cp > 0x10FFFF) return CodepointClass::kOther;
  const auto type = static_cast<UCharCategory>(u_charType(static_cast<UChar32>(cp)));
  switch (type) {
    case U_DASH_PUNCTUATION: case U_START_PUNCTUATION: case U_END_PUNCTUATION:
    case U_CONNECTOR_PUNCTUATION: case U_OTHER_PUNCTUATION:
    case U_INITIAL_PUNCTUATION: case U_FINAL_PUNCTUATION:
    case U_MATH_SYMBOL: case U_CURRENCY_SYMBOL: case U_MODIFIER_SYMBOL:
    case U_OTHER_SYMBOL:
      return CodepointClass::kPunctuation;
    default:
      return CodepointClass::kOther;
  }
}

bool IsBengaliDigit(char32_t cp) { return cp >= 0x09E6 && cp <= 0x09EF; }

bool IsDigit(char32_t cp) {
  return IsBengaliDigit(cp) || (cp >= '0' && cp <= '9');
}

int DigitValue(char32_t cp) {
  if (IsBengaliDigit(cp)) return static_cast<int>(cp - 0x09E6);
  if (cp >= '0' && cp <= '9') return static_cast<int>(cp - '0');
  return -1;
}

namespace {

char32_t FoldNukta(char32_t base) {
  switch (base) {
    case 0x09A1: return 0x09DC;  // ড + ় → ড়
    case 0x09A2: return 0x09DD;  // ঢ + ় → ঢ়
    case 0x09AF: return 0x09DF;  // য + ় → য়
    default: return base;
  }
}

class Segmenter {
 public:
  Segmenter(std::string_view text, std::vector<Diagnostic>* issues)
      : text_(text), issues_(issues) {}

  std::vector<GraphemeCluster> Run() {
    size_t pos = 0;
    while (pos < text_.size()) {
      const size_t start = pos;
      const char32_t cp = DecodeUtf8(text_, &pos);
      const std::string_view bytes = text_.substr(start, pos - start);
      Step(cp, start, bytes, &pos);
    }
    return std::move(clusters_);
  }

 private:
  GraphemeCluster* current() {
    return clusters_.empty() ? nullptr : &clusters_.back();
  }

  GraphemeCluster& Open(GraphemeCluster::Kind kind, size_t offset,
                        std::string_view bytes) {
    GraphemeCluster c;
    c.kind = kind;
    c.offset = offset;
    c.text.assign(bytes);
    clusters_.push_back(std::move(c));
    join_open_ = false;
    return clusters_.back();
  }

  void Report(size_t offset, std::string message) {
    if (issues_) issues_->push_back({"MalformedSequence", offset, std::move(message)});
  }

  GraphemeCluster& OpenDegenerate(size_t offset, std::string_view bytes,
                                  std::string message) {
    GraphemeCluster& c = Open(GraphemeCluster::Kind::kSymbol, offset, bytes);
    c.degenerate = true;
    Report(offset, std::move(message));
    return c;
  }

  void Step(char32_t cp, size_t start, std::string_view bytes, size_t* pos) {
    using C = CodepointClass;
    using K = GraphemeCluster::Kind;
    GraphemeCluster* cur = current();
    switch (ClassifyCodepoint(cp)) {
      case C::kConsonantLetter:
        if (cur && cur->is_consonant() && join_open_) {
          cur->bases.push_back(cp);
          cur->has_virama_final = false;
          cur->text.append(bytes);
          join_open_ = false;
        } else {
          Open(K::kConsonant, start, bytes).bases.push_back(cp);
        }
        return;

      case C::kNukta:
        if (cur && cur->is_consonant() && !cur->bases.empty() &&
            !cur->vowel_sign && !cur->has_virama_final) {
          cur->bases.back() = FoldNukta(cur->bases.back());
          cur->text.append(bytes);
        } else {
          OpenDegenerate(start, bytes, "nukta without a host consonant");
        }
        return;

      case C::kVowelSign:
        if (cur && CanTakeVowelSign(*cur)) {
          cur->vowel_sign = cp;
          cur->text.append(bytes);
          join_open_ = false;
        } else if (cur && cur->vowel_sign == bn::kSignE &&
                   (cp == bn::kSignAa || cp == 0x09D7)) {
          // Two-part signs typed in decomposed order.
          cur->vowel_sign = (cp == bn::kSignAa) ? char32_t{0x09CB} : char32_t{0x09CC};
          cur->text.append(bytes);
        } else {
          OpenDegenerate(start, bytes, "vowel sign without a host consonant")
              .vowel_sign = cp;
        }
        return;

      case C::kVirama:
        if (cur && cur->is_consonant() && !cur->has_virama_final &&
            !cur->vowel_sign && cur->trailing_marks.empty() &&
            !cur->has_chandrabindu) {
          cur->has_virama_final = true;
          cur->text.append(bytes);
          join_open_ = true;
          return;
        }
        if (cur && cur->kind == K::kIndependentVowel && !cur->ya_phala_vowel &&
            !cur->has_chandrabindu && cur->trailing_marks.empty() &&
            (cur->independent_vowel == bn::kVowelA ||
             cur->independent_vowel == bn::kVowelE)) {
          size_t next = *pos;
          if (next < text_.size() && DecodeUtf8(text_, &next) == bn::kYa) {
            cur->ya_phala_vowel = true;
            cur->text.append(bytes);
            cur->text.append(text_.substr(*pos, next - *pos));
            *pos = next;
            return;
          }
        }
        if (cur && cur->is_consonant() && cur->has_virama_final) {
          cur->degenerate = true;
          cur->text.append(bytes);
          Report(start, "double virama");
          return;
        }
        OpenDegenerate(start, bytes, "virama without a host consonant");
        return;

      case C::kChandrabindu:
      case C::kAnusvara:
      case C::kVisarga: {
        GraphemeCluster* host = (cur && CanTakeMark(*cur)) ? cur : nullptr;
        if (!host) {
          host = &OpenDegenerate(start, bytes, "sign without a host cluster");
        } else {
          host->text.append(bytes);
        }
        if (cp == bn::kChandrabindu) {
          host->has_chandrabindu = true;
        } else {
          host->trailing_marks.push_back(cp);
        }
        join_open_ = false;
        return;
      }

      case C::kJoiner:
        if (cur && cur->kind != K::kDigit) {
          cur->text.append(bytes);
          if (cp == bn::kZwnj) join_open_ = false;
        } else {
          Open(K::kSymbol, start, bytes).symbol = cp;
        }
        return;

      case C::kIndependentVowel:
        Open(K::kIndependentVowel, start, bytes).independent_vowel = cp;
        return;

      case C::kBengaliDigit:
      case C::kLatinDigit:
        Open(K::kDigit, start, bytes).symbol = cp;
        return;

      default:
        Open(K::kSymbol, start, bytes).symbol = cp;
        return;
    }
  }

  static bool CanTakeVowelSign(const GraphemeCluster& c) {
    if (c.vowel_sign || c.has_virama_final || !c.trailing_marks.empty()) {
      return false;
    }
    if (c.is_consonant()) return true;
    return c.kind == GraphemeCluster::Kind::kIndependentVowel && c.ya_phala_vowel;
  }

  static bool CanTakeMark(const GraphemeCluster& c) {
    switch (c.kind) {
      case GraphemeCluster::Kind::kConsonant:
      case GraphemeCluster::Kind::kIndependentVowel:
        return true;
      case GraphemeCluster::Kind::kSymbol:
        return c.degenerate && c.vowel_sign.has_value();
      default:
        return false;
    }
  }

  std::string_view text_;
  std::vector<Diagnostic>* issues_;
  std::vector<GraphemeCluster> clusters_;
  bool join_open_ = false;
};

enum class RunCategory { kSpace, kDigit, kLetter, kPunct };

RunCategory Categorize(char32_t cp) {
  switch (ClassifyCodepoint(cp)) {
    case CodepointClass::kWhitespace: return RunCategory::kSpace;
    case CodepointClass::kBengaliDigit:
    case CodepointClass::kLatinDigit: return RunCategory::kDigit;
    case CodepointClass::kPunctuation: return RunCategory::kPunct;
    default: return RunCategory::kLetter;
  }
}

bool IsBengaliLetterClass(char32_t cp) {
  switch (ClassifyCodepoint(cp)) {
    case CodepointClass::kIndependentVowel:
    case CodepointClass::kConsonantLetter:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::vector<GraphemeCluster> SegmentGraphemes(std::string_view text,
                                              std::vector<Diagnostic>* issues) {
  return Segmenter(text, issues).Run();
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t run_start = 0;
  bool in_run = false;
  bool has_digit = false;
  bool has_letter = false;

  auto flush = [&](size_t end) {
    if (!in_run) return;
    Token t;
    t.begin = run_start;
    t.end = end;
    t.text.assign(text.substr(run_start, end - run_start));
    t.kind = has_digit ? (has_letter ? TokenKind::kMixed : TokenKind::kNumber)
                       : TokenKind::kWord;
    tokens.push_back(std::move(t));
    in_run = false;
    has_digit = has_letter = false;
  };

  size_t pos = 0;
  while (pos < text.size()) {
    const size_t start = pos;
    const char32_t cp = DecodeUtf8(text, &pos);
    const RunCategory cat = Categorize(cp);
    if (cat == RunCategory::kDigit || cat == RunCategory::kLetter) {
      if (!in_run) {
        in_run = true;
        run_start = start;
      }
      (cat == RunCategory::kDigit ? has_digit : has_letter) = true;
      continue;
    }
    if (cat == RunCategory::kPunct && cp == '.' && in_run && has_letter &&
        !has_digit) {
      std::string_view run = text.substr(run_start, start - run_start);
      size_t first = 0;
      if (IsBengaliLetterClass(DecodeUtf8(run, &first))) {
        const size_t n = SegmentGraphemes(run).size();
        if (n >= 1 && n <= 2) {
          Token t;
          t.begin = run_start;
          t.end = pos;
          t.text.assign(text.substr(run_start, pos - run_start));
          t.kind = TokenKind::kAbbreviation;
          tokens.push_back(std::move(t));
          in_run = false;
          has_letter = false;
          continue;
        }
      }
    }
    flush(start);
    if (cat == RunCategory::kPunct) {
      tokens.push_back({std::string(text.substr(start, pos - start)),
                        TokenKind::kPunct, start, pos});
    }
  }
  flush(text.size());
  return tokens;
}

}  // namespace bnipa
