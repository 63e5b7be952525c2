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

// The Bengali IPA inventory: vowel and consonant bases, diacritics, and the
// parse / render / normalize / validate operations over IPA strings.

#ifndef BNIPA_PHONESET_H_
#define BNIPA_PHONESET_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnipa {

enum class PhoneCategory : uint8_t {
  kVowel, kStop, kNasal, kTap, kFlap, kFricative, kLateral, kApproximant,
};

enum class Place : uint8_t {
  kNone, kBilabial, kLabiodental, kDental, kAlveolar, kRetroflex,
  kPostalveolar, kPalatal, kVelar, kGlottal,
};

enum class Height : uint8_t { kNone, kHigh, kHighMid, kLowMid, kLow };
enum class Backness : uint8_t { kNone, kFront, kCentral, kBack };

// Identifies an inventory base. The last three values are not sounds:
// kUnknown carries an unrecognized glyph (lenient parsing only), and the
// boundary values separate words and syllables inside a PhoneSeq.
enum class BaseId : uint8_t {
  // Vowels.
  kI, kE, kEpsilon, kTurnedA, kOpenO, kO, kU,
  // Stops.
  kP, kB, kDentalT, kDentalD, kRetroT, kRetroD, kPalatalC, kPalatalJ, kK, kG,
  // Nasals, tap, flap.
  kM, kN, kEng, kTap, kFlap,
  // Fricatives.
  kS, kEsh, kH, kZ, kF, kV,
  // Lateral, approximant.
  kL, kJ,
  kUnknown, kWordBoundary, kSyllableBreak,
};

inline constexpr size_t kInventorySize = static_cast<size_t>(BaseId::kUnknown);

struct PhoneBase {
  BaseId id;
  std::string_view symbol;
  PhoneCategory category;
  bool voiced;
  Place place;
  Height height;
  Backness backness;
  bool loan_or_contextual;
};

// Inventory entry for a sound base. Must not be called with kUnknown or a
// boundary.
const PhoneBase& GetPhoneBase(BaseId id);
std::span<const PhoneBase> Inventory();

bool IsSound(BaseId id);
bool IsVowel(BaseId id);
bool IsVoicelessStop(BaseId id);
bool IsVoicedStop(BaseId id);

// Listed in canonical rendering order.
enum class Diacritic : uint8_t {
  kAspVoiceless,  // ʰ
  kAspVoiced,     // ʱ
  kNasal,         // ◌̃
  kLong,          // ː
  kNonSyllabic,   // ◌̯
  kPalatalized,   // ʲ
  kLabialized,    // ʷ
};

inline constexpr size_t kDiacriticKinds = 7;

std::string_view DiacriticSymbol(Diacritic d);
std::string_view ToString(Diacritic d);

// Ordered set of diacritics on one phone, in insertion order.
class DiacriticList {
 public:
  DiacriticList() = default;
  DiacriticList(std::initializer_list<Diacritic> ds) {
    for (Diacritic d : ds) Add(d);
  }

  // Appends `d` unless already present.
  void Add(Diacritic d);
  void Remove(Diacritic d);
  bool Has(Diacritic d) const;
  bool empty() const { return size_ == 0; }
  size_t size() const { return size_; }
  const Diacritic* begin() const { return items_.data(); }
  const Diacritic* end() const { return items_.data() + size_; }
  bool IsCanonicalOrder() const;
  void Canonicalize();

  friend bool operator==(const DiacriticList& a, const DiacriticList& b) {
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

 private:
  std::array<Diacritic, kDiacriticKinds> items_{};
  uint8_t size_ = 0;
};

struct Phone {
  BaseId base = BaseId::kUnknown;
  DiacriticList diacritics;
  std::string raw;  // glyph for kUnknown

  Phone() = default;
  Phone(BaseId b, DiacriticList d = {}) : base(b), diacritics(d) {}

  bool is_sound() const { return IsSound(base); }
  bool is_vowel() const { return IsVowel(base); }
  bool is_boundary() const {
    return base == BaseId::kWordBoundary || base == BaseId::kSyllableBreak;
  }
  bool Has(Diacritic d) const { return diacritics.Has(d); }

  friend bool operator==(const Phone& a, const Phone& b) {
    return a.base == b.base && a.diacritics == b.diacritics && a.raw == b.raw;
  }
};

struct PhoneSeq {
  std::vector<Phone> phones;

  bool empty() const { return phones.empty(); }
  size_t size() const { return phones.size(); }
  friend bool operator==(const PhoneSeq&, const PhoneSeq&) = default;

  // Appends `other`, inserting a word boundary when both sides are
  // non-empty.
  void AppendWord(const PhoneSeq& other);
  // Sound phones only, boundaries dropped.
  std::vector<Phone> Sounds() const;
  // Splits at word boundaries.
  std::vector<PhoneSeq> Words() const;
};

enum class ParseMode : uint8_t {
  // Only inventory glyphs plus the fixed alias set (æ, ʒ, dʒ, ʝ, tʃ, ':' and
  // the printed ◌̤ non-syllabic mark).
  kStrict,
  // Additionally folds the common broad-transcription letters i, u, a, r, t,
  // d onto their inventory counterparts and passes unknown glyphs through as
  // kUnknown phones.
  kLenient,
};

class IpaParseError : public std::runtime_error {
 public:
  IpaParseError(size_t byte_offset, std::string symbol);
  size_t byte_offset() const { return byte_offset_; }
  const std::string& symbol() const { return symbol_; }

 private:
  size_t byte_offset_;
  std::string symbol_;
};

struct ParseWarning {
  size_t byte_offset;
  std::string symbol;
};

// Throws IpaParseError in strict mode on the first glyph outside the
// inventory, its diacritics and aliases. In lenient mode unknown glyphs are
// recorded in `warnings` and kept as kUnknown phones.
PhoneSeq ParseIpa(std::string_view s, ParseMode mode = ParseMode::kStrict,
                  std::vector<ParseWarning>* warnings = nullptr);

// Renders bases followed by their diacritics in canonical order. Word
// boundaries render as a single space, syllable breaks as ".".
std::string RenderIpa(const PhoneSeq& seq);
std::string RenderPhone(const Phone& phone);

// Lenient parse followed by render. Idempotent.
std::string NormalizeIpa(std::string_view s,
                         std::vector<ParseWarning>* warnings = nullptr);
// Strict variant; throws IpaParseError.
std::string NormalizeIpaStrict(std::string_view s);

enum class ViolationCode : uint8_t {
  kBadAspiration,
  kDiacriticOnWrongBase,
  kUnknownSymbol,
  kNonCanonicalOrder,
  kSchwaForbidden,
};

std::string_view ToString(ViolationCode code);

struct Violation {
  ViolationCode code;
  size_t position;  // index into PhoneSeq::phones
  std::string message;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.code == b.code && a.position == b.position;
  }
};

// Empty iff every phone satisfies the placement rules.
std::vector<Violation> ValidatePhoneSeq(const PhoneSeq& seq);

}  // namespace bnipa

#endif  // BNIPA_PHONESET_H_
