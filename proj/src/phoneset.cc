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

#include "bnipa/phoneset.h"

#include <algorithm>
#include <utility>

#include "bnipa/unicode.h"

namespace bnipa {

namespace {

using PC = PhoneCategory;
using PL = Place;
using H = Height;
using BK = Backness;

constexpr PhoneBase kInventory[] = {
    {BaseId::kI, "ɪ", PC::kVowel, true, PL::kNone, H::kHigh, BK::kFront, false},
    {BaseId::kE, "e", PC::kVowel, true, PL::kNone, H::kHighMid, BK::kFront, false},
    {BaseId::kEpsilon, "ɛ", PC::kVowel, true, PL::kNone, H::kLowMid, BK::kFront, false},
    {BaseId::kTurnedA, "ɐ", PC::kVowel, true, PL::kNone, H::kLow, BK::kCentral, false},
    {BaseId::kOpenO, "ɔ", PC::kVowel, true, PL::kNone, H::kLowMid, BK::kBack, false},
    {BaseId::kO, "o", PC::kVowel, true, PL::kNone, H::kHighMid, BK::kBack, false},
    {BaseId::kU, "ʊ", PC::kVowel, true, PL::kNone, H::kHigh, BK::kBack, false},

    {BaseId::kP, "p", PC::kStop, false, PL::kBilabial, H::kNone, BK::kNone, false},
    {BaseId::kB, "b", PC::kStop, true, PL::kBilabial, H::kNone, BK::kNone, false},
    {BaseId::kDentalT, "t̪", PC::kStop, false, PL::kDental, H::kNone, BK::kNone, false},
    {BaseId::kDentalD, "d̪", PC::kStop, true, PL::kDental, H::kNone, BK::kNone, false},
    {BaseId::kRetroT, "ʈ", PC::kStop, false, PL::kRetroflex, H::kNone, BK::kNone, false},
    {BaseId::kRetroD, "ɖ", PC::kStop, true, PL::kRetroflex, H::kNone, BK::kNone, false},
    {BaseId::kPalatalC, "c", PC::kStop, false, PL::kPalatal, H::kNone, BK::kNone, false},
    {BaseId::kPalatalJ, "ɟ", PC::kStop, true, PL::kPalatal, H::kNone, BK::kNone, false},
    {BaseId::kK, "k", PC::kStop, false, PL::kVelar, H::kNone, BK::kNone, false},
    {BaseId::kG, "g", PC::kStop, true, PL::kVelar, H::kNone, BK::kNone, false},

    {BaseId::kM, "m", PC::kNasal, true, PL::kBilabial, H::kNone, BK::kNone, false},
    {BaseId::kN, "n", PC::kNasal, true, PL::kAlveolar, H::kNone, BK::kNone, false},
    {BaseId::kEng, "ŋ", PC::kNasal, true, PL::kVelar, H::kNone, BK::kNone, false},
    {BaseId::kTap, "ɾ", PC::kTap, true, PL::kAlveolar, H::kNone, BK::kNone, false},
    {BaseId::kFlap, "ɽ", PC::kFlap, true, PL::kRetroflex, H::kNone, BK::kNone, false},

    {BaseId::kS, "s", PC::kFricative, false, PL::kAlveolar, H::kNone, BK::kNone, true},
    {BaseId::kEsh, "ʃ", PC::kFricative, false, PL::kPostalveolar, H::kNone, BK::kNone, false},
    {BaseId::kH, "h", PC::kFricative, false, PL::kGlottal, H::kNone, BK::kNone, false},
    {BaseId::kZ, "z", PC::kFricative, true, PL::kAlveolar, H::kNone, BK::kNone, true},
    {BaseId::kF, "f", PC::kFricative, false, PL::kLabiodental, H::kNone, BK::kNone, true},
    {BaseId::kV, "v", PC::kFricative, true, PL::kLabiodental, H::kNone, BK::kNone, true},

    {BaseId::kL, "l", PC::kLateral, true, PL::kAlveolar, H::kNone, BK::kNone, false},
    {BaseId::kJ, "j", PC::kApproximant, true, PL::kPalatal, H::kNone, BK::kNone, false},
};

static_assert(std::size(kInventory) == kInventorySize);

constexpr char32_t kCombiningTilde = 0x0303;
constexpr char32_t kCombiningBridgeBelow = 0x032A;
constexpr char32_t kInvertedBreveBelow = 0x032F;
constexpr char32_t kDiaeresisBelow = 0x0324;

bool LookupDiacritic(char32_t cp, Diacritic* d) {
  switch (cp) {
    case 0x02B0: *d = Diacritic::kAspVoiceless; return true;
    case 0x02B1: *d = Diacritic::kAspVoiced; return true;
    case kCombiningTilde: *d = Diacritic::kNasal; return true;
    case 0x02D0: case ':': *d = Diacritic::kLong; return true;
    case kInvertedBreveBelow: case kDiaeresisBelow:
      *d = Diacritic::kNonSyllabic;
      return true;
    case 0x02B2: *d = Diacritic::kPalatalized; return true;
    case 0x02B7: *d = Diacritic::kLabialized; return true;
    default: return false;
  }
}

// Single-glyph bases accepted in both modes.
bool LookupStrictBase(char32_t cp, BaseId* id) {
  switch (cp) {
    case 0x026A: *id = BaseId::kI; return true;
    case 'e': *id = BaseId::kE; return true;
    case 0x025B: case 0x00E6: *id = BaseId::kEpsilon; return true;
    case 0x0250: *id = BaseId::kTurnedA; return true;
    case 0x0254: *id = BaseId::kOpenO; return true;
    case 'o': *id = BaseId::kO; return true;
    case 0x028A: *id = BaseId::kU; return true;
    case 'p': *id = BaseId::kP; return true;
    case 'b': *id = BaseId::kB; return true;
    case 0x0288: *id = BaseId::kRetroT; return true;
    case 0x0256: *id = BaseId::kRetroD; return true;
    case 'c': *id = BaseId::kPalatalC; return true;
    case 0x025F: case 0x0292: case 0x029D: *id = BaseId::kPalatalJ; return true;
    case 'k': *id = BaseId::kK; return true;
    case 'g': case 0x0261: *id = BaseId::kG; return true;
    case 'm': *id = BaseId::kM; return true;
    case 'n': *id = BaseId::kN; return true;
    case 0x014B: *id = BaseId::kEng; return true;
    case 0x027E: *id = BaseId::kTap; return true;
    case 0x027D: *id = BaseId::kFlap; return true;
    case 's': *id = BaseId::kS; return true;
    case 0x0283: *id = BaseId::kEsh; return true;
    case 'h': *id = BaseId::kH; return true;
    case 'z': *id = BaseId::kZ; return true;
    case 'f': *id = BaseId::kF; return true;
    case 'v': *id = BaseId::kV; return true;
    case 'l': *id = BaseId::kL; return true;
    case 'j': *id = BaseId::kJ; return true;
    default: return false;
  }
}

bool LookupLenientBase(char32_t cp, BaseId* id) {
  switch (cp) {
    case 'i': *id = BaseId::kI; return true;
    case 'u': *id = BaseId::kU; return true;
    case 'a': *id = BaseId::kTurnedA; return true;
    case 'r': *id = BaseId::kTap; return true;
    case 't': *id = BaseId::kDentalT; return true;
    case 'd': *id = BaseId::kDentalD; return true;
    default: return false;
  }
}

// Precomposed vowel + tilde letters.
bool SplitPrecomposedNasal(char32_t cp, char32_t* base) {
  switch (cp) {
    case 0x00F5: *base = 'o'; return true;
    case 0x00E3: *base = 'a'; return true;
    case 0x1EBD: *base = 'e'; return true;
    case 0x0129: *base = 'i'; return true;
    case 0x0169: *base = 'u'; return true;
    default: return false;
  }
}

constexpr int Rank(Diacritic d) { return static_cast<int>(d); }

}  // namespace

const PhoneBase& GetPhoneBase(BaseId id) {
  return kInventory[static_cast<size_t>(id)];
}

std::span<const PhoneBase> Inventory() { return kInventory; }

bool IsSound(BaseId id) { return static_cast<size_t>(id) < kInventorySize; }

bool IsVowel(BaseId id) {
  return IsSound(id) && GetPhoneBase(id).category == PhoneCategory::kVowel;
}

bool IsVoicelessStop(BaseId id) {
  return IsSound(id) && GetPhoneBase(id).category == PhoneCategory::kStop &&
         !GetPhoneBase(id).voiced;
}

bool IsVoicedStop(BaseId id) {
  return IsSound(id) && GetPhoneBase(id).category == PhoneCategory::kStop &&
         GetPhoneBase(id).voiced;
}

std::string_view DiacriticSymbol(Diacritic d) {
  switch (d) {
    case Diacritic::kAspVoiceless: return "ʰ";
    case Diacritic::kAspVoiced: return "ʱ";
    case Diacritic::kNasal: return "̃";
    case Diacritic::kLong: return "ː";
    case Diacritic::kNonSyllabic: return "̯";
    case Diacritic::kPalatalized: return "ʲ";
    case Diacritic::kLabialized: return "ʷ";
  }
  return "";
}

std::string_view ToString(Diacritic d) {
  switch (d) {
    case Diacritic::kAspVoiceless: return "AspVoiceless";
    case Diacritic::kAspVoiced: return "AspVoiced";
    case Diacritic::kNasal: return "Nasal";
    case Diacritic::kLong: return "Long";
    case Diacritic::kNonSyllabic: return "NonSyllabic";
    case Diacritic::kPalatalized: return "Palatalized";
    case Diacritic::kLabialized: return "Labialized";
  }
  return "";
}

void DiacriticList::Add(Diacritic d) {
  if (Has(d)) return;
  items_[size_++] = d;
}

void DiacriticList::Remove(Diacritic d) {
  auto* last = std::remove(items_.data(), items_.data() + size_, d);
  size_ = static_cast<uint8_t>(last - items_.data());
}

bool DiacriticList::Has(Diacritic d) const {
  return std::find(begin(), end(), d) != end();
}

bool DiacriticList::IsCanonicalOrder() const {
  return std::is_sorted(begin(), end(), [](Diacritic a, Diacritic b) {
    return Rank(a) < Rank(b);
  });
}

void DiacriticList::Canonicalize() {
  std::sort(items_.data(), items_.data() + size_,
            [](Diacritic a, Diacritic b) { return Rank(a) < Rank(b); });
}

void PhoneSeq::AppendWord(const PhoneSeq& other) {
  if (other.empty()) return;
  if (!phones.empty()) phones.emplace_back(BaseId::kWordBoundary);
  phones.insert(phones.end(), other.phones.begin(), other.phones.end());
}

std::vector<Phone> PhoneSeq::Sounds() const {
  std::vector<Phone> out;
  out.reserve(phones.size());
  for (const Phone& p : phones) {
    if (!p.is_boundary()) out.push_back(p);
  }
  return out;
}

std::vector<PhoneSeq> PhoneSeq::Words() const {
  std::vector<PhoneSeq> out;
  PhoneSeq word;
  for (const Phone& p : phones) {
    if (p.base == BaseId::kWordBoundary) {
      if (!word.empty()) out.push_back(std::move(word));
      word = {};
    } else {
      word.phones.push_back(p);
    }
  }
  if (!word.empty()) out.push_back(std::move(word));
  return out;
}

IpaParseError::IpaParseError(size_t byte_offset, std::string symbol)
    : std::runtime_error("UnknownSymbol '" + symbol + "' at byte " +
                         std::to_string(byte_offset)),
      byte_offset_(byte_offset),
      symbol_(std::move(symbol)) {}

PhoneSeq ParseIpa(std::string_view s, ParseMode mode,
                  std::vector<ParseWarning>* warnings) {
  const bool lenient = mode == ParseMode::kLenient;
  PhoneSeq seq;
  auto& phones = seq.phones;
  bool pending_space = false;

  auto unknown = [&](size_t offset, std::string_view glyph) {
    if (!lenient) throw IpaParseError(offset, std::string(glyph));
    if (warnings) warnings->push_back({offset, std::string(glyph)});
    Phone p;
    p.raw.assign(glyph);
    phones.push_back(std::move(p));
  };

  size_t pos = 0;
  while (pos < s.size()) {
    const size_t start = pos;
    char32_t cp = DecodeUtf8(s, &pos);
    if (IsWhitespace(cp)) {
      pending_space = !phones.empty();
      continue;
    }
    if (pending_space) {
      phones.emplace_back(BaseId::kWordBoundary);
      pending_space = false;
    }
    const std::string_view glyph = s.substr(start, pos - start);

    if (cp == '.') {
      phones.emplace_back(BaseId::kSyllableBreak);
      continue;
    }

    Diacritic d;
    if (LookupDiacritic(cp, &d)) {
      if (!phones.empty() && !phones.back().is_boundary()) {
        phones.back().diacritics.Add(d);
      } else {
        unknown(start, glyph);
      }
      continue;
    }

    bool nasal = false;
    char32_t plain;
    if (SplitPrecomposedNasal(cp, &plain)) {
      cp = plain;
      nasal = true;
    }

    // Two-glyph sequences: dental t̪ d̪ and the affricate aliases dʒ tʃ.
    BaseId id;
    bool found = false;
    if (cp == 't' || cp == 'd') {
      size_t next = pos;
      char32_t follow = next < s.size() ? DecodeUtf8(s, &next) : 0;
      if (follow == kCombiningBridgeBelow) {
        id = cp == 't' ? BaseId::kDentalT : BaseId::kDentalD;
        pos = next;
        found = true;
      } else if ((cp == 'd' && follow == 0x0292) ||
                 (cp == 't' && follow == 0x0283)) {
        id = cp == 'd' ? BaseId::kPalatalJ : BaseId::kPalatalC;
        pos = next;
        found = true;
      }
    }
    if (!found) found = LookupStrictBase(cp, &id);
    if (!found && lenient) found = LookupLenientBase(cp, &id);
    if (!found) {
      unknown(start, glyph);
      continue;
    }
    Phone p(id);
    if (nasal) p.diacritics.Add(Diacritic::kNasal);
    phones.push_back(std::move(p));
  }
  return seq;
}

std::string RenderPhone(const Phone& phone) {
  std::string out;
  switch (phone.base) {
    case BaseId::kWordBoundary: return " ";
    case BaseId::kSyllableBreak: return ".";
    case BaseId::kUnknown: out = phone.raw; break;
    default: out.assign(GetPhoneBase(phone.base).symbol); break;
  }
  DiacriticList ds = phone.diacritics;
  ds.Canonicalize();
  for (Diacritic d : ds) out.append(DiacriticSymbol(d));
  return out;
}

std::string RenderIpa(const PhoneSeq& seq) {
  std::string out;
  out.reserve(seq.phones.size() * 2);
  for (const Phone& p : seq.phones) out += RenderPhone(p);
  return out;
}

std::string NormalizeIpa(std::string_view s, std::vector<ParseWarning>* warnings) {
  return RenderIpa(ParseIpa(s, ParseMode::kLenient, warnings));
}

std::string NormalizeIpaStrict(std::string_view s) {
  return RenderIpa(ParseIpa(s, ParseMode::kStrict));
}

std::string_view ToString(ViolationCode code) {
  switch (code) {
    case ViolationCode::kBadAspiration: return "BadAspiration";
    case ViolationCode::kDiacriticOnWrongBase: return "DiacriticOnWrongBase";
    case ViolationCode::kUnknownSymbol: return "UnknownSymbol";
    case ViolationCode::kNonCanonicalOrder: return "NonCanonicalOrder";
    case ViolationCode::kSchwaForbidden: return "SchwaForbidden";
  }
  return "";
}

std::vector<Violation> ValidatePhoneSeq(const PhoneSeq& seq) {
  std::vector<Violation> out;
  auto flag = [&](ViolationCode code, size_t i, std::string message) {
    out.push_back({code, i, std::move(message)});
  };
  for (size_t i = 0; i < seq.phones.size(); ++i) {
    const Phone& p = seq.phones[i];
    if (p.is_boundary()) {
      if (!p.diacritics.empty()) {
        flag(ViolationCode::kDiacriticOnWrongBase, i, "diacritic on a boundary");
      }
      continue;
    }
    if (p.base == BaseId::kUnknown) {
      if (p.raw == "ə") {
        flag(ViolationCode::kSchwaForbidden, i, "schwa is not in the inventory");
      } else {
        flag(ViolationCode::kUnknownSymbol, i, "unknown symbol '" + p.raw + "'");
      }
      continue;
    }
    const std::string sym(GetPhoneBase(p.base).symbol);
    const bool vowel = p.is_vowel();
    const bool voiceless_stop = IsVoicelessStop(p.base);
    const bool voiced_aspirable = IsVoicedStop(p.base) || p.base == BaseId::kFlap;

    const bool asp0 = p.Has(Diacritic::kAspVoiceless);
    const bool asp1 = p.Has(Diacritic::kAspVoiced);
    if (asp0 && asp1) {
      flag(ViolationCode::kBadAspiration, i, "two aspiration marks on " + sym);
    } else if (asp0 && !voiceless_stop) {
      flag(voiced_aspirable ? ViolationCode::kBadAspiration
                            : ViolationCode::kDiacriticOnWrongBase,
           i, "voiceless aspiration on " + sym);
    } else if (asp1 && !voiced_aspirable) {
      flag(voiceless_stop ? ViolationCode::kBadAspiration
                          : ViolationCode::kDiacriticOnWrongBase,
           i, "voiced aspiration on " + sym);
    }
    for (Diacritic d : {Diacritic::kNasal, Diacritic::kLong, Diacritic::kNonSyllabic}) {
      if (p.Has(d) && !vowel) {
        flag(ViolationCode::kDiacriticOnWrongBase, i,
             std::string(ToString(d)) + " on non-vowel " + sym);
      }
    }
    if (p.Has(Diacritic::kLong) && p.Has(Diacritic::kNonSyllabic)) {
      flag(ViolationCode::kDiacriticOnWrongBase, i,
           "Long and NonSyllabic on the same vowel");
    }
    if (!p.diacritics.IsCanonicalOrder()) {
      flag(ViolationCode::kNonCanonicalOrder, i, "diacritics out of order on " + sym);
    }
  }
  return out;
}

}  // namespace bnipa
