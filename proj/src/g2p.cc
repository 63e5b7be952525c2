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
#include "bnipa/g2p.h"

#include <algorithm>
#include <array>
#include <utility>

#include "bnipa/unicode.h"

namespace bnipa {

namespace {

using Kind = DraftSlot::Kind;
using D = Diacritic;

Phone P(BaseId b, DiacriticList d = {}) { return Phone(b, d); }

// Consonant letter to phone. kJ stands for the য় glide slot.
bool ConsonantPhone(char32_t cp, Phone* out) {
  switch (cp) {
    case 0x0995: *out = P(BaseId::kK); return true;                        // ক
    case 0x0996: *out = P(BaseId::kK, {D::kAspVoiceless}); return true;    // খ
    case 0x0997: *out = P(BaseId::kG); return true;                        // গ
    case 0x0998: *out = P(BaseId::kG, {D::kAspVoiced}); return true;       // ঘ
    case 0x0999: *out = P(BaseId::kEng); return true;                      // ঙ
    case 0x099A: *out = P(BaseId::kPalatalC); return true;                 // চ
    case 0x099B: *out = P(BaseId::kPalatalC, {D::kAspVoiceless}); return true;
    case 0x099C: *out = P(BaseId::kPalatalJ); return true;                 // জ
    case 0x099D: *out = P(BaseId::kPalatalJ, {D::kAspVoiced}); return true;
    case 0x099E: *out = P(BaseId::kN); return true;                        // ঞ
    case 0x099F: *out = P(BaseId::kRetroT); return true;                   // ট
    case 0x09A0: *out = P(BaseId::kRetroT, {D::kAspVoiceless}); return true;
    case 0x09A1: *out = P(BaseId::kRetroD); return true;                   // ড
    case 0x09A2: *out = P(BaseId::kRetroD, {D::kAspVoiced}); return true;
    case 0x09A3: *out = P(BaseId::kN); return true;                        // ণ
    case 0x09A4: *out = P(BaseId::kDentalT); return true;                  // ত
    case 0x09A5: *out = P(BaseId::kDentalT, {D::kAspVoiceless}); return true;
    case 0x09A6: *out = P(BaseId::kDentalD); return true;                  // দ
    case 0x09A7: *out = P(BaseId::kDentalD, {D::kAspVoiced}); return true;
    case 0x09A8: *out = P(BaseId::kN); return true;                        // ন
    case 0x09AA: *out = P(BaseId::kP); return true;                        // প
    case 0x09AB: *out = P(BaseId::kP, {D::kAspVoiceless}); return true;    // ফ
    case 0x09AC: *out = P(BaseId::kB); return true;                        // ব
    case 0x09AD: *out = P(BaseId::kB, {D::kAspVoiced}); return true;       // ভ
    case 0x09AE: *out = P(BaseId::kM); return true;                        // ম
    case 0x09AF: *out = P(BaseId::kPalatalJ); return true;                 // য
    case 0x09B0: *out = P(BaseId::kTap); return true;                      // র
    case 0x09B2: *out = P(BaseId::kL); return true;                        // ল
    case 0x09B6:                                                           // শ
    case 0x09B7:                                                           // ষ
    case 0x09B8: *out = P(BaseId::kEsh); return true;                      // স
    case 0x09B9: *out = P(BaseId::kH); return true;                        // হ
    case 0x09CE: *out = P(BaseId::kDentalT); return true;                  // ৎ
    case 0x09DC: *out = P(BaseId::kFlap); return true;                     // ড়
    case 0x09DD: *out = P(BaseId::kFlap, {D::kAspVoiced}); return true;    // ঢ়
    case 0x09DF: *out = P(BaseId::kJ); return true;                        // য়
    case 0x09F0: *out = P(BaseId::kTap); return true;                      // ৰ
    case 0x09F1: *out = P(BaseId::kB); return true;                        // ৱ
    default: return false;
  }
}

// Independent vowels and vowel signs. The first vowel phone is the nucleus;
// ঋ-type vowels carry a leading consonant.
std::vector<Phone> VowelPhones(char32_t cp) {
  const Phone i = P(BaseId::kI);
  switch (cp) {
    case 0x0985: return {P(BaseId::kOpenO)};                              // অ
    case 0x0986: case 0x09BE: return {P(BaseId::kTurnedA)};               // আ া
    case 0x0987: case 0x0988: case 0x09BF: case 0x09C0: return {i};       // ই ঈ ি ী
    case 0x0989: case 0x098A: case 0x09C1: case 0x09C2:                   // উ ঊ ু ূ
      return {P(BaseId::kU)};
    case 0x098B: case 0x09E0: case 0x09C3: case 0x09C4:                   // ঋ ৠ ৃ ৄ
      return {P(BaseId::kTap), i};
    case 0x098C: case 0x09E1: case 0x09E2: case 0x09E3:                   // ঌ ৡ ৢ ৣ
      return {P(BaseId::kL), i};
    case 0x098F: case 0x09C7: return {P(BaseId::kE)};                     // এ ে
    case 0x0990: case 0x09C8:                                             // ঐ ৈ
      return {P(BaseId::kO), P(BaseId::kI, {D::kNonSyllabic})};
    case 0x0993: case 0x09CB: return {P(BaseId::kO)};                     // ও ো
    case 0x0994: case 0x09CC: case 0x09D7:                                // ঔ ৌ ৗ
      return {P(BaseId::kO), P(BaseId::kU, {D::kNonSyllabic})};
    default: return {};
  }
}

Phone Unaspirated(Phone p) {
  p.diacritics.Remove(D::kAspVoiceless);
  p.diacritics.Remove(D::kAspVoiced);
  return p;
}

bool IsHigh(BaseId b) { return b == BaseId::kI || b == BaseId::kU; }

struct Pair {
  BaseId first;
  BaseId second;
};

// Falling diphthongs: the second member is the offglide.
constexpr std::array<Pair, 19> kRegularDiphthongs = {{
    {BaseId::kI, BaseId::kU},       {BaseId::kE, BaseId::kI},
    {BaseId::kE, BaseId::kU},       {BaseId::kEpsilon, BaseId::kE},
    {BaseId::kEpsilon, BaseId::kO}, {BaseId::kTurnedA, BaseId::kI},
    {BaseId::kTurnedA, BaseId::kE}, {BaseId::kTurnedA, BaseId::kO},
    {BaseId::kTurnedA, BaseId::kU}, {BaseId::kOpenO, BaseId::kE},
    {BaseId::kOpenO, BaseId::kO},   {BaseId::kOpenO, BaseId::kI},
    {BaseId::kOpenO, BaseId::kU},   {BaseId::kO, BaseId::kI},
    {BaseId::kO, BaseId::kE},       {BaseId::kO, BaseId::kU},
    {BaseId::kU, BaseId::kI},       {BaseId::kU, BaseId::kE},
    {BaseId::kU, BaseId::kO},
}};

// Rising diphthongs: the first member is the onglide.
constexpr std::array<Pair, 12> kIrregularDiphthongs = {{
    {BaseId::kI, BaseId::kTurnedA},       {BaseId::kE, BaseId::kTurnedA},
    {BaseId::kEpsilon, BaseId::kTurnedA}, {BaseId::kU, BaseId::kTurnedA},
    {BaseId::kO, BaseId::kTurnedA},       {BaseId::kOpenO, BaseId::kTurnedA},
    {BaseId::kI, BaseId::kO},             {BaseId::kI, BaseId::kOpenO},
    {BaseId::kI, BaseId::kE},             {BaseId::kU, BaseId::kE},
    {BaseId::kU, BaseId::kO},             {BaseId::kU, BaseId::kOpenO},
}};

template <size_t N>
bool InTable(const std::array<Pair, N>& table, BaseId a, BaseId b) {
  return std::any_of(table.begin(), table.end(), [&](const Pair& p) {
    return p.first == a && p.second == b;
  });
}

bool IsSuffixVowel(char32_t cp) {
  return cp == bn::kVowelO || cp == bn::kVowelI || cp == bn::kVowelE;
}

class DraftBuilder {
 public:
  DraftBuilder(std::string_view word, const TranscriptionOptions& opts,
               bool letter_names)
      : opts_(opts), letter_names_(letter_names) {
    draft_.clusters = SegmentGraphemes(word, &draft_.warnings);
  }

  WordDraft Run() {
    const auto& clusters = draft_.clusters;
    for (size_t i = 0; i < clusters.size(); ++i) MapCluster(i);
    DetectSuffix();
    ResolveInherentVowels();
    ApplyGlideRules();
    ApplyNasalization();
    DetectDiphthongs();
    MarkSuffixLength();
    ApplyCarefulH();
    for (DraftSlot& s : draft_.slots) s.phone.diacritics.Canonicalize();
    return std::move(draft_);
  }

 private:
  void Add(size_t cluster, Phone phone, RuleId rule, Kind kind) {
    DraftSlot s;
    s.phone = std::move(phone);
    s.cluster = cluster;
    s.rule = rule;
    s.kind = kind;
    draft_.slots.push_back(std::move(s));
  }

  // Records a grapheme that produces no phone.
  void AddSilent(size_t cluster, RuleId rule) {
    Add(cluster, Phone(), rule, Kind::kConsonant);
    draft_.slots.back().deleted = true;
  }

  void AddVowels(size_t cluster, char32_t cp, RuleId rule) {
    for (Phone& p : VowelPhones(cp)) {
      const Kind kind = p.is_vowel() ? Kind::kVowel : Kind::kConsonant;
      Add(cluster, std::move(p), rule, kind);
    }
  }

  void MapCluster(size_t i) {
    const GraphemeCluster& c = draft_.clusters[i];
    const size_t first_slot = draft_.slots.size();
    switch (c.kind) {
      case GraphemeCluster::Kind::kConsonant:
        MapConsonantCluster(i);
        break;
      case GraphemeCluster::Kind::kIndependentVowel:
        if (c.ya_phala_vowel) {
          Add(i, P(BaseId::kEpsilon), RuleId::kYaPhalaInitial, Kind::kVowel);
        } else if (*c.independent_vowel == bn::kVowelA) {
          Add(i, P(BaseId::kOpenO), RuleId::kInherentVowel, Kind::kInherent);
          draft_.slots.back().deletable = false;
        } else {
          AddVowels(i, *c.independent_vowel, RuleId::kBaseMap);
        }
        break;
      case GraphemeCluster::Kind::kDigit:
      case GraphemeCluster::Kind::kSymbol:
        if (c.degenerate && c.vowel_sign) {
          AddVowels(i, *c.vowel_sign, RuleId::kBaseMap);
        } else if (c.degenerate || c.symbol == bn::kZwnj || c.symbol == bn::kZwj) {
          AddSilent(i, RuleId::kSilent);
        } else {
          draft_.warnings.push_back({"UnmappableGrapheme", c.offset,
                                     "no phone for \"" + c.text + "\""});
          AddSilent(i, RuleId::kUnmappable);
        }
        break;
    }
    MapTrailingMarks(i);
    if (draft_.slots.size() == first_slot) AddSilent(i, RuleId::kSilent);
  }

  void MapConsonantCluster(size_t i) {
    const GraphemeCluster& c = draft_.clusters[i];
    const bool initial = (i == 0);
    bool ya_initial = false;
    int host = -1;  // slot of the last consonant phone
    for (size_t k = 0; k < c.bases.size(); ++k) {
      const char32_t b = c.bases[k];
      const char32_t prev = k > 0 ? c.bases[k - 1] : 0;
      const bool after_reph = (k == 1 && prev == bn::kRa);
      if (k > 0 && b == bn::kYa && !after_reph) {
        if (initial) {
          ya_initial = true;
          AddSilent(i, RuleId::kYaPhalaInitial);
        } else {
          if (host >= 0) draft_.slots[host].phone.diacritics.Add(D::kPalatalized);
          AddSilent(i, RuleId::kYaPhalaMedial);
        }
        continue;
      }
      if (k > 0 && b == bn::kBa && prev != bn::kMa && prev != bn::kBa &&
          !after_reph) {
        if (initial || host < 0) {
          AddSilent(i, RuleId::kBaPhalaSilent);
        } else {
          DraftSlot copy = draft_.slots[host];
          copy.phone = Unaspirated(copy.phone);
          copy.rule = RuleId::kBaPhalaGeminate;
          draft_.slots.insert(draft_.slots.begin() + host, std::move(copy));
          ++host;
        }
        continue;
      }
      Phone phone;
      if (!ConsonantPhone(b, &phone)) {
        AddSilent(i, RuleId::kUnmappable);
        continue;
      }
      if (phone.base == BaseId::kJ) {
        Add(i, phone, RuleId::kYaApproximant, Kind::kGlide);
        continue;
      }
      const RuleId rule = (k > 0 && b == prev) ? RuleId::kGeminate : RuleId::kBaseMap;
      Add(i, phone, rule, Kind::kConsonant);
      host = static_cast<int>(draft_.slots.size()) - 1;
    }

    if (c.vowel_sign) {
      if (ya_initial && *c.vowel_sign == bn::kSignAa) {
        Add(i, P(BaseId::kEpsilon), RuleId::kYaPhalaInitial, Kind::kVowel);
      } else {
        AddVowels(i, *c.vowel_sign, RuleId::kBaseMap);
      }
    } else if (!c.has_virama_final && !c.bases.empty() &&
               c.bases.back() != bn::kKhandaTa) {
      if (ya_initial) {
        Add(i, P(BaseId::kEpsilon), RuleId::kYaPhalaInitial, Kind::kVowel);
      } else {
        Add(i, P(BaseId::kOpenO), RuleId::kInherentVowel, Kind::kInherent);
      }
    }
  }

  void MapTrailingMarks(size_t i) {
    const GraphemeCluster& c = draft_.clusters[i];
    for (char32_t m : c.trailing_marks) {
      if (m == bn::kAnusvara) {
        Add(i, P(BaseId::kEng), RuleId::kAnusvara, Kind::kConsonant);
      } else if (i + 1 == draft_.clusters.size()) {
        Add(i, P(BaseId::kH), RuleId::kVisarga, Kind::kConsonant);
      } else {
        AddSilent(i, RuleId::kVisarga);
      }
    }
  }

  // Slot range [first, last) of cluster i.
  std::pair<size_t, size_t> SlotRange(size_t i) const {
    size_t first = draft_.slots.size();
    size_t last = first;
    for (size_t s = 0; s < draft_.slots.size(); ++s) {
      if (draft_.slots[s].cluster != i) continue;
      if (first == draft_.slots.size()) first = s;
      last = s + 1;
    }
    return {first, last};
  }

  bool IsLiveVowel(const DraftSlot& s) const {
    return !s.deleted && (s.kind == Kind::kVowel || s.kind == Kind::kInherent);
  }

  bool HasExplicitVowel(size_t i) const {
    for (const DraftSlot& s : draft_.slots) {
      if (s.cluster == i && s.kind == Kind::kVowel) return true;
    }
    return false;
  }

  // Nucleus of the last vowel phone before slot `s`, skipping deleted slots.
  const DraftSlot* PrevVowel(size_t s) const {
    for (size_t k = s; k-- > 0;) {
      if (IsLiveVowel(draft_.slots[k])) return &draft_.slots[k];
    }
    return nullptr;
  }

  const DraftSlot* NextVowel(size_t s) const {
    for (size_t k = s + 1; k < draft_.slots.size(); ++k) {
      if (IsLiveVowel(draft_.slots[k])) return &draft_.slots[k];
    }
    return nullptr;
  }

  static bool IsGlideCluster(const GraphemeCluster& c) {
    return c.is_consonant() && c.bases.size() == 1 && c.bases[0] == bn::kYya;
  }

  void DetectSuffix() {
    const auto& clusters = draft_.clusters;
    if (clusters.size() < 2) return;
    const size_t last = clusters.size() - 1;
    const GraphemeCluster& sfx = clusters[last];
    if (sfx.kind != GraphemeCluster::Kind::kIndependentVowel || sfx.ya_phala_vowel ||
        sfx.has_chandrabindu || !sfx.trailing_marks.empty() ||
        !IsSuffixVowel(*sfx.independent_vowel)) {
      return;
    }
    const GraphemeCluster& prev = clusters[last - 1];
    const size_t stem_len = last;
    const bool ends_anusvara =
        !prev.trailing_marks.empty() && prev.trailing_marks.back() == bn::kAnusvara;
    if (ends_anusvara) {
      draft_.suffix_cluster = static_cast<int>(last);
      return;
    }
    if (!prev.trailing_marks.empty()) return;
    if (HasExplicitVowel(last - 1)) {
      const DraftSlot* pv = PrevVowel(SlotRange(last).first);
      const BaseId sv = (*sfx.independent_vowel == bn::kVowelO)   ? BaseId::kO
                        : (*sfx.independent_vowel == bn::kVowelI) ? BaseId::kI
                                                                  : BaseId::kE;
      if (pv == nullptr) return;
      if (stem_len >= 3 || !InTable(kRegularDiphthongs, pv->phone.base, sv)) {
        draft_.suffix_cluster = static_cast<int>(last);
      }
      return;
    }
    if (prev.is_consonant() && !prev.vowel_sign && stem_len >= 2 &&
        *sfx.independent_vowel == bn::kVowelO) {
      draft_.suffix_cluster = static_cast<int>(last);
    }
  }

  void ResolveInherentVowels() {
    const auto& clusters = draft_.clusters;
    if (clusters.empty()) return;
    const size_t stem_end = draft_.suffix_cluster >= 0
                                ? static_cast<size_t>(draft_.suffix_cluster) - 1
                                : clusters.size() - 1;
    for (size_t i = clusters.size(); i-- > 0;) {
      const auto [first, last] = SlotRange(i);
      size_t s = last;
      for (size_t k = first; k < last; ++k) {
        if (draft_.slots[k].kind == Kind::kInherent) s = k;
      }
      if (s == last) continue;
      DraftSlot& slot = draft_.slots[s];
      if (letter_names_) {
        slot.rule = RuleId::kLetterName;
        continue;
      }
      ResolveOne(i, s, stem_end);
    }
  }

  void ResolveOne(size_t i, size_t s, size_t stem_end) {
    const GraphemeCluster& c = draft_.clusters[i];
    DraftSlot& slot = draft_.slots[s];
    const bool glide = IsGlideCluster(c);
    const bool simple = c.bases.size() == 1;
    const bool marked = c.has_chandrabindu || !c.trailing_marks.empty();
    const DraftSlot* prev = PrevVowel(SlotRange(i).first);

    if (glide && prev && IsHigh(prev->phone.base)) {
      slot.phone = P(BaseId::kO);
      slot.rule = RuleId::kInherentOAfterHighGlide;
      return;
    }
    if (slot.deletable && c.is_consonant()) {
      if (i == stem_end && !marked) {
        if (!simple) {
          slot.phone = P(BaseId::kO);
          slot.rule = RuleId::kInherentConjunctRetention;
          return;
        }
        if (WordHasOtherVowel(s)) {
          slot.deleted = true;
          slot.rule = RuleId::kInherentFinalDeletion;
          return;
        }
      }
      if (i > 0 && i < stem_end && simple && !glide && !marked &&
          HasExplicitVowel(i - 1) && draft_.clusters[i + 1].is_consonant() &&
          draft_.clusters[i + 1].vowel_sign && HasExplicitVowel(i + 1)) {
        slot.deleted = true;
        slot.rule = RuleId::kInherentMedialDeletion;
        return;
      }
      if (glide && i < stem_end && prev) {
        draft_.warnings.push_back({"Review", c.offset,
                                   "medial য় between vowels; check the glide"});
      }
    }
    const DraftSlot* next = NextVowel(s);
    if (next && IsHigh(next->phone.base)) {
      slot.phone = P(BaseId::kO);
      slot.rule = RuleId::kInherentORaising;
    } else {
      slot.phone = P(BaseId::kOpenO);
      slot.rule = RuleId::kInherentVowel;
    }
  }

  bool WordHasOtherVowel(size_t s) const {
    for (size_t k = 0; k < draft_.slots.size(); ++k) {
      if (k != s && IsLiveVowel(draft_.slots[k])) return true;
    }
    return false;
  }

  void ApplyGlideRules() {
    for (size_t s = 0; s < draft_.slots.size(); ++s) {
      DraftSlot& g = draft_.slots[s];
      if (g.kind != Kind::kGlide || g.deleted) continue;
      const auto [first, last] = SlotRange(g.cluster);
      bool vowel_after = false;
      for (size_t k = s + 1; k < last; ++k) {
        if (IsLiveVowel(draft_.slots[k])) vowel_after = true;
      }
      DraftSlot* prev = nullptr;
      for (size_t k = s; k-- > 0;) {
        if (!draft_.slots[k].deleted) {
          prev = &draft_.slots[k];
          break;
        }
      }
      const bool prev_vowel = prev && IsLiveVowel(*prev);
      if (prev_vowel && vowel_after) {
        const GraphemeCluster& pc = draft_.clusters[prev->cluster];
        const bool owa = pc.kind == GraphemeCluster::Kind::kIndependentVowel &&
                         pc.independent_vowel == bn::kVowelO;
        prev->phone.diacritics.Add(owa ? D::kLabialized : D::kPalatalized);
        g.deleted = true;
        g.rule = owa ? RuleId::kOwaLabial : RuleId::kMiddleYaPalatal;
      } else if (prev_vowel) {
        g.phone = P(BaseId::kE, {D::kNonSyllabic});
        g.kind = Kind::kVowel;
        g.rule = RuleId::kCodaYaDiphthong;
      }
    }
  }

  void ApplyNasalization() {
    for (size_t i = 0; i < draft_.clusters.size(); ++i) {
      const GraphemeCluster& c = draft_.clusters[i];
      if (!c.has_chandrabindu) continue;
      const auto [first, last] = SlotRange(i);
      bool done = false;
      for (size_t k = first; k < last && !done; ++k) {
        DraftSlot& s = draft_.slots[k];
        if (IsLiveVowel(s)) {
          s.phone.diacritics.Add(D::kNasal);
          s.rule = RuleId::kChandrabinduNasal;
          done = true;
        }
      }
      if (!done) {
        draft_.warnings.push_back({"InvariantBreach", c.offset,
                                   "chandrabindu on a cluster without a vowel"});
      }
    }
  }

  void DetectDiphthongs() {
    const int sfx = draft_.suffix_cluster;
    DraftSlot* a = nullptr;
    for (DraftSlot& b : draft_.slots) {
      if (b.deleted) continue;
      if (!a || !IsLiveVowel(*a) || !IsLiveVowel(b) ||
          static_cast<int>(b.cluster) == sfx || Blocked(*a) || Blocked(b)) {
        a = &b;
        continue;
      }
      const BaseId x = a->phone.base;
      const BaseId y = b.phone.base;
      if (a->cluster == b.cluster && InTable(kIrregularDiphthongs, x, y) &&
          x != BaseId::kTurnedA) {
        a->phone.diacritics.Add(D::kNonSyllabic);
      } else if (InTable(kRegularDiphthongs, x, y) && y != BaseId::kTurnedA) {
        b.phone.diacritics.Add(D::kNonSyllabic);
        b.rule = RuleId::kDiphthongGlide;
      }
      a = &b;
    }
  }

  static bool Blocked(const DraftSlot& s) {
    const DiacriticList& d = s.phone.diacritics;
    return d.Has(D::kNonSyllabic) || d.Has(D::kLong) || d.Has(D::kPalatalized) ||
           d.Has(D::kLabialized);
  }

  void MarkSuffixLength() {
    if (draft_.suffix_cluster < 0 || !opts_.mark_morph_length) return;
    for (DraftSlot& s : draft_.slots) {
      if (static_cast<int>(s.cluster) == draft_.suffix_cluster && IsLiveVowel(s)) {
        s.phone.diacritics.Add(D::kLong);
        s.rule = RuleId::kSuffixLength;
        return;
      }
    }
  }

  void ApplyCarefulH() {
    if (!opts_.careful_speech || draft_.clusters.empty()) return;
    const GraphemeCluster& c = draft_.clusters[0];
    if (!c.is_consonant() || c.bases.empty() || c.bases[0] != bn::kHa) return;
    for (DraftSlot& s : draft_.slots) {
      if (s.cluster != 0) break;
      if (!s.deleted && s.phone.base == BaseId::kH) {
        s.rule = RuleId::kCarefulH;
        return;
      }
    }
  }

  const TranscriptionOptions& opts_;
  bool letter_names_;
  WordDraft draft_;
};

std::vector<TraceEntry> BuildTrace(const WordDraft& draft) {
  std::vector<TraceEntry> trace;
  for (const DraftSlot& s : draft.slots) {
    const GraphemeCluster& c = draft.clusters[s.cluster];
    const size_t begin = c.offset;
    const size_t end = c.offset + c.text.size();
    if (!trace.empty() && trace.back().rule == s.rule &&
        trace.back().begin == begin && !s.deleted && !trace.back().phones.empty()) {
      trace.back().phones.push_back(s.phone);
      continue;
    }
    TraceEntry e{s.rule, begin, end, {}};
    if (!s.deleted) e.phones.push_back(s.phone);
    trace.push_back(std::move(e));
  }
  return trace;
}

// Breaks before the last consonant ahead of each non-initial nucleus, or
// directly before a nucleus that follows another vowel.
PhoneSeq InsertSyllableBreaks(const PhoneSeq& word) {
  PhoneSeq out;
  bool seen_nucleus = false;
  size_t pending = 0;  // consonants since the last nucleus or offglide
  for (const Phone& p : word.phones) {
    const bool nucleus = p.is_vowel() && !p.Has(Diacritic::kNonSyllabic);
    if (nucleus && seen_nucleus) {
      const auto at = out.phones.end() - static_cast<long>(pending > 0 ? 1 : 0);
      out.phones.insert(at, Phone(BaseId::kSyllableBreak));
    }
    if (nucleus) seen_nucleus = true;
    pending = p.is_vowel() ? 0 : pending + 1;
    out.phones.push_back(p);
  }
  return out;
}

void ShiftWarnings(std::vector<Diagnostic>* from, size_t offset,
                   std::vector<Diagnostic>* to) {
  for (Diagnostic& d : *from) {
    d.offset += offset;
    to->push_back(std::move(d));
  }
  from->clear();
}

}  // namespace

std::string_view ToString(RuleId rule) {
  switch (rule) {
    case RuleId::kLexicon: return "lexicon";
    case RuleId::kBaseMap: return "base-map";
    case RuleId::kGeminate: return "geminate";
    case RuleId::kYaPhalaInitial: return "ya-phala-initial";
    case RuleId::kYaPhalaMedial: return "ya-phala-medial";
    case RuleId::kBaPhalaSilent: return "ba-phala-silent";
    case RuleId::kBaPhalaGeminate: return "ba-phala-geminate";
    case RuleId::kInherentVowel: return "inherent-vowel";
    case RuleId::kInherentORaising: return "inherent-o-raising";
    case RuleId::kInherentFinalDeletion: return "inherent-final-deletion";
    case RuleId::kInherentConjunctRetention: return "inherent-conjunct-retention";
    case RuleId::kInherentMedialDeletion: return "inherent-medial-deletion";
    case RuleId::kInherentOAfterHighGlide: return "inherent-o-after-high-glide";
    case RuleId::kCodaYaDiphthong: return "coda-ya-diphthong";
    case RuleId::kMiddleYaPalatal: return "middle-ya-palatal";
    case RuleId::kOwaLabial: return "owa-labial";
    case RuleId::kYaApproximant: return "ya-approximant";
    case RuleId::kChandrabinduNasal: return "chandrabindu-nasal";
    case RuleId::kDiphthongGlide: return "diphthong-glide";
    case RuleId::kSuffixLength: return "suffix-length";
    case RuleId::kCarefulH: return "careful-h";
    case RuleId::kAnusvara: return "anusvara";
    case RuleId::kVisarga: return "visarga";
    case RuleId::kLetterName: return "letter-name";
    case RuleId::kNumber: return "number";
    case RuleId::kAbbreviation: return "abbreviation";
    case RuleId::kUnmappable: return "unmappable";
    case RuleId::kSilent: return "silent";
  }
  return "?";
}

std::string_view ToString(ResultSource source) {
  switch (source) {
    case ResultSource::kLexicon: return "lexicon";
    case ResultSource::kRules: return "rules";
    case ResultSource::kMixed: return "mixed";
  }
  return "?";
}

PhoneSeq WordDraft::Phones() const {
  PhoneSeq seq;
  for (const DraftSlot& s : slots) {
    if (!s.deleted) seq.phones.push_back(s.phone);
  }
  return seq;
}

WordDraft BuildWordDraft(std::string_view word, const TranscriptionOptions& opts,
                         bool letter_names) {
  return DraftBuilder(word, opts, letter_names).Run();
}

Transcriber::Transcriber(TranscriptionOptions opts)
    : lexicon_(&DefaultLexicon(), [](const Lexicon*) {}), opts_(opts) {}

Transcriber::Transcriber(Lexicon lexicon, TranscriptionOptions opts)
    : lexicon_(std::make_shared<const Lexicon>(std::move(lexicon))), opts_(opts) {}

TranscriptionResult Transcriber::TranscribeRules(std::string_view word,
                                                 bool letter_names) const {
  TranscriptionResult r;
  r.text.assign(word);
  r.end = word.size();
  r.source = ResultSource::kRules;
  WordDraft draft = BuildWordDraft(word, opts_, letter_names);
  r.ipa = draft.Phones();
  r.trace = BuildTrace(draft);
  r.warnings = std::move(draft.warnings);
  for (const Violation& v : ValidatePhoneSeq(r.ipa)) {
    r.warnings.push_back({"InvariantBreach", 0, v.message});
  }
  if (opts_.emit_syllable_dots) r.ipa = InsertSyllableBreaks(r.ipa);
  return r;
}

TranscriptionResult Transcriber::TranscribeWord(std::string_view word) const {
  const std::string nfc = NormalizeNfc(word);
  if (const LexiconEntry* entry = lexicon_->Lookup(nfc)) {
    TranscriptionResult r;
    r.text = nfc;
    r.end = nfc.size();
    r.ipa = entry->phones;
    r.source = ResultSource::kLexicon;
    r.trace.push_back({RuleId::kLexicon, 0, nfc.size(), entry->phones.phones});
    return r;
  }
  return TranscribeRules(nfc, false);
}

TranscriptionResult Transcriber::TranscribeExpansion(const Token& token,
                                                     const Expansion& expansion,
                                                     RuleId rule) const {
  TranscriptionResult r;
  r.text = token.text;
  r.kind = token.kind;
  r.begin = token.begin;
  r.end = token.end;
  bool any_lexicon = false;
  bool any_rules = false;
  for (const std::string& w : expansion.words) {
    TranscriptionResult part = expansion.letter_names ? TranscribeRules(w, true)
                                                      : TranscribeWord(w);
    (part.source == ResultSource::kLexicon ? any_lexicon : any_rules) = true;
    r.ipa.AppendWord(part.ipa);
    ShiftWarnings(&part.warnings, 0, &r.warnings);
  }
  r.source = any_lexicon && !any_rules ? ResultSource::kLexicon
             : any_rules && !any_lexicon ? ResultSource::kRules
                                         : ResultSource::kMixed;
  if (token.kind == TokenKind::kMixed) r.source = ResultSource::kMixed;
  r.trace.push_back({rule, 0, token.text.size(), r.ipa.phones});
  for (const Diagnostic& d : expansion.warnings) r.warnings.push_back(d);
  if (expansion.ordinal) {
    r.warnings.push_back({"Review", 0, "ordinal reading of \"" + token.text + "\""});
  }
  return r;
}

SentenceResult Transcriber::TranscribeSentence(std::string_view text) const {
  SentenceResult out;
  const std::string nfc = NormalizeNfc(text);
  const std::vector<Token> tokens = Tokenize(nfc);
  std::string prev_word;
  for (const Token& token : tokens) {
    TranscriptionResult r;
    switch (token.kind) {
      case TokenKind::kPunct:
        continue;
      case TokenKind::kNumber:
        r = TranscribeExpansion(
            token,
            VerbalizeNumber(token.text, opts_.number_policy,
                            IsNumberContextWord(prev_word)),
            RuleId::kNumber);
        break;
      case TokenKind::kMixed:
        r = TranscribeExpansion(
            token,
            ExpandMixed(token.text, opts_.number_policy,
                        IsNumberContextWord(prev_word)),
            RuleId::kNumber);
        break;
      case TokenKind::kAbbreviation:
        r = TranscribeExpansion(token, ExpandAbbreviation(token.text, *lexicon_),
                                RuleId::kAbbreviation);
        break;
      case TokenKind::kWord: {
        const LexiconEntry* entry = lexicon_->Lookup(token.text);
        if (entry && entry->tag == LexiconTag::kAbbrev && !entry->expansion.empty()) {
          r = TranscribeExpansion(token, ExpandAbbreviation(token.text, *lexicon_),
                                  RuleId::kAbbreviation);
        } else {
          r = TranscribeWord(token.text);
          r.kind = token.kind;
          r.begin = token.begin;
          r.end = token.end;
        }
        break;
      }
    }
    prev_word = token.kind == TokenKind::kWord ? token.text : std::string();
    for (Diagnostic d : r.warnings) {
      d.offset += token.begin;
      out.warnings.push_back(std::move(d));
    }
    out.ipa.AppendWord(r.ipa);
    out.words.push_back(std::move(r));
  }
  return out;
}

}  // namespace bnipa
