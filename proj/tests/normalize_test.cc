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

#include <gtest/gtest.h>

namespace bnipa {
namespace {

using Words = std::vector<std::string>;

TEST(NumberMode, ParseAndPrint) {
  NumberMode m{};
  ASSERT_TRUE(ParseNumberMode("digits", &m));
  EXPECT_EQ(m, NumberMode::kDigitByDigit);
  EXPECT_EQ(ToString(NumberMode::kCardinal), "cardinal");
  EXPECT_FALSE(ParseNumberMode("roman", &m));
}

TEST(NumberReadingPolicy, Resolve) {
  NumberReadingPolicy p;
  EXPECT_EQ(p.Resolve(4, false), NumberMode::kCardinal);
  EXPECT_EQ(p.Resolve(4, true), NumberMode::kDigitByDigit);
  EXPECT_EQ(p.Resolve(7, false), NumberMode::kDigitByDigit);
  p.mode = NumberMode::kCardinal;
  EXPECT_EQ(p.Resolve(11, true), NumberMode::kCardinal);
}

TEST(NumberWordTable, Lookups) {
  const NumberWordTable& t = NumberWordTable::Default();
  EXPECT_EQ(t.Unit(0), "শূন্য");
  EXPECT_EQ(t.Unit(45), "পঁয়তাল্লিশ");
  EXPECT_EQ(t.Hundreds(9), "নয়শো");
  EXPECT_EQ(t.Ordinal(1), "প্রথম");
  EXPECT_EQ(t.Ordinal(5), "পঞ্চম");
  EXPECT_EQ(t.HundredWord(), "শো");
  EXPECT_EQ(t.Crore(), "কোটি");
  EXPECT_THROW(NumberWordTable::FromTsv("এক\tɛk\tnumber\n"), LexiconError);
}

TEST(NumberToWordsCardinal, Examples) {
  EXPECT_EQ(NumberToWordsCardinal(0), Words{"শূন্য"});
  EXPECT_EQ(NumberToWordsCardinal(19), Words{"উনিশ"});
  EXPECT_EQ(NumberToWordsCardinal(100), Words{"একশো"});
  EXPECT_EQ(NumberToWordsCardinal(206), (Words{"দুইশো", "ছয়"}));
  EXPECT_EQ(NumberToWordsCardinal(2050), (Words{"দুই", "হাজার", "পঞ্চাশ"}));
  EXPECT_EQ(NumberToWordsCardinal(100000), (Words{"এক", "লাখ"}));
  EXPECT_EQ(NumberToWordsCardinal(12345678),
            (Words{"এক", "কোটি", "তেইশ", "লাখ", "পঁয়তাল্লিশ", "হাজার", "ছয়শো",
                   "আটাত্তর"}));
  EXPECT_THROW(NumberToWordsCardinal(kCardinalLimit), NumberOutOfRange);
}

TEST(NumberToWordsDigits, Examples) {
  EXPECT_EQ(NumberToWordsDigits("২০৫০"), (Words{"দুই", "শূন্য", "পাঁচ", "শূন্য"}));
  EXPECT_EQ(NumberToWordsDigits("07"), (Words{"শূন্য", "সাত"}));
  EXPECT_THROW(NumberToWordsDigits(""), std::invalid_argument);
  EXPECT_THROW(NumberToWordsDigits("1a"), std::invalid_argument);
}

TEST(VerbalizeNumber, PolicyAndContext) {
  const NumberReadingPolicy policy;
  EXPECT_EQ(VerbalizeNumber("২০৫০", policy).words, (Words{"দুই", "হাজার", "পঞ্চাশ"}));
  EXPECT_EQ(VerbalizeNumber("২০৫০", policy, true).words,
            (Words{"দুই", "শূন্য", "পাঁচ", "শূন্য"}));
  EXPECT_EQ(VerbalizeNumber("01712345678", policy).words.size(), 11u);
}

TEST(VerbalizeNumber, OutOfRangeFallsBackToDigits) {
  NumberReadingPolicy policy;
  policy.mode = NumberMode::kCardinal;
  const Expansion e = VerbalizeNumber("1000000000", policy);
  EXPECT_EQ(e.words.size(), 10u);
  ASSERT_EQ(e.warnings.size(), 1u);
  EXPECT_EQ(e.warnings[0].code, "NumberOutOfRange");
}

TEST(IsNumberContextWord, Words) {
  EXPECT_TRUE(IsNumberContextWord("ফোন"));
  EXPECT_TRUE(IsNumberContextWord("নম্বর"));
  EXPECT_FALSE(IsNumberContextWord("বই"));
}

TEST(ExpandMixed, OrdinalsAndClassifiers) {
  const NumberReadingPolicy policy;
  Expansion e = ExpandMixed("1ম", policy);
  EXPECT_EQ(e.words, Words{"প্রথম"});
  EXPECT_TRUE(e.ordinal);
  EXPECT_EQ(ExpandMixed("২য়", policy).words, Words{"দ্বিতীয়"});
  e = ExpandMixed("19টা", policy);
  EXPECT_EQ(e.words, (Words{"উনিশ", "টা"}));
  EXPECT_FALSE(e.ordinal);
  EXPECT_EQ(ExpandMixed("ক৫", policy).words, (Words{"ক", "পাঁচ"}));
  EXPECT_EQ(ExpandMixed("11ম", policy).words, (Words{"এগারো", "ম"}));
}

TEST(ExpandAbbreviation, KnownAndUnknown) {
  Expansion e = ExpandAbbreviation("মো.", DefaultLexicon());
  EXPECT_EQ(e.words, Words{"মোহাম্মদ"});
  EXPECT_TRUE(e.warnings.empty());
  e = ExpandAbbreviation("কখ.", DefaultLexicon());
  EXPECT_TRUE(e.letter_names);
  EXPECT_EQ(e.words, (Words{"ক", "খ"}));
  ASSERT_EQ(e.warnings.size(), 1u);
  EXPECT_EQ(e.warnings[0].code, "UnknownAbbreviation");
}

}  // namespace
}  // namespace bnipa
