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

// Exception dictionary: loanwords, abbreviations, acronyms, proper names,
// number words and homograph overrides, stored as UTF-8 TSV:
//
//   surface<TAB>ipa<TAB>tag[<TAB>expansion words[<TAB>priority]]
//
// '#' starts a comment line. "# name: X" and "# version: Y" comment lines
// set the lexicon metadata.

#ifndef BNIPA_LEXICON_H_
#define BNIPA_LEXICON_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bnipa/diagnostic.h"
#include "bnipa/phoneset.h"

namespace bnipa {

enum class LexiconTag : uint8_t { kLoan, kAbbrev, kAcronym, kProper, kNumber, kOverride };

std::string_view ToString(LexiconTag tag);
bool ParseLexiconTag(std::string_view s, LexiconTag* tag);

struct LexiconEntry {
  std::string surface;  // NFC
  std::string ipa;      // as written in the source file
  LexiconTag tag = LexiconTag::kOverride;
  std::vector<std::string> expansion;  // abbrev entries only
  int priority = 0;
  size_t line = 0;  // 1-based source line, 0 if built in code
  PhoneSeq phones;  // strict parse of `ipa`

  // Equality over the serialized fields.
  bool SameAs(const LexiconEntry& other) const;
};

class LexiconError : public std::runtime_error {
 public:
  // `code` is one of ParseError, InvalidIpa, DuplicateSurface.
  LexiconError(std::string code, size_t line, const std::string& message);
  const std::string& code() const { return code_; }
  size_t line() const { return line_; }

 private:
  std::string code_;
  size_t line_;
};

enum class LoadMode : uint8_t {
  kStrict,   // the first bad line throws LexiconError
  kLenient,  // bad lines are skipped and reported through `errors`
};

class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::string name) : name_(std::move(name)) {}

  static Lexicon Load(std::istream& in, LoadMode mode = LoadMode::kStrict,
                      std::vector<Diagnostic>* errors = nullptr,
                      std::string name = "");
  static Lexicon LoadString(std::string_view tsv, LoadMode mode = LoadMode::kStrict,
                            std::vector<Diagnostic>* errors = nullptr,
                            std::string name = "");
  // Throws std::runtime_error if the file cannot be opened.
  static Lexicon LoadFile(const std::string& path, LoadMode mode = LoadMode::kStrict,
                          std::vector<Diagnostic>* errors = nullptr);

  // Validates and inserts. Throws LexiconError on invalid IPA, a malformed
  // expansion, or a surface already present.
  void Insert(LexiconEntry entry);

  // Exact match on the NFC form of `surface`; nullptr on a miss.
  const LexiconEntry* Lookup(std::string_view surface) const;

  // Entries sorted by surface, with metadata comments first.
  void Save(std::ostream& out) const;

  // Higher priority wins; on equal priority the overlay wins.
  static Lexicon Merge(const Lexicon& base, const Lexicon& overlay);

  std::vector<const LexiconEntry*> SortedEntries() const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::string& name() const { return name_; }
  const std::string& version() const { return version_; }
  void set_name(std::string name) { name_ = std::move(name); }
  void set_version(std::string version) { version_ = std::move(version); }

 private:
  std::unordered_map<std::string, LexiconEntry> entries_;
  std::string name_;
  std::string version_;
};

// Built-in data compiled from data/default_lexicon.tsv and
// data/number_words.tsv.
std::string_view DefaultLexiconTsv();
std::string_view NumberWordsTsv();

// Number words overlaid with the default exception entries.
const Lexicon& DefaultLexicon();

}  // namespace bnipa

#endif  // BNIPA_LEXICON_H_
