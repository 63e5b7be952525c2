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

#include "bnipa/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "bnipa/unicode.h"

namespace bnipa {

std::string_view ToString(LexiconTag tag) {
  switch (tag) {
    case LexiconTag::kLoan: return "loan";
    case LexiconTag::kAbbrev: return "abbrev";
    case LexiconTag::kAcronym: return "acronym";
    case LexiconTag::kProper: return "proper";
    case LexiconTag::kNumber: return "number";
    case LexiconTag::kOverride: return "override";
  }
  return "override";
}

bool ParseLexiconTag(std::string_view s, LexiconTag* tag) {
  static constexpr std::pair<std::string_view, LexiconTag> kTags[] = {
      {"loan", LexiconTag::kLoan},       {"abbrev", LexiconTag::kAbbrev},
      {"acronym", LexiconTag::kAcronym}, {"proper", LexiconTag::kProper},
      {"number", LexiconTag::kNumber},   {"override", LexiconTag::kOverride},
  };
  for (const auto& [name, value] : kTags) {
    if (s == name) {
      *tag = value;
      return true;
    }
  }
  return false;
}

bool LexiconEntry::SameAs(const LexiconEntry& other) const {
  return surface == other.surface && ipa == other.ipa && tag == other.tag &&
         expansion == other.expansion && priority == other.priority;
}

LexiconError::LexiconError(std::string code, size_t line, const std::string& message)
    : std::runtime_error(code + " at line " + std::to_string(line) + ": " + message),
      code_(std::move(code)),
      line_(line) {}

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::vector<std::string> SplitWords(std::string_view s) {
  std::vector<std::string> out;
  std::string collapsed = CollapseWhitespace(s);
  size_t start = 0;
  while (start < collapsed.size()) {
    size_t sp = collapsed.find(' ', start);
    if (sp == std::string::npos) sp = collapsed.size();
    out.push_back(NormalizeNfc(std::string_view(collapsed).substr(start, sp - start)));
    start = sp + 1;
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

LexiconEntry ParseLine(std::string_view line, size_t line_no) {
  std::vector<std::string_view> cols = SplitTabs(line);
  if (cols.size() < 3 || cols.size() > 5) {
    throw LexiconError("ParseError", line_no,
                       "expected 3 to 5 tab-separated columns, got " +
                           std::to_string(cols.size()));
  }
  LexiconEntry e;
  e.line = line_no;
  e.surface = NormalizeNfc(Trim(cols[0]));
  e.ipa.assign(Trim(cols[1]));
  if (e.surface.empty()) throw LexiconError("ParseError", line_no, "empty surface");
  if (!ParseLexiconTag(Trim(cols[2]), &e.tag)) {
    throw LexiconError("ParseError", line_no,
                       "unknown tag '" + std::string(Trim(cols[2])) + "'");
  }
  if (cols.size() >= 4) e.expansion = SplitWords(cols[3]);
  if (cols.size() == 5) {
    std::string_view p = Trim(cols[4]);
    auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), e.priority);
    if (ec != std::errc() || ptr != p.data() + p.size()) {
      throw LexiconError("ParseError", line_no, "bad priority '" + std::string(p) + "'");
    }
  }
  return e;
}

void ParseMetadata(std::string_view comment, Lexicon* lex) {
  comment.remove_prefix(1);
  comment = Trim(comment);
  auto take = [&](std::string_view key, auto setter) {
    if (comment.substr(0, key.size()) == key) {
      setter(std::string(Trim(comment.substr(key.size()))));
      return true;
    }
    return false;
  };
  take("name:", [&](std::string v) { lex->set_name(std::move(v)); }) ||
      take("version:", [&](std::string v) { lex->set_version(std::move(v)); });
}

}  // namespace

void Lexicon::Insert(LexiconEntry entry) {
  entry.surface = NormalizeNfc(entry.surface);
  try {
    entry.phones = ParseIpa(entry.ipa, ParseMode::kStrict);
  } catch (const IpaParseError& e) {
    throw LexiconError("InvalidIpa", entry.line, e.what());
  }
  if (entry.phones.empty()) {
    throw LexiconError("InvalidIpa", entry.line, "empty transcription");
  }
  std::vector<Violation> violations = ValidatePhoneSeq(entry.phones);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    throw LexiconError("InvalidIpa", entry.line,
                       std::string(ToString(v.code)) + " at phone " +
                           std::to_string(v.position) + ": " + v.message);
  }
  if (entry.tag == LexiconTag::kAbbrev && entry.expansion.empty()) {
    throw LexiconError("ParseError", entry.line, "abbrev entry without expansion");
  }
  if (entry.tag != LexiconTag::kAbbrev && !entry.expansion.empty()) {
    throw LexiconError("ParseError", entry.line,
                       "expansion is only allowed on abbrev entries");
  }
  if (entries_.count(entry.surface)) {
    throw LexiconError("DuplicateSurface", entry.line,
                       "surface '" + entry.surface + "' already defined");
  }
  std::string key = entry.surface;
  entries_.emplace(std::move(key), std::move(entry));
}

Lexicon Lexicon::Load(std::istream& in, LoadMode mode,
                      std::vector<Diagnostic>* errors, std::string name) {
  Lexicon lex(std::move(name));
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (Trim(view).empty()) continue;
    if (view.front() == '#') {
      ParseMetadata(view, &lex);
      continue;
    }
    try {
      lex.Insert(ParseLine(view, line_no));
    } catch (const LexiconError& e) {
      if (mode == LoadMode::kStrict) throw;
      if (errors) errors->push_back({e.code(), e.line(), e.what()});
    }
  }
  return lex;
}

Lexicon Lexicon::LoadString(std::string_view tsv, LoadMode mode,
                            std::vector<Diagnostic>* errors, std::string name) {
  std::istringstream in{std::string(tsv)};
  return Load(in, mode, errors, std::move(name));
}

Lexicon Lexicon::LoadFile(const std::string& path, LoadMode mode,
                          std::vector<Diagnostic>* errors) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  return Load(in, mode, errors, path);
}

const LexiconEntry* Lexicon::Lookup(std::string_view surface) const {
  auto it = entries_.find(NormalizeNfc(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<const LexiconEntry*> Lexicon::SortedEntries() const {
  std::vector<const LexiconEntry*> out;
  out.reserve(entries_.size());
  for (const auto& [key, entry] : entries_) out.push_back(&entry);
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry* a, const LexiconEntry* b) {
              return a->surface < b->surface;
            });
  return out;
}

void Lexicon::Save(std::ostream& out) const {
  if (!name_.empty()) out << "# name: " << name_ << '\n';
  if (!version_.empty()) out << "# version: " << version_ << '\n';
  for (const LexiconEntry* e : SortedEntries()) {
    out << e->surface << '\t' << e->ipa << '\t' << ToString(e->tag);
    if (!e->expansion.empty() || e->priority != 0) {
      out << '\t';
      for (size_t i = 0; i < e->expansion.size(); ++i) {
        if (i) out << ' ';
        out << e->expansion[i];
      }
    }
    if (e->priority != 0) out << '\t' << e->priority;
    out << '\n';
  }
}

Lexicon Lexicon::Merge(const Lexicon& base, const Lexicon& overlay) {
  Lexicon out = base;
  if (!overlay.name_.empty()) {
    out.name_ = out.name_.empty() ? overlay.name_ : out.name_ + "+" + overlay.name_;
  }
  for (const auto& [key, entry] : overlay.entries_) {
    auto it = out.entries_.find(key);
    if (it == out.entries_.end()) {
      out.entries_.emplace(key, entry);
    } else if (entry.priority >= it->second.priority) {
      it->second = entry;
    }
  }
  return out;
}

const Lexicon& DefaultLexicon() {
  static const Lexicon lex = Lexicon::Merge(
      Lexicon::LoadString(NumberWordsTsv(), LoadMode::kStrict, nullptr, "numbers"),
      Lexicon::LoadString(DefaultLexiconTsv(), LoadMode::kStrict, nullptr, "default"));
  return lex;
}

}  // namespace bnipa
