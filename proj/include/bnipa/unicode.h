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

#ifndef BNIPA_UNICODE_H_
#define BNIPA_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace bnipa {

// Decodes the scalar value starting at byte `*pos` and advances `*pos`.
// Malformed bytes decode to U+FFFD and advance by one byte.
char32_t DecodeUtf8(std::string_view s, size_t* pos);

void AppendUtf8(char32_t cp, std::string* out);

std::u32string ToUtf32(std::string_view s);
std::string ToUtf8(std::u32string_view s);

// Canonical composition (NFC). Returns the input unchanged when it is
// already normalized.
std::string NormalizeNfc(std::string_view s);

// Canonical decomposition (NFD).
std::string NormalizeNfd(std::string_view s);

bool IsWhitespace(char32_t cp);

// Collapses whitespace runs to one ASCII space and trims both ends.
std::string CollapseWhitespace(std::string_view s);

}  // namespace bnipa

#endif  // BNIPA_UNICODE_H_
