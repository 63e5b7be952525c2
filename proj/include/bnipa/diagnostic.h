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

#ifndef BNIPA_DIAGNOSTIC_H_
#define BNIPA_DIAGNOSTIC_H_

#include <cstddef>
#include <string>

namespace bnipa {

// A non-fatal finding. `code` is a stable identifier such as
// "MalformedSequence" or "UnmappableGrapheme"; `offset` is a byte offset
// into whatever input the producer was given.
struct Diagnostic {
  std::string code;
  size_t offset = 0;
  std::string message;

  std::string ToString() const;
};

}  // namespace bnipa

#endif  // BNIPA_DIAGNOSTIC_H_
