# Copyright (c) 2026 The bnipa Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Bengali grapheme-to-IPA transcription."""

from bnipa._core import (
    CorpusError,
    Diagnostic,
    IpaParseError,
    Lexicon,
    LexiconError,
    SentenceResult,
    TraceEntry,
    Transcriber,
    WordResult,
    cer,
    check_lexicon,
    digits_to_words,
    evaluate,
    normalize_ipa,
    number_to_words,
    per,
    transcribe,
    validate_ipa,
    wer,
)

__all__ = [
    "CorpusError",
    "Diagnostic",
    "IpaParseError",
    "Lexicon",
    "LexiconError",
    "SentenceResult",
    "TraceEntry",
    "Transcriber",
    "WordResult",
    "cer",
    "check_lexicon",
    "digits_to_words",
    "evaluate",
    "normalize_ipa",
    "number_to_words",
    "per",
    "transcribe",
    "validate_ipa",
    "wer",
]

__version__ = "0.1.0"
