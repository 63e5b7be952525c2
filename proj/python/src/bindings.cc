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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "bnipa/eval.h"
#include "bnipa/g2p.h"
#include "bnipa/lexicon.h"
#include "bnipa/normalize.h"
#include "bnipa/phoneset.h"

namespace py = pybind11;

namespace bnipa {
namespace {

struct PyTrace {
  std::string rule;
  size_t begin;
  size_t end;
  std::string ipa;
};

std::vector<PyTrace> ConvertTrace(const std::vector<TraceEntry>& trace) {
  std::vector<PyTrace> out;
  out.reserve(trace.size());
  for (const TraceEntry& e : trace) {
    PhoneSeq seq;
    seq.phones = e.phones;
    out.push_back({std::string(ToString(e.rule)), e.begin, e.end, RenderIpa(seq)});
  }
  return out;
}

Transcriber MakeTranscriber(const std::vector<std::string>& lexicons,
                            bool default_lexicon, const std::string& numbers,
                            bool careful, bool morph_length, bool syllable_dots) {
  TranscriptionOptions opts;
  if (!ParseNumberMode(numbers, &opts.number_policy.mode)) {
    throw py::value_error("numbers must be 'cardinal', 'digits' or 'auto'");
  }
  opts.careful_speech = careful;
  opts.mark_morph_length = morph_length;
  opts.emit_syllable_dots = syllable_dots;
  Lexicon lexicon = default_lexicon ? DefaultLexicon() : Lexicon("empty");
  for (const std::string& path : lexicons) {
    lexicon = Lexicon::Merge(lexicon, Lexicon::LoadFile(path));
  }
  return Transcriber(std::move(lexicon), opts);
}

py::dict EntryDict(const LexiconEntry& e) {
  py::dict d;
  d["surface"] = e.surface;
  d["ipa"] = e.ipa;
  d["tag"] = std::string(ToString(e.tag));
  d["expansion"] = e.expansion;
  d["priority"] = e.priority;
  return d;
}

py::dict RateDict(const ErrorRate& r) {
  py::dict d;
  d["value"] = r.value();
  d["edits"] = r.edits;
  d["ref_length"] = r.ref_length;
  d["hyp_length"] = r.hyp_length;
  return d;
}

}  // namespace
}  // namespace bnipa

PYBIND11_MODULE(_core, m) {
  using namespace bnipa;
  m.doc() = "Bengali grapheme-to-IPA transcription";

  py::register_exception<IpaParseError>(m, "IpaParseError", PyExc_ValueError);
  py::register_exception<LexiconError>(m, "LexiconError", PyExc_ValueError);
  py::register_exception<CorpusError>(m, "CorpusError", PyExc_ValueError);

  py::class_<Diagnostic>(m, "Diagnostic")
      .def_readonly("code", &Diagnostic::code)
      .def_readonly("offset", &Diagnostic::offset)
      .def_readonly("message", &Diagnostic::message)
      .def("__repr__", &Diagnostic::ToString);

  py::class_<PyTrace>(m, "TraceEntry")
      .def_readonly("rule", &PyTrace::rule)
      .def_readonly("begin", &PyTrace::begin)
      .def_readonly("end", &PyTrace::end)
      .def_readonly("ipa", &PyTrace::ipa)
      .def("__repr__", [](const PyTrace& t) {
        return t.rule + "@" + std::to_string(t.begin) + "-" + std::to_string(t.end) + "=" +
               t.ipa;
      });

  py::class_<TranscriptionResult>(m, "WordResult")
      .def_readonly("text", &TranscriptionResult::text)
      .def_readonly("begin", &TranscriptionResult::begin)
      .def_readonly("end", &TranscriptionResult::end)
      .def_property_readonly("ipa", &TranscriptionResult::Ipa)
      .def_property_readonly("source",
                             [](const TranscriptionResult& r) {
                               return std::string(ToString(r.source));
                             })
      .def_property_readonly(
          "trace", [](const TranscriptionResult& r) { return ConvertTrace(r.trace); })
      .def_readonly("warnings", &TranscriptionResult::warnings);

  py::class_<SentenceResult>(m, "SentenceResult")
      .def_property_readonly("ipa", &SentenceResult::Ipa)
      .def_readonly("words", &SentenceResult::words)
      .def_readonly("warnings", &SentenceResult::warnings);

  py::class_<Transcriber>(m, "Transcriber")
      .def(py::init(&MakeTranscriber), py::arg("lexicons") = std::vector<std::string>{},
           py::arg("default_lexicon") = true, py::arg("numbers") = "auto",
           py::arg("careful") = false, py::arg("morph_length") = true,
           py::arg("syllable_dots") = false)
      .def("transcribe", &Transcriber::TranscribeSentence, py::arg("text"),
           py::call_guard<py::gil_scoped_release>())
      .def("transcribe_word", &Transcriber::TranscribeWord, py::arg("word"));

  m.def(
      "transcribe",
      [](const std::string& text) {
        static const Transcriber engine;
        return engine.TranscribeSentence(text).Ipa();
      },
      py::arg("text"), "IPA for a sentence using the default settings.");

  m.def(
      "normalize_ipa",
      [](const std::string& s, bool strict) {
        return strict ? NormalizeIpaStrict(s) : NormalizeIpa(s);
      },
      py::arg("ipa"), py::arg("strict") = false);

  m.def(
      "validate_ipa",
      [](const std::string& s) {
        std::vector<py::tuple> out;
        for (const Violation& v : ValidatePhoneSeq(ParseIpa(s, ParseMode::kLenient))) {
          out.push_back(py::make_tuple(std::string(ToString(v.code)), v.position, v.message));
        }
        return out;
      },
      py::arg("ipa"), "List of (code, phone index, message); empty when valid.");

  m.def("wer", [](const std::string& r, const std::string& h) {
    return RateDict(WordErrorRate(r, h));
  }, py::arg("ref"), py::arg("hyp"));
  m.def("per", [](const std::string& r, const std::string& h) {
    return RateDict(PhoneErrorRate(r, h));
  }, py::arg("ref"), py::arg("hyp"));
  m.def("cer", [](const std::string& r, const std::string& h) {
    return RateDict(CharErrorRate(r, h));
  }, py::arg("ref"), py::arg("hyp"));

  m.def(
      "number_to_words",
      [](uint64_t value) {
        try {
          return NumberToWordsCardinal(value);
        } catch (const NumberOutOfRange& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("value"));
  m.def(
      "digits_to_words",
      [](const std::string& digits) {
        try {
          return NumberToWordsDigits(digits);
        } catch (const std::invalid_argument& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("digits"));

  py::class_<Lexicon>(m, "Lexicon")
      .def_static(
          "load",
          [](const std::string& path) { return Lexicon::LoadFile(path); },
          py::arg("path"))
      .def_static("default", []() { return DefaultLexicon(); })
      .def("__len__", &Lexicon::size)
      .def("__contains__",
           [](const Lexicon& l, const std::string& s) { return l.Lookup(s) != nullptr; })
      .def(
          "lookup",
          [](const Lexicon& l, const std::string& s) -> std::optional<py::dict> {
            const LexiconEntry* e = l.Lookup(s);
            if (!e) return std::nullopt;
            return EntryDict(*e);
          },
          py::arg("surface"))
      .def_property_readonly("name", &Lexicon::name)
      .def_property_readonly("version", &Lexicon::version);

  m.def(
      "check_lexicon",
      [](const std::string& path) {
        std::vector<Diagnostic> errors;
        const Lexicon lex = Lexicon::LoadFile(path, LoadMode::kLenient, &errors);
        return py::make_tuple(lex.size(), errors);
      },
      py::arg("path"), "Returns (entry count, list of Diagnostic) for a lexicon file.");

  m.def(
      "evaluate",
      [](const std::string& corpus_path, std::optional<std::string> vocab_path,
         size_t jobs) {
        const ParallelCorpus corpus = LoadCorpusFile(corpus_path);
        std::optional<Vocabulary> vocab;
        if (vocab_path) {
          std::ifstream in(*vocab_path, std::ios::binary);
          if (!in) throw py::value_error("cannot open " + *vocab_path);
          vocab = LoadVocabulary(in);
        }
        EvalOptions opts;
        opts.vocabulary = vocab ? &*vocab : nullptr;
        opts.jobs = jobs;
        EvalReport report;
        {
          py::gil_scoped_release release;
          static const Transcriber engine;
          report = EvaluateCorpus(corpus, engine, opts);
        }
        py::dict d;
        d["n_sentences"] = report.n_sentences;
        d["wer"] = RateDict(report.wer);
        d["per"] = RateDict(report.per);
        d["cer"] = RateDict(report.cer);
        d["oov_rate"] = report.has_vocabulary ? py::cast(report.oov_rate()) : py::none();
        d["summary"] = report.Summary();
        return d;
      },
      py::arg("corpus"), py::arg("vocab") = py::none(), py::arg("jobs") = 1);
}
