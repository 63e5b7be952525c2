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
#include "bnipa/cli.h"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bnipa/eval.h"
#include "bnipa/g2p.h"
#include "bnipa/lexicon.h"
#include "bnipa/phoneset.h"
#include "bnipa/unicode.h"

namespace bnipa {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineFlags {
  std::vector<std::string> lexicons;
  bool no_default_lexicon = false;
  std::string numbers = "auto";
  bool careful = false;
  bool no_morph_length = false;
  bool syllable_dots = false;
};

void AddEngineFlags(CLI::App* cmd, EngineFlags* f) {
  cmd->add_option("--lexicon", f->lexicons,
                  "Lexicon TSV overlay; repeatable, applied left to right");
  cmd->add_flag("--no-default-lexicon", f->no_default_lexicon,
                "Do not load the built-in lexicon");
  cmd->add_option("--numbers", f->numbers, "Number reading: cardinal|digits|auto")
      ->check(CLI::IsMember({"cardinal", "digits", "auto"}));
  cmd->add_flag("--careful", f->careful, "Careful-speech register");
  cmd->add_flag("--no-morph-length", f->no_morph_length,
                "Do not mark suffix vowels long");
  cmd->add_flag("--syllable-dots", f->syllable_dots, "Insert syllable breaks");
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Lexicon BaseLexicon() {
  const char* dir = std::getenv("BNIPA_LEXICON_DIR");
  if (dir == nullptr || *dir == '\0') return DefaultLexicon();
  const std::string root(dir);
  Lexicon numbers = Lexicon::LoadString(ReadFileOrThrow(root + "/number_words.tsv"),
                                        LoadMode::kStrict, nullptr, "numbers");
  Lexicon exceptions = Lexicon::LoadString(
      ReadFileOrThrow(root + "/default_lexicon.tsv"), LoadMode::kStrict, nullptr,
      "default");
  return Lexicon::Merge(numbers, exceptions);
}

Transcriber MakeEngine(const EngineFlags& f) {
  Lexicon lexicon = f.no_default_lexicon ? Lexicon("empty") : BaseLexicon();
  for (const std::string& path : f.lexicons) {
    std::ifstream probe(path);
    if (!probe) throw IoError("cannot open " + path);
    lexicon = Lexicon::Merge(lexicon, Lexicon::LoadFile(path));
  }
  TranscriptionOptions opts;
  ParseNumberMode(f.numbers, &opts.number_policy.mode);
  opts.careful_speech = f.careful;
  opts.mark_morph_length = !f.no_morph_length;
  opts.emit_syllable_dots = f.syllable_dots;
  return Transcriber(std::move(lexicon), opts);
}

// Input and output stream selection: "-" or empty means the given default.
class Streams {
 public:
  Streams(const std::string& in_path, const std::string& out_path,
          std::istream& in, std::ostream& out)
      : in_(&in), out_(&out) {
    if (!in_path.empty() && in_path != "-") {
      file_in_ = std::make_unique<std::ifstream>(in_path, std::ios::binary);
      if (!*file_in_) throw IoError("cannot open " + in_path);
      in_ = file_in_.get();
    }
    if (!out_path.empty() && out_path != "-") {
      file_out_ = std::make_unique<std::ofstream>(out_path, std::ios::binary);
      if (!*file_out_) throw IoError("cannot write " + out_path);
      out_ = file_out_.get();
    }
  }
  std::istream& in() { return *in_; }
  std::ostream& out() { return *out_; }

 private:
  std::istream* in_;
  std::ostream* out_;
  std::unique_ptr<std::ifstream> file_in_;
  std::unique_ptr<std::ofstream> file_out_;
};

bool ReadLine(std::istream& in, std::string* line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

std::string RenderTrace(const SentenceResult& r) {
  std::string annex;
  for (const TranscriptionResult& w : r.words) {
    if (!annex.empty()) annex += " | ";
    annex += w.text;
    annex += ':';
    for (const TraceEntry& e : w.trace) {
      annex += ' ';
      annex += ToString(e.rule);
      annex += '@' + std::to_string(e.begin) + '-' + std::to_string(e.end) + '=';
      annex += RenderIpa(PhoneSeq{e.phones});
    }
  }
  return annex;
}

struct LineOutput {
  std::string text;
  std::vector<Diagnostic> warnings;
};

LineOutput TranscribeLine(const Transcriber& engine, const std::string& line,
                          bool trace) {
  const SentenceResult r = engine.TranscribeSentence(line);
  LineOutput out{r.Ipa(), r.warnings};
  if (trace) out.text += '\t' + RenderTrace(r);
  return out;
}

int RunTranscribe(const Transcriber& engine, bool trace, bool strict, size_t jobs,
                  std::istream& in, std::ostream& out, std::ostream& err) {
  constexpr size_t kChunk = 4096;
  jobs = std::max<size_t>(1, jobs);
  size_t line_no = 0;
  size_t warnings = 0;
  std::vector<std::string> lines;
  std::vector<LineOutput> results;
  std::string line;
  bool more = true;
  while (more) {
    lines.clear();
    while (lines.size() < (jobs == 1 ? 1 : kChunk) && (more = ReadLine(in, &line))) {
      lines.push_back(line);
    }
    results.assign(lines.size(), {});
    if (jobs == 1 || lines.size() < 2) {
      for (size_t i = 0; i < lines.size(); ++i) {
        results[i] = TranscribeLine(engine, lines[i], trace);
      }
    } else {
      std::vector<std::thread> pool;
      const size_t workers = std::min(jobs, lines.size());
      for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (size_t i = w; i < lines.size(); i += workers) {
            results[i] = TranscribeLine(engine, lines[i], trace);
          }
        });
      }
      for (std::thread& t : pool) t.join();
    }
    for (const LineOutput& r : results) {
      ++line_no;
      out << r.text << '\n';
      for (const Diagnostic& d : r.warnings) {
        err << "line " << line_no << ": " << d.ToString() << '\n';
        ++warnings;
      }
    }
  }
  out.flush();
  if (!out) throw IoError("write failed");
  return strict && warnings > 0 ? kExitFailure : kExitOk;
}

int RunIpaNormalize(bool strict, std::istream& in, std::ostream& out,
                    std::ostream& err) {
  std::string line;
  size_t line_no = 0;
  int code = kExitOk;
  while (ReadLine(in, &line)) {
    ++line_no;
    if (strict) {
      try {
        out << NormalizeIpaStrict(line) << '\n';
      } catch (const IpaParseError& e) {
        err << "line " << line_no << ": " << e.what() << '\n';
        out << '\n';
        code = kExitFailure;
      }
      continue;
    }
    std::vector<ParseWarning> warnings;
    out << NormalizeIpa(line, &warnings) << '\n';
    for (const ParseWarning& w : warnings) {
      err << "line " << line_no << ": unknown symbol \"" << w.symbol << "\" at byte "
          << w.byte_offset << '\n';
    }
  }
  return code;
}

int RunIpaValidate(bool strict, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  std::string line;
  size_t line_no = 0;
  bool any = false;
  while (ReadLine(in, &line)) {
    ++line_no;
    const PhoneSeq seq = ParseIpa(line, ParseMode::kLenient);
    const std::vector<Violation> violations = ValidatePhoneSeq(seq);
    if (violations.empty()) {
      out << "ok\n";
      continue;
    }
    any = true;
    std::string codes;
    for (const Violation& v : violations) {
      if (!codes.empty()) codes += ' ';
      codes += std::string(ToString(v.code)) + '@' + std::to_string(v.position);
      err << "line " << line_no << ": " << ToString(v.code) << ": " << v.message << '\n';
    }
    out << codes << '\n';
  }
  return strict && any ? kExitFailure : kExitOk;
}

int RunLexiconCheck(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream probe(path);
  if (!probe) throw IoError("cannot open " + path);
  std::vector<Diagnostic> errors;
  const Lexicon lex = Lexicon::LoadFile(path, LoadMode::kLenient, &errors);
  for (const Diagnostic& d : errors) {
    err << path << ":" << d.offset << ": " << d.code << ": " << d.message << '\n';
  }
  out << path << "\t" << lex.size() << " entries\t" << errors.size() << " errors\n";
  return errors.empty() ? kExitOk : kExitFailure;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Bengali text to IPA transcription tools", "bnipa"};
  app.require_subcommand(1);

  EngineFlags engine_flags;
  std::string input;
  std::string output;
  bool trace = false;
  bool strict = false;
  size_t jobs = 1;

  CLI::App* transcribe = app.add_subcommand("transcribe", "One IPA line per input line");
  AddEngineFlags(transcribe, &engine_flags);
  transcribe->add_flag("--trace", trace, "Append the rule trace as a second column");
  transcribe->add_flag("--strict", strict, "Exit 1 if any warning was reported");
  transcribe->add_option("-i,--input", input, "Input file (default: standard input)");
  transcribe->add_option("-o,--output", output, "Output file (default: standard output)");
  transcribe->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  std::string corpus_path;
  std::string vocab_path;
  std::string report_path;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Score a parallel corpus");
  AddEngineFlags(evaluate, &engine_flags);
  evaluate->add_option("--corpus", corpus_path, "Corpus TSV: id, text, ipa")->required();
  evaluate->add_option("--vocab", vocab_path, "Reference vocabulary for OOV rate");
  evaluate->add_option("--report", report_path, "Report output file");
  evaluate->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  CLI::App* ipa = app.add_subcommand("ipa", "IPA stream filters");
  ipa->require_subcommand(1);
  CLI::App* normalize = ipa->add_subcommand("normalize", "Canonical IPA per line");
  CLI::App* validate = ipa->add_subcommand("validate", "Diacritic placement check");
  for (CLI::App* cmd : {normalize, validate}) {
    cmd->add_flag("--strict", strict, "Strict symbol set / exit 1 on violations");
    cmd->add_option("-i,--input", input, "Input file (default: standard input)");
    cmd->add_option("-o,--output", output, "Output file (default: standard output)");
  }

  std::string lexicon_path;
  CLI::App* lexicon = app.add_subcommand("lexicon", "Lexicon tools");
  lexicon->require_subcommand(1);
  CLI::App* check = lexicon->add_subcommand("check", "Validate a lexicon file");
  check->add_option("file", lexicon_path, "Lexicon TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "bnipa: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*transcribe) {
      const Transcriber engine = MakeEngine(engine_flags);
      Streams io(input, output, in, out);
      return RunTranscribe(engine, trace, strict, jobs, io.in(), io.out(), err);
    }
    if (*evaluate) {
      const Transcriber engine = MakeEngine(engine_flags);
      const ParallelCorpus corpus = LoadCorpusFile(corpus_path);
      std::optional<Vocabulary> vocab;
      if (!vocab_path.empty()) {
        std::ifstream vin(vocab_path, std::ios::binary);
        if (!vin) throw IoError("cannot open " + vocab_path);
        vocab = LoadVocabulary(vin);
      }
      EvalOptions opts;
      opts.vocabulary = vocab ? &*vocab : nullptr;
      opts.jobs = jobs;
      const EvalReport report = EvaluateCorpus(corpus, engine, opts);
      if (!report_path.empty()) {
        std::ofstream rout(report_path, std::ios::binary);
        if (!rout) throw IoError("cannot write " + report_path);
        report.Write(rout);
        if (!rout) throw IoError("write failed: " + report_path);
      }
      for (const EvalWarning& w : report.warnings) {
        err << (w.id.empty() ? "" : w.id + ": ") << w.code << ": " << w.message << '\n';
      }
      out << report.Summary() << '\n';
      return kExitOk;
    }
    if (*normalize || *validate) {
      Streams io(input, output, in, out);
      return *normalize ? RunIpaNormalize(strict, io.in(), io.out(), err)
                        : RunIpaValidate(strict, io.in(), io.out(), err);
    }
    if (*check) return RunLexiconCheck(lexicon_path, out, err);
  } catch (const IoError& e) {
    err << "bnipa: " << e.what() << '\n';
    return kExitIo;
  } catch (const LexiconError& e) {
    err << "bnipa: " << e.what() << '\n';
    return kExitFailure;
  } catch (const CorpusError& e) {
    err << "bnipa: " << corpus_path << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "bnipa: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace bnipa
