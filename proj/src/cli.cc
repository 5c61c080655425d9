#include "katha/cli.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "katha/audio.h"
#include "katha/corpus_tools.h"
#include "katha/gurmukhi_text.h"
#include "katha/phonemizer.h"
#include "katha/synthesizer.h"
#include "katha/unit_db.h"
#include "katha/utf8.h"

namespace katha::cli {
namespace {

// Unwinds a command with its exit status; the message goes to stderr.
struct Failure {
  int status;
  std::string message;
};

std::string ReadFile(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Failure{kInputError, path + ": cannot open file"};
  std::string content((std::istreambuf_iterator<char>(file)),
                      std::istreambuf_iterator<char>());
  if (file.bad()) throw Failure{kInputError, path + ": read error"};
  return content;
}

void WriteFile(const std::string& path, std::string_view content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file.write(content.data(), static_cast<std::streamsize>(content.size()));
  file.close();
  if (!file) throw Failure{kInputError, path + ": cannot write file"};
}

void WriteFile(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  WriteFile(path, std::string_view(reinterpret_cast<const char*>(bytes.data()),
                                   bytes.size()));
}

struct TextSource {
  std::string path;
  bool from_stdin = false;

  void Register(CLI::App* cmd) {
    auto* text = cmd->add_option("--text", path, "UTF-8 text file");
    auto* std_in = cmd->add_flag("--stdin", from_stdin, "Read text from stdin");
    text->excludes(std_in);
  }

  std::u32string Read(std::istream& in) const {
    std::string bytes;
    std::string name = path;
    if (from_stdin) {
      bytes.assign(std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>());
      name = "<stdin>";
    } else if (!path.empty()) {
      bytes = ReadFile(path);
    } else {
      throw Failure{kUsageError, "one of --text or --stdin is required"};
    }
    std::u32string text;
    try {
      text = DecodeUtf8(bytes);
    } catch (const Utf8Error& e) {
      throw Failure{kInputError, name + ": malformed UTF-8 at byte " +
                                     std::to_string(e.offset()) + " (" +
                                     e.what() + ")"};
    }
    if (!text.empty() && text.front() == 0xFEFF) text.erase(0, 1);
    return text;
  }
};

UnitDatabase LoadDb(const std::string& path) {
  try {
    return LoadUnitDatabase(ReadFile(path));
  } catch (const UnitDbError& e) {
    throw Failure{kInputError, path + ": " + e.what()};
  }
}

UnitDatabase BuildDb(const std::string& path, CorpusId corpus) {
  try {
    return BuildUnitDatabase(ReadFile(path), std::move(corpus));
  } catch (const UnitDbError& e) {
    throw Failure{kInputError, path + ": " + e.what()};
  }
}

AudioClip LoadWav(const std::string& path) {
  try {
    return ReadWav(ReadFile(path));
  } catch (const WavError& e) {
    throw Failure{kInputError, path + ": " + e.what()};
  }
}

PhonemeInventory LoadInventoryFile(const std::string& path) {
  try {
    return LoadInventory(ReadFile(path));
  } catch (const InventoryError& e) {
    throw Failure{kInputError, path + ": " + e.what()};
  }
}

void PrintFindings(const std::vector<Finding>& findings, std::ostream& os) {
  for (const Finding& f : findings) {
    os << (f.severity() == Severity::kError ? "error" : "info") << '\t'
       << FindingKindName(f.kind) << '\t' << f.label << '\t' << f.other_label
       << '\t' << f.detail << '\n';
  }
}

std::string FormatReport(const SynthesisReport& r) {
  std::ostringstream os;
  char duration[32];
  std::snprintf(duration, sizeof(duration), "%.6f", r.output_duration_sec);
  os << "words_processed\t" << r.words_processed << '\n'
     << "units_emitted\t" << r.units_emitted << '\n'
     << "gaps_inserted\t" << r.gaps_inserted << '\n'
     << "skipped_count\t" << r.skipped_phonemes.size() << '\n'
     << "diagnostic_count\t" << r.diagnostics.size() << '\n'
     << "output_samples\t" << r.output_samples << '\n'
     << "sample_rate\t" << r.sample_rate << '\n'
     << "output_duration_sec\t" << duration << '\n';
  for (const SkippedPhoneme& s : r.skipped_phonemes) {
    os << "skipped\t" << s.word_index << ':' << s.label << '\n';
  }
  for (const WordDiagnostic& d : r.diagnostics) {
    os << "diagnostic\t" << d.word_index << ':' << d.diagnostic.position << ':'
       << DiagnosticKindName(d.diagnostic.kind) << ':' << d.diagnostic.detail
       << '\n';
  }
  return os.str();
}

struct SynthArgs {
  std::string db;
  std::string corpus;
  TextSource text;
  std::string out;
  double gap_ms = 0.0;
  MissingUnitPolicy on_missing = MissingUnitPolicy::kSkip;
  std::string report;
};

int RunSynth(const SynthArgs& a, std::istream& in, std::ostream& err) {
  const std::u32string text = a.text.Read(in);
  const UnitDatabase db = LoadDb(a.db);
  const AudioClip corpus = LoadWav(a.corpus);
  const auto findings = Validate(db, corpus);
  if (HasErrors(findings)) {
    err << a.db << ": database does not match corpus " << a.corpus << '\n';
    PrintFindings(findings, err);
    return kValidationFailure;
  }
  SynthesisOptions opts;
  opts.gap_ms = a.gap_ms;
  opts.on_missing = a.on_missing;
  std::pair<AudioClip, SynthesisReport> result;
  try {
    result = Synthesize(text, db, corpus, opts);
  } catch (const SynthesisError& e) {
    throw Failure{kSynthesisFailure, e.what()};
  } catch (const AudioError& e) {
    throw Failure{kSynthesisFailure, e.what()};
  }
  try {
    WriteFile(a.out, WriteWav(result.first));
  } catch (const WavError& e) {
    throw Failure{kSynthesisFailure, a.out + ": " + e.what()};
  }
  const std::string report = FormatReport(result.second);
  if (a.report.empty()) {
    err << report;
  } else {
    WriteFile(a.report, report);
  }
  return kSuccess;
}

struct PhonemesArgs {
  TextSource text;
  std::string inventory;
};

int RunPhonemes(const PhonemesArgs& a, std::istream& in, std::ostream& out) {
  const std::u32string text = a.text.Read(in);
  std::optional<PhonemeInventory> inventory;
  if (!a.inventory.empty()) inventory = LoadInventoryFile(a.inventory);
  for (const Token& token : Tokenize(Normalize(text))) {
    if (token.kind != TokenKind::kWord) continue;
    out << EncodeUtf8(token.text) << '\t';
    const Segmentation seg = SegmentWord(token.text);
    for (std::size_t i = 0; i < seg.phonemes.size(); ++i) {
      if (i > 0) out << ' ';
      out << Label(seg.phonemes[i]);
      if (inventory && !IsValid(*inventory, seg.phonemes[i])) out << '!';
    }
    out << '\n';
  }
  return kSuccess;
}

struct DbArgs {
  std::string db;
  std::string corpus;
  std::string inventory;
  std::string labels;
  std::string out;
  std::string corpus_name = "corpus.wav";
  std::uint32_t rate = kCanonicalSampleRate;
};

int RunDbValidate(const DbArgs& a, std::ostream& out) {
  const UnitDatabase db = LoadDb(a.db);
  const AudioClip corpus = LoadWav(a.corpus);
  std::optional<PhonemeInventory> inventory;
  if (!a.inventory.empty()) inventory = LoadInventoryFile(a.inventory);
  const auto findings = Validate(db, corpus, inventory ? &*inventory : nullptr);
  PrintFindings(findings, out);
  return HasErrors(findings) ? kValidationFailure : kSuccess;
}

int RunDbBuild(const DbArgs& a) {
  const UnitDatabase db = BuildDb(a.labels, CorpusId{a.corpus_name, a.rate});
  WriteFile(a.out, SaveUnitDatabase(db));
  return kSuccess;
}

struct CorpusArgs {
  std::string inventory;
  CorpusPlan plan;
  std::string out_corpus;
  std::string out_db;
};

int RunCorpusGen(CorpusArgs a) {
  const PhonemeInventory inventory = LoadInventoryFile(a.inventory);
  if (a.plan.corpus_name.empty()) {
    a.plan.corpus_name =
        std::filesystem::path(a.out_corpus).filename().string();
  }
  std::pair<AudioClip, UnitDatabase> generated;
  try {
    generated = GenerateCorpus(inventory, a.plan);
  } catch (const CorpusError& e) {
    throw Failure{kValidationFailure, e.what()};
  }
  WriteFile(a.out_corpus, WriteWav(generated.first));
  WriteFile(a.out_db, SaveUnitDatabase(generated.second));
  return kSuccess;
}

struct InventoryArgs {
  std::string inventory;
  std::string exclude;
  std::string out;
};

int RunInventoryStats(const InventoryArgs& a, std::ostream& out) {
  const PhonemeInventory inventory = LoadInventoryFile(a.inventory);
  out << "class\ttotal\tinvalid\tvalid\n";
  for (std::size_t i = 0; i < kPhonemeClassCount; ++i) {
    const auto cls = static_cast<PhonemeClass>(i);
    const ClassCount& c = inventory.count(cls);
    out << PhonemeClassName(cls) << '\t' << c.total << '\t' << c.invalid()
        << '\t' << c.valid << '\n';
  }
  const ClassCount total = inventory.total();
  out << "total\t" << total.total << '\t' << total.invalid() << '\t'
      << total.valid << '\n';
  return kSuccess;
}

int RunInventoryGenerate(const InventoryArgs& a) {
  std::set<std::string> invalid;
  if (!a.exclude.empty()) {
    try {
      invalid = ParseLabelList(ReadFile(a.exclude));
    } catch (const InventoryError& e) {
      throw Failure{kInputError, a.exclude + ": " + e.what()};
    }
  }
  WriteFile(a.out, SaveInventory(GenerateInventory(invalid)));
  return kSuccess;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Concatenative Punjabi (Gurmukhi) text-to-speech toolkit",
               "katha"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize text into a WAV file");
  synth_cmd->add_option("--db", synth.db, "Unit database manifest")->required();
  synth_cmd->add_option("--corpus", synth.corpus, "Corpus WAV")->required();
  synth.text.Register(synth_cmd);
  synth_cmd->add_option("--out", synth.out, "Output WAV")->required();
  synth_cmd->add_option("--gap-ms", synth.gap_ms, "Silence between words")
      ->check(CLI::NonNegativeNumber);
  synth_cmd
      ->add_option("--on-missing", synth.on_missing,
                   "Policy for phonemes absent from the database")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, MissingUnitPolicy>{
              {"skip", MissingUnitPolicy::kSkip},
              {"error", MissingUnitPolicy::kError}},
          CLI::ignore_case))
      ->option_text("skip|error");
  synth_cmd->add_option("--report", synth.report,
                        "Write the key<TAB>value report here instead of stderr");

  PhonemesArgs phonemes;
  auto* phonemes_cmd =
      app.add_subcommand("phonemes", "List the phoneme labels of each word");
  phonemes.text.Register(phonemes_cmd);
  phonemes_cmd->add_option("--inventory", phonemes.inventory,
                           "Mark units invalid in this inventory with '!'");

  DbArgs db;
  auto* db_cmd = app.add_subcommand("db", "Unit database tools");
  db_cmd->require_subcommand(1);
  auto* validate_cmd =
      db_cmd->add_subcommand("validate", "Check a manifest against its corpus");
  validate_cmd->add_option("--db", db.db, "Unit database manifest")->required();
  validate_cmd->add_option("--corpus", db.corpus, "Corpus WAV")->required();
  validate_cmd->add_option("--inventory", db.inventory,
                           "Report labels missing from this inventory");
  auto* build_cmd =
      db_cmd->add_subcommand("build", "Build a manifest from a label file");
  build_cmd->add_option("--labels", db.labels, "Label file")->required();
  build_cmd->add_option("--out", db.out, "Output manifest")->required();
  build_cmd->add_option("--corpus-name", db.corpus_name,
                        "Corpus file name recorded in the manifest");
  build_cmd->add_option("--rate", db.rate, "Corpus sample rate")
      ->check(CLI::PositiveNumber);

  CorpusArgs corpus;
  corpus.plan.corpus_name.clear();
  auto* corpus_cmd = app.add_subcommand(
      "corpus-gen", "Generate the synthetic sine-burst corpus and manifest");
  corpus_cmd->add_option("--inventory", corpus.inventory, "Inventory file")
      ->required();
  corpus_cmd->add_option("--unit-ms", corpus.plan.unit_ms, "Burst duration")
      ->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--guard-ms", corpus.plan.guard_ms,
                         "Silence around each burst");
  corpus_cmd->add_option("--rate", corpus.plan.rate, "Sample rate")
      ->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--out-corpus", corpus.out_corpus, "Output WAV")
      ->required();
  corpus_cmd->add_option("--out-db", corpus.out_db, "Output manifest")
      ->required();

  InventoryArgs inventory;
  auto* inventory_cmd = app.add_subcommand("inventory", "Phoneme inventory tools");
  inventory_cmd->require_subcommand(1);
  auto* stats_cmd =
      inventory_cmd->add_subcommand("stats", "Per-class valid/invalid counts");
  stats_cmd->add_option("--inventory", inventory.inventory, "Inventory file")
      ->required();
  auto* generate_cmd = inventory_cmd->add_subcommand(
      "generate", "Write the full 780-phoneme inventory");
  generate_cmd->add_option("--exclude", inventory.exclude,
                           "Labels to flag invalid, one per line");
  generate_cmd->add_option("--out", inventory.out, "Output inventory file")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsageError;
  }

  try {
    if (synth_cmd->parsed()) return RunSynth(synth, in, err);
    if (phonemes_cmd->parsed()) return RunPhonemes(phonemes, in, out);
    if (validate_cmd->parsed()) return RunDbValidate(db, out);
    if (build_cmd->parsed()) return RunDbBuild(db);
    if (corpus_cmd->parsed()) return RunCorpusGen(corpus);
    if (stats_cmd->parsed()) return RunInventoryStats(inventory, out);
    if (generate_cmd->parsed()) return RunInventoryGenerate(inventory);
  } catch (const Failure& f) {
    err << "katha: " << f.message << '\n';
    if (f.status == kUsageError) err << app.help();
    return f.status;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace katha::cli
