#include "katha/synthesizer.h"

#include <algorithm>

#include "katha/gurmukhi_text.h"

namespace katha {
namespace {

struct Piece {
  bool is_gap;
  SampleRange range;  // into the corpus; size only for gaps
};

void CheckInputs(const UnitDatabase& db, const AudioClip& corpus,
                 const SynthesisOptions& opts) {
  if (!(opts.gap_ms >= 0.0)) {
    throw SynthesisError(SynthesisErrorKind::kBadOptions,
                         "gap must be a non-negative number of milliseconds");
  }
  if (db.corpus().sample_rate != corpus.sample_rate()) {
    throw SynthesisError(
        SynthesisErrorKind::kDatabaseMismatch,
        "database expects " + std::to_string(db.corpus().sample_rate) +
            " Hz but corpus is " + std::to_string(corpus.sample_rate()) + " Hz");
  }
  for (const auto& [label, entry] : db.entries()) {
    if (ToSampleRange(entry.span, corpus.sample_rate()).end > corpus.size()) {
      throw SynthesisError(SynthesisErrorKind::kDatabaseMismatch,
                           "unit " + label + " lies beyond the end of the corpus");
    }
  }
}

// Resolves text into corpus ranges and gaps, in output order, calling
// emit(piece) for each. Fills every report field except the sample totals.
template <typename Emit>
void Plan(std::u32string_view text, const UnitDatabase& db,
          const AudioClip& corpus, const SynthesisOptions& opts,
          SynthesisReport* report, Emit&& emit) {
  CheckInputs(db, corpus, opts);
  const std::size_t gap = SilenceSampleCount(opts.gap_ms, corpus.sample_rate());
  report->sample_rate = corpus.sample_rate();

  const std::u32string normalized = Normalize(text);
  std::vector<SampleRange> word_units;
  bool any_word_emitted = false;
  std::size_t word_index = 0;
  for (const Token& token : Tokenize(normalized)) {
    if (token.kind != TokenKind::kWord) continue;
    Segmentation seg = SegmentWord(token.text);
    for (SegmentationDiagnostic& d : seg.diagnostics) {
      report->diagnostics.push_back({word_index, std::move(d)});
    }
    word_units.clear();
    for (const Phoneme& p : seg.phonemes) {
      std::string label = Label(p);
      const UnitEntry* entry = db.Find(label);
      if (entry == nullptr) {
        if (opts.on_missing == MissingUnitPolicy::kError) {
          throw SynthesisError(SynthesisErrorKind::kMissingUnit,
                               "word " + std::to_string(word_index) +
                                   ": no unit for phoneme " + label);
        }
        report->skipped_phonemes.push_back({word_index, std::move(label)});
        continue;
      }
      word_units.push_back(ToSampleRange(entry->span, corpus.sample_rate()));
    }
    if (!word_units.empty()) {
      if (any_word_emitted && gap > 0) {
        emit(Piece{true, {0, gap}});
      }
      if (any_word_emitted) ++report->gaps_inserted;
      for (const SampleRange& r : word_units) emit(Piece{false, r});
      report->units_emitted += word_units.size();
      any_word_emitted = true;
    }
    ++word_index;
  }
  report->words_processed = word_index;
}

void Finish(std::size_t samples, SynthesisReport* report) {
  report->output_samples = samples;
  report->output_duration_sec =
      static_cast<double>(samples) / report->sample_rate;
}

}  // namespace

std::pair<AudioClip, SynthesisReport> Synthesize(std::u32string_view text,
                                                 const UnitDatabase& db,
                                                 const AudioClip& corpus,
                                                 const SynthesisOptions& opts) {
  SynthesisReport report;
  std::vector<std::int16_t> out;
  const auto source = corpus.samples();
  Plan(text, db, corpus, opts, &report, [&](const Piece& piece) {
    if (piece.is_gap) {
      out.insert(out.end(), piece.range.size(), 0);
    } else {
      const auto unit = source.subspan(piece.range.begin, piece.range.size());
      out.insert(out.end(), unit.begin(), unit.end());
    }
  });
  Finish(out.size(), &report);
  return {AudioClip(std::move(out), corpus.sample_rate()), std::move(report)};
}

SynthesisReport SynthesizeStreaming(std::u32string_view text,
                                    const UnitDatabase& db,
                                    const AudioClip& corpus,
                                    const SynthesisOptions& opts,
                                    const SampleSink& sink) {
  SynthesisReport report;
  std::vector<std::int16_t> silence;
  std::size_t delivered = 0;
  const auto source = corpus.samples();
  auto push = [&](std::span<const std::int16_t> chunk) {
    report.peak_buffered_samples =
        std::max(report.peak_buffered_samples, chunk.size());
    bool accepted = false;
    try {
      accepted = sink(chunk);
    } catch (const std::exception& e) {
      throw SynthesisError(SynthesisErrorKind::kSinkFailed,
                           std::string("sample sink failed: ") + e.what(),
                           delivered);
    }
    if (!accepted) {
      throw SynthesisError(SynthesisErrorKind::kSinkFailed,
                           "sample sink refused output after " +
                               std::to_string(delivered) + " samples",
                           delivered);
    }
    delivered += chunk.size();
  };
  Plan(text, db, corpus, opts, &report, [&](const Piece& piece) {
    if (piece.is_gap) {
      silence.resize(piece.range.size(), 0);
      push(silence);
    } else {
      push(source.subspan(piece.range.begin, piece.range.size()));
    }
  });
  Finish(delivered, &report);
  return report;
}

}  // namespace katha
