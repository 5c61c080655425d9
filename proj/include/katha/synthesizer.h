#ifndef KATHA_SYNTHESIZER_H_
#define KATHA_SYNTHESIZER_H_

// Text -> tokens -> phonemes -> unit lookup -> corpus slices -> waveform.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "katha/audio.h"
#include "katha/phonemizer.h"
#include "katha/unit_db.h"

namespace katha {

enum class MissingUnitPolicy : std::uint8_t { kSkip, kError };

struct SynthesisOptions {
  // Silence inserted between consecutive words that both produced audio.
  double gap_ms = 0.0;
  MissingUnitPolicy on_missing = MissingUnitPolicy::kSkip;
};

struct SkippedPhoneme {
  std::size_t word_index = 0;
  std::string label;
  friend bool operator==(const SkippedPhoneme&, const SkippedPhoneme&) = default;
};

struct WordDiagnostic {
  std::size_t word_index = 0;
  SegmentationDiagnostic diagnostic;
  friend bool operator==(const WordDiagnostic&, const WordDiagnostic&) = default;
};

struct SynthesisReport {
  std::size_t words_processed = 0;
  std::size_t units_emitted = 0;
  std::size_t gaps_inserted = 0;
  std::vector<SkippedPhoneme> skipped_phonemes;
  std::vector<WordDiagnostic> diagnostics;
  std::size_t output_samples = 0;
  std::uint32_t sample_rate = kCanonicalSampleRate;
  double output_duration_sec = 0.0;
  // Largest chunk handed to a streaming sink at once; 0 in batch mode.
  std::size_t peak_buffered_samples = 0;

  friend bool operator==(const SynthesisReport&, const SynthesisReport&) = default;
};

enum class SynthesisErrorKind : std::uint8_t {
  kMissingUnit,
  kDatabaseMismatch,
  kSinkFailed,
  kBadOptions,
};

class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(SynthesisErrorKind kind, const std::string& what,
                 std::size_t samples_delivered = 0)
      : std::runtime_error(what),
        kind_(kind),
        samples_delivered_(samples_delivered) {}
  SynthesisErrorKind kind() const { return kind_; }
  // Streaming only: samples the sink accepted before the failure.
  std::size_t samples_delivered() const { return samples_delivered_; }

 private:
  SynthesisErrorKind kind_;
  std::size_t samples_delivered_;
};

// Receives consecutive chunks of output; returning false aborts the run.
using SampleSink = std::function<bool(std::span<const std::int16_t>)>;

std::pair<AudioClip, SynthesisReport> Synthesize(std::u32string_view text,
                                                 const UnitDatabase& db,
                                                 const AudioClip& corpus,
                                                 const SynthesisOptions& opts = {});

// Same samples as Synthesize(), delivered one unit or gap at a time straight
// from the corpus, so memory use does not grow with the text.
SynthesisReport SynthesizeStreaming(std::u32string_view text,
                                    const UnitDatabase& db,
                                    const AudioClip& corpus,
                                    const SynthesisOptions& opts,
                                    const SampleSink& sink);

}  // namespace katha

#endif  // KATHA_SYNTHESIZER_H_
