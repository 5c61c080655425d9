#ifndef KATHA_CORPUS_TOOLS_H_
#define KATHA_CORPUS_TOOLS_H_

// Synthetic oracle corpus: every valid phoneme gets a sine burst at its own
// frequency, so any synthesized output can be decoded back into labels.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "katha/audio.h"
#include "katha/phonemizer.h"
#include "katha/unit_db.h"

namespace katha {

struct CorpusPlan {
  std::uint32_t unit_ms = 80;
  std::uint32_t guard_ms = 20;
  std::uint32_t rate = kCanonicalSampleRate;
  // Recorded in the manifest's #corpus line.
  std::string corpus_name = "corpus.wav";
};

inline constexpr double kBaseFrequencyHz = 200.0;
inline constexpr double kFrequencyStepHz = 10.0;
inline constexpr double kBurstAmplitude = 0.5;
inline constexpr double kIdentifyToleranceHz = 2.0;

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Frequency of the index-th valid phoneme in label order.
inline double BurstFrequency(std::size_t index) {
  return kBaseFrequencyHz + kFrequencyStepHz * static_cast<double>(index);
}

// Layout: guard, burst 0, guard, burst 1, ..., burst n-1, guard. Throws
// CorpusError for a bad plan, an inventory with no valid phonemes, or one
// too large to keep every burst below Nyquist.
std::pair<AudioClip, UnitDatabase> GenerateCorpus(
    const PhonemeInventory& inventory, const CorpusPlan& plan = {});

// Recovers the label of a single burst by dominant-frequency estimation.
// Absent when the clip is silent or no burst frequency is within 2 Hz.
std::optional<std::string> IdentifyUnit(const AudioClip& clip,
                                        const CorpusPlan& plan,
                                        const PhonemeInventory& inventory);

// Dominant frequency of a clip in Hz, or absent for silence.
std::optional<double> EstimateFrequency(const AudioClip& clip);

}  // namespace katha

#endif  // KATHA_CORPUS_TOOLS_H_
