#ifndef KATHA_AUDIO_H_
#define KATHA_AUDIO_H_

// Mono 16-bit PCM clips: WAV I/O, sample-exact slicing and concatenation.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace katha {

inline constexpr std::uint32_t kCanonicalSampleRate = 44100;

class AudioClip {
 public:
  AudioClip() = default;
  // Throws std::invalid_argument if sample_rate is 0.
  AudioClip(std::vector<std::int16_t> samples, std::uint32_t sample_rate);

  std::span<const std::int16_t> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  std::uint32_t sample_rate() const { return sample_rate_; }
  double duration_seconds() const {
    return static_cast<double>(samples_.size()) / sample_rate_;
  }

  friend bool operator==(const AudioClip&, const AudioClip&) = default;

 private:
  std::vector<std::int16_t> samples_;
  std::uint32_t sample_rate_ = kCanonicalSampleRate;
};

class TimeSpan {
 public:
  // Throws std::invalid_argument unless 0 <= start_sec < end_sec (finite).
  TimeSpan(double start_sec, double end_sec);

  double start_sec() const { return start_; }
  double end_sec() const { return end_; }

  friend bool operator==(const TimeSpan&, const TimeSpan&) = default;

 private:
  double start_;
  double end_;
};

// Seconds to sample index, rounding half up.
std::size_t SecondsToSample(double seconds, std::uint32_t sample_rate);

struct SampleRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const SampleRange&, const SampleRange&) = default;
};

// Half-open [round(start*rate), round(end*rate)).
SampleRange ToSampleRange(const TimeSpan& span, std::uint32_t sample_rate);

enum class WavErrorKind : std::uint8_t {
  kNotRiffWave,
  kNotPcm,
  kBitDepth,
  kChannels,
  kTruncated,
  kMissingChunk,
  kTooLarge,
};

class WavError : public std::runtime_error {
 public:
  WavError(WavErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  WavErrorKind kind() const { return kind_; }

 private:
  WavErrorKind kind_;
};

// Accepts RIFF/WAVE, PCM, 16-bit, mono. Unknown chunks are skipped.
AudioClip ReadWav(std::span<const std::uint8_t> bytes);
AudioClip ReadWav(std::string_view bytes);
// Canonical 44-byte header followed by the samples.
std::vector<std::uint8_t> WriteWav(const AudioClip& clip);

class AudioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws AudioError if the span reaches past the end of the clip.
AudioClip Slice(const AudioClip& clip, const TimeSpan& span);
// Throws AudioError on mixed sample rates. concat([]) is an empty clip at
// the canonical rate.
AudioClip Concat(std::span<const AudioClip> clips);
// round(duration_ms * rate / 1000) zero samples.
AudioClip Silence(double duration_ms, std::uint32_t sample_rate);
std::size_t SilenceSampleCount(double duration_ms, std::uint32_t sample_rate);

}  // namespace katha

#endif  // KATHA_AUDIO_H_
