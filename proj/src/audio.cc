#include "katha/audio.h"

#include <cmath>
#include <cstring>
#include <limits>

namespace katha {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;
constexpr std::size_t kHeaderSize = 44;

std::uint16_t ReadU16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t ReadU32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void PutU16(std::uint16_t v, std::vector<std::uint8_t>* out) {
  out->push_back(static_cast<std::uint8_t>(v & 0xFF));
  out->push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutU32(std::uint32_t v, std::vector<std::uint8_t>* out) {
  for (int shift = 0; shift < 32; shift += 8) {
    out->push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
  }
}

void PutTag(const char* tag, std::vector<std::uint8_t>* out) {
  out->insert(out->end(), tag, tag + 4);
}

bool TagIs(const std::uint8_t* p, const char* tag) {
  return std::memcmp(p, tag, 4) == 0;
}

}  // namespace

AudioClip::AudioClip(std::vector<std::int16_t> samples,
                     std::uint32_t sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate) {
  if (sample_rate_ == 0) {
    throw std::invalid_argument("sample rate must be positive");
  }
}

TimeSpan::TimeSpan(double start_sec, double end_sec)
    : start_(start_sec), end_(end_sec) {
  if (!std::isfinite(start_) || !std::isfinite(end_) || start_ < 0.0) {
    throw std::invalid_argument("time span bounds must be finite and >= 0");
  }
  if (!(start_ < end_)) {
    throw std::invalid_argument("time span start must precede its end");
  }
}

std::size_t SecondsToSample(double seconds, std::uint32_t sample_rate) {
  return static_cast<std::size_t>(std::floor(seconds * sample_rate + 0.5));
}

SampleRange ToSampleRange(const TimeSpan& span, std::uint32_t sample_rate) {
  return {SecondsToSample(span.start_sec(), sample_rate),
          SecondsToSample(span.end_sec(), sample_rate)};
}

AudioClip ReadWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !TagIs(bytes.data(), "RIFF") ||
      !TagIs(bytes.data() + 8, "WAVE")) {
    throw WavError(WavErrorKind::kNotRiffWave, "not a RIFF/WAVE file");
  }
  bool have_fmt = false;
  std::uint32_t rate = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint8_t* chunk = bytes.data() + pos;
    const std::uint32_t chunk_size = ReadU32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = bytes.size() - body;
    if (TagIs(chunk, "fmt ")) {
      if (chunk_size < 16 || available < 16) {
        throw WavError(WavErrorKind::kTruncated, "fmt chunk is truncated");
      }
      const std::uint8_t* fmt = bytes.data() + body;
      std::uint16_t format = ReadU16(fmt);
      if (format == kFormatExtensible && chunk_size >= 40 && available >= 40) {
        format = ReadU16(fmt + 24);  // sub-format GUID starts with the tag
      }
      if (format != kFormatPcm) {
        throw WavError(WavErrorKind::kNotPcm,
                       "unsupported WAV format tag " + std::to_string(format) +
                           " (only PCM)");
      }
      const std::uint16_t channels = ReadU16(fmt + 2);
      if (channels != 1) {
        throw WavError(WavErrorKind::kChannels,
                       "expected 1 channel, found " + std::to_string(channels));
      }
      const std::uint16_t bits = ReadU16(fmt + 14);
      if (bits != 16) {
        throw WavError(WavErrorKind::kBitDepth,
                       "expected 16 bits/sample, found " + std::to_string(bits));
      }
      rate = ReadU32(fmt + 4);
      if (rate == 0) {
        throw WavError(WavErrorKind::kNotPcm, "sample rate is zero");
      }
      have_fmt = true;
    } else if (TagIs(chunk, "data")) {
      if (!have_fmt) {
        throw WavError(WavErrorKind::kMissingChunk,
                       "data chunk precedes fmt chunk");
      }
      if (chunk_size > available || chunk_size % 2 != 0) {
        throw WavError(WavErrorKind::kTruncated, "data chunk is truncated");
      }
      std::vector<std::int16_t> samples(chunk_size / 2);
      const std::uint8_t* data = bytes.data() + body;
      for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i] = static_cast<std::int16_t>(ReadU16(data + 2 * i));
      }
      return AudioClip(std::move(samples), rate);
    }
    // Chunks are word aligned.
    pos = body + chunk_size + (chunk_size & 1u);
  }
  throw WavError(WavErrorKind::kMissingChunk,
                 have_fmt ? "no data chunk" : "no fmt chunk");
}

AudioClip ReadWav(std::string_view bytes) {
  return ReadWav(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> WriteWav(const AudioClip& clip) {
  const std::uint64_t data_size = static_cast<std::uint64_t>(clip.size()) * 2;
  if (data_size + kHeaderSize - 8 > std::numeric_limits<std::uint32_t>::max()) {
    throw WavError(WavErrorKind::kTooLarge,
                   "clip too long for 32-bit RIFF size fields");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderSize + data_size);
  PutTag("RIFF", &out);
  PutU32(static_cast<std::uint32_t>(data_size + kHeaderSize - 8), &out);
  PutTag("WAVE", &out);
  PutTag("fmt ", &out);
  PutU32(16, &out);
  PutU16(kFormatPcm, &out);
  PutU16(1, &out);
  PutU32(clip.sample_rate(), &out);
  PutU32(clip.sample_rate() * 2, &out);  // byte rate
  PutU16(2, &out);                       // block align
  PutU16(16, &out);
  PutTag("data", &out);
  PutU32(static_cast<std::uint32_t>(data_size), &out);
  for (std::int16_t s : clip.samples()) PutU16(static_cast<std::uint16_t>(s), &out);
  return out;
}

AudioClip Slice(const AudioClip& clip, const TimeSpan& span) {
  const SampleRange range = ToSampleRange(span, clip.sample_rate());
  if (range.end > clip.size()) {
    throw AudioError("span " + std::to_string(span.start_sec()) + "-" +
                     std::to_string(span.end_sec()) +
                     "s exceeds clip duration " +
                     std::to_string(clip.duration_seconds()) + "s");
  }
  const auto samples = clip.samples().subspan(range.begin, range.size());
  return AudioClip({samples.begin(), samples.end()}, clip.sample_rate());
}

AudioClip Concat(std::span<const AudioClip> clips) {
  if (clips.empty()) return AudioClip({}, kCanonicalSampleRate);
  const std::uint32_t rate = clips.front().sample_rate();
  std::size_t total = 0;
  for (const AudioClip& c : clips) {
    if (c.sample_rate() != rate) {
      throw AudioError("cannot concatenate clips at " + std::to_string(rate) +
                       " Hz and " + std::to_string(c.sample_rate()) + " Hz");
    }
    total += c.size();
  }
  std::vector<std::int16_t> samples;
  samples.reserve(total);
  for (const AudioClip& c : clips) {
    samples.insert(samples.end(), c.samples().begin(), c.samples().end());
  }
  return AudioClip(std::move(samples), rate);
}

std::size_t SilenceSampleCount(double duration_ms, std::uint32_t sample_rate) {
  if (!(duration_ms >= 0.0)) {
    throw std::invalid_argument("silence duration must be >= 0 ms");
  }
  return static_cast<std::size_t>(
      std::floor(duration_ms * sample_rate / 1000.0 + 0.5));
}

AudioClip Silence(double duration_ms, std::uint32_t sample_rate) {
  return AudioClip(
      std::vector<std::int16_t>(SilenceSampleCount(duration_ms, sample_rate), 0),
      sample_rate);
}

}  // namespace katha
