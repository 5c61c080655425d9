#include "katha/corpus_tools.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace katha {
namespace {

constexpr double kFullScale = 32767.0;

double SecondsFromMs(std::uint64_t ms) { return static_cast<double>(ms) / 1000.0; }

// Magnitude of the clip's DTFT at `hz`, evaluated with a rotating phasor.
double Correlation(std::span<const std::int16_t> samples, double hz,
                   std::uint32_t rate) {
  const double step = -2.0 * std::numbers::pi * hz / rate;
  const std::complex<double> rotor(std::cos(step), std::sin(step));
  std::complex<double> phasor(1.0, 0.0);
  std::complex<double> sum(0.0, 0.0);
  for (std::int16_t s : samples) {
    sum += static_cast<double>(s) * phasor;
    phasor *= rotor;
  }
  return std::abs(sum);
}

// Coarse estimate from the spacing between the first and last sign change.
std::optional<double> ZeroCrossingFrequency(std::span<const std::int16_t> samples,
                                            std::uint32_t rate) {
  int previous_sign = 0;
  std::size_t crossings = 0;
  std::size_t first = 0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const int sign = (samples[i] > 0) - (samples[i] < 0);
    if (sign == 0) continue;
    if (previous_sign != 0 && sign != previous_sign) {
      if (crossings == 0) first = i;
      last = i;
      ++crossings;
    }
    previous_sign = sign;
  }
  if (crossings < 2) return std::nullopt;
  return static_cast<double>(crossings - 1) * rate /
         (2.0 * static_cast<double>(last - first));
}

double RefinePeak(std::span<const std::int16_t> samples, std::uint32_t rate,
                  double center, double half_width, double step) {
  double best_hz = center;
  double best = -1.0;
  for (double hz = std::max(0.0, center - half_width);
       hz <= center + half_width + 1e-9; hz += step) {
    const double c = Correlation(samples, hz, rate);
    if (c > best) {
      best = c;
      best_hz = hz;
    }
  }
  return best_hz;
}

}  // namespace

std::pair<AudioClip, UnitDatabase> GenerateCorpus(
    const PhonemeInventory& inventory, const CorpusPlan& plan) {
  if (plan.unit_ms == 0) throw CorpusError("unit duration must be > 0 ms");
  if (plan.rate == 0) throw CorpusError("sample rate must be > 0");
  const std::vector<std::string> labels = inventory.ValidLabels();
  if (labels.empty()) throw CorpusError("inventory has no valid phonemes");
  const double top = BurstFrequency(labels.size() - 1);
  if (top >= plan.rate / 2.0) {
    throw CorpusError(std::to_string(labels.size()) +
                      " phonemes need a burst at " + std::to_string(top) +
                      " Hz, at or above Nyquist for " +
                      std::to_string(plan.rate) + " Hz");
  }

  const std::uint64_t n = labels.size();
  const std::uint64_t total_ms = n * plan.unit_ms + (n + 1) * plan.guard_ms;
  std::vector<std::int16_t> samples(
      SecondsToSample(SecondsFromMs(total_ms), plan.rate), 0);

  UnitDatabase db(CorpusId{plan.corpus_name, plan.rate});
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t start_ms = plan.guard_ms + i * (plan.unit_ms + plan.guard_ms);
    const TimeSpan span(SecondsFromMs(start_ms),
                        SecondsFromMs(start_ms + plan.unit_ms));
    const SampleRange range = ToSampleRange(span, plan.rate);
    const double omega = 2.0 * std::numbers::pi * BurstFrequency(i) / plan.rate;
    for (std::size_t k = 0; k < range.size(); ++k) {
      samples[range.begin + k] = static_cast<std::int16_t>(std::lround(
          kBurstAmplitude * kFullScale * std::sin(omega * static_cast<double>(k))));
    }
    const std::string& label = labels[i];
    db.Add({label, inventory.entries().at(label).display, span});
  }
  return {AudioClip(std::move(samples), plan.rate), std::move(db)};
}

std::optional<double> EstimateFrequency(const AudioClip& clip) {
  const auto samples = clip.samples();
  const auto coarse = ZeroCrossingFrequency(samples, clip.sample_rate());
  if (!coarse) return std::nullopt;
  const double near = RefinePeak(samples, clip.sample_rate(), *coarse, 12.0, 1.0);
  return RefinePeak(samples, clip.sample_rate(), near, 1.0, 0.05);
}

std::optional<std::string> IdentifyUnit(const AudioClip& clip,
                                        const CorpusPlan& plan,
                                        const PhonemeInventory& inventory) {
  if (clip.sample_rate() != plan.rate) return std::nullopt;
  const auto hz = EstimateFrequency(clip);
  if (!hz) return std::nullopt;
  const double index =
      std::round((*hz - kBaseFrequencyHz) / kFrequencyStepHz);
  if (index < 0.0) return std::nullopt;
  const std::vector<std::string> labels = inventory.ValidLabels();
  const auto i = static_cast<std::size_t>(index);
  if (i >= labels.size()) return std::nullopt;
  if (std::abs(*hz - BurstFrequency(i)) > kIdentifyToleranceHz) {
    return std::nullopt;
  }
  return labels[i];
}

}  // namespace katha
