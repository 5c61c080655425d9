#ifndef KATHA_PHONEMIZER_H_
#define KATHA_PHONEMIZER_H_

// V/CV phoneme units: segmentation of Gurmukhi words, canonical labels and
// the valid-phoneme inventory.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "katha/gurmukhi_text.h"

namespace katha {

struct Phoneme {
  // Absent for a V unit.
  std::optional<char32_t> consonant;
  Vowel vowel = Vowel::kA;
  bool nasal = false;

  bool is_vowel_unit() const { return !consonant.has_value(); }

  static Phoneme V(Vowel v, bool nasal = false) { return {std::nullopt, v, nasal}; }
  static Phoneme CV(char32_t c, Vowel v, bool nasal = false) { return {c, v, nasal}; }

  friend bool operator==(const Phoneme&, const Phoneme&) = default;
};

// "C0A26-V0A08-O" for CV units, "C----V0A06-N" for V units.
std::string Label(const Phoneme& phoneme);
// Strict inverse of Label(); nullopt for anything Label() cannot produce.
std::optional<Phoneme> ParseLabel(std::string_view label);
// Gurmukhi rendering of the unit, e.g. "ਦੀ" or "ਮੰ".
std::string Display(const Phoneme& phoneme);

enum class PhonemeClass : std::uint8_t { kV, kVNasal, kCV, kCVNasal };
inline constexpr std::size_t kPhonemeClassCount = 4;
PhonemeClass ClassOf(const Phoneme& phoneme);
std::string_view PhonemeClassName(PhonemeClass c);

// Every V and CV combination: 10 + 10 + 380 + 380 = 780 phonemes.
std::vector<Phoneme> PhonemeUniverse();
inline constexpr std::size_t kUniverseSize =
    2 * kVowelCount + 2 * kConsonantCount * kVowelCount;

enum class DiagnosticKind : std::uint8_t {
  kUnclassifiedChar,
  kDanglingMatra,
  kDanglingNasal,
  kViramaPolicy,
  kAdhakIgnored,
};

std::string_view DiagnosticKindName(DiagnosticKind kind);

struct SegmentationDiagnostic {
  // Scalar offset within the word.
  std::size_t position = 0;
  DiagnosticKind kind = DiagnosticKind::kUnclassifiedChar;
  std::string detail;

  friend bool operator==(const SegmentationDiagnostic&,
                         const SegmentationDiagnostic&) = default;
};

struct Segmentation {
  std::vector<Phoneme> phonemes;
  std::vector<SegmentationDiagnostic> diagnostics;
};

// Left-to-right V/CV scan of one normalized word. Never fails; irregular
// scalars are skipped and reported as diagnostics.
Segmentation SegmentWord(std::u32string_view word);

class InventoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InventoryEntry {
  std::string display;
  bool valid = true;

  friend bool operator==(const InventoryEntry&, const InventoryEntry&) = default;
};

struct ClassCount {
  std::size_t total = 0;
  std::size_t valid = 0;
  std::size_t invalid() const { return total - valid; }
};

// Immutable set of phonemes keyed by canonical label, each flagged valid or
// invalid. May hold any subset of the 780-phoneme universe.
class PhonemeInventory {
 public:
  PhonemeInventory() = default;
  // Throws InventoryError for non-canonical labels.
  explicit PhonemeInventory(std::map<std::string, InventoryEntry> entries);

  const std::map<std::string, InventoryEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const ClassCount& count(PhonemeClass c) const {
    return counts_[static_cast<std::size_t>(c)];
  }
  ClassCount total() const;

  // Labels of valid entries in label order.
  std::vector<std::string> ValidLabels() const;

  friend bool operator==(const PhonemeInventory& a, const PhonemeInventory& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<std::string, InventoryEntry> entries_;
  std::array<ClassCount, kPhonemeClassCount> counts_{};
};

// Full universe with the given labels flagged invalid. Throws InventoryError
// if a label is unparseable.
PhonemeInventory GenerateInventory(const std::set<std::string>& invalid_labels);

bool IsValid(const PhonemeInventory& inventory, const Phoneme& phoneme);

// Inventory file: "#katha-inventory v1" header, then
// label<TAB>display<TAB>valid rows; '#' lines are comments.
PhonemeInventory LoadInventory(std::string_view content);
std::string SaveInventory(const PhonemeInventory& inventory);

// One canonical label per line; blank and '#' lines ignored.
std::set<std::string> ParseLabelList(std::string_view content);

}  // namespace katha

#endif  // KATHA_PHONEMIZER_H_
