#ifndef KATHA_UNIT_DB_H_
#define KATHA_UNIT_DB_H_

// Phoneme label -> time span database over a single corpus recording.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "katha/audio.h"
#include "katha/phonemizer.h"

namespace katha {

struct UnitEntry {
  std::string label;
  std::string display;
  TimeSpan span;

  friend bool operator==(const UnitEntry&, const UnitEntry&) = default;
};

struct CorpusId {
  std::string file_name = "corpus.wav";
  std::uint32_t sample_rate = kCanonicalSampleRate;

  friend bool operator==(const CorpusId&, const CorpusId&) = default;
};

enum class UnitDbErrorKind : std::uint8_t {
  kBadHeader,
  kMalformedRow,
  kBadLabel,
  kDuplicateLabel,
  kBadSeconds,
  kBadOrder,
};

class UnitDbError : public std::runtime_error {
 public:
  UnitDbError(UnitDbErrorKind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}
  UnitDbErrorKind kind() const { return kind_; }
  // 1-based line of the offending row.
  std::size_t line() const { return line_; }

 private:
  UnitDbErrorKind kind_;
  std::size_t line_;
};

class UnitDatabase {
 public:
  using EntryMap = std::map<std::string, UnitEntry, std::less<>>;

  UnitDatabase() = default;
  explicit UnitDatabase(CorpusId corpus) : corpus_(std::move(corpus)) {}

  // Throws UnitDbError (kBadLabel / kDuplicateLabel) on a bad entry.
  void Add(UnitEntry entry);

  const CorpusId& corpus() const { return corpus_; }
  const EntryMap& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const UnitEntry* Find(std::string_view label) const;

  friend bool operator==(const UnitDatabase&, const UnitDatabase&) = default;

 private:
  CorpusId corpus_;
  EntryMap entries_;
};

// Manifest: "#katha-unitdb v1", "#corpus <file> <rate>", then
// label<TAB>display<TAB>start_sec<TAB>end_sec rows.
UnitDatabase LoadUnitDatabase(std::string_view manifest);
// Entries sorted by label, seconds with 6 decimals.
std::string SaveUnitDatabase(const UnitDatabase& db);
// Header-less rows in the manifest row format, e.g. exported from an
// annotation tool. The display column may be omitted.
UnitDatabase BuildUnitDatabase(std::string_view labels, CorpusId corpus);

std::optional<UnitEntry> Lookup(const UnitDatabase& db, const Phoneme& phoneme);

enum class FindingKind : std::uint8_t {
  kOutOfRange,
  kZeroLength,
  kRateMismatch,
  kOverlap,
  kNotInInventory,
};

enum class Severity : std::uint8_t { kInfo, kError };

std::string_view FindingKindName(FindingKind kind);
Severity SeverityOf(FindingKind kind);

struct Finding {
  FindingKind kind;
  std::string label;
  // Second label for kOverlap, empty otherwise.
  std::string other_label;
  std::string detail;

  Severity severity() const { return SeverityOf(kind); }
  friend bool operator==(const Finding&, const Finding&) = default;
};

// Findings sorted by (kind, label, other_label). Overlaps are reported once
// per pair with label < other_label.
std::vector<Finding> Validate(const UnitDatabase& db, const AudioClip& corpus,
                              const PhonemeInventory* inventory = nullptr);
bool HasErrors(const std::vector<Finding>& findings);

}  // namespace katha

#endif  // KATHA_UNIT_DB_H_
