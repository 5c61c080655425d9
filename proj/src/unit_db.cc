#include "katha/unit_db.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <tuple>

#include "line_reader.h"

namespace katha {
namespace {

constexpr std::string_view kManifestMagic = "#katha-unitdb v1";
constexpr std::string_view kCorpusPrefix = "#corpus ";

std::string LinePrefix(std::size_t line) {
  return "line " + std::to_string(line) + ": ";
}

double ParseSeconds(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() ||
      !std::isfinite(value)) {
    throw UnitDbError(UnitDbErrorKind::kBadSeconds, line,
                      LinePrefix(line) + "'" + std::string(field) +
                          "' is not a number of seconds");
  }
  if (value < 0.0 || std::signbit(value)) {
    throw UnitDbError(UnitDbErrorKind::kBadSeconds, line,
                      LinePrefix(line) + "negative seconds '" +
                          std::string(field) + "'");
  }
  return value;
}

UnitEntry ParseRow(std::string_view text, std::size_t line) {
  auto fields = internal::SplitFields(text, '\t');
  if (fields.size() == 1) fields = internal::SplitWhitespace(text);
  if (fields.size() != 3 && fields.size() != 4) {
    throw UnitDbError(UnitDbErrorKind::kMalformedRow, line,
                      LinePrefix(line) +
                          "expected label<TAB>display<TAB>start<TAB>end");
  }
  const std::string label(fields[0]);
  const auto phoneme = ParseLabel(label);
  if (!phoneme) {
    throw UnitDbError(UnitDbErrorKind::kBadLabel, line,
                      LinePrefix(line) + "non-canonical label '" + label + "'");
  }
  const bool has_display = fields.size() == 4;
  // label, display, start with the end column missing
  double probe = 0.0;
  if (!has_display &&
      std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), probe).ec !=
          std::errc()) {
    throw UnitDbError(UnitDbErrorKind::kMalformedRow, line,
                      LinePrefix(line) + "expected label<TAB>display<TAB>start<TAB>end");
  }
  const std::string display =
      has_display ? std::string(fields[1]) : Display(*phoneme);
  const double start = ParseSeconds(fields[has_display ? 2 : 1], line);
  const double end = ParseSeconds(fields[has_display ? 3 : 2], line);
  if (!(start < end)) {
    throw UnitDbError(UnitDbErrorKind::kBadOrder, line,
                      LinePrefix(line) + "start " + std::string(fields[fields.size() - 2]) +
                          " is not before end " + std::string(fields.back()) +
                          " for '" + label + "'");
  }
  return UnitEntry{label, display, TimeSpan(start, end)};
}

void AddRows(const std::vector<internal::Line>& lines, std::size_t first,
             UnitDatabase* db) {
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    if (internal::Trim(text).empty() || text.front() == '#') continue;
    UnitEntry entry = ParseRow(text, number);
    if (db->Find(entry.label) != nullptr) {
      throw UnitDbError(UnitDbErrorKind::kDuplicateLabel, number,
                        LinePrefix(number) + "duplicate label '" +
                            entry.label + "'");
    }
    db->Add(std::move(entry));
  }
}

CorpusId ParseCorpusLine(std::string_view text, std::size_t line) {
  if (text.substr(0, kCorpusPrefix.size()) != kCorpusPrefix) {
    throw UnitDbError(UnitDbErrorKind::kBadHeader, line,
                      LinePrefix(line) + "expected '#corpus <file> <rate>'");
  }
  const auto fields = internal::SplitWhitespace(text.substr(kCorpusPrefix.size()));
  std::uint32_t rate = 0;
  if (fields.size() == 2) {
    const auto [ptr, ec] = std::from_chars(
        fields[1].data(), fields[1].data() + fields[1].size(), rate);
    if (ec != std::errc() || ptr != fields[1].data() + fields[1].size()) rate = 0;
  }
  if (rate == 0) {
    throw UnitDbError(UnitDbErrorKind::kBadHeader, line,
                      LinePrefix(line) + "expected '#corpus <file> <rate>'");
  }
  return CorpusId{std::string(fields[0]), rate};
}

}  // namespace

void UnitDatabase::Add(UnitEntry entry) {
  if (!ParseLabel(entry.label)) {
    throw UnitDbError(UnitDbErrorKind::kBadLabel, 0,
                      "non-canonical label '" + entry.label + "'");
  }
  const std::string key = entry.label;
  if (!entries_.emplace(key, std::move(entry)).second) {
    throw UnitDbError(UnitDbErrorKind::kDuplicateLabel, 0,
                      "duplicate label '" + key + "'");
  }
}

const UnitEntry* UnitDatabase::Find(std::string_view label) const {
  const auto it = entries_.find(label);
  return it == entries_.end() ? nullptr : &it->second;
}

UnitDatabase LoadUnitDatabase(std::string_view manifest) {
  const auto lines = internal::SplitLines(manifest);
  if (lines.empty() || lines[0].text != kManifestMagic) {
    throw UnitDbError(UnitDbErrorKind::kBadHeader, 1,
                      "line 1: expected '" + std::string(kManifestMagic) + "'");
  }
  if (lines.size() < 2) {
    throw UnitDbError(UnitDbErrorKind::kBadHeader, 2,
                      "line 2: expected '#corpus <file> <rate>'");
  }
  UnitDatabase db(ParseCorpusLine(lines[1].text, 2));
  AddRows(lines, 2, &db);
  return db;
}

std::string SaveUnitDatabase(const UnitDatabase& db) {
  std::string out(kManifestMagic);
  out += '\n';
  out += kCorpusPrefix;
  out += db.corpus().file_name;
  out += ' ';
  out += std::to_string(db.corpus().sample_rate);
  out += '\n';
  char seconds[64];
  for (const auto& [label, entry] : db.entries()) {
    std::snprintf(seconds, sizeof(seconds), "%.6f\t%.6f", entry.span.start_sec(),
                  entry.span.end_sec());
    out += label;
    out += '\t';
    out += entry.display;
    out += '\t';
    out += seconds;
    out += '\n';
  }
  return out;
}

UnitDatabase BuildUnitDatabase(std::string_view labels, CorpusId corpus) {
  UnitDatabase db(std::move(corpus));
  AddRows(internal::SplitLines(labels), 0, &db);
  return db;
}

std::optional<UnitEntry> Lookup(const UnitDatabase& db, const Phoneme& phoneme) {
  const UnitEntry* entry = db.Find(Label(phoneme));
  if (entry == nullptr) return std::nullopt;
  return *entry;
}

std::string_view FindingKindName(FindingKind kind) {
  switch (kind) {
    case FindingKind::kOutOfRange: return "out-of-range";
    case FindingKind::kZeroLength: return "zero-length";
    case FindingKind::kRateMismatch: return "rate-mismatch";
    case FindingKind::kOverlap: return "overlap";
    case FindingKind::kNotInInventory: return "not-in-inventory";
  }
  return "?";
}

Severity SeverityOf(FindingKind kind) {
  switch (kind) {
    case FindingKind::kOutOfRange:
    case FindingKind::kZeroLength:
    case FindingKind::kRateMismatch:
      return Severity::kError;
    case FindingKind::kOverlap:
    case FindingKind::kNotInInventory:
      return Severity::kInfo;
  }
  return Severity::kError;
}

std::vector<Finding> Validate(const UnitDatabase& db, const AudioClip& corpus,
                              const PhonemeInventory* inventory) {
  std::vector<Finding> findings;
  const std::uint32_t rate = corpus.sample_rate();
  if (db.corpus().sample_rate != rate) {
    findings.push_back({FindingKind::kRateMismatch, "", "",
                        "manifest expects " +
                            std::to_string(db.corpus().sample_rate) +
                            " Hz, corpus is " + std::to_string(rate) + " Hz"});
  }

  struct Placed {
    SampleRange range;
    const std::string* label;
  };
  std::vector<Placed> placed;
  placed.reserve(db.size());
  for (const auto& [label, entry] : db.entries()) {
    const SampleRange range = ToSampleRange(entry.span, rate);
    if (range.end > corpus.size()) {
      findings.push_back({FindingKind::kOutOfRange, label, "",
                          "ends at sample " + std::to_string(range.end) +
                              ", corpus has " + std::to_string(corpus.size())});
    }
    if (range.size() == 0) {
      findings.push_back({FindingKind::kZeroLength, label, "",
                          "span rounds to zero samples at " +
                              std::to_string(rate) + " Hz"});
    } else {
      placed.push_back({range, &label});
    }
    if (inventory != nullptr && inventory->entries().count(label) == 0) {
      findings.push_back(
          {FindingKind::kNotInInventory, label, "", "label not in inventory"});
    }
  }

  // Sweep over spans sorted by start; each span is compared with the later
  // starters that begin before it ends.
  std::sort(placed.begin(), placed.end(), [](const Placed& a, const Placed& b) {
    return std::tie(a.range.begin, *a.label) < std::tie(b.range.begin, *b.label);
  });
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (std::size_t j = i + 1;
         j < placed.size() && placed[j].range.begin < placed[i].range.end; ++j) {
      const std::string* a = placed[i].label;
      const std::string* b = placed[j].label;
      if (*b < *a) std::swap(a, b);
      findings.push_back({FindingKind::kOverlap, *a, *b, "spans share samples"});
    }
  }

  std::sort(findings.begin(), findings.end(),
            [](const Finding& x, const Finding& y) {
              return std::tie(x.kind, x.label, x.other_label) <
                     std::tie(y.kind, y.label, y.other_label);
            });
  return findings;
}

bool HasErrors(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity() == Severity::kError;
  });
}

}  // namespace katha
