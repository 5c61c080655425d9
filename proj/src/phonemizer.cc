#include "katha/phonemizer.h"

#include <cstdio>

#include "katha/utf8.h"
#include "line_reader.h"

namespace katha {
namespace {

constexpr std::string_view kInventoryMagic = "#katha-inventory v1";

std::optional<char32_t> ParseHex4(std::string_view s) {
  if (s.size() != 4) return std::nullopt;
  char32_t value = 0;
  for (char ch : s) {
    value <<= 4;
    if (ch >= '0' && ch <= '9') {
      value |= static_cast<char32_t>(ch - '0');
    } else if (ch >= 'A' && ch <= 'F') {
      value |= static_cast<char32_t>(ch - 'A' + 10);
    } else {
      return std::nullopt;
    }
  }
  return value;
}

// Bindi conventionally goes with the long vowels, tippi with the rest.
char32_t NasalMarkFor(Vowel v) {
  switch (v) {
    case Vowel::kA:
    case Vowel::kI:
    case Vowel::kU:
    case Vowel::kUu:
      return kTippi;
    default:
      return kBindi;
  }
}

std::string ScalarName(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
  return buf;
}

}  // namespace

std::string Label(const Phoneme& p) {
  char buf[24];
  const char flag = p.nasal ? 'N' : 'O';
  const auto vowel = static_cast<unsigned>(IndependentForm(p.vowel));
  if (p.consonant) {
    std::snprintf(buf, sizeof(buf), "C%04X-V%04X-%c",
                  static_cast<unsigned>(*p.consonant), vowel, flag);
  } else {
    std::snprintf(buf, sizeof(buf), "C----V%04X-%c", vowel, flag);
  }
  return buf;
}

std::optional<Phoneme> ParseLabel(std::string_view label) {
  Phoneme p;
  std::string_view rest;
  if (label.substr(0, 5) == "C----") {
    rest = label.substr(5);
  } else {
    if (label.size() < 6 || label[0] != 'C' || label[5] != '-') {
      return std::nullopt;
    }
    const auto consonant = ParseHex4(label.substr(1, 4));
    if (!consonant || !IsConsonant(*consonant)) return std::nullopt;
    p.consonant = *consonant;
    rest = label.substr(6);
  }
  // rest = "V" hex4 "-" flag
  if (rest.size() != 7 || rest[0] != 'V' || rest[5] != '-') return std::nullopt;
  const auto vowel_code = ParseHex4(rest.substr(1, 4));
  if (!vowel_code) return std::nullopt;
  const auto vowel = VowelFromIndependent(*vowel_code);
  if (!vowel) return std::nullopt;
  p.vowel = *vowel;
  if (rest[6] == 'N') {
    p.nasal = true;
  } else if (rest[6] != 'O') {
    return std::nullopt;
  }
  return p;
}

std::string Display(const Phoneme& p) {
  std::string out;
  if (p.consonant) {
    AppendUtf8(*p.consonant, &out);
    if (const auto sign = SignForm(p.vowel)) AppendUtf8(*sign, &out);
  } else {
    AppendUtf8(IndependentForm(p.vowel), &out);
  }
  if (p.nasal) AppendUtf8(NasalMarkFor(p.vowel), &out);
  return out;
}

PhonemeClass ClassOf(const Phoneme& p) {
  if (p.is_vowel_unit()) return p.nasal ? PhonemeClass::kVNasal : PhonemeClass::kV;
  return p.nasal ? PhonemeClass::kCVNasal : PhonemeClass::kCV;
}

std::string_view PhonemeClassName(PhonemeClass c) {
  switch (c) {
    case PhonemeClass::kV: return "V";
    case PhonemeClass::kVNasal: return "V-nasal";
    case PhonemeClass::kCV: return "CV";
    case PhonemeClass::kCVNasal: return "CV-nasal";
  }
  return "?";
}

std::vector<Phoneme> PhonemeUniverse() {
  std::vector<Phoneme> all;
  all.reserve(kUniverseSize);
  for (bool nasal : {false, true}) {
    for (Vowel v : kAllVowels) all.push_back(Phoneme::V(v, nasal));
    for (char32_t c : kConsonants) {
      for (Vowel v : kAllVowels) all.push_back(Phoneme::CV(c, v, nasal));
    }
  }
  return all;
}

std::string_view DiagnosticKindName(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::kUnclassifiedChar: return "UnclassifiedChar";
    case DiagnosticKind::kDanglingMatra: return "DanglingMatra";
    case DiagnosticKind::kDanglingNasal: return "DanglingNasal";
    case DiagnosticKind::kViramaPolicy: return "ViramaPolicy";
    case DiagnosticKind::kAdhakIgnored: return "AdhakIgnored";
  }
  return "?";
}

Segmentation SegmentWord(std::u32string_view word) {
  Segmentation out;
  // A bare consonant was just emitted and may still take a matra.
  bool accepts_matra = false;
  // The last unit's scalars end right here, so a nasal sign attaches to it.
  bool accepts_nasal = false;

  auto report = [&](std::size_t pos, DiagnosticKind kind, std::string detail) {
    out.diagnostics.push_back({pos, kind, std::move(detail)});
    accepts_matra = false;
    accepts_nasal = false;
  };

  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const char32_t c = word[pos];
    const CharClass cls = Classify(c);
    switch (cls.kind) {
      case CharKind::kConsonant:
        out.phonemes.push_back(Phoneme::CV(cls.consonant, Vowel::kA));
        accepts_matra = true;
        accepts_nasal = true;
        break;
      case CharKind::kIndependentVowel:
        out.phonemes.push_back(Phoneme::V(cls.vowel));
        accepts_matra = false;
        accepts_nasal = true;
        break;
      case CharKind::kVowelSign:
        if (accepts_matra) {
          out.phonemes.back().vowel = cls.vowel;
          accepts_matra = false;
        } else {
          report(pos, DiagnosticKind::kDanglingMatra,
                 ScalarName(c) + " has no bare consonant to attach to");
        }
        break;
      case CharKind::kNasalSign:
        if (accepts_nasal) {
          out.phonemes.back().nasal = true;
          accepts_matra = false;
          accepts_nasal = false;
        } else {
          report(pos, DiagnosticKind::kDanglingNasal,
                 ScalarName(c) + " does not follow a unit");
        }
        break;
      case CharKind::kVirama:
        report(pos, DiagnosticKind::kViramaPolicy,
               accepts_matra ? "consonant kept with inherent vowel"
                             : "virama without a bare consonant ignored");
        break;
      case CharKind::kAdhak:
        report(pos, DiagnosticKind::kAdhakIgnored, "gemination not modelled");
        break;
      default:
        report(pos, DiagnosticKind::kUnclassifiedChar,
               ScalarName(c) + " (" + std::string(CharKindName(cls.kind)) + ")");
        break;
    }
  }
  return out;
}

PhonemeInventory::PhonemeInventory(
    std::map<std::string, InventoryEntry> entries)
    : entries_(std::move(entries)) {
  for (const auto& [label, entry] : entries_) {
    const auto phoneme = ParseLabel(label);
    if (!phoneme) throw InventoryError("non-canonical label: " + label);
    ClassCount& c = counts_[static_cast<std::size_t>(ClassOf(*phoneme))];
    ++c.total;
    if (entry.valid) ++c.valid;
  }
}

ClassCount PhonemeInventory::total() const {
  ClassCount sum;
  for (const ClassCount& c : counts_) {
    sum.total += c.total;
    sum.valid += c.valid;
  }
  return sum;
}

std::vector<std::string> PhonemeInventory::ValidLabels() const {
  std::vector<std::string> labels;
  for (const auto& [label, entry] : entries_) {
    if (entry.valid) labels.push_back(label);
  }
  return labels;
}

PhonemeInventory GenerateInventory(const std::set<std::string>& invalid_labels) {
  for (const std::string& label : invalid_labels) {
    if (!ParseLabel(label)) {
      throw InventoryError("invalid-phoneme list has non-canonical label: " +
                           label);
    }
  }
  std::map<std::string, InventoryEntry> entries;
  for (const Phoneme& p : PhonemeUniverse()) {
    std::string label = Label(p);
    const bool valid = invalid_labels.count(label) == 0;
    entries.emplace(std::move(label), InventoryEntry{Display(p), valid});
  }
  return PhonemeInventory(std::move(entries));
}

bool IsValid(const PhonemeInventory& inventory, const Phoneme& phoneme) {
  const auto it = inventory.entries().find(Label(phoneme));
  return it != inventory.entries().end() && it->second.valid;
}

PhonemeInventory LoadInventory(std::string_view content) {
  const auto lines = internal::SplitLines(content);
  if (lines.empty() || lines.front().text != kInventoryMagic) {
    throw InventoryError("inventory: first line must be '" +
                         std::string(kInventoryMagic) + "'");
  }
  std::map<std::string, InventoryEntry> entries;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    if (text.empty() || text.front() == '#') continue;
    const auto where = "inventory line " + std::to_string(number) + ": ";
    const auto fields = internal::SplitFields(text, '\t');
    if (fields.size() != 3) {
      throw InventoryError(where + "expected label<TAB>display<TAB>valid");
    }
    std::string label(fields[0]);
    if (!ParseLabel(label)) {
      throw InventoryError(where + "non-canonical label '" + label + "'");
    }
    if (fields[2] != "0" && fields[2] != "1") {
      throw InventoryError(where + "valid column must be 0 or 1");
    }
    InventoryEntry entry{std::string(fields[1]), fields[2] == "1"};
    if (!entries.emplace(label, std::move(entry)).second) {
      throw InventoryError(where + "duplicate label '" + label + "'");
    }
  }
  return PhonemeInventory(std::move(entries));
}

std::string SaveInventory(const PhonemeInventory& inventory) {
  std::string out(kInventoryMagic);
  out += "\n# label\tdisplay\tvalid\n";
  for (const auto& [label, entry] : inventory.entries()) {
    out += label;
    out += '\t';
    out += entry.display;
    out += entry.valid ? "\t1\n" : "\t0\n";
  }
  return out;
}

std::set<std::string> ParseLabelList(std::string_view content) {
  std::set<std::string> labels;
  for (const auto& [number, raw] : internal::SplitLines(content)) {
    const std::string_view text = internal::Trim(raw);
    if (text.empty() || text.front() == '#') continue;
    if (!ParseLabel(text)) {
      throw InventoryError("label list line " + std::to_string(number) +
                           ": non-canonical label '" + std::string(text) + "'");
    }
    labels.emplace(text);
  }
  return labels;
}

}  // namespace katha
