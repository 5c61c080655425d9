#include "katha/unit_db.h"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

namespace katha {
namespace {

constexpr std::string_view kHeader = "#katha-unitdb v1\n#corpus corpus.wav 44100\n";

std::string Manifest(std::string_view rows) { return std::string(kHeader) + std::string(rows); }

UnitDbErrorKind LoadErrorKind(std::string_view text) {
  try {
    LoadUnitDatabase(text);
  } catch (const UnitDbError& e) {
    return e.kind();
  }
  FAIL("expected UnitDbError");
  return UnitDbErrorKind::kBadHeader;
}

UnitDatabase RandomDb(std::mt19937& rng) {
  const auto universe = PhonemeUniverse();
  UnitDatabase db(CorpusId{"rec" + std::to_string(rng() % 100) + ".wav", 44100});
  const std::size_t n = rng() % 60;
  for (std::size_t i = 0; i < n; ++i) {
    const Phoneme& p = universe[rng() % universe.size()];
    if (db.Find(Label(p)) != nullptr) continue;
    // Microsecond-quantized seconds, as stored in the manifest.
    const std::uint64_t start_us = rng() % 100'000'000;
    const std::uint64_t end_us = start_us + 1 + rng() % 1'000'000;
    db.Add({Label(p), Display(p), TimeSpan(start_us / 1e6, end_us / 1e6)});
  }
  return db;
}

TEST_CASE("load a one-row manifest") {
  const UnitDatabase db = LoadUnitDatabase(Manifest("C0A26-V0A08-O\tਦੀ\t0.50\t0.88\n"));
  REQUIRE(db.size() == 1);
  CHECK(db.corpus() == CorpusId{"corpus.wav", 44100});
  const UnitEntry* e = db.Find("C0A26-V0A08-O");
  REQUIRE(e != nullptr);
  CHECK(e->display == "ਦੀ");
  CHECK(e->span.start_sec() == 0.50);
  CHECK(e->span.end_sec() == 0.88);
}

TEST_CASE("load tolerates comments, blank lines and CRLF") {
  const UnitDatabase db = LoadUnitDatabase(
      "#katha-unitdb v1\r\n#corpus a.wav 16000\r\n# note\r\n\r\n"
      "C----V0A05-O\tਅ\t0\t1e-1\r\n");
  CHECK(db.size() == 1);
  CHECK(db.corpus().sample_rate == 16000);
  CHECK(db.Find("C----V0A05-O")->span.end_sec() == 0.1);
}

TEST_CASE("load errors are distinct") {
  CHECK(LoadErrorKind("") == UnitDbErrorKind::kBadHeader);
  CHECK(LoadErrorKind("#katha-unitdb v2\n#corpus a.wav 44100\n") ==
        UnitDbErrorKind::kBadHeader);
  CHECK(LoadErrorKind("#katha-unitdb v1\n") == UnitDbErrorKind::kBadHeader);
  CHECK(LoadErrorKind("#katha-unitdb v1\n#corpus a.wav\n") == UnitDbErrorKind::kBadHeader);
  CHECK(LoadErrorKind("#katha-unitdb v1\n#corpus a.wav 0\n") == UnitDbErrorKind::kBadHeader);
  CHECK(LoadErrorKind(Manifest("C0A26-V0A08-O\tਦੀ\t0.5\n")) == UnitDbErrorKind::kMalformedRow);
  CHECK(LoadErrorKind(Manifest("c0a26-v0a08-o\tਦੀ\t0.5\t0.8\n")) == UnitDbErrorKind::kBadLabel);
  CHECK(LoadErrorKind(Manifest("C0A26-V0A08-O\tਦੀ\tabc\t0.8\n")) == UnitDbErrorKind::kBadSeconds);
  CHECK(LoadErrorKind(Manifest("C0A26-V0A08-O\tਦੀ\t0.5s\t0.8\n")) == UnitDbErrorKind::kBadSeconds);
  CHECK(LoadErrorKind(Manifest("C0A26-V0A08-O\tਦੀ\t-0.5\t0.8\n")) == UnitDbErrorKind::kBadSeconds);
  CHECK(LoadErrorKind(Manifest("C0A26-V0A08-O\tਦੀ\tnan\t0.8\n")) == UnitDbErrorKind::kBadSeconds);
  CHECK(LoadErrorKind(Manifest("C0A26-V0A08-O\tਦੀ\t0.88\t0.50\n")) == UnitDbErrorKind::kBadOrder);
  CHECK(LoadErrorKind(Manifest("C0A26-V0A08-O\tਦੀ\t0.5\t0.5\n")) == UnitDbErrorKind::kBadOrder);
}

TEST_CASE("duplicate label error names the label and line") {
  try {
    LoadUnitDatabase(Manifest("C0A26-V0A08-O\tਦੀ\t0.1\t0.2\nC0A26-V0A08-O\tਦੀ\t0.3\t0.4\n"));
    FAIL("expected duplicate-label error");
  } catch (const UnitDbError& e) {
    CHECK(e.kind() == UnitDbErrorKind::kDuplicateLabel);
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("C0A26-V0A08-O") != std::string::npos);
  }
}

TEST_CASE("save is canonical") {
  UnitDatabase empty;
  CHECK(SaveUnitDatabase(empty) == kHeader);

  UnitDatabase db;
  db.Add({"C0A26-V0A08-O", "ਦੀ", TimeSpan(0.5, 0.88)});
  db.Add({"C----V0A05-O", "ਅ", TimeSpan(0.02, 0.1)});
  const std::string text = SaveUnitDatabase(db);
  CHECK(text == Manifest("C----V0A05-O\tਅ\t0.020000\t0.100000\n"
                         "C0A26-V0A08-O\tਦੀ\t0.500000\t0.880000\n"));
  CHECK(SaveUnitDatabase(db) == text);
}

TEST_CASE("load of save is the identity") {
  std::mt19937 rng(8);
  for (int i = 0; i < 300; ++i) {
    const UnitDatabase db = RandomDb(rng);
    const std::string text = SaveUnitDatabase(db);
    const UnitDatabase back = LoadUnitDatabase(text);
    REQUIRE(back == db);
    REQUIRE(SaveUnitDatabase(back) == text);
  }
}

TEST_CASE("lookup") {
  UnitDatabase db;
  db.Add({"C0A26-V0A08-O", "ਦੀ", TimeSpan(0.5, 0.88)});
  const auto hit = Lookup(db, Phoneme::CV(U'ਦ', Vowel::kIi));
  REQUIRE(hit.has_value());
  CHECK(hit->span == TimeSpan(0.5, 0.88));
  CHECK_FALSE(Lookup(db, Phoneme::CV(U'ਦ', Vowel::kIi, true)).has_value());
}

TEST_CASE("lookup agrees with a linear scan") {
  std::mt19937 rng(77);
  const UnitDatabase db = RandomDb(rng);
  std::vector<UnitEntry> rows;
  for (const auto& [label, entry] : db.entries()) rows.push_back(entry);
  const auto universe = PhonemeUniverse();
  for (int i = 0; i < 10000; ++i) {
    const Phoneme& p = universe[rng() % universe.size()];
    const auto it = std::find_if(rows.begin(), rows.end(),
                                 [&](const UnitEntry& e) { return e.label == Label(p); });
    const auto found = Lookup(db, p);
    REQUIRE(found.has_value() == (it != rows.end()));
    if (found) REQUIRE(*found == *it);
  }
}

TEST_CASE("build from a label file") {
  const UnitDatabase db = BuildUnitDatabase(
      "C----V0A05-O\tਅ\t0.10\t0.20\n"
      "C0A15-V0A05-O 0.25 0.40\n"
      "C0A26-V0A08-O\t0.50\t0.88\n",
      CorpusId{"speaker.wav", 48000});
  CHECK(db.size() == 3);
  CHECK(db.corpus() == CorpusId{"speaker.wav", 48000});
  CHECK(db.Find("C0A26-V0A08-O")->display == "ਦੀ");
  CHECK(LoadUnitDatabase(SaveUnitDatabase(db)) == db);

  CHECK_THROWS_AS(BuildUnitDatabase("C0A26-V0A08-O\tਦੀ\t0.88\t0.50\n", {}), UnitDbError);
  try {
    BuildUnitDatabase("C0A26-V0A08-O\tਦੀ\t0.88\t0.50\n", {});
  } catch (const UnitDbError& e) {
    CHECK(e.kind() == UnitDbErrorKind::kBadOrder);
    CHECK(e.line() == 1);
  }
}

// Brute-force recomputation of every finding.
std::vector<Finding> OracleFindings(const UnitDatabase& db, const AudioClip& corpus,
                                    const PhonemeInventory* inventory) {
  std::vector<Finding> out;
  const double rate = corpus.sample_rate();
  if (db.corpus().sample_rate != corpus.sample_rate()) {
    out.push_back({FindingKind::kRateMismatch, "", "", ""});
  }
  std::vector<const UnitEntry*> rows;
  for (const auto& [label, e] : db.entries()) rows.push_back(&e);
  auto idx = [&](double s) { return static_cast<long long>(std::floor(s * rate + 0.5)); };
  for (const UnitEntry* e : rows) {
    const long long b = idx(e->span.start_sec());
    const long long n = idx(e->span.end_sec());
    if (n > static_cast<long long>(corpus.size())) out.push_back({FindingKind::kOutOfRange, e->label, "", ""});
    if (n == b) out.push_back({FindingKind::kZeroLength, e->label, "", ""});
    if (inventory && !inventory->entries().count(e->label)) {
      out.push_back({FindingKind::kNotInInventory, e->label, "", ""});
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const long long b1 = idx(rows[i]->span.start_sec()), e1 = idx(rows[i]->span.end_sec());
      const long long b2 = idx(rows[j]->span.start_sec()), e2 = idx(rows[j]->span.end_sec());
      if (std::max(b1, b2) < std::min(e1, e2)) {
        out.push_back({FindingKind::kOverlap, rows[i]->label, rows[j]->label, ""});
      }
    }
  }
  return out;
}

using Key = std::tuple<FindingKind, std::string, std::string>;

std::multiset<Key> Keys(const std::vector<Finding>& findings) {
  std::multiset<Key> keys;
  for (const Finding& f : findings) keys.insert({f.kind, f.label, f.other_label});
  return keys;
}

TEST_CASE("validate examples") {
  UnitDatabase db;
  db.Add({"C0A26-V0A08-O", "ਦੀ", TimeSpan(0.0, 2.0)});
  const AudioClip one_second(std::vector<std::int16_t>(44100), 44100);
  const auto findings = Validate(db, one_second);
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].kind == FindingKind::kOutOfRange);
  CHECK(findings[0].severity() == Severity::kError);
  CHECK(HasErrors(findings));

  UnitDatabase good;
  good.Add({"C0A26-V0A08-O", "ਦੀ", TimeSpan(0.1, 0.2)});
  good.Add({"C----V0A05-O", "ਅ", TimeSpan(0.3, 0.5)});
  CHECK(Validate(good, one_second).empty());

  UnitDatabase tiny;
  tiny.Add({"C----V0A05-O", "ਅ", TimeSpan(0.1, 0.1 + 1e-6)});
  CHECK(Keys(Validate(tiny, one_second)) ==
        std::multiset<Key>{{FindingKind::kZeroLength, "C----V0A05-O", ""}});

  UnitDatabase overlapping;
  overlapping.Add({"C----V0A05-O", "ਅ", TimeSpan(0.1, 0.3)});
  overlapping.Add({"C0A26-V0A08-O", "ਦੀ", TimeSpan(0.2, 0.4)});
  overlapping.Add({"C0A15-V0A05-O", "ਕ", TimeSpan(0.3, 0.4)});  // touches, no overlap with ਅ
  const auto ov = Validate(overlapping, one_second);
  CHECK_FALSE(HasErrors(ov));
  CHECK(Keys(ov) == std::multiset<Key>{{FindingKind::kOverlap, "C----V0A05-O", "C0A26-V0A08-O"},
                                       {FindingKind::kOverlap, "C0A15-V0A05-O", "C0A26-V0A08-O"}});

  const AudioClip other_rate(std::vector<std::int16_t>(16000), 16000);
  CHECK(HasErrors(Validate(good, other_rate)));

  const PhonemeInventory only_a({{"C----V0A05-O", {"ਅ", true}}});
  CHECK(Keys(Validate(good, one_second, &only_a)) ==
        std::multiset<Key>{{FindingKind::kNotInInventory, "C0A26-V0A08-O", ""}});
}

TEST_CASE("validate equals brute-force recomputation") {
  std::mt19937 rng(1234);
  const PhonemeInventory inventory = GenerateInventory({});
  std::map<std::string, InventoryEntry> half;
  for (const auto& [label, e] : inventory.entries()) {
    if (rng() % 2) half.emplace(label, e);
  }
  const PhonemeInventory partial(half);
  for (int i = 0; i < 100; ++i) {
    const UnitDatabase db = RandomDb(rng);
    const AudioClip corpus(std::vector<std::int16_t>(rng() % (44100 * 80)),
                           i % 10 == 0 ? 22050 : 44100);
    const PhonemeInventory* inv = i % 3 == 0 ? &partial : nullptr;
    const auto findings = Validate(db, corpus, inv);
    REQUIRE(Keys(findings) == Keys(OracleFindings(db, corpus, inv)));
    REQUIRE(std::is_sorted(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
      return std::tie(a.kind, a.label, a.other_label) < std::tie(b.kind, b.label, b.other_label);
    }));
  }
}

}  // namespace
}  // namespace katha
