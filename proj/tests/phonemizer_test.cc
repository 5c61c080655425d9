#include "katha/phonemizer.h"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.h"

namespace katha {
namespace {

using P = Phoneme;

std::vector<Phoneme> Units(std::u32string_view word) {
  return SegmentWord(Normalize(word)).phonemes;
}

std::vector<DiagnosticKind> Kinds(const Segmentation& s) {
  std::vector<DiagnosticKind> kinds;
  for (const auto& d : s.diagnostics) kinds.push_back(d.kind);
  return kinds;
}

// Independent reference for well-formed text: every unit is a cluster
// (consonant [matra] | independent vowel) [nasal].
std::vector<Phoneme> ClusterOracle(std::u32string_view word) {
  std::vector<Phoneme> out;
  std::size_t i = 0;
  while (i < word.size()) {
    Phoneme p;
    const char32_t head = word[i++];
    if (IsConsonant(head)) {
      p.consonant = head;
      p.vowel = Vowel::kA;
      for (Vowel v : kAllVowels) {
        if (i < word.size() && SignForm(v) == word[i]) {
          p.vowel = v;
          ++i;
          break;
        }
      }
    } else {
      p.vowel = *VowelFromIndependent(head);
    }
    if (i < word.size() && (word[i] == kTippi || word[i] == kBindi)) {
      p.nasal = true;
      ++i;
    }
    out.push_back(p);
  }
  return out;
}

TEST_CASE("worked example segments into four CV units") {
  const std::vector<Phoneme> expected = {
      P::CV(U'ਹ', Vowel::kA), P::CV(U'ਰ', Vowel::kA), P::CV(U'ਦ', Vowel::kIi),
      P::CV(U'ਪ', Vowel::kA)};
  const auto seg = SegmentWord(U"ਹਰਦੀਪ");
  CHECK(seg.phonemes == expected);
  CHECK(seg.diagnostics.empty());
}

TEST_CASE("table examples and single vowels") {
  CHECK(Units(U"ਦੀ") == std::vector{P::CV(U'ਦ', Vowel::kIi)});
  CHECK(Units(U"ਮੰ") == std::vector{P::CV(U'ਮ', Vowel::kA, true)});
  CHECK(Units(U"ਆ") == std::vector{P::V(Vowel::kAa)});
  CHECK(Units(U"ਆਂ") == std::vector{P::V(Vowel::kAa, true)});
  CHECK(Units(U"ਅਾ") == std::vector{P::V(Vowel::kAa)});
  CHECK(Units(U"ਸਿੰਘ") ==
        std::vector{P::CV(U'ਸ', Vowel::kI, true), P::CV(U'ਘ', Vowel::kA)});
  CHECK(Units(U"ਸ਼ਾ") == std::vector{P::CV(0x0A36, Vowel::kAa)});
  CHECK(Units(U"").empty());
}

TEST_CASE("irregular scalars produce diagnostics and are skipped") {
  SUBCASE("leading matra") {
    const auto s = SegmentWord(U"ਿਕ");
    CHECK(s.phonemes == std::vector{P::CV(U'ਕ', Vowel::kA)});
    REQUIRE(s.diagnostics.size() == 1);
    CHECK(s.diagnostics[0].kind == DiagnosticKind::kDanglingMatra);
    CHECK(s.diagnostics[0].position == 0);
  }
  SUBCASE("double matra") {
    const auto s = SegmentWord(U"ਕਾਾ");
    CHECK(s.phonemes == std::vector{P::CV(U'ਕ', Vowel::kAa)});
    CHECK(Kinds(s) == std::vector{DiagnosticKind::kDanglingMatra});
    CHECK(s.diagnostics[0].position == 2);
  }
  SUBCASE("matra after independent vowel") {
    const auto s = SegmentWord(U"ਓੀ");
    CHECK(s.phonemes == std::vector{P::V(Vowel::kO)});
    CHECK(Kinds(s) == std::vector{DiagnosticKind::kDanglingMatra});
  }
  SUBCASE("virama keeps the inherent vowel") {
    const auto s = SegmentWord(U"ਪ੍ਰੇਮ");
    CHECK(s.phonemes == std::vector{P::CV(U'ਪ', Vowel::kA), P::CV(U'ਰ', Vowel::kE),
                                    P::CV(U'ਮ', Vowel::kA)});
    CHECK(Kinds(s) == std::vector{DiagnosticKind::kViramaPolicy});
    CHECK(s.diagnostics[0].position == 1);
  }
  SUBCASE("adhak is ignored without duplicating units") {
    const auto s = SegmentWord(U"ਪੱਕਾ");
    CHECK(s.phonemes == std::vector{P::CV(U'ਪ', Vowel::kA), P::CV(U'ਕ', Vowel::kAa)});
    CHECK(Kinds(s) == std::vector{DiagnosticKind::kAdhakIgnored});
  }
  SUBCASE("leading and doubled nasal") {
    const auto s = SegmentWord(U"ੰਕਂਂ");
    CHECK(s.phonemes == std::vector{P::CV(U'ਕ', Vowel::kA, true)});
    CHECK(Kinds(s) == std::vector{DiagnosticKind::kDanglingNasal,
                                  DiagnosticKind::kDanglingNasal});
    CHECK(s.diagnostics[0].position == 0);
    CHECK(s.diagnostics[1].position == 3);
  }
  SUBCASE("other scalars") {
    const auto s = SegmentWord(U"ਕx੭,");
    CHECK(s.phonemes == std::vector{P::CV(U'ਕ', Vowel::kA)});
    CHECK(Kinds(s) == std::vector<DiagnosticKind>(3, DiagnosticKind::kUnclassifiedChar));
  }
  SUBCASE("skipped scalar detaches a following matra and nasal") {
    const auto s = SegmentWord(U"ਕxਾੰ");
    CHECK(s.phonemes == std::vector{P::CV(U'ਕ', Vowel::kA)});
    CHECK(Kinds(s) == std::vector{DiagnosticKind::kUnclassifiedChar,
                                  DiagnosticKind::kDanglingMatra,
                                  DiagnosticKind::kDanglingNasal});
  }
}

TEST_CASE("segmentation agrees with the cluster oracle on well-formed text") {
  std::mt19937 rng(99);
  testing::TextShape shape;
  shape.irregular = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const std::u32string text = Normalize(testing::RandomGurmukhi(rng, shape));
    for (const Token& t : Tokenize(text)) {
      if (t.kind != TokenKind::kWord) continue;
      const auto seg = SegmentWord(t.text);
      REQUIRE(seg.diagnostics.empty());
      REQUIRE(seg.phonemes == ClusterOracle(t.text));
    }
  }
}

TEST_CASE("segmentation invariants under fuzzing") {
  std::mt19937 rng(7);
  testing::TextShape shape;
  shape.irregular = 0.3;
  for (int i = 0; i < 3000; ++i) {
    const std::u32string word =
        Normalize(i % 2 ? testing::RandomScalars(rng, 20) : testing::RandomGurmukhi(rng, shape));
    const auto seg = SegmentWord(word);
    const auto again = SegmentWord(word);
    REQUIRE(seg.phonemes == again.phonemes);
    REQUIRE(seg.diagnostics == again.diagnostics);

    std::size_t heads = 0;
    std::size_t nasal_signs = 0;
    for (char32_t c : word) {
      const CharKind k = Classify(c).kind;
      heads += k == CharKind::kConsonant || k == CharKind::kIndependentVowel;
      nasal_signs += k == CharKind::kNasalSign;
    }
    REQUIRE(seg.phonemes.size() == heads);
    const auto nasal_units = std::count_if(seg.phonemes.begin(), seg.phonemes.end(),
                                           [](const Phoneme& p) { return p.nasal; });
    REQUIRE(static_cast<std::size_t>(nasal_units) <= nasal_signs);
    for (const Phoneme& p : seg.phonemes) {
      if (p.consonant) REQUIRE(IsConsonant(*p.consonant));
      REQUIRE(ParseLabel(Label(p)) == p);
    }
    for (const auto& d : seg.diagnostics) REQUIRE(d.position < word.size());
  }
}

TEST_CASE("labels") {
  CHECK(Label(P::CV(U'ਦ', Vowel::kIi)) == "C0A26-V0A08-O");
  CHECK(Label(P::V(Vowel::kAa, true)) == "C----V0A06-N");
  CHECK(Label(P::CV(U'ਮ', Vowel::kA, true)) == "C0A2E-V0A05-N");
  CHECK(ParseLabel("C0A26-V0A08-O") == P::CV(U'ਦ', Vowel::kIi));
  CHECK(ParseLabel("C----V0A06-N") == P::V(Vowel::kAa, true));

  for (std::string_view bad :
       {"", "C0a26-V0A08-O", "C0A26-V0A08-X", "C0A26-V0A3E-O", "C0A15V0A05-O",
        "C0A3C-V0A05-O", "C-----V0A06-N", "C----V0A06-N ", "C0A26-V0A08-ON",
        "X0A26-V0A08-O", "C0A26-V0A08"}) {
    CAPTURE(bad);
    CHECK_FALSE(ParseLabel(bad).has_value());
  }
}

TEST_CASE("labels round trip over the whole universe") {
  const auto universe = PhonemeUniverse();
  REQUIRE(universe.size() == 780);
  REQUIRE(universe.size() == kConsonantCount * kVowelCount * 2 + kVowelCount * 2);
  std::set<std::string> labels;
  for (const Phoneme& p : universe) {
    const std::string label = Label(p);
    REQUIRE(ParseLabel(label) == p);
    labels.insert(label);
  }
  CHECK(labels.size() == 780);
}

TEST_CASE("display rendering") {
  CHECK(Display(P::CV(U'ਦ', Vowel::kIi)) == "ਦੀ");
  CHECK(Display(P::CV(U'ਮ', Vowel::kA, true)) == "ਮੰ");
  CHECK(Display(P::V(Vowel::kAa)) == "ਆ");
  CHECK(Display(P::V(Vowel::kAa, true)) == "ਆਂ");
}

TEST_CASE("generated inventory class totals") {
  const PhonemeInventory all = GenerateInventory({});
  CHECK(all.size() == 780);
  CHECK(all.count(PhonemeClass::kV).total == 10);
  CHECK(all.count(PhonemeClass::kVNasal).total == 10);
  CHECK(all.count(PhonemeClass::kCV).total == 380);
  CHECK(all.count(PhonemeClass::kCVNasal).total == 380);
  CHECK(all.total().valid == 780);
  CHECK(all.total().invalid() == 0);
}

TEST_CASE("placeholder exclusion list reproduces the valid counts") {
  const auto invalid =
      ParseLabelList(testing::ReadFileOrDie(testing::DataPath("invalid_table2_placeholder.txt")));
  REQUIRE(invalid.size() == 58);
  const PhonemeInventory inv = GenerateInventory(invalid);
  CHECK(inv.size() == 780);
  CHECK(inv.count(PhonemeClass::kV).valid == 10);
  CHECK(inv.count(PhonemeClass::kVNasal).valid == 10);
  CHECK(inv.count(PhonemeClass::kCV).valid == 373);
  CHECK(inv.count(PhonemeClass::kCVNasal).valid == 329);
  CHECK(inv.total().valid == 722);
  CHECK(inv.total().invalid() == 58);
}

TEST_CASE("generate_inventory rejects unparseable labels") {
  CHECK_THROWS_AS(GenerateInventory({"C0A26-V0A08-O", "bogus"}), InventoryError);
  CHECK_THROWS_AS(ParseLabelList("C0A26-V0A08-O\nC0A26\n"), InventoryError);
}

TEST_CASE("is_valid matches set membership") {
  const PhonemeInventory all = GenerateInventory({});
  CHECK(IsValid(all, P::CV(U'ਦ', Vowel::kIi)));
  const PhonemeInventory without = GenerateInventory({"C0A26-V0A08-O"});
  CHECK_FALSE(IsValid(without, P::CV(U'ਦ', Vowel::kIi)));
  CHECK(IsValid(without, P::CV(U'ਦ', Vowel::kI)));

  std::mt19937 rng(5);
  const auto universe = PhonemeUniverse();
  for (int round = 0; round < 20; ++round) {
    std::set<std::string> excluded;
    for (const Phoneme& p : universe) {
      if (rng() % 4 == 0) excluded.insert(Label(p));
    }
    const PhonemeInventory inv = GenerateInventory(excluded);
    for (const Phoneme& p : universe) {
      REQUIRE(IsValid(inv, p) == (excluded.count(Label(p)) == 0));
    }
  }
  // Absent from a partial inventory counts as invalid.
  const PhonemeInventory partial({{"C----V0A05-O", {"ਅ", true}}});
  CHECK(IsValid(partial, P::V(Vowel::kA)));
  CHECK_FALSE(IsValid(partial, P::V(Vowel::kAa)));
}

TEST_CASE("inventory file format") {
  const PhonemeInventory inv =
      GenerateInventory({"C0A26-V0A08-O", "C----V0A06-N"});
  const std::string text = SaveInventory(inv);
  CHECK(text.rfind("#katha-inventory v1\n", 0) == 0);
  CHECK(text.find("C0A26-V0A08-O\tਦੀ\t0\n") != std::string::npos);
  CHECK(LoadInventory(text) == inv);

  CHECK_THROWS_AS(LoadInventory(""), InventoryError);
  CHECK_THROWS_AS(LoadInventory("#katha-inventory v2\n"), InventoryError);
  CHECK_THROWS_AS(LoadInventory("#katha-inventory v1\nC0A26-V0A08-O\tਦੀ\t2\n"),
                  InventoryError);
  CHECK_THROWS_AS(LoadInventory("#katha-inventory v1\nC0A26-V0A08-o\tਦੀ\t1\n"),
                  InventoryError);
  CHECK_THROWS_AS(LoadInventory("#katha-inventory v1\nC0A26-V0A08-O\tਦੀ\t1\n"
                                "C0A26-V0A08-O\tਦੀ\t1\n"),
                  InventoryError);
  const auto small = LoadInventory("#katha-inventory v1\n# c\n\nC----V0A05-O\tਅ\t1\r\n");
  CHECK(small.size() == 1);
  CHECK(small.count(PhonemeClass::kV).total == 1);
}

TEST_CASE("shipped inventory files") {
  const auto all = LoadInventory(testing::ReadFileOrDie(testing::DataPath("inventory_default.tsv")));
  CHECK(all == GenerateInventory({}));
  const auto placeholder = LoadInventory(
      testing::ReadFileOrDie(testing::DataPath("inventory_table2_placeholder.tsv")));
  CHECK(placeholder.total().valid == 722);
  CHECK(placeholder.count(PhonemeClass::kCV).valid == 373);
  CHECK(placeholder.count(PhonemeClass::kCVNasal).valid == 329);
}

}  // namespace
}  // namespace katha
