#include "katha/gurmukhi_text.h"

#include <algorithm>

#include "katha/utf8.h"

namespace katha {
namespace {

struct VowelForms {
  char32_t independent;
  char32_t sign;  // 0 for the inherent vowel
  std::string_view name;
};

constexpr std::array<VowelForms, kVowelCount> kVowelTable = {{
    {0x0A05, 0, "a"},
    {0x0A06, 0x0A3E, "aa"},
    {0x0A07, 0x0A3F, "i"},
    {0x0A08, 0x0A40, "ii"},
    {0x0A09, 0x0A41, "u"},
    {0x0A0A, 0x0A42, "uu"},
    {0x0A0F, 0x0A47, "e"},
    {0x0A10, 0x0A48, "ai"},
    {0x0A13, 0x0A4B, "o"},
    {0x0A14, 0x0A4C, "au"},
}};

struct Composition {
  char32_t first;
  char32_t second;
  char32_t composed;
};

constexpr char32_t kCarrierUra = 0x0A73;   // ੳ
constexpr char32_t kCarrierAira = 0x0A05;  // ਅ
constexpr char32_t kCarrierIri = 0x0A72;   // ੲ

constexpr std::array<Composition, 15> kCompositions = {{
    {0x0A38, kNukta, 0x0A36},  // ਸ਼
    {0x0A16, kNukta, 0x0A59},  // ਖ਼
    {0x0A17, kNukta, 0x0A5A},  // ਗ਼
    {0x0A1C, kNukta, 0x0A5B},  // ਜ਼
    {0x0A2B, kNukta, 0x0A5E},  // ਫ਼
    {0x0A32, kNukta, 0x0A33},  // ਲ਼
    {kCarrierAira, 0x0A3E, 0x0A06},
    {kCarrierAira, 0x0A48, 0x0A10},
    {kCarrierAira, 0x0A4C, 0x0A14},
    {kCarrierIri, 0x0A3F, 0x0A07},
    {kCarrierIri, 0x0A40, 0x0A08},
    {kCarrierIri, 0x0A47, 0x0A0F},
    {kCarrierUra, 0x0A41, 0x0A09},
    {kCarrierUra, 0x0A42, 0x0A0A},
    {kCarrierUra, 0x0A4B, 0x0A13},
}};

bool IsWhitespace(char32_t c) {
  switch (c) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

}  // namespace

char32_t IndependentForm(Vowel v) {
  return kVowelTable[static_cast<std::size_t>(v)].independent;
}

std::optional<char32_t> SignForm(Vowel v) {
  const char32_t sign = kVowelTable[static_cast<std::size_t>(v)].sign;
  if (sign == 0) return std::nullopt;
  return sign;
}

std::optional<Vowel> VowelFromIndependent(char32_t scalar) {
  for (std::size_t i = 0; i < kVowelTable.size(); ++i) {
    if (kVowelTable[i].independent == scalar) return static_cast<Vowel>(i);
  }
  return std::nullopt;
}

bool IsConsonant(char32_t scalar) {
  return std::find(kConsonants.begin(), kConsonants.end(), scalar) !=
         kConsonants.end();
}

std::string_view VowelName(Vowel v) {
  return kVowelTable[static_cast<std::size_t>(v)].name;
}

std::string_view CharKindName(CharKind kind) {
  switch (kind) {
    case CharKind::kConsonant: return "Consonant";
    case CharKind::kIndependentVowel: return "IndependentVowel";
    case CharKind::kVowelSign: return "VowelSign";
    case CharKind::kNasalSign: return "NasalSign";
    case CharKind::kVirama: return "Virama";
    case CharKind::kAdhak: return "Adhak";
    case CharKind::kNukta: return "Nukta";
    case CharKind::kDigit: return "Digit";
    case CharKind::kWhitespace: return "Whitespace";
    case CharKind::kPunctuation: return "Punctuation";
    case CharKind::kOther: return "Other";
  }
  return "Other";
}

CharClass Classify(char32_t c) {
  if (IsConsonant(c)) return {CharKind::kConsonant, c, Vowel::kA};
  for (std::size_t i = 0; i < kVowelTable.size(); ++i) {
    const auto v = static_cast<Vowel>(i);
    if (kVowelTable[i].independent == c) {
      return {CharKind::kIndependentVowel, 0, v};
    }
    if (kVowelTable[i].sign != 0 && kVowelTable[i].sign == c) {
      return {CharKind::kVowelSign, 0, v};
    }
  }
  switch (c) {
    case kTippi:
    case kBindi:
      return {CharKind::kNasalSign};
    case kVirama:
      return {CharKind::kVirama};
    case kAdhak:
      return {CharKind::kAdhak};
    case kNukta:
      return {CharKind::kNukta};
    case 0x0964:  // ।
    case 0x0965:  // ॥
    case 0x0A76:  // ੶
      return {CharKind::kPunctuation};
    default:
      break;
  }
  if ((c >= 0x0A66 && c <= 0x0A6F) || (c >= U'0' && c <= U'9')) {
    return {CharKind::kDigit};
  }
  if (IsWhitespace(c)) return {CharKind::kWhitespace};
  return {CharKind::kOther};
}

std::u32string Normalize(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (i + 1 < text.size()) {
      const auto it = std::find_if(
          kCompositions.begin(), kCompositions.end(), [&](const Composition& k) {
            return k.first == text[i] && k.second == text[i + 1];
          });
      if (it != kCompositions.end()) {
        out.push_back(it->composed);
        i += 2;
        continue;
      }
    }
    out.push_back(text[i]);
    ++i;
  }
  return out;
}

std::vector<Token> Tokenize(std::u32string_view normalized) {
  std::vector<Token> tokens;
  std::size_t byte_offset = 0;
  for (char32_t c : normalized) {
    const CharKind kind = Classify(c).kind;
    const TokenKind token_kind =
        (kind == CharKind::kWhitespace || kind == CharKind::kPunctuation)
            ? TokenKind::kSeparator
            : TokenKind::kWord;
    if (tokens.empty() || tokens.back().kind != token_kind) {
      tokens.push_back({token_kind, {}, byte_offset, byte_offset});
    }
    Token& token = tokens.back();
    token.text.push_back(c);
    byte_offset += Utf8Length(c);
    token.byte_end = byte_offset;
  }
  return tokens;
}

}  // namespace katha
