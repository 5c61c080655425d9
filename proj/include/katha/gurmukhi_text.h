#ifndef KATHA_GURMUKHI_TEXT_H_
#define KATHA_GURMUKHI_TEXT_H_

// Gurmukhi character classification, normalization and word tokenization.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace katha {

// The ten vowel identities, in the order a ā i ī u ū e ai o au.
enum class Vowel : std::uint8_t { kA, kAa, kI, kIi, kU, kUu, kE, kAi, kO, kAu };

inline constexpr std::size_t kVowelCount = 10;
inline constexpr std::size_t kConsonantCount = 38;

inline constexpr std::array<Vowel, kVowelCount> kAllVowels = {
    Vowel::kA, Vowel::kAa, Vowel::kI, Vowel::kIi, Vowel::kU,
    Vowel::kUu, Vowel::kE, Vowel::kAi, Vowel::kO, Vowel::kAu};

// Base consonant code points: 32 core letters followed by the 6 nukta
// letters, in the order of the traditional Gurmukhi alphabet.
inline constexpr std::array<char32_t, kConsonantCount> kConsonants = {
    0x0A38, 0x0A39, 0x0A15, 0x0A16, 0x0A17, 0x0A18, 0x0A19,  // ਸ ਹ ਕ ਖ ਗ ਘ ਙ
    0x0A1A, 0x0A1B, 0x0A1C, 0x0A1D, 0x0A1E,                  // ਚ ਛ ਜ ਝ ਞ
    0x0A1F, 0x0A20, 0x0A21, 0x0A22, 0x0A23,                  // ਟ ਠ ਡ ਢ ਣ
    0x0A24, 0x0A25, 0x0A26, 0x0A27, 0x0A28,                  // ਤ ਥ ਦ ਧ ਨ
    0x0A2A, 0x0A2B, 0x0A2C, 0x0A2D, 0x0A2E,                  // ਪ ਫ ਬ ਭ ਮ
    0x0A2F, 0x0A30, 0x0A32, 0x0A35, 0x0A5C,                  // ਯ ਰ ਲ ਵ ੜ
    0x0A36, 0x0A59, 0x0A5A, 0x0A5B, 0x0A5E, 0x0A33,          // nukta letters
};

inline constexpr char32_t kTippi = 0x0A70;
inline constexpr char32_t kBindi = 0x0A02;
inline constexpr char32_t kVirama = 0x0A4D;
inline constexpr char32_t kAdhak = 0x0A71;
inline constexpr char32_t kNukta = 0x0A3C;

// Independent letter for the vowel (ਅ ਆ ਇ ਈ ਉ ਊ ਏ ਐ ਓ ਔ).
char32_t IndependentForm(Vowel v);
// Dependent sign (matra); absent for the inherent vowel a.
std::optional<char32_t> SignForm(Vowel v);
std::optional<Vowel> VowelFromIndependent(char32_t scalar);
bool IsConsonant(char32_t scalar);
// Short romanization ("a", "aa", "i", "ii", ...), for diagnostics.
std::string_view VowelName(Vowel v);

enum class CharKind : std::uint8_t {
  kConsonant,
  kIndependentVowel,
  kVowelSign,
  kNasalSign,
  kVirama,
  kAdhak,
  kNukta,
  kDigit,
  kWhitespace,
  kPunctuation,
  kOther,
};

std::string_view CharKindName(CharKind kind);

struct CharClass {
  CharKind kind = CharKind::kOther;
  // Meaningful for kConsonant only.
  char32_t consonant = 0;
  // Meaningful for kIndependentVowel and kVowelSign only.
  Vowel vowel = Vowel::kA;

  friend bool operator==(const CharClass&, const CharClass&) = default;
};

// Total: every scalar maps to exactly one class; unknown scalars are kOther.
CharClass Classify(char32_t scalar);

// Composes base+nukta pairs into the precomposed nukta letters and vowel
// carrier+matra pairs into independent vowels. Idempotent, never lengthens.
std::u32string Normalize(std::u32string_view text);

enum class TokenKind : std::uint8_t { kWord, kSeparator };

struct Token {
  TokenKind kind = TokenKind::kWord;
  std::u32string text;
  // UTF-8 byte offsets [begin, end) into the tokenized text.
  std::size_t byte_begin = 0;
  std::size_t byte_end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Splits into maximal word runs and maximal whitespace/punctuation runs.
std::vector<Token> Tokenize(std::u32string_view normalized);

}  // namespace katha

#endif  // KATHA_GURMUKHI_TEXT_H_
