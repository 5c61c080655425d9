#ifndef KATHA_UTF8_H_
#define KATHA_UTF8_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace katha {

// Raised on ill-formed UTF-8; offset is the byte where decoding failed.
class Utf8Error : public std::runtime_error {
 public:
  Utf8Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Strict decoder: rejects overlong forms, surrogates and values above
// U+10FFFF.
std::u32string DecodeUtf8(std::string_view bytes);

std::string EncodeUtf8(std::u32string_view scalars);
void AppendUtf8(char32_t scalar, std::string* out);
std::size_t Utf8Length(char32_t scalar);

}  // namespace katha

#endif  // KATHA_UTF8_H_
