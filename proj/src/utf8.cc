#include "katha/utf8.h"

#include <cstdint>

namespace katha {

std::u32string DecodeUtf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<std::uint8_t>(bytes[i]);
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    std::size_t extra = 0;
    char32_t value = 0;
    char32_t min_value = 0;
    if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      value = lead & 0x1F;
      min_value = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      value = lead & 0x0F;
      min_value = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      value = lead & 0x07;
      min_value = 0x10000;
    } else {
      throw Utf8Error("invalid UTF-8 lead byte", i);
    }
    if (i + extra >= bytes.size()) {
      throw Utf8Error("truncated UTF-8 sequence", i);
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<std::uint8_t>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw Utf8Error("invalid UTF-8 continuation byte", i + k);
      }
      value = (value << 6) | (cont & 0x3F);
    }
    if (value < min_value) throw Utf8Error("overlong UTF-8 sequence", i);
    if (value >= 0xD800 && value <= 0xDFFF) {
      throw Utf8Error("UTF-8 encoded surrogate", i);
    }
    if (value > 0x10FFFF) throw Utf8Error("scalar above U+10FFFF", i);
    out.push_back(value);
    i += extra + 1;
  }
  return out;
}

std::size_t Utf8Length(char32_t scalar) {
  if (scalar < 0x80) return 1;
  if (scalar < 0x800) return 2;
  if (scalar < 0x10000) return 3;
  return 4;
}

void AppendUtf8(char32_t c, std::string* out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string EncodeUtf8(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size() * 3);
  for (char32_t c : scalars) AppendUtf8(c, &out);
  return out;
}

}  // namespace katha
