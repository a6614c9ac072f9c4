#pragma once

#include <string>
#include <string_view>

#include "fibhill/error.hpp"

namespace fibhill::detail {

inline std::u32string utf8_decode(std::string_view in) {
  std::u32string out;
  std::size_t i = 0;
  auto bad = [&] { throw Error(Errc::parse_error, "invalid UTF-8 at byte " + std::to_string(i)); };
  while (i < in.size()) {
    const auto lead = static_cast<unsigned char>(in[i]);
    int extra = 0;
    char32_t cp = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
    } else {
      bad();
    }
    if (i + static_cast<std::size_t>(extra) >= in.size()) bad();
    for (int t = 1; t <= extra; ++t) {
      const auto cont = static_cast<unsigned char>(in[i + static_cast<std::size_t>(t)]);
      if ((cont & 0xC0) != 0x80) bad();
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad();
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

inline void utf8_append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string utf8_encode(std::u32string_view in) {
  std::string out;
  for (char32_t cp : in) utf8_append(out, cp);
  return out;
}

}  // namespace fibhill::detail
