#ifndef NAMELINK_UNICODE_HPP
#define NAMELINK_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "namelink/error.hpp"

// UTF-8 <-> code point helpers. Every offset in this library counts
// Unicode scalar values, never bytes.
namespace namelink::unicode {

inline constexpr char32_t kReplacementChar = U'\uFFFD';

/// Decodes UTF-8. Ill-formed sequences decode to U+FFFD, so this never fails.
inline std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(utf8.data());
  const auto length = static_cast<std::int32_t>(utf8.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    out.push_back(c < 0 ? kReplacementChar : static_cast<char32_t>(c));
  }
  return out;
}

inline bool is_valid_utf8(std::string_view utf8) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(utf8.data());
  const auto length = static_cast<std::int32_t>(utf8.size());
  std::int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) return false;
  }
  return true;
}

inline void append_utf8(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

inline std::string encode(std::u32string_view chars) {
  std::string out;
  out.reserve(chars.size());
  for (char32_t c : chars) append_utf8(out, c);
  return out;
}

inline bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)) != 0; }

inline bool is_upper_initial(char32_t c) {
  const auto cp = static_cast<UChar32>(c);
  return u_isupper(cp) != 0 || u_istitle(cp) != 0;
}

inline bool is_lower(char32_t c) { return u_islower(static_cast<UChar32>(c)) != 0; }

inline bool is_letter(char32_t c) { return u_isalpha(static_cast<UChar32>(c)) != 0; }

namespace detail {

inline const icu::Normalizer2& nfc() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status) || n == nullptr) throw Error("ICU NFC normalizer unavailable");
    return n;
  }();
  return *instance;
}

inline icu::UnicodeString nfc_fold_once(const icu::UnicodeString& in) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString s = nfc().normalize(in, status);
  s.foldCase(U_FOLD_CASE_DEFAULT);
  s = nfc().normalize(s, status);
  if (U_FAILURE(status)) throw Error("ICU normalization failed");
  return s;
}

}  // namespace detail

/// NFC + full case folding, iterated to a fixed point (folding can
/// un-compose a handful of characters).
inline std::string nfc_casefold(std::string_view utf8) {
  icu::UnicodeString s =
      icu::UnicodeString::fromUTF8(icu::StringPiece(utf8.data(), static_cast<std::int32_t>(utf8.size())));
  for (int round = 0; round < 4; ++round) {
    icu::UnicodeString next = detail::nfc_fold_once(s);
    if (next == s) break;
    s = std::move(next);
  }
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace namelink::unicode

#endif  // NAMELINK_UNICODE_HPP
