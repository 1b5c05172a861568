#include <cstdio>
#include <string>

#include "chunkalign/error.h"
#include "chunkalign/ratio.h"

namespace chunkalign {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "io error";
    case ErrorCode::kInvalidUtf8: return "invalid utf-8";
    case ErrorCode::kEmptyCorpus: return "empty corpus";
    case ErrorCode::kFormat: return "format error";
    case ErrorCode::kInvalidArgument: return "invalid argument";
  }
  return "error";
}

namespace {

std::string with_line(const std::string& message, std::size_t line) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(with_line(message, line)), code_(code), line_(line) {}

Ratio parse_ratio(std::string_view text) {
  const auto fail = [&] {
    return Error(ErrorCode::kInvalidArgument, "not a non-negative decimal: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_point) throw fail();
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') throw fail();
    seen_digit = true;
    if (num > (UINT64_MAX - 9) / 10 || (seen_point && den > UINT64_MAX / 10)) throw fail();
    num = num * 10 + static_cast<std::uint64_t>(c - '0');
    if (seen_point) den *= 10;
  }
  if (!seen_digit) throw fail();
  return Ratio{num, den};
}

std::string format_fixed4(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace chunkalign
