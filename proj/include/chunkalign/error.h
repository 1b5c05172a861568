#ifndef CHUNKALIGN_ERROR_H_
#define CHUNKALIGN_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chunkalign {

enum class ErrorCode {
  kIo,
  kInvalidUtf8,
  kEmptyCorpus,
  kFormat,
  kInvalidArgument,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this exception. `line` is the
// 1-based input line for format errors, 0 when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace chunkalign

#endif  // CHUNKALIGN_ERROR_H_
