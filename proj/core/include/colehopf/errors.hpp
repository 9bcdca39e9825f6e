#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace colehopf {

/// Failure with a stable machine-readable code. The CLI mirrors code,
/// message and context verbatim into its JSON error object.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::map<std::string, std::string> context = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::map<std::string, std::string>& context() const noexcept { return context_; }

 private:
  std::string code_;
  std::map<std::string, std::string> context_;
};

}  // namespace colehopf
