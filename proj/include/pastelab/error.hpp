#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pastelab {

// All library failures carry a short machine-readable code ("ParseError",
// "NotAbove", ...) next to the human-readable message.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& what)
      : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

struct Violation {
  std::string code;
  std::string message;
};

// Scheme validation reports every violation it finds, not just the first.
struct ValidationError : Error {
  std::vector<Violation> violations;
  explicit ValidationError(std::vector<Violation> v)
      : Error(v.empty() ? "ValidationError" : v.front().code, summarize(v)),
        violations(std::move(v)) {}

 private:
  static std::string summarize(const std::vector<Violation>& v) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += "; ";
      s += x.code + ": " + x.message;
    }
    return s.empty() ? std::string("no violations") : s;
  }
};

}  // namespace pastelab
