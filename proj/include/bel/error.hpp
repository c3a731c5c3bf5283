#ifndef BEL_ERROR_HPP
#define BEL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bel {

// Malformed input text (graph files, command-line values).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An exhaustive search was asked to run beyond its configured size cap.
class SizeCapError : public std::runtime_error {
 public:
  SizeCapError(const std::string& operation, int size, int cap)
      : std::runtime_error(operation + ": size " + std::to_string(size) + " exceeds cap " +
                           std::to_string(cap)),
        operation_(operation) {}
  const std::string& operation() const noexcept { return operation_; }

 private:
  std::string operation_;
};

}  // namespace bel

#endif  // BEL_ERROR_HPP
