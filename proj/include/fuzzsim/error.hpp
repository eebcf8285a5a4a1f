#ifndef FUZZSIM_ERROR_HPP
#define FUZZSIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fuzzsim {

/// Usage error: mismatched lattices, bad shapes, invalid arguments.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document (JSON structure, unknown keys, bad values).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace fuzzsim

#endif
