#ifndef NAMELINK_ERROR_HPP
#define NAMELINK_ERROR_HPP

#include <cstddef>
#include <fstream>
#include <filesystem>
#include <iterator>
#include <stdexcept>
#include <string>

namespace namelink {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed lexicon or list file. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input records that violate a data invariant (bad spans, unknown documents).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Lookup of a key that must exist (e.g. a title outside the title table).
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent configuration detected before any work starts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// File-system failure.
class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("failed reading " + path.string());
  return data;
}

inline void write_file(const std::filesystem::path& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << data;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace namelink

#endif  // NAMELINK_ERROR_HPP
