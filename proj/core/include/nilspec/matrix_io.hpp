#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nilspec/matrix.hpp"

namespace nilspec {

/// Malformed input text, located by 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

/// Whitespace-separated token with its 1-based column.
struct Token {
  std::string_view text;
  std::size_t column;
};

/// Splits a line into tokens. Lines whose first non-blank character is `#`
/// yield no tokens.
std::vector<Token> tokenize_line(std::string_view line);

// Matrix text format:
//   # comment
//   rows cols
//   a11 a12 ...     (rows lines of cols rationals, `p` or `p/q`)
QMat read_matrix(std::istream& in, const std::string& source = "<input>");
QMat read_matrix_file(const std::filesystem::path& path);
QMat parse_matrix(std::string_view text, const std::string& source = "<string>");

std::string format_matrix(const QMat& m);

}  // namespace nilspec
