#include "nilspec/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace nilspec {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    if (pos >= line.size()) break;
    if (line[pos] == '#') {
      if (tokens.empty()) return tokens;
      break;
    }
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    tokens.push_back({line.substr(start, pos - start), start + 1});
  }
  return tokens;
}

namespace {

std::size_t parse_count(const Token& tok, const std::string& source, std::size_t line_no) {
  try {
    Integer v = parse_integer(tok.text);
    if (v < 0 || !v.fits_ulong_p()) throw std::invalid_argument("negative");
    return static_cast<std::size_t>(v.get_ui());
  } catch (const std::invalid_argument&) {
    throw ParseError(source, line_no, tok.column,
                     "expected a non-negative count, got '" + std::string(tok.text) + "'");
  }
}

}  // namespace

QMat read_matrix(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t rows = 0, cols = 0, filled = 0;
  std::vector<Rat> entries;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize_line(line);
    if (tokens.empty()) continue;
    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(source, line_no, tokens.front().column,
                         "header must be 'rows cols'");
      }
      rows = parse_count(tokens[0], source, line_no);
      cols = parse_count(tokens[1], source, line_no);
      entries.reserve(rows * cols);
      have_header = true;
      continue;
    }
    if (filled == rows) {
      throw ParseError(source, line_no, tokens.front().column,
                       "more than " + std::to_string(rows) + " data rows");
    }
    if (tokens.size() != cols) {
      const std::size_t col = tokens.size() > cols ? tokens[cols].column : line.size() + 1;
      throw ParseError(source, line_no, col,
                       "expected " + std::to_string(cols) + " entries, found " +
                           std::to_string(tokens.size()));
    }
    for (const auto& tok : tokens) {
      try {
        entries.push_back(parse_rat(tok.text));
      } catch (const std::invalid_argument& e) {
        throw ParseError(source, line_no, tok.column, e.what());
      }
    }
    ++filled;
  }
  if (!have_header) throw ParseError(source, line_no + 1, 1, "missing 'rows cols' header");
  if (filled != rows) {
    throw ParseError(source, line_no + 1, 1,
                     "expected " + std::to_string(rows) + " data rows, found " +
                         std::to_string(filled));
  }
  return QMat(rows, cols, std::move(entries));
}

QMat read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file " + path.string());
  return read_matrix(in, path.string());
}

QMat parse_matrix(std::string_view text, const std::string& source) {
  std::istringstream in{std::string(text)};
  return read_matrix(in, source);
}

std::string format_matrix(const QMat& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_string(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

QMat to_rational(const ZMat& m) {
  QMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

ZMat to_integer(const QMat& m) {
  ZMat out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) {
        throw std::invalid_argument("entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") is not an integer");
      }
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

}  // namespace nilspec
