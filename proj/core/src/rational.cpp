#include "nilspec/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nilspec {
namespace {

bool is_integer_literal(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  if (pos == text.size()) return false;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
  }
  return true;
}

Integer integer_from(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return Integer(digits, 10);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return integer_from(text);
}

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text));
  }
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Integer den = integer_from(den_text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Rat value(integer_from(num_text), den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

int sign(const Rat& value) { return sgn(value); }
int sign(const Integer& value) { return sgn(value); }

}  // namespace nilspec
