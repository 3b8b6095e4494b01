#include "opm/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace opm {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + reason),
      line_(line),
      column_(column) {}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string trim(const std::string& s, std::size_t* leading = nullptr) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (leading) *leading = b;
  return s.substr(b, e - b);
}

}  // namespace

PositiveValue parse_positive_literal(const std::string& token) {
  if (token.empty()) throw std::domain_error("empty value");

  Rational r;
  if (const auto slash = token.find('/'); slash != std::string::npos) {
    const std::string num = token.substr(0, slash);
    const std::string den = token.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::domain_error("bad rational literal '" + token +
                              "' (expected p/q with positive integers)");
    r = Rational::from_integer_strings(num, den);
  } else if (const auto dot = token.find('.'); dot != std::string::npos) {
    const std::string int_part = token.substr(0, dot);
    const std::string frac_part = token.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw std::domain_error("bad decimal literal '" + token + "'");
    // exact decimal fraction: digits over a power of ten
    const std::string digits = int_part + frac_part;
    r = Rational::from_integer_strings(digits.empty() ? "0" : digits,
                                       "1" + std::string(frac_part.size(), '0'));
  } else if (all_digits(token)) {
    r = Rational::from_integer_strings(token, "1");
  } else {
    throw std::domain_error("bad value literal '" + token + "'");
  }

  if (!r.is_positive())
    throw std::domain_error("value must be positive, got '" + token + "'");
  return PositiveValue::exact(std::move(r));
}

InputRecord parse_record(const std::string& line, std::size_t line_number,
                         std::size_t record_index) {
  std::string body = line;
  std::size_t body_offset = 0;
  std::string name = "seq" + std::to_string(record_index);

  if (const auto eq = line.find('='); eq != std::string::npos) {
    std::size_t lead = 0;
    name = trim(line.substr(0, eq), &lead);
    if (name.empty())
      throw ParseError(line_number, 1, "empty record name before '='");
    if (name.find(',') != std::string::npos)
      throw ParseError(line_number, lead + 1, "record name contains ','");
    body = line.substr(eq + 1);
    body_offset = eq + 1;
  }

  std::vector<Scalar> values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    const std::string field =
        comma == std::string::npos ? body.substr(pos)
                                   : body.substr(pos, comma - pos);
    std::size_t lead = 0;
    const std::string token = trim(field, &lead);
    const std::size_t column = body_offset + pos + lead + 1;
    if (token.empty())
      throw ParseError(line_number, column, "empty value");
    try {
      values.push_back(parse_positive_literal(token).scalar());
    } catch (const std::domain_error& e) {
      throw ParseError(line_number, column, e.what());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return {std::move(name),
          ValueSequence::from_scalars(values)};
}

std::vector<InputRecord> parse_records(const std::string& text) {
  std::vector<InputRecord> records;
  std::istringstream in(text);
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    records.push_back(parse_record(line, line_number, records.size() + 1));
  }
  return records;
}

std::vector<InputRecord> parse_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_records(buf.str());
}

std::string format_sig6(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::string format_table_value(const Scalar& s) {
  return s.is_exact() ? s.rational().str() : format_sig6(s.approx_value());
}

}  // namespace opm
