#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "opm/sequence.hpp"

namespace opm {

/// Input parse failure carrying 1-based line and column positions.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& reason);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One named record of positive values. Literals parse into exact mode:
/// "p/q" keeps the fraction as written, decimal literals become their exact
/// decimal fraction (0.85 = 17/20), integers stay integers. Records without
/// a "name=" prefix get automatic names seq1, seq2, ...
struct InputRecord {
  std::string name;
  ValueSequence values;
};

/// Parses one positive literal: "p/q", integer, or decimal. Throws
/// std::domain_error with a reason on malformed or non-positive input.
PositiveValue parse_positive_literal(const std::string& token);

/// Parses one record line "name=v1,v2,..." or "v1,v2,...". line_number feeds
/// error positions; record_index feeds the automatic name.
InputRecord parse_record(const std::string& line, std::size_t line_number,
                         std::size_t record_index);

/// Parses one record per nonblank line.
std::vector<InputRecord> parse_records(const std::string& text);

std::vector<InputRecord> parse_records_file(const std::string& path);

/// Decimal with 6 significant digits, the rendering the reports use.
std::string format_sig6(double x);

/// A scalar for table output: exact values render as fractions, approx
/// values as 6-significant-digit decimals.
std::string format_table_value(const Scalar& s);

}  // namespace opm
