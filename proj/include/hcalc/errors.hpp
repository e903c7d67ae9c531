#pragma once

#include <stdexcept>
#include <string>

namespace hcalc {

// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax or identifier error in the text format. Line/column are 1-based;
// column 0 means "whole line".
struct parse_error : error {
  parse_error(const std::string& msg, int line_no = 0, int column_no = 0)
      : error(format(msg, line_no, column_no)), line(line_no), column(column_no) {}
  int line;
  int column;

 private:
  static std::string format(const std::string& msg, int line_no, int column_no) {
    if (line_no <= 0) return msg;
    std::string out = "line " + std::to_string(line_no);
    if (column_no > 0) out += ", column " + std::to_string(column_no);
    out += ": " + msg;
    return out;
  }
};

// An enumeration or search exceeded its configured budget.
struct budget_error : error {
  using error::error;
};

// A supplied witness (certificate, decomposition, precondition) failed to check.
struct verify_error : error {
  using error::error;
};

}  // namespace hcalc
