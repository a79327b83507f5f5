#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "curve_complex.hpp"

namespace sd {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// Parses the plain-text diagram format. Throws ParseError on malformed
/// input; does not validate the resulting complex.
CurveComplex parse_diagram(const std::string& text);
CurveComplex load_diagram(const std::string& path);

/// Canonical emission: fixed field order, ids ascending, single spaces, LF.
/// parse(emit(c)) is structurally equal to c.
std::string emit_diagram(const CurveComplex& cx);

} // namespace sd
