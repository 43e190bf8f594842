#include "grhom/errors.hpp"

namespace grhom {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed: return "malformed";
    case ParseErrorKind::bad_header: return "bad-header";
    case ParseErrorKind::bad_degree_arity: return "bad-degree-arity";
    case ParseErrorKind::coeff_out_of_range: return "coeff-out-of-range";
    case ParseErrorKind::unsorted_rows: return "unsorted-rows";
    case ParseErrorKind::row_out_of_range: return "row-out-of-range";
    case ParseErrorKind::grading_violation: return "grading-violation";
    case ParseErrorKind::count_mismatch: return "count-mismatch";
    case ParseErrorKind::unsupported_dimension: return "unsupported-dimension";
    case ParseErrorKind::non_integer_grade: return "non-integer-grade";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& detail)
    : Error(std::string(to_string(kind)) + " at line " + std::to_string(line) +
            ", column " + std::to_string(column) + ": " + detail),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace grhom
