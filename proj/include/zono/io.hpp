#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zono/rational.hpp"

namespace zono {

// Text format:
//
//   <kind> <dim>
//   <r_1> ... <r_dim>
//   ...
//
// where kind is "generators", "vertices" or "points" and each r_i is an
// integer "p" or a fraction "p/q". Blank lines are ignored and '#' starts a
// comment that runs to the end of the line.

enum class DocumentKind { generators, vertices, points };

struct Document {
  DocumentKind kind = DocumentKind::points;
  std::size_t dim = 0;
  std::vector<RationalPoint> rows;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

std::string to_string(DocumentKind kind);

Document parse_document(std::istream &in);
Document parse_document(const std::string &text);

/// Writes the header and one row per line, LF-terminated. When `comments` is
/// non-empty it must have one entry per row; non-empty entries are appended
/// as "  # <comment>".
void write_document(std::ostream &out, const Document &doc, const std::vector<std::string> &comments = {});

} // namespace zono
