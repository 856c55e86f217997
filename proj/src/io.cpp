#include "zono/io.hpp"

#include <sstream>

namespace zono {

std::string to_string(DocumentKind kind) {
  switch (kind) {
  case DocumentKind::generators:
    return "generators";
  case DocumentKind::vertices:
    return "vertices";
  case DocumentKind::points:
    return "points";
  }
  return "points";
}

namespace {

std::vector<std::string> tokens_of(const std::string &line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

DocumentKind parse_kind(const std::string &word, std::size_t line) {
  if (word == "generators") return DocumentKind::generators;
  if (word == "vertices") return DocumentKind::vertices;
  if (word == "points") return DocumentKind::points;
  throw ParseError(line, "unknown document kind '" + word + "'");
}

} // namespace

Document parse_document(std::istream &in) {
  Document doc;
  bool have_header = false;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2) throw ParseError(lineno, "expected header '<kind> <dim>'");
      doc.kind = parse_kind(toks[0], lineno);
      try {
        std::size_t used = 0;
        unsigned long dim = std::stoul(toks[1], &used);
        if (used != toks[1].size() || toks[1].front() == '-') throw std::invalid_argument("dim");
        doc.dim = dim;
      } catch (const std::exception &) {
        throw ParseError(lineno, "malformed dimension '" + toks[1] + "'");
      }
      have_header = true;
      continue;
    }
    if (toks.size() != doc.dim)
      throw ParseError(lineno, "expected " + std::to_string(doc.dim) + " coordinates, found " +
                                   std::to_string(toks.size()));
    std::vector<Rational> coords;
    coords.reserve(toks.size());
    for (const auto &t : toks) {
      try {
        coords.push_back(parse_rational(t));
      } catch (const InputError &e) {
        throw ParseError(lineno, e.what());
      }
    }
    doc.rows.emplace_back(std::move(coords));
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
  return doc;
}

Document parse_document(const std::string &text) {
  std::istringstream in(text);
  return parse_document(in);
}

void write_document(std::ostream &out, const Document &doc, const std::vector<std::string> &comments) {
  out << to_string(doc.kind) << ' ' << doc.dim << '\n';
  for (std::size_t r = 0; r < doc.rows.size(); ++r) {
    const auto &row = doc.rows[r];
    for (std::size_t i = 0; i < row.dim(); ++i) out << (i ? " " : "") << to_string(row[i]);
    if (r < comments.size() && !comments[r].empty()) out << (row.dim() ? "  # " : "# ") << comments[r];
    out << '\n';
  }
}

} // namespace zono
