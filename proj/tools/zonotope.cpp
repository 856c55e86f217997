// Command-line front end: zonotope vertices, zonotope recognition, greatest
// zonotopal summand, polytope graphs and small faces over exact rationals.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zono/io.hpp"
#include "zono/polygraph.hpp"
#include "zono/summand.hpp"
#include "zono/zonotope.hpp"

namespace {

using namespace zono;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNegative = 2;

struct Options {
  std::string input = "-";
  std::string output;
  int threads = 1;
  bool xi = false;
  bool count_only = false;
  std::size_t max_face_size = kDefaultMaxFaceSize;
  std::string generators_out;
  std::string residual_out;
};

Execution execution(const Options &opt) { return opt.threads > 1 ? Execution::parallel : Execution::serial; }

Document read_input(const std::string &path) {
  if (path == "-") return parse_document(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return parse_document(in);
}

// Runs `emit` against stdout or the named file.
template <class Emit>
void with_output(const std::string &path, Emit &&emit) {
  if (path.empty() || path == "-") {
    emit(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  emit(out);
}

void require_kind(const Document &doc, DocumentKind kind) {
  if (doc.kind != kind)
    throw InputError("expected a " + to_string(kind) + " document, got " + to_string(doc.kind));
}

std::vector<RationalPoint> distinct_points(const Document &doc) {
  auto points = unique_points(doc.rows);
  if (points.size() != doc.rows.size())
    std::cerr << "warning: dropped " << doc.rows.size() - points.size() << " duplicate point(s)\n";
  return points;
}

// Reduces a point list to the vertices of its hull, warning about interior points.
std::vector<RationalPoint> polytope_vertices(const Document &doc, Execution exec) {
  if (doc.rows.empty()) throw InputError("the input has no points");
  auto points = distinct_points(doc);
  auto vertices = hull_vertices(PointSet(doc.dim, points), exec);
  if (vertices.size() != points.size())
    std::cerr << "warning: dropped " << points.size() - vertices.size() << " non-vertex point(s)\n";
  return vertices;
}

int cmd_vertices(const Options &opt) {
  Document doc = read_input(opt.input);
  require_kind(doc, DocumentKind::generators);
  std::vector<RationalPoint> nonzero;
  for (const auto &row : doc.rows)
    if (!row.is_zero()) nonzero.push_back(row);
  if (nonzero.size() != doc.rows.size())
    std::cerr << "warning: dropped " << doc.rows.size() - nonzero.size() << " zero generator(s)\n";
  GeneratorSet G = canonicalize(doc.dim, nonzero);
  if (G.size() != nonzero.size())
    std::cerr << "warning: merged parallel generators into " << G.size() << " canonical generator(s)\n";

  auto records = enumerate_vertices(G, {.forward_only = true, .exec = execution(opt)});

  std::ostringstream summary;
  summary << "n=" << records.size() << " m=" << G.size() << " d=" << doc.dim << '\n';
  if (opt.count_only) {
    std::cout << summary.str();
    return kExitOk;
  }

  Document out{DocumentKind::vertices, doc.dim, {}};
  std::vector<std::string> comments;
  for (const auto &rec : records) {
    out.rows.push_back(rec.point);
    if (opt.xi) {
      std::string bits;
      for (std::size_t i = 0; i < rec.xi.size(); ++i) bits.push_back(rec.xi[i] ? '1' : '0');
      comments.push_back("xi=" + bits);
    }
  }
  with_output(opt.output, [&](std::ostream &os) { write_document(os, out, comments); });
  (opt.output.empty() || opt.output == "-" ? std::cerr : std::cout) << summary.str();
  return kExitOk;
}

int cmd_decide(const Options &opt) {
  Document doc = read_input(opt.input);
  require_kind(doc, DocumentKind::vertices);
  const auto exec = execution(opt);
  auto decision = decide_zonotope(polytope_vertices(doc, exec), exec);
  if (const auto *reason = std::get_if<NotZonotope>(&decision)) {
    std::cerr << "NotZonotope: " << to_string(*reason) << '\n';
    return kExitNegative;
  }
  const auto &G = std::get<GeneratorSet>(decision);
  Document out{DocumentKind::generators, doc.dim, {G.generators().begin(), G.generators().end()}};
  with_output(opt.output, [&](std::ostream &os) { write_document(os, out); });
  return kExitOk;
}

int cmd_summand(const Options &opt) {
  Document doc = read_input(opt.input);
  require_kind(doc, DocumentKind::vertices);
  const auto exec = execution(opt);
  auto result = greatest_zonotopal_summand(polytope_vertices(doc, exec), exec);
  const auto &G = result.zono_generators;
  Document gens{DocumentKind::generators, doc.dim, {G.generators().begin(), G.generators().end()}};
  Document residual{DocumentKind::vertices, doc.dim, result.residual_vertices};
  if (opt.generators_out.empty() && opt.residual_out.empty()) {
    write_document(std::cout, gens);
    write_document(std::cout, residual);
  } else {
    with_output(opt.generators_out, [&](std::ostream &os) { write_document(os, gens); });
    with_output(opt.residual_out, [&](std::ostream &os) { write_document(os, residual); });
  }
  return kExitOk;
}

int cmd_graph(const Options &opt) {
  Document doc = read_input(opt.input);
  if (doc.rows.empty()) throw InputError("the input has no points");
  const auto graph = graph_of(PointSet(doc.dim, distinct_points(doc)), execution(opt));
  with_output(opt.output, [&](std::ostream &os) {
    write_document(os, {DocumentKind::vertices, doc.dim, graph.vertices});
    os << "edges " << graph.edges.size() << '\n';
    for (auto [i, j] : graph.edges) os << i << ' ' << j << '\n';
  });
  return kExitOk;
}

int cmd_faces(const Options &opt) {
  Document doc = read_input(opt.input);
  if (doc.rows.empty()) throw InputError("the input has no points");
  const auto faces = small_faces(PointSet(doc.dim, distinct_points(doc)), opt.max_face_size,
                                 kDefaultMaxFaceSize, execution(opt));
  with_output(opt.output, [&](std::ostream &os) {
    write_document(os, {DocumentKind::vertices, doc.dim, faces.vertices});
    os << "faces " << faces.faces.size() << '\n';
    for (const auto &f : faces.faces) {
      for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
      os << '\n';
    }
  });
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact zonotope computations driven by a linear feasibility oracle"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--threads", opt.threads, "Worker threads for the LP tests (1 = serial)")
      ->check(CLI::PositiveNumber);

  auto *vertices = app.add_subcommand("vertices", "Vertices of the zonotope spanned by a generators file");
  vertices->add_option("input", opt.input, "Generators file, '-' for stdin");
  vertices->add_option("-o,--output", opt.output, "Write the vertex file here instead of stdout");
  vertices->add_flag("--xi", opt.xi, "Annotate each vertex with its generator subset");
  vertices->add_flag("--count", opt.count_only, "Print only the summary line");

  auto *decide = app.add_subcommand("decide", "Decide whether a vertices file is a zonotope");
  decide->add_option("input", opt.input, "Vertices file, '-' for stdin");
  decide->add_option("-o,--output", opt.output, "Write the generators file here instead of stdout");

  auto *summand = app.add_subcommand("summand", "Greatest zonotopal summand and residual of a polytope");
  summand->add_option("input", opt.input, "Vertices file, '-' for stdin");
  summand->add_option("-g,--generators-out", opt.generators_out, "Generators of the zonotopal summand");
  summand->add_option("-r,--residual-out", opt.residual_out, "Vertices of the residual polytope");

  auto *graph = app.add_subcommand("graph", "Vertices and edges of the convex hull of a point file");
  graph->add_option("input", opt.input, "Point file, '-' for stdin");
  graph->add_option("-o,--output", opt.output, "Write the graph here instead of stdout");

  auto *faces = app.add_subcommand("faces", "Faces of the convex hull with few vertices");
  faces->add_option("input", opt.input, "Point file, '-' for stdin");
  faces->add_option("-o,--output", opt.output, "Write the face list here instead of stdout");
  faces->add_option("--max-face-size", opt.max_face_size, "Largest face size to report")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  set_thread_count(opt.threads);
  try {
    if (*vertices) return cmd_vertices(opt);
    if (*decide) return cmd_decide(opt);
    if (*summand) return cmd_summand(opt);
    if (*graph) return cmd_graph(opt);
    if (*faces) return cmd_faces(opt);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
