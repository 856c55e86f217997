#include "zono/summand.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parallel.hpp"
#include "zono/oracle.hpp"
#include "zono/polygraph.hpp"

namespace zono {

std::string_view to_string(NotZonotope reason) {
  switch (reason) {
  case NotZonotope::OddVertexCount:
    return "OddVertexCount";
  case NotZonotope::UnequalParallelEdges:
    return "UnequalParallelEdges";
  case NotZonotope::ParallelClassTooSmall:
    return "ParallelClassTooSmall";
  case NotZonotope::NotASummand:
    return "NotASummand";
  }
  return "Unknown";
}

namespace {

PointSet vertex_set(const std::vector<RationalPoint> &vertices) {
  if (vertices.empty()) throw InputError("empty vertex set");
  return PointSet(vertices.front().dim(), vertices);
}

// Edge vectors y - x for every edge {x, y} with x before y in input order.
std::vector<RationalPoint> edge_vectors(const PointSet &V, Execution exec) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < V.size(); ++i)
    for (std::size_t j = i + 1; j < V.size(); ++j) pairs.emplace_back(i, j);
  std::vector<char> edge(pairs.size(), 0);
  detail::for_each_index(pairs.size(), exec,
                         [&](std::size_t p) { edge[p] = is_edge_at(V, pairs[p].first, pairs[p].second) ? 1 : 0; });
  std::vector<RationalPoint> out;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (edge[p]) out.push_back(V[pairs[p].second] - V[pairs[p].first]);
  return out;
}

std::size_t direction_rank(const std::vector<EdgeClass> &classes) {
  std::vector<RationalPoint> dirs;
  for (const auto &c : classes) dirs.push_back(c.representative);
  return rank_of(dirs);
}

PointSet segment(const RationalPoint &s) { return PointSet(s.dim(), {RationalPoint::zero(s.dim()), s}); }

} // namespace

std::vector<EdgeClass> edge_classes(const std::vector<RationalPoint> &vertices, Execution exec) {
  const PointSet V = vertex_set(vertices);
  std::map<std::vector<Integer>, EdgeClass> classes;
  for (auto &e : edge_vectors(V, exec)) {
    RationalPoint star = orient_positive(std::move(e));
    Rational len = squared_norm(star);
    auto [it, inserted] = classes.try_emplace(direction_key(star));
    EdgeClass &c = it->second;
    ++c.multiplicity;
    if (inserted || len < c.min_length_sq) {
      c.representative = std::move(star);
      c.min_length_sq = std::move(len);
    }
  }
  std::vector<EdgeClass> out;
  for (auto &[key, c] : classes) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const EdgeClass &a, const EdgeClass &b) { return a.representative < b.representative; });
  return out;
}

bool has_segment_summand(const std::vector<RationalPoint> &W, const RationalPoint &s, Execution exec) {
  if (s.is_zero()) throw InputError("segment direction must be nonzero");
  const PointSet P = vertex_set(W);
  return minkowski_sum_vertices(P, segment(s), exec).size() == P.size();
}

SummandDecomposition greatest_zonotopal_summand(const std::vector<RationalPoint> &vertices, Execution exec) {
  const PointSet V = vertex_set(vertices);
  const auto classes = edge_classes(vertices, exec);
  const std::size_t d = direction_rank(classes);

  std::vector<RationalPoint> W = unique_points(vertices);
  std::vector<RationalPoint> generators;
  for (const auto &c : classes) {
    if (c.multiplicity < d) continue;
    const auto &s = c.representative;
    const auto X = minkowski_sum_vertices(PointSet(V.dim(), W), segment(s), exec);
    if (X.size() != W.size()) continue;
    generators.push_back(s);
    // Points of W that moved when s was added are the upper copies of
    // vertices of the remaining summand; shift them back down. A vertex of
    // the remainder with an edge along s has both copies in W, hence unique.
    const std::set<RationalPoint> kept(X.begin(), X.end());
    for (auto &w : W)
      if (!kept.count(w)) w -= s;
    W = unique_points(std::move(W));
  }
  std::sort(generators.begin(), generators.end());
  return {GeneratorSet(V.dim(), std::move(generators)), std::move(W)};
}

ZonotopeDecision decide_zonotope(const std::vector<RationalPoint> &vertices, Execution exec) {
  const PointSet V = vertex_set(vertices);
  if (V.size() == 1) return GeneratorSet(V.dim());
  if (V.size() % 2 != 0) return NotZonotope::OddVertexCount;

  std::map<std::vector<Integer>, EdgeClass> classes;
  for (auto &e : edge_vectors(V, exec)) {
    RationalPoint star = orient_positive(std::move(e));
    Rational len = squared_norm(star);
    auto [it, inserted] = classes.try_emplace(direction_key(star));
    EdgeClass &c = it->second;
    if (inserted) {
      c.representative = std::move(star);
      c.min_length_sq = std::move(len);
    } else if (len != c.min_length_sq) {
      return NotZonotope::UnequalParallelEdges;
    }
    ++c.multiplicity;
  }

  std::vector<EdgeClass> ordered;
  for (auto &[key, c] : classes) ordered.push_back(std::move(c));
  std::sort(ordered.begin(), ordered.end(),
            [](const EdgeClass &a, const EdgeClass &b) { return a.representative < b.representative; });

  const std::size_t d = direction_rank(ordered);
  const std::size_t min_class = d == 0 ? 1 : std::size_t{1} << (d - 1);
  for (const auto &c : ordered)
    if (c.multiplicity < min_class) return NotZonotope::ParallelClassTooSmall;

  for (const auto &c : ordered)
    if (minkowski_sum_vertices(V, segment(c.representative), exec).size() != V.size())
      return NotZonotope::NotASummand;

  std::vector<RationalPoint> generators;
  for (auto &c : ordered) generators.push_back(std::move(c.representative));
  return GeneratorSet(V.dim(), std::move(generators));
}

} // namespace zono
