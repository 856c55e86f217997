#include "zono/zonotope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "parallel.hpp"

namespace zono {

GeneratorSet::GeneratorSet(std::size_t dim, std::vector<RationalPoint> generators)
    : dim_(dim), generators_(std::move(generators)) {
  std::map<std::vector<Integer>, std::size_t> directions;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto &g = generators_[i];
    if (g.dim() != dim_) throw InputError("generator " + std::to_string(i) + " has the wrong dimension");
    if (g.is_zero()) throw InputError("generator " + std::to_string(i) + " is zero");
    if (orient_positive(g) != g)
      throw InputError("generator " + std::to_string(i) + " has a negative leading coordinate");
    if (i > 0 && !(generators_[i - 1] < g)) throw InputError("generators are not in lexicographic order");
    if (!directions.emplace(direction_key(g), i).second)
      throw InputError("generator " + std::to_string(i) + " is parallel to another generator");
  }
}

RationalPoint GeneratorSet::sum() const {
  RationalPoint s = RationalPoint::zero(dim_);
  for (const auto &g : generators_) s += g;
  return s;
}

RationalPoint GeneratorSet::sum_of(const Subset &X) const {
  if (X.size() != generators_.size()) throw InputError("subset size does not match generator count");
  RationalPoint s = RationalPoint::zero(dim_);
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (X[i]) s += generators_[i];
  return s;
}

GeneratorSet canonicalize(std::size_t dim, std::span<const Segment> segments) {
  std::map<std::vector<Integer>, RationalPoint> merged;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto &s = segments[i];
    if (s.from.dim() != dim || s.to.dim() != dim)
      throw InputError("segment " + std::to_string(i) + " has the wrong dimension");
    if (s.from == s.to) throw InputError("segment " + std::to_string(i) + " is degenerate");
    RationalPoint v = orient_positive(s.to - s.from);
    auto [it, inserted] = merged.try_emplace(direction_key(v), v);
    if (!inserted) it->second += v;
  }
  std::vector<RationalPoint> gens;
  gens.reserve(merged.size());
  for (auto &[key, v] : merged) gens.push_back(std::move(v));
  std::sort(gens.begin(), gens.end());
  return GeneratorSet(dim, std::move(gens));
}

GeneratorSet canonicalize(std::size_t dim, std::span<const RationalPoint> vectors) {
  std::vector<Segment> segments;
  segments.reserve(vectors.size());
  for (const auto &v : vectors) segments.push_back({RationalPoint::zero(v.dim()), v});
  return canonicalize(dim, segments);
}

namespace {

PointSet as_point_set(const GeneratorSet &G) {
  return PointSet(G.dim(), std::vector<RationalPoint>(G.generators().begin(), G.generators().end()));
}

// [-X] u [G\X], indexed like G.
PointSet transformed_set(const GeneratorSet &G, const Subset &X) {
  std::vector<RationalPoint> t;
  t.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) t.push_back(X[i] ? -G[i] : G[i]);
  return PointSet(G.dim(), std::move(t));
}

void check_record(const GeneratorSet &G, const VertexRecord &rec) {
  if (rec.xi.size() != G.size()) throw InputError("vertex record subset size does not match generator count");
  if (rec.point.dim() != G.dim()) throw InputError("vertex record has the wrong dimension");
}

} // namespace

bool is_zonotope_vertex(const GeneratorSet &G, const Subset &X) { return is_pointed(as_point_set(G), X); }

std::vector<VertexRecord> neighbors(const GeneratorSet &G, const VertexRecord &rec, Execution exec) {
  check_record(G, rec);
  const PointSet cone = transformed_set(G, rec.xi);
  std::vector<char> ray(G.size(), 0);
  detail::for_each_index(G.size(), exec, [&](std::size_t j) { ray[j] = is_ray_at(cone, j) ? 1 : 0; });

  std::vector<VertexRecord> out;
  for (std::size_t j = 0; j < G.size(); ++j) {
    if (!ray[j]) continue;
    VertexRecord next{rec.point + cone[j], rec.xi};
    next.xi.flip(j);
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<VertexRecord> enumerate_vertices(const GeneratorSet &G, EnumerateOptions options) {
  std::vector<VertexRecord> records;
  std::map<RationalPoint, std::size_t> visited;
  std::deque<std::size_t> frontier;

  records.push_back({RationalPoint::zero(G.dim()), Subset(G.size())});
  visited.emplace(records.back().point, 0);
  frontier.push_back(0);

  while (!frontier.empty()) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    const RationalPoint x = records[current].point;
    const Subset xi = records[current].xi;

    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (options.forward_only && xi[j]) continue;
      if (visited.count(x + (xi[j] ? -G[j] : G[j]))) continue;
      candidates.push_back(j);
    }
    if (candidates.empty()) continue;

    const PointSet cone = transformed_set(G, xi);
    std::vector<char> ray(candidates.size(), 0);
    detail::for_each_index(candidates.size(), options.exec,
                           [&](std::size_t c) { ray[c] = is_ray_at(cone, candidates[c]) ? 1 : 0; });

    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (!ray[c]) continue;
      const std::size_t j = candidates[c];
      VertexRecord next{x + cone[j], xi};
      next.xi.flip(j);
      visited.emplace(next.point, records.size());
      frontier.push_back(records.size());
      records.push_back(std::move(next));
    }
  }

  std::sort(records.begin(), records.end(),
            [](const VertexRecord &a, const VertexRecord &b) { return a.point < b.point; });
  return records;
}

} // namespace zono
