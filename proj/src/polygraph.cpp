#include "zono/polygraph.hpp"

#include <algorithm>
#include <string>

#include <omp.h>

#include "parallel.hpp"

namespace zono {

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

std::vector<std::vector<std::size_t>> PolytopeGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (auto &list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<RationalPoint> unique_points(std::vector<RationalPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<RationalPoint> hull_vertices(const PointSet &A, Execution exec) {
  if (A.empty()) throw InputError("hull of an empty point set");
  std::vector<char> keep(A.size(), 0);
  detail::for_each_index(A.size(), exec, [&](std::size_t i) { keep[i] = is_vertex_at(A, i) ? 1 : 0; });
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (keep[i]) out.push_back(A[i]);
  std::sort(out.begin(), out.end());
  return out;
}

PolytopeGraph graph_of(const PointSet &A, Execution exec) {
  PolytopeGraph g;
  g.vertices = hull_vertices(A, exec);
  const std::size_t n = g.vertices.size();
  PointSet V(A.dim(), g.vertices);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<char> is_edge(pairs.size(), 0);
  detail::for_each_index(pairs.size(), exec, [&](std::size_t p) {
    is_edge[p] = is_edge_at(V, pairs[p].first, pairs[p].second) ? 1 : 0;
  });
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (is_edge[p]) g.edges.push_back(pairs[p]);
  return g;
}

namespace {

void subsets_of_size(std::size_t n, std::size_t size, std::size_t start, FaceCandidate &current,
                     std::vector<FaceCandidate> &out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = start; i + (size - current.size()) <= n; ++i) {
    current.push_back(i);
    subsets_of_size(n, size, i + 1, current, out);
    current.pop_back();
  }
}

} // namespace

FaceList small_faces(const PointSet &A, std::size_t k, std::size_t max_k, Execution exec) {
  if (k == 0) throw InputError("face size bound must be at least 1");
  if (k > max_k)
    throw InputError("face size bound " + std::to_string(k) + " exceeds the limit " + std::to_string(max_k));
  FaceList result;
  result.vertices = hull_vertices(A, exec);
  PointSet V(A.dim(), result.vertices);

  std::vector<FaceCandidate> candidates;
  for (std::size_t size = 1; size <= std::min(k, V.size()); ++size) {
    FaceCandidate current;
    subsets_of_size(V.size(), size, 0, current, candidates);
  }
  std::vector<char> keep(candidates.size(), 0);
  detail::for_each_index(candidates.size(), exec,
                         [&](std::size_t c) { keep[c] = is_face(V, candidates[c]) ? 1 : 0; });
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (keep[c]) result.faces.push_back(std::move(candidates[c]));
  return result;
}

std::vector<RationalPoint> minkowski_sum_vertices(const PointSet &A, const PointSet &B, Execution exec) {
  if (A.empty() || B.empty()) throw InputError("Minkowski sum of an empty point set");
  if (A.dim() != B.dim())
    throw InputError("Minkowski sum of point sets with dimensions " + std::to_string(A.dim()) + " and " +
                     std::to_string(B.dim()));
  std::vector<RationalPoint> cloud;
  cloud.reserve(A.size() * B.size());
  for (const auto &a : A.points())
    for (const auto &b : B.points()) cloud.push_back(a + b);
  return hull_vertices(PointSet(A.dim(), unique_points(std::move(cloud))), exec);
}

} // namespace zono
