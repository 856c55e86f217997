#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "zono/execution.hpp"
#include "zono/oracle.hpp"
#include "zono/rational.hpp"

namespace zono {

/// Vertices and edges of a polytope. Vertices are sorted lexicographically;
/// edges are pairs (i, j) with i < j in lexicographic pair order.
struct PolytopeGraph {
  std::vector<RationalPoint> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;
};

/// Faces with at most k vertices, as index sets into `vertices`.
struct FaceList {
  std::vector<RationalPoint> vertices;
  std::vector<FaceCandidate> faces;
};

inline constexpr std::size_t kDefaultMaxFaceSize = 3;

/// Points of A that are vertices of conv(A), lexicographically sorted.
std::vector<RationalPoint> hull_vertices(const PointSet &A, Execution exec = Execution::parallel);

/// Edge graph of conv(A). Edge tests run against the vertex set only.
PolytopeGraph graph_of(const PointSet &A, Execution exec = Execution::parallel);

/// Every face of conv(A) with between 1 and k vertices. Faces are listed by
/// size, then lexicographically by index. Throws InputError when k is 0 or
/// exceeds max_k.
FaceList small_faces(const PointSet &A, std::size_t k, std::size_t max_k = kDefaultMaxFaceSize,
                     Execution exec = Execution::parallel);

/// Vertices of conv(A) + conv(B).
std::vector<RationalPoint> minkowski_sum_vertices(const PointSet &A, const PointSet &B,
                                                  Execution exec = Execution::parallel);

/// Sorts and removes duplicates; the usual way to build a PointSet from a cloud.
std::vector<RationalPoint> unique_points(std::vector<RationalPoint> points);

} // namespace zono
