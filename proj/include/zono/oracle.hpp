#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "zono/exactlp.hpp"
#include "zono/rational.hpp"

namespace zono {

/// A finite set of pairwise distinct points of Q^d, in caller order.
class PointSet {
public:
  /// Throws InputError on a coordinate-count mismatch or a duplicate point.
  PointSet(std::size_t dim, std::vector<RationalPoint> points);
  /// Dimension taken from the first point; an empty list needs the other ctor.
  explicit PointSet(std::vector<RationalPoint> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const RationalPoint &operator[](std::size_t i) const { return points_[i]; }
  std::span<const RationalPoint> points() const { return points_; }

  std::optional<std::size_t> index_of(const RationalPoint &p) const;

private:
  std::size_t dim_;
  std::vector<RationalPoint> points_;
};

/// Indices into a PointSet.
using FaceCandidate = std::vector<std::size_t>;

/// Membership mask over the points of a PointSet.
using Subset = boost::dynamic_bitset<>;

/// The system over weights alpha_a, a in A: sum over A\F of alpha_a a minus
/// the sum over F equals 0, both weight groups sum to 1, and the A\F weights
/// are nonnegative. It is feasible iff aff(F) meets conv(A\F).
FeasibilitySystem affine_convex_system(const PointSet &A, const FaceCandidate &F);

/// True iff aff(F) intersects conv(A\F). Requires F nonempty, F != A.
bool affine_meets_convex(const PointSet &A, const FaceCandidate &F);

/// True iff x is a vertex of conv(A). Throws if x is not in A.
bool is_vertex(const PointSet &A, const RationalPoint &x);
bool is_vertex_at(const PointSet &A, std::size_t index);

/// True iff conv(F) is a face of conv(A). F = A is the improper face.
bool is_face(const PointSet &A, const FaceCandidate &F);

/// True iff [x, y] is an edge of conv(A).
bool is_edge(const PointSet &A, const RationalPoint &x, const RationalPoint &y);
bool is_edge_at(const PointSet &A, std::size_t i, std::size_t j);

/// True iff cone{x} is a ray of cone(A). A must avoid 0, be pairwise
/// linearly independent and span a pointed cone; only the first is checked
/// (the second under assertions).
bool is_ray(const PointSet &A, const RationalPoint &x);
bool is_ray_at(const PointSet &A, std::size_t index);

/// True iff cone([-X] u [G\X]) is pointed. Decided by feasibility of
/// c·g >= 1 for g in X and -c·g >= 1 for g not in X.
bool is_pointed(const PointSet &G, const Subset &X);
bool is_pointed(const PointSet &G, const FaceCandidate &subset);

} // namespace zono
