#include "zono/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace zono {

namespace {

void check_points(std::size_t dim, const std::vector<RationalPoint> &points) {
  std::set<RationalPoint> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != dim)
      throw InputError("point " + std::to_string(i) + " has " + std::to_string(points[i].dim()) +
                       " coordinates, expected " + std::to_string(dim));
    if (!seen.insert(points[i]).second) throw InputError("duplicate point " + std::to_string(i) + " in point set");
  }
}

} // namespace

PointSet::PointSet(std::size_t dim, std::vector<RationalPoint> points) : dim_(dim), points_(std::move(points)) {
  check_points(dim_, points_);
}

PointSet::PointSet(std::vector<RationalPoint> points)
    : dim_(points.empty() ? 0 : points.front().dim()), points_(std::move(points)) {
  check_points(dim_, points_);
}

std::optional<std::size_t> PointSet::index_of(const RationalPoint &p) const {
  auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

namespace {

std::vector<bool> membership(const PointSet &A, const FaceCandidate &F) {
  std::vector<bool> in_f(A.size(), false);
  for (std::size_t i : F) {
    if (i >= A.size()) throw InputError("face index " + std::to_string(i) + " out of range");
    in_f[i] = true;
  }
  return in_f;
}

std::size_t require_index(const PointSet &A, const RationalPoint &x) {
  auto idx = A.index_of(x);
  if (!idx) throw InputError("point is not a member of the point set");
  return *idx;
}

} // namespace

FeasibilitySystem affine_convex_system(const PointSet &A, const FaceCandidate &F) {
  auto in_f = membership(A, F);
  const std::size_t n = A.size();
  FeasibilitySystem sys;
  sys.num_vars = n;
  for (std::size_t k = 0; k < A.dim(); ++k) {
    LinearRow row{std::vector<Rational>(n), 0};
    for (std::size_t a = 0; a < n; ++a) row.coeffs[a] = in_f[a] ? -A[a][k] : A[a][k];
    sys.equalities.push_back(std::move(row));
  }
  LinearRow outside{std::vector<Rational>(n), 1};
  LinearRow inside{std::vector<Rational>(n), 1};
  for (std::size_t a = 0; a < n; ++a) {
    (in_f[a] ? inside : outside).coeffs[a] = 1;
    if (!in_f[a]) sys.nonneg_vars.push_back(a);
  }
  sys.equalities.push_back(std::move(outside));
  sys.equalities.push_back(std::move(inside));
  return sys;
}

bool affine_meets_convex(const PointSet &A, const FaceCandidate &F) {
  auto in_f = membership(A, F);
  const auto members = static_cast<std::size_t>(std::count(in_f.begin(), in_f.end(), true));
  if (members == 0) throw InputError("face candidate is empty");
  if (members == A.size()) throw InputError("face candidate covers the whole point set");
  return solve_feasibility(affine_convex_system(A, F)).feasible();
}

bool is_vertex_at(const PointSet &A, std::size_t index) {
  if (index >= A.size()) throw InputError("vertex index out of range");
  if (A.size() == 1) return true;
  return !affine_meets_convex(A, {index});
}

bool is_vertex(const PointSet &A, const RationalPoint &x) { return is_vertex_at(A, require_index(A, x)); }

bool is_face(const PointSet &A, const FaceCandidate &F) {
  auto in_f = membership(A, F);
  const auto members = static_cast<std::size_t>(std::count(in_f.begin(), in_f.end(), true));
  if (members == 0) throw InputError("face candidate is empty");
  if (members == A.size()) return true;
  return !affine_meets_convex(A, F);
}

bool is_edge_at(const PointSet &A, std::size_t i, std::size_t j) {
  if (i == j) throw InputError("edge endpoints must differ");
  return is_face(A, {i, j});
}

bool is_edge(const PointSet &A, const RationalPoint &x, const RationalPoint &y) {
  if (x == y) throw InputError("edge endpoints must differ");
  return is_edge_at(A, require_index(A, x), require_index(A, y));
}

bool is_ray_at(const PointSet &A, std::size_t index) {
  if (index >= A.size()) throw InputError("ray index out of range");
  std::vector<RationalPoint> with_origin;
  with_origin.reserve(A.size() + 1);
  for (const auto &p : A.points()) {
    if (p.is_zero()) throw InputError("cone generators must be nonzero");
    with_origin.push_back(p);
  }
#ifndef NDEBUG
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      assert(direction_key(A[i]) != direction_key(A[j]) && "cone generators must be pairwise independent");
#endif
  if (A.size() == 1) return true;
  with_origin.push_back(RationalPoint::zero(A.dim()));
  PointSet lifted(A.dim(), std::move(with_origin));
  return !affine_meets_convex(lifted, {A.size(), index});
}

bool is_ray(const PointSet &A, const RationalPoint &x) { return is_ray_at(A, require_index(A, x)); }

bool is_pointed(const PointSet &G, const Subset &X) {
  if (X.size() != G.size()) throw InputError("subset mask size does not match generator count");
  FeasibilitySystem sys;
  sys.num_vars = G.dim();
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) throw InputError("cone generators must be nonzero");
    LinearRow row{std::vector<Rational>(G.dim()), 1};
    for (std::size_t k = 0; k < G.dim(); ++k) row.coeffs[k] = X[i] ? G[i][k] : Rational(-G[i][k]);
    sys.inequalities.push_back(std::move(row));
  }
  return solve_feasibility(sys).feasible();
}

bool is_pointed(const PointSet &G, const FaceCandidate &subset) {
  Subset X(G.size());
  for (std::size_t i : subset) {
    if (i >= G.size()) throw InputError("subset index out of range");
    X.set(i);
  }
  return is_pointed(G, X);
}

} // namespace zono
