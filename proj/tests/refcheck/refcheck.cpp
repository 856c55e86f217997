#include "refcheck.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zono/oracle.hpp"

namespace zono::refcheck {

std::vector<RationalPoint> subset_sum_cloud(const GeneratorSet &G) {
  if (G.size() > kMaxGenerators) throw InputError("too many generators for the brute-force oracle");
  std::set<RationalPoint> cloud;
  const std::size_t m = G.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    RationalPoint s = RationalPoint::zero(G.dim());
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) s += G[i];
    cloud.insert(std::move(s));
  }
  return {cloud.begin(), cloud.end()};
}

std::vector<RationalPoint> brute_zonotope_vertices(const GeneratorSet &G) {
  const auto cloud = subset_sum_cloud(G);
  const PointSet A(G.dim(), cloud);
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (is_vertex_at(A, i)) out.push_back(A[i]);
  return out;
}

namespace {

Rational cross(const RationalPoint &o, const RationalPoint &a, const RationalPoint &b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

BruteGraph graph_from_cycles(const std::vector<std::vector<RationalPoint>> &cycles) {
  std::set<RationalPoint> verts;
  for (const auto &c : cycles) verts.insert(c.begin(), c.end());
  BruteGraph g;
  g.vertices.assign(verts.begin(), verts.end());
  auto index = [&](const RationalPoint &p) {
    return static_cast<std::size_t>(std::lower_bound(g.vertices.begin(), g.vertices.end(), p) - g.vertices.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto &c : cycles) {
    if (c.size() < 2) continue;
    const std::size_t sides = c.size() == 2 ? 1 : c.size();
    for (std::size_t k = 0; k < sides; ++k) {
      std::size_t a = index(c[k]), b = index(c[(k + 1) % c.size()]);
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

RationalPoint cross3(const RationalPoint &a, const RationalPoint &b) {
  return RationalPoint{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Rank and one solution of M x = rhs (free variables at zero).
struct EliminationResult {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<Rational> solution;
};

EliminationResult eliminate(std::vector<std::vector<Rational>> rows, std::size_t n) {
  // rows are [coeffs..., rhs]
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][c];
    for (auto &a : rows[r]) a *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = 0; k <= n; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  EliminationResult out;
  out.rank = r;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][n] != 0) return out;
  out.consistent = true;
  out.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) out.solution[pivot_cols[i]] = rows[i][n];
  return out;
}

std::vector<Rational> augmented(const LinearRow &row) {
  std::vector<Rational> r = row.coeffs;
  r.push_back(row.rhs);
  return r;
}

} // namespace

std::vector<RationalPoint> brute_hull_2d(std::vector<RationalPoint> points) {
  if (points.size() > kMaxPoints) throw InputError("too many points for the brute-force oracle");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  std::vector<RationalPoint> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (const auto &p : points) {
      while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(points.begin(), points.end());
  }
  return hull;
}

BruteGraph brute_graph_2d(const std::vector<RationalPoint> &points) {
  return graph_from_cycles({brute_hull_2d(points)});
}

BruteGraph brute_graph_3d(const std::vector<RationalPoint> &points) {
  if (points.size() > kMaxPoints) throw InputError("too many points for the brute-force oracle");
  const std::size_t n = points.size();
  std::set<std::vector<std::size_t>> facets;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const RationalPoint normal = cross3(points[j] - points[i], points[k] - points[i]);
        if (normal.is_zero()) continue;
        bool pos = false, neg = false;
        std::vector<std::size_t> on;
        for (std::size_t p = 0; p < n; ++p) {
          const Rational side = dot(normal, points[p] - points[i]);
          if (side > 0) pos = true;
          else if (side < 0) neg = true;
          else on.push_back(p);
        }
        if (!(pos && neg)) facets.insert(on);
      }

  std::vector<std::vector<RationalPoint>> cycles;
  for (const auto &facet : facets) {
    const RationalPoint normal =
        cross3(points[facet[1]] - points[facet[0]], points[facet[2]] - points[facet[0]]);
    std::size_t drop = 0;
    while (normal[drop] == 0) ++drop;
    std::map<RationalPoint, RationalPoint> lift;
    std::vector<RationalPoint> flat;
    for (std::size_t p : facet) {
      RationalPoint q(2);
      for (std::size_t c = 0, o = 0; c < 3; ++c)
        if (c != drop) q[o++] = points[p][c];
      lift.emplace(q, points[p]);
      flat.push_back(q);
    }
    std::vector<RationalPoint> cycle;
    for (const auto &q : brute_hull_2d(flat)) cycle.push_back(lift.at(q));
    cycles.push_back(std::move(cycle));
  }
  return graph_from_cycles(cycles);
}

std::optional<std::vector<Rational>> solve_equalities(const FeasibilitySystem &sys) {
  std::vector<std::vector<Rational>> rows;
  for (const auto &row : sys.equalities) rows.push_back(augmented(row));
  auto res = eliminate(std::move(rows), sys.num_vars);
  if (!res.consistent) return std::nullopt;
  return res.solution;
}

bool brute_feasible(const FeasibilitySystem &sys) {
  const std::size_t n = sys.num_vars;
  std::vector<LinearRow> bounds = sys.inequalities;
  for (std::size_t v : sys.nonneg_vars) {
    LinearRow row{std::vector<Rational>(n), 0};
    row.coeffs[v] = 1;
    bounds.push_back(std::move(row));
  }
  const std::size_t b = bounds.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << b); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > n) continue;
    std::vector<std::vector<Rational>> rows;
    for (const auto &row : sys.equalities) rows.push_back(augmented(row));
    for (std::size_t i = 0; i < b; ++i)
      if (mask >> i & 1) rows.push_back(augmented(bounds[i]));
    auto res = eliminate(std::move(rows), n);
    if (!res.consistent || res.rank != n) continue;
    if (satisfies(sys, res.solution)) return true;
  }
  return false;
}

} // namespace zono::refcheck
