#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "zono/rational.hpp"
#include "zono/zonotope.hpp"

namespace zono::testing {

inline RationalPoint pt(std::initializer_list<long> coords) {
  std::vector<Rational> c;
  for (long v : coords) c.emplace_back(v);
  return RationalPoint(std::move(c));
}

inline std::vector<RationalPoint> pts(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalPoint> out;
  for (auto r : rows) out.push_back(pt(r));
  return out;
}

inline std::vector<RationalPoint> sorted(std::vector<RationalPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<RationalPoint> points_of(const std::vector<VertexRecord> &records) {
  std::vector<RationalPoint> out;
  for (const auto &r : records) out.push_back(r.point);
  return sorted(std::move(out));
}

inline const GeneratorSet &square_generators() {
  static const GeneratorSet g(2, pts({{0, 1}, {1, 0}}));
  return g;
}

inline const GeneratorSet &hexagon_generators() {
  static const GeneratorSet g(2, pts({{0, 1}, {1, 0}, {1, 1}}));
  return g;
}

inline const GeneratorSet &cube_generators() {
  static const GeneratorSet g(3, pts({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  return g;
}

inline const GeneratorSet &rhombic_dodecahedron_generators() {
  static const GeneratorSet g(3, pts({{1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}}));
  return g;
}

/// Random integer vector with coordinates in [lo, hi], never zero.
inline RationalPoint random_nonzero(std::mt19937 &rng, std::size_t dim, int lo, int hi) {
  std::uniform_int_distribution<int> coord(lo, hi);
  for (;;) {
    RationalPoint p(dim);
    for (std::size_t k = 0; k < dim; ++k) p[k] = coord(rng);
    if (!p.is_zero()) return p;
  }
}

/// Canonical generator set from up to m random vectors in [-5, 5]^dim.
/// Parallel draws merge, so the result may have fewer than m generators.
inline GeneratorSet random_generators(std::mt19937 &rng, std::size_t dim, std::size_t m) {
  std::vector<RationalPoint> vs;
  for (std::size_t i = 0; i < m; ++i) vs.push_back(random_nonzero(rng, dim, -5, 5));
  return canonicalize(dim, vs);
}

/// Same as random_generators but with pairwise non-parallel draws, so the
/// generator count is exactly m.
inline GeneratorSet random_generators_exact(std::mt19937 &rng, std::size_t dim, std::size_t m) {
  for (;;) {
    GeneratorSet g = random_generators(rng, dim, m);
    if (g.size() == m) return g;
  }
}

} // namespace zono::testing
