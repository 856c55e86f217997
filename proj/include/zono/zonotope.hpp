#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zono/execution.hpp"
#include "zono/oracle.hpp"
#include "zono/rational.hpp"

namespace zono {

/// Generators of a zonotope: the free endpoints of segments anchored at 0.
/// Invariants: nonzero, first nonzero coordinate positive, pairwise
/// non-parallel, strictly increasing in lexicographic order.
class GeneratorSet {
public:
  explicit GeneratorSet(std::size_t dim) : dim_(dim) {}
  /// Throws InputError if `generators` is not already canonical.
  GeneratorSet(std::size_t dim, std::vector<RationalPoint> generators);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  const RationalPoint &operator[](std::size_t i) const { return generators_[i]; }
  std::span<const RationalPoint> generators() const { return generators_; }

  /// Rank of the generators, i.e. the dimension of the zonotope.
  std::size_t intrinsic_dimension() const { return rank_of(generators_); }
  RationalPoint sum() const;
  RationalPoint sum_of(const Subset &X) const;

  friend bool operator==(const GeneratorSet &, const GeneratorSet &) = default;

private:
  std::size_t dim_;
  std::vector<RationalPoint> generators_;
};

struct Segment {
  RationalPoint from;
  RationalPoint to;
};

/// Anchors each segment at 0, orients it, and merges parallel segments by
/// adding their lengths. Throws InputError on a degenerate segment or a
/// dimension mismatch.
GeneratorSet canonicalize(std::size_t dim, std::span<const Segment> segments);
/// Same, for segments [0, v].
GeneratorSet canonicalize(std::size_t dim, std::span<const RationalPoint> vectors);

/// A vertex of the zonotope with the unique generator subset summing to it.
struct VertexRecord {
  RationalPoint point;
  Subset xi;

  friend bool operator==(const VertexRecord &, const VertexRecord &) = default;
};

/// True iff the sum of X is a vertex, i.e. cone([-X] u [G\X]) is pointed.
bool is_zonotope_vertex(const GeneratorSet &G, const Subset &X);

/// All neighbours of a vertex: x + t for every t in [-X] u [G\X] spanning a
/// ray of the cone of that set. Ordered by generator index.
std::vector<VertexRecord> neighbors(const GeneratorSet &G, const VertexRecord &rec,
                                    Execution exec = Execution::parallel);

struct EnumerateOptions {
  /// Only test x + g for g outside xi(x). Turning this off explores every
  /// neighbour; it exists to check that the restriction loses nothing.
  bool forward_only = true;
  Execution exec = Execution::parallel;
};

/// Every vertex of the zonotope sum of [0, g], found by breadth-first search
/// from the origin. Records are returned in lexicographic order of points.
std::vector<VertexRecord> enumerate_vertices(const GeneratorSet &G, EnumerateOptions options = {});

} // namespace zono
