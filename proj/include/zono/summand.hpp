#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "zono/execution.hpp"
#include "zono/rational.hpp"
#include "zono/zonotope.hpp"

namespace zono {

/// All edges of a polytope parallel to one direction.
struct EdgeClass {
  /// Shortest member, anchored at 0 and canonically oriented.
  RationalPoint representative;
  std::size_t multiplicity = 0;
  Rational min_length_sq;
};

/// P = z(P) + r(P): the greatest zonotopal summand and its complement.
struct SummandDecomposition {
  GeneratorSet zono_generators;
  /// Vertex set of r(P), lexicographically sorted.
  std::vector<RationalPoint> residual_vertices;
};

/// First failed check when a vertex set does not describe a zonotope.
enum class NotZonotope { OddVertexCount, UnequalParallelEdges, ParallelClassTooSmall, NotASummand };

std::string_view to_string(NotZonotope reason);

using ZonotopeDecision = std::variant<GeneratorSet, NotZonotope>;

// The functions below take the vertex set of a polytope: nonempty, pairwise
// distinct, and with every point a vertex of the hull. Use hull_vertices to
// reduce an arbitrary point cloud first.

/// Edge direction classes, ordered by representative.
std::vector<EdgeClass> edge_classes(const std::vector<RationalPoint> &vertices,
                                    Execution exec = Execution::parallel);

/// True iff the segment [0, s] is a summand of conv(W), i.e. adding it keeps
/// the vertex count. Throws InputError when s is zero.
bool has_segment_summand(const std::vector<RationalPoint> &W, const RationalPoint &s,
                         Execution exec = Execution::parallel);

SummandDecomposition greatest_zonotopal_summand(const std::vector<RationalPoint> &vertices,
                                                Execution exec = Execution::parallel);

/// The generators of P when P is a zonotope, else the reason it is not.
/// A single point is the zonotope with no generators.
ZonotopeDecision decide_zonotope(const std::vector<RationalPoint> &vertices, Execution exec = Execution::parallel);

} // namespace zono
