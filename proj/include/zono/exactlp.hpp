#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zono/rational.hpp"

namespace zono {

struct LinearRow {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Linear equalities `coeffs·x = rhs`, inequalities `coeffs·x >= rhs`, and a
/// set of sign-constrained variables. All other variables are free.
struct FeasibilitySystem {
  std::size_t num_vars = 0;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;
  std::vector<std::size_t> nonneg_vars;

  /// Throws InputError on a row-length mismatch or an out-of-range variable.
  void validate() const;
};

struct FeasibilityResult {
  /// Present iff the system is feasible.
  std::optional<std::vector<Rational>> witness;

  bool feasible() const { return witness.has_value(); }
};

/// Decides feasibility exactly. Phase one of the simplex method on a
/// fraction-free integer tableau, with Bland's rule guarding degenerate
/// pivots; returns a basic feasible witness when one exists.
FeasibilityResult solve_feasibility(const FeasibilitySystem &sys);

/// True iff x satisfies every constraint of sys exactly.
bool satisfies(const FeasibilitySystem &sys, std::span<const Rational> x);

} // namespace zono
