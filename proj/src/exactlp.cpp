#include "zono/exactlp.hpp"

#include <cassert>
#include <string>

namespace zono {

void FeasibilitySystem::validate() const {
  auto check = [&](const std::vector<LinearRow> &rows, const char *what) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].coeffs.size() != num_vars)
        throw InputError(std::string(what) + " row " + std::to_string(r) + " has " +
                         std::to_string(rows[r].coeffs.size()) + " coefficients, expected " +
                         std::to_string(num_vars));
    }
  };
  check(equalities, "equality");
  check(inequalities, "inequality");
  for (std::size_t v : nonneg_vars)
    if (v >= num_vars) throw InputError("nonnegative variable index " + std::to_string(v) + " out of range");
}

namespace {

// Standard form: every variable is split into sign-constrained columns,
// every inequality gets a surplus column, and every row gets an implicit
// artificial variable that starts in the basis. Artificial columns are not
// stored; once an artificial leaves the basis it never re-enters.
//
// Rows are scaled to integers and pivoted fraction-free: every stored entry
// is the rational tableau entry times the common denominator `det_`, and the
// division in each update is exact.
//
// The entering column is the most negative reduced cost. After a degenerate
// pivot the choice falls back to Bland's rule (first negative reduced cost)
// until a pivot makes progress again, so the method cannot cycle.
class PhaseOneTableau {
public:
  explicit PhaseOneTableau(const FeasibilitySystem &sys) : sys_(sys) {
    std::vector<bool> nonneg(sys.num_vars, false);
    for (std::size_t v : sys.nonneg_vars) nonneg[v] = true;

    plus_col_.resize(sys.num_vars);
    minus_col_.assign(sys.num_vars, npos);
    for (std::size_t v = 0; v < sys.num_vars; ++v) {
      plus_col_[v] = cols_++;
      if (!nonneg[v]) minus_col_[v] = cols_++;
    }
    const std::size_t first_surplus = cols_;
    cols_ += sys.inequalities.size();
    rows_ = sys.equalities.size() + sys.inequalities.size();
    width_ = cols_ + 1;

    table_.assign((rows_ + 1) * width_, Integer(0));
    auto fill = [&](std::size_t r, const LinearRow &row, bool surplus) {
      Integer scale = boost::multiprecision::denominator(row.rhs);
      for (const auto &a : row.coeffs) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(a));
      auto scaled = [&](const Rational &a) {
        return Integer(boost::multiprecision::numerator(a) * (scale / boost::multiprecision::denominator(a)));
      };
      for (std::size_t v = 0; v < sys.num_vars; ++v) {
        if (row.coeffs[v] == 0) continue;
        at(r, plus_col_[v]) = scaled(row.coeffs[v]);
        if (minus_col_[v] != npos) at(r, minus_col_[v]) = -at(r, plus_col_[v]);
      }
      if (surplus) at(r, first_surplus + (r - sys.equalities.size())) = -scale;
      at(r, cols_) = scaled(row.rhs);
      if (at(r, cols_) < 0)
        for (std::size_t j = 0; j < width_; ++j) at(r, j) = -at(r, j);
    };
    std::size_t r = 0;
    for (const auto &row : sys.equalities) fill(r++, row, false);
    for (const auto &row : sys.inequalities) fill(r++, row, true);

    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) basis_[i] = cols_ + i;

    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < width_; ++j)
        if (at(i, j) != 0) at(rows_, j) -= at(i, j);
  }

  bool run() {
    for (;;) {
      std::size_t enter = npos;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (at(rows_, j) >= 0) continue;
        if (enter == npos || at(rows_, j) < at(rows_, enter)) enter = j;
        if (bland_) break;
      }
      if (enter == npos) break;

      // Ratios rhs_i / a_i with a_i > 0 are compared by cross-multiplication.
      std::size_t leave = npos;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, enter) <= 0) continue;
        if (leave == npos) {
          leave = i;
          continue;
        }
        lhs_ = at(i, cols_) * at(leave, enter);
        rhs_ = at(leave, cols_) * at(i, enter);
        if (lhs_ < rhs_ || (lhs_ == rhs_ && basis_[i] < basis_[leave])) leave = i;
      }
      // Phase one is bounded below by zero, so a ratio row always exists.
      assert(leave != npos);
      bland_ = at(leave, cols_) == 0;
      pivot(leave, enter);
    }
    return at(rows_, cols_) == 0;
  }

  std::vector<Rational> witness() const {
    std::vector<Rational> column_value(cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < cols_) column_value[basis_[i]] = Rational(at(i, cols_), det_);
    std::vector<Rational> x(sys_.num_vars);
    for (std::size_t v = 0; v < sys_.num_vars; ++v) {
      x[v] = column_value[plus_col_[v]];
      if (minus_col_[v] != npos) x[v] -= column_value[minus_col_[v]];
    }
    return x;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Integer &at(std::size_t i, std::size_t j) { return table_[i * width_ + j]; }
  const Integer &at(std::size_t i, std::size_t j) const { return table_[i * width_ + j]; }

  // Row i <- (p * row_i - a_ic * row_r) / det for every row but r, the
  // reduced-cost row included; the pivot row keeps its entries.
  void pivot(std::size_t r, std::size_t c) {
    const Integer p = at(r, c);
    const bool unit_det = det_ == 1;
    mpz_ptr t = tmp_.backend().data();
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const Integer f = at(i, c);
      for (std::size_t j = 0; j < width_; ++j) {
        mpz_ptr x = at(i, j).backend().data();
        mpz_mul(t, p.backend().data(), x);
        if (f != 0) mpz_submul(t, f.backend().data(), at(r, j).backend().data());
        if (unit_det)
          mpz_swap(x, t);
        else
          mpz_divexact(x, t, det_.backend().data());
      }
    }
    det_ = p;
    basis_[r] = c;
  }

  const FeasibilitySystem &sys_;
  std::size_t cols_ = 0;
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::vector<std::size_t> plus_col_;
  std::vector<std::size_t> minus_col_;
  // rows_ constraint rows followed by the phase-one reduced costs, whose
  // last entry is minus the current sum of artificials (times det_).
  std::vector<Integer> table_;
  std::vector<std::size_t> basis_;
  Integer det_ = 1;
  bool bland_ = false;
  Integer tmp_, lhs_, rhs_;
};

} // namespace

FeasibilityResult solve_feasibility(const FeasibilitySystem &sys) {
  sys.validate();
  PhaseOneTableau tableau(sys);
  if (!tableau.run()) return {};
  auto x = tableau.witness();
  assert(satisfies(sys, x));
  return {std::move(x)};
}

bool satisfies(const FeasibilitySystem &sys, std::span<const Rational> x) {
  if (x.size() != sys.num_vars) return false;
  auto lhs = [&](const LinearRow &row) {
    Rational s = 0;
    for (std::size_t v = 0; v < sys.num_vars; ++v) s += row.coeffs[v] * x[v];
    return s;
  };
  for (const auto &row : sys.equalities)
    if (lhs(row) != row.rhs) return false;
  for (const auto &row : sys.inequalities)
    if (lhs(row) < row.rhs) return false;
  for (std::size_t v : sys.nonneg_vars)
    if (x[v] < 0) return false;
  return true;
}

} // namespace zono
