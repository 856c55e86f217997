#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace zono {

// GMP rationals are kept in lowest terms with a positive denominator after
// every operation.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Raised for any violated precondition on caller-supplied data.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational &value);

/// A point of Q^d.
class RationalPoint {
public:
  RationalPoint() = default;
  explicit RationalPoint(std::size_t dim) : coords_(dim) {}
  explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RationalPoint(std::initializer_list<Rational> coords) : coords_(coords) {}

  static RationalPoint zero(std::size_t dim) { return RationalPoint(dim); }

  std::size_t dim() const { return coords_.size(); }
  const Rational &operator[](std::size_t i) const { return coords_[i]; }
  Rational &operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;

  RationalPoint &operator+=(const RationalPoint &other);
  RationalPoint &operator-=(const RationalPoint &other);
  RationalPoint operator-() const;
  friend RationalPoint operator+(RationalPoint a, const RationalPoint &b) { return a += b; }
  friend RationalPoint operator-(RationalPoint a, const RationalPoint &b) { return a -= b; }
  friend RationalPoint operator*(const Rational &s, RationalPoint p);

  friend bool operator==(const RationalPoint &a, const RationalPoint &b) {
    return a.coords_ == b.coords_;
  }
  // Lexicographic; points of different dimension compare by length first.
  friend std::strong_ordering operator<=>(const RationalPoint &a, const RationalPoint &b);

private:
  std::vector<Rational> coords_;
};

Rational dot(const RationalPoint &a, const RationalPoint &b);
Rational squared_norm(const RationalPoint &p);

/// Flips p so its first nonzero coordinate is positive. p must be nonzero.
RationalPoint orient_positive(RationalPoint p);

/// The primitive integer vector on the ray of p after canonical orientation.
/// Two nonzero vectors are parallel iff their direction keys are equal.
std::vector<Integer> direction_key(const RationalPoint &p);

/// Rank of a family of vectors, by exact Gaussian elimination.
std::size_t rank_of(std::span<const RationalPoint> vectors);

/// Dimension of the affine hull of a point family (-1 treated as 0 for empty input).
std::size_t affine_dimension(std::span<const RationalPoint> points);

std::ostream &operator<<(std::ostream &os, const RationalPoint &p);

} // namespace zono
