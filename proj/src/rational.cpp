#include "zono/rational.hpp"

#include <algorithm>
#include <cctype>

namespace zono {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string to_string(const Rational &value) {
  const auto &num = boost::multiprecision::numerator(value);
  const auto &den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool RationalPoint::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational &c) { return c == 0; });
}

RationalPoint &RationalPoint::operator+=(const RationalPoint &other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

RationalPoint &RationalPoint::operator-=(const RationalPoint &other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

RationalPoint RationalPoint::operator-() const {
  RationalPoint r(*this);
  for (auto &c : r.coords_) c = -c;
  return r;
}

RationalPoint operator*(const Rational &s, RationalPoint p) {
  for (auto &c : p.coords_) c *= s;
  return p;
}

std::strong_ordering operator<=>(const RationalPoint &a, const RationalPoint &b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational dot(const RationalPoint &a, const RationalPoint &b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational squared_norm(const RationalPoint &p) { return dot(p, p); }

RationalPoint orient_positive(RationalPoint p) {
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == 0) continue;
    return p[i] < 0 ? -p : p;
  }
  throw InputError("zero vector has no orientation");
}

std::vector<Integer> direction_key(const RationalPoint &p) {
  RationalPoint q = orient_positive(p);
  Integer lcm = 1;
  for (std::size_t i = 0; i < q.dim(); ++i)
    lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(q[i])));
  std::vector<Integer> key(q.dim());
  Integer g = 0;
  for (std::size_t i = 0; i < q.dim(); ++i) {
    Rational scaled = q[i] * Rational(lcm);
    key[i] = boost::multiprecision::numerator(scaled);
    g = boost::multiprecision::gcd(g, key[i]);
  }
  for (auto &k : key) k /= g;
  return key;
}

std::size_t rank_of(std::span<const RationalPoint> vectors) {
  if (vectors.empty()) return 0;
  std::vector<RationalPoint> rows(vectors.begin(), vectors.end());
  const std::size_t cols = rows.front().dim();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::size_t affine_dimension(std::span<const RationalPoint> points) {
  if (points.size() <= 1) return 0;
  std::vector<RationalPoint> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  return rank_of(diffs);
}

std::ostream &operator<<(std::ostream &os, const RationalPoint &p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << to_string(p[i]);
  return os << ')';
}

} // namespace zono
