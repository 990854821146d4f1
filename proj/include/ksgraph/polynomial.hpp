#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ksgraph/matrix.hpp"
#include "ksgraph/rational.hpp"

namespace ksg {

/// Polynomial with arbitrary-precision integer coefficients, ascending
/// degree. The zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(Int value);
  /// x - root
  static IntPoly linear_minus(Int root);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  Int leading() const;

  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;

  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator*(const IntPoly& other) const;
  bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const IntPoly& other) const { return !(*this == other); }

  IntPoly derivative() const;

  /// Divides out every (x - root) factor; returns {multiplicity, quotient}.
  std::pair<int, IntPoly> remove_root(const Int& root) const;

  /// Human-readable form, e.g. "x^2 - 6x + 8".
  std::string to_string() const;

 private:
  std::vector<Int> coeffs_;
};

/// Exact characteristic polynomial det(xI - m) of a square matrix with
/// integer entries (Faddeev-LeVerrier). Throws NotSquare, NonInteger.
IntPoly char_poly(const RatMat& m);

/// Exact characteristic polynomial of any square rational matrix, monic,
/// coefficients ascending. Faddeev-LeVerrier over the rationals.
std::vector<Rat> char_poly_rational(const RatMat& m);

/// Clears denominators: the returned integer polynomial has the same roots.
IntPoly clear_denominators(const std::vector<Rat>& coeffs);

/// Multiplicity of `root` in the rational-coefficient polynomial, and the
/// quotient after dividing the factors out.
std::pair<int, std::vector<Rat>> remove_rational_root(const std::vector<Rat>& coeffs,
                                                      const Rat& root);

/// Number of distinct real roots of p in the open interval (0, 1), by Sturm's
/// theorem. Requires p(0) != 0 and p(1) != 0; strip those roots first.
int count_roots_in_open_unit_interval(const IntPoly& p);

/// Distinct real roots of p in (a, b], a < b, by Sturm's theorem. Requires
/// p(a) != 0 and p(b) != 0 (so the count is that of the open interval).
int count_distinct_roots_in(const IntPoly& p, const Rat& a, const Rat& b);

}  // namespace ksg
