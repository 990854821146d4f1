#include "ksgraph/polynomial.hpp"

#include <sstream>

#include "ksgraph/error.hpp"

namespace ksg {

namespace {

void strip_leading_zeros(std::vector<Int>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  strip_leading_zeros(coeffs_);
}

IntPoly IntPoly::constant(Int value) {
  if (value == 0) return IntPoly();
  return IntPoly({std::move(value)});
}

IntPoly IntPoly::linear_minus(Int root) { return IntPoly({-root, Int(1)}); }

Int IntPoly::leading() const {
  if (coeffs_.empty()) return 0;
  return coeffs_.back();
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + other.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& other) const {
  if (is_zero() || other.is_zero()) return IntPoly();
  std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<Int> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Int(i);
  return IntPoly(std::move(out));
}

std::pair<int, IntPoly> IntPoly::remove_root(const Int& root) const {
  IntPoly current(*this);
  int multiplicity = 0;
  while (!current.is_zero() && current.eval_int(root) == 0) {
    // synthetic division by (x - root); exact because root is a root
    const auto& c = current.coeffs_;
    std::vector<Int> quotient(c.size() - 1);
    Int carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
      carry = c[i] + carry * root;
      quotient[i - 1] = carry;
    }
    current = IntPoly(std::move(quotient));
    ++multiplicity;
  }
  return {multiplicity, current};
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    const Int abs_c = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || abs_c != 1) os << abs_c.str();
    if (i >= 1) {
      os << "x";
      if (i >= 2) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

IntPoly char_poly(const RatMat& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "characteristic polynomial");
  if (!m.is_integer()) throw Error(ErrorCode::NonInteger, "characteristic polynomial");
  const auto rational = char_poly_rational(m);
  std::vector<Int> coeffs(rational.size());
  for (std::size_t i = 0; i < rational.size(); ++i) {
    if (!is_integer(rational[i]))
      throw Error(ErrorCode::NonInteger, "non-integer coefficient");  // unreachable
    coeffs[i] = boost::multiprecision::numerator(rational[i]);
  }
  return IntPoly(std::move(coeffs));
}

std::vector<Rat> char_poly_rational(const RatMat& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "characteristic polynomial");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier: exact over the rationals, and all divisions are exact
  // over the integers for integer input.
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = 1;
  RatMat acc = RatMat::zero(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs[n - k + 1];
    acc = m * acc;
    coeffs[n - k] = -acc.trace() / Rat(k);
  }
  return coeffs;
}

IntPoly clear_denominators(const std::vector<Rat>& coeffs) {
  Int lcm = 1;
  for (const auto& c : coeffs) {
    const Int den = boost::multiprecision::denominator(c);
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  std::vector<Int> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rat scaled = coeffs[i] * Rat(lcm);
    out[i] = boost::multiprecision::numerator(scaled);
  }
  return IntPoly(std::move(out));
}

std::pair<int, std::vector<Rat>> remove_rational_root(const std::vector<Rat>& coeffs,
                                                      const Rat& root) {
  auto eval = [&](const std::vector<Rat>& c) {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * root + *it;
    return acc;
  };
  std::vector<Rat> current = coeffs;
  while (!current.empty() && current.back() == 0) current.pop_back();
  int multiplicity = 0;
  while (!current.empty() && eval(current) == 0) {
    std::vector<Rat> quotient(current.size() - 1);
    Rat carry = 0;
    for (std::size_t i = current.size(); i-- > 1;) {
      carry = current[i] + carry * root;
      quotient[i - 1] = carry;
    }
    current = std::move(quotient);
    ++multiplicity;
  }
  return {multiplicity, current};
}

namespace {

using RatCoeffs = std::vector<Rat>;

void normalize(RatCoeffs& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Rat eval_at(const RatCoeffs& p, const Rat& x) {
  Rat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Remainder of polynomial division a / b over the rationals.
RatCoeffs poly_rem(RatCoeffs a, const RatCoeffs& b) {
  normalize(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    normalize(a);
  }
  return a;
}

int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int sign_variations(const std::vector<RatCoeffs>& chain, const Rat& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(eval_at(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

int count_distinct_roots_in(const IntPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "Sturm count of zero polynomial");
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "Sturm interval is empty");
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw Error(ErrorCode::InvalidArgument, "Sturm interval endpoint is a root");
  if (p.degree() == 0) return 0;

  RatCoeffs p0(p.coeffs().size());
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) p0[i] = Rat(p.coeffs()[i]);
  std::vector<RatCoeffs> chain;
  chain.push_back(p0);
  {
    const IntPoly d = p.derivative();
    RatCoeffs p1(d.coeffs().size());
    for (std::size_t i = 0; i < d.coeffs().size(); ++i) p1[i] = Rat(d.coeffs()[i]);
    chain.push_back(std::move(p1));
  }
  while (chain.back().size() > 1) {
    RatCoeffs rem = poly_rem(chain[chain.size() - 2], chain.back());
    if (rem.empty()) break;
    for (auto& c : rem) c = -c;
    chain.push_back(std::move(rem));
  }
  // V(a) - V(b) counts distinct roots in (a, b]; b is not a root.
  return sign_variations(chain, a) - sign_variations(chain, b);
}

int count_roots_in_open_unit_interval(const IntPoly& p) {
  return count_distinct_roots_in(p, Rat(0), Rat(1));
}

}  // namespace ksg
