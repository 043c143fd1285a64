#pragma once

#include <ffprog/rational.hpp>

#include <limits>
#include <string>
#include <vector>

namespace ffprog {

// Univariate polynomial in y with exact rational coefficients, stored densely
// by degree. Trailing zeros are always stripped.
class IntPoly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  IntPoly() = default;
  explicit IntPoly(std::vector<Rational> coeffs);

  static IntPoly monomial(const Rational& c, int k);
  static IntPoly from_ints(const std::vector<long>& coeffs);

  int degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Zero for indices past the degree.
  Rational coeff(int k) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Rational& c, const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Canonical sparse text, highest degree first: "y^2 - 1/2*y".
  std::string to_string() const;

 private:
  void strip();

  std::vector<Rational> coeffs_;
};

// Accepts the sparse form ("y^2 + 3*y", "1/2*y^3 - y", "2y") or a dense
// coefficient list ("[0,3,1]" = 3y + y^2). Throws Error(Parse).
IntPoly parse_poly(const std::string& text);

// "P1,P2" where each side is anything parse_poly accepts. Commas inside
// brackets belong to a dense list; ';' is also accepted as the separator.
std::pair<IntPoly, IntPoly> parse_pair(const std::string& text);

}  // namespace ffprog
