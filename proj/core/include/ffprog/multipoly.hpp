#pragma once

#include <ffprog/field.hpp>
#include <ffprog/intpoly.hpp>
#include <ffprog/rational.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>

namespace ffprog {

inline constexpr std::size_t kNumVars = 8;

// Exponent vector over y1..y8; index 0 is y1.
struct Monomial {
  std::array<std::uint16_t, kNumVars> exponents{};

  static Monomial unit() { return {}; }
  // y_{var+1}^power
  static Monomial var(std::size_t var, std::uint16_t power = 1);

  unsigned total_degree() const noexcept;
  Monomial operator*(const Monomial& other) const;

  // Storage order only (plain lexicographic on the array); monomial orders
  // live in symbolic.hpp.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const;
};

// Sparse polynomial in y1..y8 with exact rational coefficients. No zero
// coefficient is ever stored.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(std::size_t var);
  static MultiPoly term(const Rational& c, const Monomial& m);
  // P(y_{var+1}) for a univariate P.
  static MultiPoly substitute(const IntPoly& poly, std::size_t var);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coeff(const Monomial& m) const;
  unsigned total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& a);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  // Value at a point of F_p^8. Throws Error(BadCharacteristic) if p divides
  // a coefficient denominator.
  Residue evaluate_mod(std::span<const Residue, kNumVars> point, const PrimeField& field) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

}  // namespace ffprog
