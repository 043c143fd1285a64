#pragma once

#include <ffprog/intpoly.hpp>

#include <cstdint>
#include <vector>

namespace ffprog {

using Residue = std::uint32_t;

class PrimeField;

// A residue in [0, p) tagged with its modulus.
class FieldElem {
 public:
  FieldElem() = default;

  Residue value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  friend FieldElem operator+(FieldElem a, FieldElem b);
  friend FieldElem operator-(FieldElem a, FieldElem b);
  friend FieldElem operator*(FieldElem a, FieldElem b);
  FieldElem operator-() const;
  friend bool operator==(FieldElem a, FieldElem b) = default;

 private:
  friend class PrimeField;
  friend FieldElem pow(FieldElem a, std::uint64_t e);
  FieldElem(Residue v, std::uint32_t p) : value_(v), modulus_(p) {}

  Residue value_ = 0;
  std::uint32_t modulus_ = 0;
};

// Deterministic Miller-Rabin; exact for every n < 2^64.
bool is_prime(std::uint64_t n) noexcept;

// F_p for a prime 3 <= p < 2^31. Immutable, cheap to copy.
class PrimeField {
 public:
  static constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

  // Throws Error(OutOfRange) outside [3, 2^31), Error(NotPrime) if composite.
  explicit PrimeField(std::int64_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  FieldElem elem(std::int64_t v) const;
  FieldElem zero() const { return FieldElem(0, p_); }
  FieldElem one() const { return FieldElem(1, p_); }

  // Reduces n/d as n * d^{-1}. Error(BadCharacteristic) if p | d.
  FieldElem from_rational(const Rational& q) const;

  // Raw residue arithmetic for inner loops; inputs must already be in [0, p).
  Residue add(Residue a, Residue b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) = default;

 private:
  std::uint32_t p_;
};

FieldElem pow(FieldElem a, std::uint64_t e);

// Throws Error(DivisionByZero) for a == 0.
FieldElem inv(FieldElem a);

// Horner evaluation of P at x with each coefficient reduced mod p.
// Throws Error(BadCharacteristic) if p divides a coefficient denominator.
FieldElem eval_poly(const IntPoly& poly, FieldElem x);

// Coefficients of P reduced mod p, index = degree (not stripped).
std::vector<Residue> reduce_coeffs(const IntPoly& poly, const PrimeField& field);

// table[y] = P(y) for every y in F_p.
std::vector<Residue> value_table(const IntPoly& poly, const PrimeField& field);

}  // namespace ffprog
