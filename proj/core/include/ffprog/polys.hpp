#pragma once

#include <ffprog/intpoly.hpp>
#include <ffprog/multipoly.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace ffprog {

inline constexpr int kMaxPairDegree = 12;

enum class Diagnosis { Ok, ZeroConstantViolated, LinearlyDependent, ZeroPolynomial };

std::string_view to_string(Diagnosis d) noexcept;

struct Admissibility {
  bool ok = false;
  Diagnosis diagnosis = Diagnosis::Ok;
};

// Both polynomials nonzero, both vanish at 0, and linearly independent over Q.
Admissibility check_admissible(const IntPoly& p1, const IntPoly& p2);

// A pair put into the shape the analysis assumes:
//   deg P1 = r1 <= r2 = deg P2, and lead(P1) != lead(P2) when r1 == r2.
// P2prime = P2 - P1 always has degree r2. When r1 == r2,
// P2 = (lead_b / lead_a) P1 + P3 with 0 < r3 < r1.
struct NormalizedPair {
  IntPoly p1;
  IntPoly p2;
  IntPoly p2prime;
  std::optional<IntPoly> p3;
  int r1 = 0;
  int r2 = 0;
  std::optional<int> r3;
  Rational lead_a;
  Rational lead_b;
  Rational lead_c;
  std::optional<Rational> lead_d;
  // Smallest characteristic for which every reduction mod p keeps the
  // degrees above and every coefficient is defined.
  std::int64_t min_char = 0;
  // deg P1 > deg P2 on input, so the inputs were exchanged (B and C trade roles).
  bool swapped = false;
  // (P1, P2) <- (P1 - P2, -P2) was applied because the leading terms agreed.
  bool replaced = false;

  bool equal_degrees() const noexcept { return r1 == r2; }
  // "P1;P2" in canonical text; stable identifier for caches and reports.
  std::string id() const;
};

bool operator==(const NormalizedPair& a, const NormalizedPair& b);

// Throws Error(Inadmissible) when check_admissible fails or deg P2 > 12.
NormalizedPair normalize_pair(const IntPoly& p1, const IntPoly& p2);

// Polynomials in y1..y8 whose common zero set is the auxiliary variety V,
// plus the map Q on it (and Q' in the equal-degree case).
struct AuxSystem {
  MultiPoly r1;
  MultiPoly r2;
  MultiPoly r3;
  MultiPoly r4;
  MultiPoly q;
  std::optional<MultiPoly> qprime;
};

AuxSystem build_aux_system(const NormalizedPair& np);

// P(y_{i1}) - P(y_{i2}) - P(y_{i3}) + P(y_{i4}) with 1-based variable numbers.
MultiPoly alternating_sum(const IntPoly& poly, int plus1, int minus1, int minus2, int plus2);

}  // namespace ffprog
