#pragma once

#include <ffprog/field.hpp>
#include <ffprog/polys.hpp>
#include <ffprog/setfun.hpp>
#include <ffprog/variety.hpp>

#include <cstdint>
#include <string>

namespace ffprog {

// Comparison slack used throughout for floating identities and inequalities.
inline constexpr double kTolerance = 1e-9;

// Exponent of the error term, 1/2 - 1/16.
inline constexpr double kErrorExponent = 0.5 - 1.0 / 16.0;

struct CountReport {
  std::uint32_t p = 0;
  std::string pair;  // "P1;P2" as given (never swapped)
  std::uint64_t size_a = 0, size_b = 0, size_c = 0;
  std::uint64_t exact_count = 0;
  Rational expected;  // |A||B||C| / p
  double error = 0.0;  // |exact_count - expected|, from exact arithmetic
  double bound = 0.0;  // constant_used * (|A||B||C|)^{1/2} p^{1/2 - 1/16}
  double constant_used = 1.0;
  // error / ((|A||B||C|)^{1/2} p^{1/2 - 1/16}); 0 when a set is empty.
  double ratio = 0.0;

  std::string to_json() const;
};

std::string count_csv_header();
std::string count_csv_row(const CountReport& r);

// #{(x, y) in F_p^2 : x in A, x + P1(y) in B, x + P2(y) in C}.
// Throws Error(Inadmissible) for inadmissible pairs and Error(CharTooSmall)
// when p < min_char of the normalized pair.
CountReport count_progressions(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                               const IntPoly& p1, const IntPoly& p2, const PrimeField& field,
                               double constant = 1.0);

// Lambda(1_A, 1_B, 1_C) exactly: count / p^2.
Rational lambda3_indicators(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                            const IntPoly& p1, const IntPoly& p2, const PrimeField& field);

// E_{x,y} f0(x) f1(x + P1(y)) f2(x + P2(y))
double lambda3(const GridFunction& f0, const GridFunction& f1, const GridFunction& f2,
               const IntPoly& p1, const IntPoly& p2, const PrimeField& field);

// E_{x,y} f0(x) f1(x + P1(y))
double lambda2(const GridFunction& f0, const GridFunction& f1, const IntPoly& p1,
               const PrimeField& field);

// |Lambda(1_A,1_B,1_C) - (Lambda(1_A,1_B,f_C) + gamma Lambda_{P1}(1_A,f_B) + alpha beta gamma)|
// with every term computed on its own.
double decomposition_residual(const SubsetSpec& a, const SubsetSpec& b, const SubsetSpec& c,
                              const IntPoly& p1, const IntPoly& p2, const PrimeField& field);

// E_{x in F_p, y in V} f0(x) f1(x + Q(y)), through the fiber histogram.
double lambda_prime(const GridFunction& f0, const GridFunction& f1, const FiberDistribution& fibers);

struct CauchySchwarzSides {
  double lhs = 0.0;  // Lambda(f0, f1, f2)
  double rhs = 0.0;  // |V|/p^4 ||f0|| ||f1|| ||f2||^{3/4} |Lambda'(f2, f2)|^{1/8}
};

CauchySchwarzSides cauchy_schwarz_sides(const GridFunction& f0, const GridFunction& f1, const GridFunction& f2,
                         const NormalizedPair& np, const FiberDistribution& fibers);

// |Lambda(f0,f1,f2)| / (||f0|| ||f1|| ||f2|| p^{-1/16}); 0 if a norm vanishes.
// Throws Error(NotMeanZero) when |E f2| > 1e-9.
double main_theorem_ratio(const GridFunction& f0, const GridFunction& f1, const GridFunction& f2,
                          const NormalizedPair& np, const FiberDistribution& fibers);

// |{a + P(b - a) : a in A, b in B}|. Throws Error(DegreeTooSmall) for deg P < 2.
std::uint64_t expander_image(const SubsetSpec& a, const SubsetSpec& b, const IntPoly& poly,
                             const PrimeField& field);

}  // namespace ffprog
