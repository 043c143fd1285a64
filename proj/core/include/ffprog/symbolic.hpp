#pragma once

#include <ffprog/multipoly.hpp>
#include <ffprog/polys.hpp>

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace ffprog {

// Variable precedence for lexicographic tie-breaking, highest first.
// Entries are 0-based variable indices (0 = y1).
class VarOrder {
 public:
  // Throws Error(OutOfRange) unless `precedence` is a permutation of 0..7.
  explicit VarOrder(std::array<std::size_t, kNumVars> precedence);

  // "y8>y4>y7>y3>y6>y2>y5>y1"
  static VarOrder parse(const std::string& text);
  // y1 > y2 > ... > y8
  static VarOrder natural();
  // y8>y4>y7>y3>y6>y2>y5>y1: the order under which each R^(i) has a pure
  // power as leading monomial.
  static VarOrder leading_term_order();
  // y8>y4>y7>y3>y6>y5>y2>y1: the variant used in the equal-degree case.
  static VarOrder equal_degree_order();

  const std::array<std::size_t, kNumVars>& precedence() const noexcept { return precedence_; }
  std::string to_string() const;

 private:
  std::array<std::size_t, kNumVars> precedence_;
};

// Graded lexicographic: total degree first, then the first variable in
// precedence order whose exponents differ.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b, const VarOrder& order);

// Throws Error(ZeroPolynomial) for G == 0.
Monomial leading_monomial(const MultiPoly& g, const VarOrder& order);

struct LmClaim {
  std::string name;
  Monomial expected;
  Monomial actual;
  bool holds() const noexcept { return expected == actual; }
};

struct LmReport {
  std::vector<LmClaim> claims;
  bool pass() const noexcept;
  std::string to_json() const;
};

// lm(R1) = y4^r1, lm(R2) = y8^r1, lm(R3) = y6^r2, lm(R4) = y7^r2 under
// leading_term_order().
LmReport check_lm_claims(const AuxSystem& aux, const NormalizedPair& np);
bool verify_lm_claims(const AuxSystem& aux, const NormalizedPair& np);

// R3 - Q - (b/a)(R1 - R2) - Q'. Zero for every equal-degree pair; throws
// Error(Mismatch) when the pair has r1 < r2.
MultiPoly qprime_identity_residual(const AuxSystem& aux, const NormalizedPair& np);

enum class CertificateCase { R1LessR2, R1EqualsR2 };

std::string_view to_string(CertificateCase c) noexcept;

// Numerical proof that two univariate polynomials share no root: every root
// of the first (known in closed form) is plugged into the second.
struct Certificate {
  CertificateCase case_tag = CertificateCase::R1LessR2;
  std::array<int, 2> params{};  // (r1, r2) or (r1, r3)
  double min_modulus = 0.0;
  double threshold = 0.0;
  bool pass = false;

  // Unequal case: |e_{r2'}(1) - 1|^{r2'} < |e_{r1'}(a r2') - 1|^{r1'} for all
  // roots with e_{r1'}(a r2') != 1. Not part of `pass`; it fails for r1' = 2, r2' = 3.
  bool strict_inequality_holds = true;
  // Equal case: 2^{x+1} - 3^x - 1 at x = r3 / r1.
  double positivity_value = 0.0;
  bool positivity_holds = true;  // positivity_value > 1e-6
  // Equal case, per root: |(2^{x+1} e_{r1}(a r3 / 2) + 1)^{r1}| and (2^{x+1} - 1)^{r1}.
  std::vector<std::array<double, 2>> root_lower_bounds;

  std::string to_json() const;
};

// Requires 1 <= r1 < r2 <= 12, else Error(BadDegrees).
Certificate certify_separation_unequal(int r1, int r2, double threshold);
// Requires 1 <= r3 < r1 <= 12, else Error(BadDegrees).
Certificate certify_separation_equal(int r1, int r3, double threshold);

}  // namespace ffprog
