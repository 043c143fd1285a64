#include <ffprog/counting.hpp>
#include <ffprog/error.hpp>
#include <ffprog/fourier.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ffprog {
namespace {

IntPoly P(const char* text) { return parse_poly(text); }

TEST(Dft, Examples) {
  const PrimeField f(13);
  const auto delta = dft(GridFunction::indicator(SubsetSpec(f, {0})));
  for (const Complex& c : delta.coeffs) {
    EXPECT_NEAR(c.real(), 1.0 / 13, 1e-15);
    EXPECT_NEAR(c.imag(), 0.0, 1e-15);
  }
  const auto one = dft(GridFunction::constant(f, 1.0));
  EXPECT_NEAR(std::abs(one.coeffs[0] - Complex(1.0)), 0.0, 1e-12);
  for (std::size_t t = 1; t < 13; ++t) EXPECT_LT(std::abs(one.coeffs[t]), 1e-12);
}

TEST(Dft, InversionRoundTrip) {
  const PrimeField f(17);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_function(f, seed);
    const auto back = inverse_dft(dft(g));
    for (Residue x = 0; x < 17; ++x) EXPECT_NEAR(back[x], g[x], 1e-9);
  }
}

TEST(Dft, ZeroCoefficientIsMean) {
  for (std::int64_t p : {3, 31, 211}) {
    const PrimeField f(p);
    const auto g = random_function(f, 3);
    EXPECT_NEAR(dft(g).coeffs[0].real(), g.mean(), 1e-12);
  }
}

TEST(Dft, Parseval) {
  for (std::int64_t p : {3, 5, 31, 101, 509}) {
    const PrimeField f(p);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = random_function(f, seed);
      const double norm2 = std::pow(l2_norm(g), 2);
      EXPECT_NEAR(spectral_energy(dft(g)), norm2, 1e-9 * norm2);
      const auto b = balance(random_subset(f, 0.3, seed));
      const double bnorm2 = std::pow(l2_norm(b), 2);
      EXPECT_NEAR(spectral_energy(dft(b)), bnorm2, 1e-9 * std::max(bnorm2, 1e-300));
    }
  }
}

// Hermitian symmetry of the coefficients of a real function.
TEST(Dft, RealInputIsConjugateSymmetric) {
  const PrimeField f(29);
  const auto s = dft(random_function(f, 8));
  for (std::size_t t = 1; t < 29; ++t) EXPECT_LT(std::abs(s.coeffs[t] - std::conj(s.coeffs[29 - t])), 1e-14);
}

TEST(WeilRatio, Examples) {
  EXPECT_LT(weil_ratio(P("y"), PrimeField(7)), 1e-12);
  EXPECT_NEAR(weil_ratio(P("y^2"), PrimeField(7)), 0.5, 1e-12);
  EXPECT_LE(weil_ratio(P("y^3"), PrimeField(7)), 1.0);
}

// |sum_y psi_t(y^2)| = sqrt(p) for every p and t != 0.
TEST(WeilRatio, QuadraticGaussSums) {
  for (std::int64_t p : {3, 5, 11, 101, 257}) EXPECT_NEAR(weil_ratio(P("y^2"), PrimeField(p)), 0.5, 1e-10);
}

TEST(WeilRatio, BoundHoldsOnTestSet) {
  const char* polys[] = {"y", "y^2", "y^3", "y^4", "2*y^2", "y^2 + y", "y^3 - y", "1/2*y^3 - y",
                         "y^5 + 2*y", "y^6", "3*y^7 - y^2", "y^12"};
  for (std::int64_t p = 11; p <= 101; ++p) {
    if (!is_prime(p)) continue;
    for (const char* text : polys) {
      const IntPoly poly = P(text);
      if (p <= poly.degree()) continue;
      EXPECT_LE(weil_ratio(poly, PrimeField(p)), 1.0 + 1e-9) << text << " p=" << p;
    }
  }
}

TEST(WeilRatio, Errors) {
  try {
    weil_ratio(P("5"), PrimeField(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeTooSmall);
  }
  try {
    weil_ratio(P("y^7"), PrimeField(7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CharTooSmall);
  }
}

FiberDistribution uniform_fibers(const PrimeField& f, const NormalizedPair& np, std::uint64_t per_value) {
  FiberDistribution fd{f, np, std::vector<std::uint64_t>(f.modulus(), per_value)};
  fd.recompute_totals();
  return fd;
}

TEST(CharSums, Examples) {
  const PrimeField f(11);
  const auto np = normalize_pair(P("y"), P("y^2"));
  const auto sums = char_sums_over_fibers(uniform_fibers(f, np, 3));
  EXPECT_EQ(sums[0], Complex(1.0));
  for (std::size_t t = 1; t < 11; ++t) EXPECT_LT(std::abs(sums[t]), 1e-14);
  EXPECT_THROW(char_sums_over_fibers(uniform_fibers(f, np, 0)), Error);
}

TEST(CharSums, MatchDirectSumOverV) {
  for (std::int64_t p : {3, 5}) {
    const PrimeField f(p);
    for (const auto& [s1, s2] : {std::pair{"y", "y^2"}, std::pair{"y^2", "y^3"}, std::pair{"2*y^2", "y^2 + y"}}) {
      const auto np = normalize_pair(P(s1), P(s2));
      EnumerationOptions opts;
      opts.enforce_min_char = false;
      const auto fibers = enumerate_fibers(np, f, opts);
      const auto points = oracle::variety_points(np, f);
      const auto sums = char_sums_over_fibers(fibers);
      EXPECT_EQ(sums[0], Complex(1.0));
      double max_nontrivial = 0.0;
      for (std::uint32_t t = 0; t < static_cast<std::uint32_t>(p); ++t) {
        EXPECT_LT(std::abs(sums[t] - oracle::char_sum(points, p, t)), 1e-12) << s1 << ";" << s2 << " t=" << t;
        if (t != 0) max_nontrivial = std::max(max_nontrivial, std::abs(sums[t]));
      }
      EXPECT_NEAR(max_nontrivial_char_sum(fibers), max_nontrivial, 1e-15);
    }
  }
}

TEST(LambdaPrimeSpectral, Examples) {
  const PrimeField f(7);
  const auto fibers = enumerate_fibers(normalize_pair(P("y"), P("y^2")), f);
  EXPECT_NEAR(lambda_prime_spectral(GridFunction::constant(f, 1.0), fibers), 1.0, 1e-12);
  EXPECT_EQ(lambda_prime_spectral(GridFunction::constant(f, 0.0), fibers), 0.0);
}

// Two independent paths: the histogram convolution and the spectral sum.
TEST(LambdaPrimeSpectral, MatchesDirectLambdaPrime) {
  const PrimeField f(31);
  const auto fibers = enumerate_fibers(normalize_pair(P("y"), P("y^2")), f);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f2 = balance(random_subset(f, 0.5, seed));
    const double direct = lambda_prime(f2, f2, fibers);
    const Complex spectral = lambda_prime_spectral_complex(f2, fibers);
    EXPECT_NEAR(spectral.real(), direct, 1e-8 * std::max(std::abs(direct), 1e-12));
    EXPECT_LT(std::abs(spectral.imag()), 1e-9);
    EXPECT_EQ(lambda_prime_spectral(f2, fibers), spectral.real());
  }
}

TEST(LambdaPrimeSpectral, MatchesDirectOnOtherPairs) {
  const PrimeField f(13);
  for (const auto& [s1, s2] : {std::pair{"y^2", "y^3"}, std::pair{"y", "y^3"}, std::pair{"2*y^2", "y^2 + y"}}) {
    const auto fibers = enumerate_fibers(normalize_pair(P(s1), P(s2)), f);
    const auto f2 = random_function(f, 77);
    const double direct = lambda_prime(f2, f2, fibers);
    EXPECT_NEAR(lambda_prime_spectral(f2, fibers), direct, 1e-8 * std::abs(direct)) << s1 << ";" << s2;
  }
}

}  // namespace
}  // namespace ffprog
