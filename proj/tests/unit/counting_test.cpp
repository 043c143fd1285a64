#include <ffprog/counting.hpp>
#include <ffprog/error.hpp>
#include <ffprog/variety.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace ffprog {
namespace {

const std::vector<std::pair<std::string, std::string>> kPairs = {
    {"y", "y^2"}, {"y^2", "y^3"}, {"y", "y^3"}, {"2*y^2", "y^2 + y"}};

IntPoly P(const char* text) { return parse_poly(text); }

TEST(CountProgressions, Examples) {
  const PrimeField f(5);
  const auto full = SubsetSpec::full(f);
  const auto r = count_progressions(full, full, full, P("y"), P("y^2"), f);
  EXPECT_EQ(r.exact_count, 25u);
  EXPECT_EQ(r.expected, 25);
  EXPECT_EQ(r.error, 0.0);
  EXPECT_EQ(count_progressions(full, full, SubsetSpec::empty(f), P("y"), P("y^2"), f).exact_count, 0u);
  const SubsetSpec zero(f, {0});
  EXPECT_EQ(count_progressions(zero, zero, zero, P("y"), P("y^2"), f).exact_count, 1u);
}

TEST(CountProgressions, ReportFields) {
  const PrimeField f(31);
  const auto a = random_subset(f, 0.5, 1), b = random_subset(f, 0.5, 2), c = random_subset(f, 0.5, 3);
  const auto r = count_progressions(a, b, c, P("y"), P("y^2"), f, 2.0);
  const double product = static_cast<double>(a.size() * b.size() * c.size());
  EXPECT_EQ(r.expected, Rational(static_cast<long>(a.size() * b.size() * c.size()), 31));
  EXPECT_NEAR(r.error, std::abs(static_cast<double>(r.exact_count) - product / 31.0), 1e-9);
  const double scale = std::sqrt(product) * std::pow(31.0, kErrorExponent);
  EXPECT_NEAR(r.bound, 2.0 * scale, 1e-9);
  EXPECT_NEAR(r.ratio, r.error / scale, 1e-12);
  EXPECT_EQ(r.pair, "y;y^2");
}

TEST(CountProgressions, CharTooSmallAndInadmissible) {
  const PrimeField f3(3);
  const auto full = SubsetSpec::full(f3);
  try {
    count_progressions(full, full, full, P("y^2"), P("y^3"), f3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CharTooSmall);
  }
  try {
    count_progressions(full, full, full, P("y"), P("2*y"), f3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Inadmissible);
  }
}

// p^2 Lambda(1_A, 1_B, 1_C) == N for 50 random triples per (pair, p).
TEST(CountProgressions, MatchesOracleAndLambda) {
  for (std::int64_t p : {5, 7, 11}) {
    const PrimeField f(p);
    for (const auto& [s1, s2] : kPairs) {
      const IntPoly p1 = parse_poly(s1), p2 = parse_poly(s2);
      for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const double density = 0.2 + 0.6 * (trial % 5) / 4.0;
        const auto a = random_subset(f, density, 3 * trial);
        const auto b = random_subset(f, density, 3 * trial + 1);
        const auto c = random_subset(f, density, 3 * trial + 2);
        const auto n = count_progressions(a, b, c, p1, p2, f).exact_count;
        ASSERT_EQ(n, oracle::count_progressions(a, b, c, p1, p2, f));
        const Rational exact = lambda3_indicators(a, b, c, p1, p2, f);
        ASSERT_EQ(exact * Rational(p * p), Rational(static_cast<long>(n)));
        const double lam = lambda3(GridFunction::indicator(a), GridFunction::indicator(b),
                                   GridFunction::indicator(c), p1, p2, f);
        ASSERT_EQ(std::llround(lam * p * p), static_cast<long long>(n));
      }
    }
  }
}

TEST(Lambda3, Examples) {
  const PrimeField f(5);
  const auto one = GridFunction::constant(f, 1.0), zero = GridFunction::constant(f, 0.0);
  EXPECT_DOUBLE_EQ(lambda3(one, one, one, P("y"), P("y^2"), f), 1.0);
  EXPECT_EQ(lambda3(one, one, zero, P("y"), P("y^2"), f), 0.0);
  const SubsetSpec s(f, {0, 1});
  const auto ind = GridFunction::indicator(s);
  const double value = lambda3(ind, ind, ind, P("y"), P("y^2"), f);
  EXPECT_DOUBLE_EQ(value, count_progressions(s, s, s, P("y"), P("y^2"), f).exact_count / 25.0);
  EXPECT_NEAR(value, oracle::lambda3(ind, ind, ind, P("y"), P("y^2"), f), 1e-15);
}

TEST(Lambda3, RandomRealFunctionsMatchOracle) {
  for (std::int64_t p : {7, 13}) {
    const PrimeField f(p);
    for (const auto& [s1, s2] : kPairs) {
      const auto f0 = random_function(f, 1), f1 = random_function(f, 2), f2 = random_function(f, 3);
      EXPECT_NEAR(lambda3(f0, f1, f2, P(s1.c_str()), P(s2.c_str()), f),
                  oracle::lambda3(f0, f1, f2, P(s1.c_str()), P(s2.c_str()), f), 1e-13);
    }
  }
}

TEST(Lambda2, Examples) {
  const PrimeField f(7);
  const auto one = GridFunction::constant(f, 1.0);
  EXPECT_DOUBLE_EQ(lambda2(one, one, P("y^2"), f), 1.0);
  const auto f1 = random_function(f, 11).centered();
  EXPECT_NEAR(lambda2(random_function(f, 10), f1, P("y"), f), 0.0, 1e-15);
  const auto g0 = random_function(f, 12), g1 = random_function(f, 13);
  EXPECT_NEAR(lambda2(g0, g1, P("y^2"), f), oracle::lambda2(g0, g1, P("y^2"), f), 1e-15);
}

// |Lambda_{P1}(f0, f1)| <= deg P1 ||f0|| ||f1|| p^{-1/2} for mean-zero f1.
TEST(Lambda2, WeilTypeBound) {
  for (std::int64_t p : {11, 31, 53, 101}) {
    const PrimeField f(p);
    for (const char* text : {"y", "y^2", "y^3", "2*y^2", "y^3 - y", "y^5 + 2*y"}) {
      const IntPoly poly = P(text);
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto f0 = random_function(f, 100 + seed), f1 = random_function(f, 200 + seed).centered();
        const double bound = poly.degree() * l2_norm(f0) * l2_norm(f1) / std::sqrt(static_cast<double>(p));
        EXPECT_LE(std::abs(lambda2(f0, f1, poly, f)), bound + kTolerance) << text << " p=" << p;
      }
    }
  }
}

TEST(DecompositionResidual, Examples) {
  const PrimeField f(31);
  const auto a = random_subset(f, 0.5, 1), b = random_subset(f, 0.5, 2);
  EXPECT_LT(decomposition_residual(a, b, SubsetSpec::full(f), P("y"), P("y^2"), f), 1e-10);
  EXPECT_EQ(decomposition_residual(SubsetSpec::empty(f), b, a, P("y"), P("y^2"), f), 0.0);
  for (const auto& [s1, s2] : kPairs) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto x = random_subset(f, 0.5, seed), y = random_subset(f, 0.5, seed + 100),
                 z = random_subset(f, 0.5, seed + 200);
      EXPECT_LT(decomposition_residual(x, y, z, P(s1.c_str()), P(s2.c_str()), f), 1e-10);
    }
  }
}

FiberDistribution uniform_fibers(const PrimeField& f, const NormalizedPair& np, std::uint64_t per_value) {
  FiberDistribution fd{f, np, std::vector<std::uint64_t>(f.modulus(), per_value)};
  fd.recompute_totals();
  return fd;
}

TEST(LambdaPrime, Examples) {
  const PrimeField f(5);
  const auto np = normalize_pair(P("y"), P("y^2"));
  const auto fibers = enumerate_fibers(np, f);
  const auto one = GridFunction::constant(f, 1.0);
  EXPECT_NEAR(lambda_prime(one, one, fibers), 1.0, 1e-15);
  const auto hypothetical = uniform_fibers(f, np, 125);
  EXPECT_NEAR(lambda_prime(random_function(f, 1), random_function(f, 2).centered(), hypothetical), 0.0, 1e-15);
}

TEST(LambdaPrime, MatchesPointwiseSumOverV) {
  const PrimeField f(3);
  for (const auto& [s1, s2] : kPairs) {
    const auto np = normalize_pair(P(s1.c_str()), P(s2.c_str()));
    EnumerationOptions opts;
    opts.enforce_min_char = false;
    const auto fibers = enumerate_fibers(np, f, opts);
    const auto points = oracle::variety_points(np, f);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto f0 = random_function(f, seed), f1 = random_function(f, seed + 7);
      EXPECT_NEAR(lambda_prime(f0, f1, fibers), oracle::lambda_prime(f0, f1, points), 1e-13) << s1 << ";" << s2;
    }
  }
}

TEST(LambdaPrime, EmptyVarietyIsAnError) {
  const PrimeField f(5);
  const auto np = normalize_pair(P("y"), P("y^2"));
  const auto empty = uniform_fibers(f, np, 0);
  const auto one = GridFunction::constant(f, 1.0);
  EXPECT_THROW(lambda_prime(one, one, empty), Error);
}

TEST(CauchySchwarzSides, Examples) {
  const PrimeField f(31);
  const auto np = normalize_pair(P("y"), P("y^2"));
  const auto fibers = enumerate_fibers(np, f);
  const auto one = GridFunction::constant(f, 1.0);
  const auto s = cauchy_schwarz_sides(one, one, one, np, fibers);
  EXPECT_NEAR(s.lhs, 1.0, 1e-12);
  EXPECT_NEAR(s.rhs, static_cast<double>(fibers.v_size) / std::pow(31.0, 4), 1e-12);
  EXPECT_GE(s.rhs, 1.0);
  const auto zero = GridFunction::constant(f, 0.0);
  const auto z = cauchy_schwarz_sides(one, one, zero, np, fibers);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = cauchy_schwarz_sides(random_function(f, seed).centered(), random_function(f, seed + 50).centered(),
                                random_function(f, seed + 100).centered(), np, fibers);
    EXPECT_LE(std::abs(r.lhs), r.rhs + kTolerance);
  }
}

TEST(CauchySchwarzSides, RejectsFibersOfAnotherPair) {
  const PrimeField f(5);
  const auto np = normalize_pair(P("y"), P("y^2"));
  const auto other = enumerate_fibers(normalize_pair(P("y"), P("y^3")), f);
  const auto one = GridFunction::constant(f, 1.0);
  EXPECT_THROW(cauchy_schwarz_sides(one, one, one, np, other), Error);
}

TEST(MainTheoremRatio, Examples) {
  const PrimeField f(31);
  const auto np = normalize_pair(P("y"), P("y^2"));
  const auto fibers = enumerate_fibers(np, f);
  const auto f2 = balance(random_subset(f, 0.5, 4));
  const double ratio = main_theorem_ratio(random_function(f, 1), random_function(f, 2), f2, np, fibers);
  EXPECT_TRUE(std::isfinite(ratio));
  EXPECT_GT(ratio, 0.0);
  EXPECT_EQ(main_theorem_ratio(GridFunction::constant(f, 0.0), random_function(f, 2), f2, np, fibers), 0.0);
  try {
    main_theorem_ratio(random_function(f, 1), random_function(f, 2), random_function(f, 3), np, fibers);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotMeanZero);
  }
}

TEST(ExpanderImage, Examples) {
  const PrimeField f(31);
  EXPECT_EQ(expander_image(SubsetSpec::full(f), SubsetSpec::full(f), P("y^2"), f), 31u);
  EXPECT_EQ(expander_image(SubsetSpec(f, {0}), SubsetSpec(f, {0}), P("y^2"), f), 1u);
  const auto a = random_subset(f, 0.9, 5), b = random_subset(f, 0.9, 6);
  EXPECT_EQ(expander_image(a, b, P("y^2"), f), oracle::expander_image(a, b, P("y^2"), f));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = random_subset(f, 0.1, seed), y = random_subset(f, 0.1, seed + 1);
    EXPECT_EQ(expander_image(x, y, P("y^3 + y^2"), f), oracle::expander_image(x, y, P("y^3 + y^2"), f));
  }
  try {
    expander_image(a, b, P("3*y"), f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegreeTooSmall);
  }
}

}  // namespace
}  // namespace ffprog
