#include <ffprog/error.hpp>
#include <ffprog/field.hpp>

#include <gtest/gtest.h>

#include <random>

namespace ffprog {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ffprog::Error thrown";
  return Errc::Io;
}

TEST(PrimeField, AcceptsPrimes) {
  EXPECT_EQ(PrimeField(7).modulus(), 7u);
  EXPECT_EQ(PrimeField(3).modulus(), 3u);
  EXPECT_EQ(PrimeField(2147483647).modulus(), 2147483647u);  // 2^31 - 1
}

TEST(PrimeField, RejectsCompositeAndOutOfRange) {
  EXPECT_EQ(code_of([] { PrimeField(6); }), Errc::NotPrime);
  EXPECT_EQ(code_of([] { PrimeField(561); }), Errc::NotPrime);  // Carmichael
  EXPECT_EQ(code_of([] { PrimeField(2); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { PrimeField(-7); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { PrimeField(std::int64_t{1} << 31); }), Errc::OutOfRange);
  EXPECT_EQ(code_of([] { PrimeField(2147483659LL); }), Errc::OutOfRange);  // prime, too big
}

TEST(IsPrime, MatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    bool expected = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) expected = false;
    EXPECT_EQ(is_prime(n), expected) << n;
  }
}

TEST(Inverse, Examples) {
  const PrimeField f7(7);
  EXPECT_EQ(inv(f7.elem(2)).value(), 4u);
  EXPECT_EQ(inv(f7.elem(1)).value(), 1u);
  EXPECT_EQ(code_of([&] { inv(f7.zero()); }), Errc::DivisionByZero);
}

TEST(Inverse, ExhaustiveUpTo101) {
  for (std::int64_t p = 3; p <= 101; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    const PrimeField f(p);
    for (std::int64_t a = 1; a < p; ++a) EXPECT_EQ((inv(f.elem(a)) * f.elem(a)).value(), 1u) << p << " " << a;
  }
}

TEST(FieldElem, RingAxiomsRandomized) {
  std::mt19937_64 rng(2024);
  for (std::int64_t p : {3, 5, 101, 65521, 2147483647}) {
    const PrimeField f(p);
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    for (int i = 0; i < 10000; ++i) {
      const auto a = f.elem(dist(rng)), b = f.elem(dist(rng)), c = f.elem(dist(rng));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_LT((a * b).value(), f.modulus());
      ASSERT_EQ((a - b) + b, a);
    }
  }
}

TEST(FieldElem, NoOverflowNearTopModulus) {
  const PrimeField f(2147483647);
  const auto m1 = f.elem(-1);
  EXPECT_EQ((m1 * m1).value(), 1u);
  EXPECT_EQ((m1 + m1).value(), 2147483645u);
}

TEST(FieldElem, MixingFieldsThrows) {
  const PrimeField f5(5), f7(7);
  EXPECT_EQ(code_of([&] { (void)(f5.one() + f7.one()); }), Errc::Mismatch);
}

TEST(EvalPoly, Examples) {
  const PrimeField f7(7);
  EXPECT_EQ(eval_poly(parse_poly("y^2"), f7.elem(3)).value(), 2u);
  EXPECT_EQ(eval_poly(parse_poly("1/2*y"), f7.elem(3)).value(), 5u);
  EXPECT_EQ(code_of([&] { eval_poly(parse_poly("1/7*y"), f7.elem(3)); }), Errc::BadCharacteristic);
  EXPECT_EQ(code_of([&] { eval_poly(parse_poly("y^2 + 1/14*y"), f7.elem(3)); }), Errc::BadCharacteristic);
}

TEST(EvalPoly, AgreesWithPowerSumsExhaustively) {
  const std::vector<std::string> polys = {"y", "y^2", "y^3 - y", "2*y^2 + y", "1/2*y^3 - y",
                                          "-3/5*y^5 + 4*y^2 - 7", "y^12 + y^11"};
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    const PrimeField f(p);
    for (const auto& text : polys) {
      const IntPoly poly = parse_poly(text);
      bool defined = true;
      for (const auto& c : poly.coeffs())
        if (mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(p))) defined = false;
      if (!defined) continue;
      const auto table = value_table(poly, f);
      for (std::int64_t x = 0; x < p; ++x) {
        FieldElem naive = f.zero();
        for (int k = 0; k <= poly.degree(); ++k) naive = naive + f.from_rational(poly.coeff(k)) * pow(f.elem(x), k);
        ASSERT_EQ(eval_poly(poly, f.elem(x)), naive) << text << " p=" << p << " x=" << x;
        ASSERT_EQ(table[x], naive.value());
      }
    }
  }
}

TEST(FromRational, ReducesNegativesAndFractions) {
  const PrimeField f(11);
  EXPECT_EQ(f.from_rational(make_rational(-1)).value(), 10u);
  EXPECT_EQ(f.from_rational(make_rational(-1, 2)).value(), 5u);  // -6 = 5
  EXPECT_EQ(f.from_rational(make_rational(23)).value(), 1u);
}

}  // namespace
}  // namespace ffprog
