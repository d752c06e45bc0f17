#include <gtest/gtest.h>

#include <random>

#include "klcells/field.hpp"
#include "klcells/laurent.hpp"
#include "klcells/linalg.hpp"

using namespace klc::num;

namespace {

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), ex(-4, 4), co(-5, 5);
  LaurentPoly p;
  for (int i = len(rng); i > 0; --i) p += LaurentPoly::monomial(Integer(co(rng)), ex(rng));
  return p;
}

AlgebraicNumber random_alg(std::mt19937& rng, const FieldPtr& f) {
  std::uniform_int_distribution<int> co(-6, 6), den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < f->degree(); ++i) c.emplace_back(co(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return AlgebraicNumber(f, c);
}

}  // namespace

TEST(Laurent, Examples) {
  EXPECT_EQ(vpow(1) * vpow(-1), LaurentPoly(Integer(1)));
  EXPECT_EQ((vpow(1) - vpow(-1)) * (vpow(1) + vpow(-1)), vpow(2) - vpow(-2));
  LaurentPoly p = LaurentPoly::monomial(2, 3) - vpow(-1);
  EXPECT_EQ(p.bar(), LaurentPoly::monomial(2, -3) - vpow(1));
  EXPECT_EQ(LaurentPoly().degree(), kDegNegInf);
  EXPECT_EQ((vpow(2) + LaurentPoly(3)).degree(), 2);
  EXPECT_EQ(vpow(-5).degree(), -5);
  EXPECT_EQ(to_string(p), "2*v^3 - v^-1");
}

TEST(Laurent, RingAxiomsRandom) {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.bar().bar(), a);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Integer, OverflowSpillsToBig) {
  Integer a(INT64_MAX);
  Integer b = a + Integer(1);
  EXPECT_FALSE(b.is_small());
  EXPECT_EQ(b - Integer(1), a);
  EXPECT_TRUE((b - Integer(1)).is_small());
  Integer c = a * a;
  EXPECT_EQ(c.to_mpz(), mpz_class(INT64_MAX) * mpz_class(INT64_MAX));
  EXPECT_EQ(-Integer(INT64_MIN), Integer(mpz_class("9223372036854775808")));
}

TEST(Field, MinimalPolynomials) {
  // oracle: known minimal polynomials of 2cos(pi/m)
  auto mp = [](int m) {
    std::vector<long> out;
    for (auto& c : field_for(m)->minimal_polynomial()) out.push_back(c.small());
    return out;
  };
  EXPECT_EQ(mp(2), (std::vector<long>{0, 1}));
  EXPECT_EQ(mp(3), (std::vector<long>{-1, 1}));
  EXPECT_EQ(mp(4), (std::vector<long>{-2, 0, 1}));
  EXPECT_EQ(mp(5), (std::vector<long>{-1, -1, 1}));
  EXPECT_EQ(mp(6), (std::vector<long>{-3, 0, 1}));
  EXPECT_EQ(mp(7), (std::vector<long>{1, -2, -1, 1}));
  for (int m = 2; m <= 30; ++m) {
    auto f = field_for(m);
    // numerical root check
    double th = 2 * std::cos(M_PI / m), val = 0, pw = 1;
    for (auto& c : f->minimal_polynomial()) {
      val += c.small() * pw;
      pw *= th;
    }
    EXPECT_NEAR(val, 0.0, 1e-6) << m;
  }
}

TEST(Field, Examples) {
  auto f = field_for(5);
  auto c = AlgebraicNumber::generator(f);
  EXPECT_EQ(c * c, c + AlgebraicNumber(1));
  EXPECT_EQ(c + AlgebraicNumber(), c);
  EXPECT_EQ(c.inv(), c - AlgebraicNumber(1));
  EXPECT_EQ(c.sign(), 1);
  EXPECT_EQ((AlgebraicNumber(1) - c).sign(), -1);
  EXPECT_NEAR(c.to_double(), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_THROW(AlgebraicNumber().inv(), std::domain_error);
}

TEST(Field, TwoCosAndSubfields) {
  auto f12 = field_for(12);
  for (int k = 0; k <= 30; ++k)
    EXPECT_NEAR(AlgebraicNumber::two_cos(k, f12).to_double(), 2 * std::cos(k * M_PI / 12), 1e-9) << k;
  // 2cos(pi/4) = sqrt2 lives in Q(2cos(pi/12)) and converts down
  auto s = to_subfield(AlgebraicNumber::two_cos(3, f12), field_for(4));
  EXPECT_EQ(s, AlgebraicNumber::generator(field_for(4)));
  EXPECT_THROW(to_subfield(AlgebraicNumber::generator(f12), field_for(4)), std::domain_error);
}

TEST(Field, AxiomsRandom) {
  std::mt19937 rng(11);
  for (int m : {4, 5, 7, 8, 9, 12}) {
    auto f = field_for(m);
    for (int it = 0; it < 40; ++it) {
      auto a = random_alg(rng, f), b = random_alg(rng, f), c = random_alg(rng, f);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) EXPECT_EQ(a * a.inv(), AlgebraicNumber(1));
      double da = a.to_double();
      if (std::abs(da) > 1e-9) EXPECT_EQ(a.sign(), da > 0 ? 1 : -1);
    }
  }
}

TEST(Field, SignNearZero) {
  // 1 + c5 - c5^2 is exactly zero; perturbation by 1e-30 must still be decided
  auto f = field_for(5);
  auto c = AlgebraicNumber::generator(f);
  auto z = AlgebraicNumber(1) + c - c * c;
  EXPECT_TRUE(z.is_zero());
  auto tiny = AlgebraicNumber(Rational(mpz_class(1), mpz_class("1000000000000000000000000000000")));
  // c - golden ratio approximation
  Rational approx(mpz_class("161803398874989484820458683436563811772"), mpz_class("100000000000000000000000000000000000000"));
  EXPECT_EQ((c - AlgebraicNumber(approx)).sign(), 1);
  EXPECT_EQ((z + tiny).sign(), 1);
}

TEST(Series, Inverse) {
  auto q = truncated_series_inverse<Rational>({1, -1}, 3);
  EXPECT_EQ(q, (std::vector<Rational>{1, 1, 1, 1}));
  EXPECT_EQ(truncated_series_inverse<Rational>({1}, 5), (std::vector<Rational>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(truncated_series_inverse<Rational>({1, -2, 1}, 2), (std::vector<Rational>{1, 2, 3}));
  EXPECT_THROW(truncated_series_inverse<Rational>({0, 1}, 2), std::domain_error);
}

TEST(LinAlg, DetOneMinusQM) {
  Matrix<Rational> rot{{0, -1}, {1, 0}};
  EXPECT_EQ(det_one_minus_qm(rot), (std::vector<Rational>{1, 0, 1}));
  Matrix<Rational> a{{1, 2}, {3, 4}};
  EXPECT_EQ(determinant(a), Rational(-2));
  auto x = solve<Rational>(a, {5, 11}, 2);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(1));
  EXPECT_EQ((*x)[1], Rational(2));
  EXPECT_EQ(rank<Rational>({{1, 2}, {2, 4}}), 1);
}
