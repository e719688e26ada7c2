#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "coringlab/scalar.hpp"

using namespace coringlab;

TEST(Scalar, RationalsReduceToLowestTerms) {
  Scalar a = Scalar::rational(6, -4);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ((a + Scalar::rational(3, 2)).to_string(), "0");
  EXPECT_EQ((a * a).to_string(), "9/4");
  EXPECT_EQ(a.inverse().to_string(), "-2/3");
}

TEST(Scalar, PromotesPastInt64AndDemotesBack) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  Scalar a = Scalar::rational(big, 1);
  Scalar sq = a * a;
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class(big) * mpz_class(big)));
  Scalar back = sq / a;
  EXPECT_EQ(back, a);
  EXPECT_EQ(back.to_string(), std::to_string(big));
}

TEST(Scalar, AddMulMatchesGmp) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
  for (int i = 0; i < 500; ++i) {
    std::int64_t p = d(rng), q = d(rng) | 1, r = d(rng), s = d(rng) | 1, t = d(rng), u = d(rng) | 1;
    Scalar acc = Scalar::rational(p, q);
    acc.add_mul(Scalar::rational(r, s), Scalar::rational(t, u));
    auto q_of = [](std::int64_t num, std::int64_t den) {
      mpq_class x{mpz_class(num), mpz_class(den)};
      x.canonicalize();
      return x;
    };
    mpq_class want = q_of(p, q) + q_of(r, s) * q_of(t, u);
    ASSERT_EQ(acc.to_mpq(), want);
  }
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f = Field::prime(7);
  Scalar a = Scalar::from_int(f, -1);
  EXPECT_EQ(a.to_string(), "6");
  EXPECT_EQ((a * a).to_string(), "1");
  EXPECT_EQ(Scalar::from_int(f, 3).inverse().to_string(), "5");
  EXPECT_EQ(Scalar::parse(f, "1/2").to_string(), "4");
  EXPECT_THROW(Scalar::from_int(f, 0).inverse(), FieldError);
}

TEST(Scalar, RejectsMixedFieldsAndBadModuli) {
  EXPECT_THROW(Field::prime(9), FieldError);
  Scalar a = Scalar::from_int(Field::prime(5), 1);
  Scalar b = Scalar::from_int(Field::rationals(), 1);
  EXPECT_THROW(a + b, FieldError);
}

TEST(Scalar, ParseRoundTrip) {
  const Field q = Field::rationals();
  for (const char* s : {"0", "1", "-7/3", "123456789012345678901234567891/2"}) {
    EXPECT_EQ(Scalar::parse(q, s).to_string(), s);
  }
  EXPECT_THROW(Scalar::parse(q, "1/0"), FieldError);
  EXPECT_THROW(Scalar::parse(q, "x"), FieldError);
}
