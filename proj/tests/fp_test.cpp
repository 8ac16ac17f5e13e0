#include <gtest/gtest.h>

#include "reeslab/fp.hpp"

using reeslab::Error;
using reeslab::Fp;

TEST(Fp, FieldAxiomsSmallPrimes) {
  for (int64_t p : {2, 3, 5, 101}) {
    Fp F(p);
    for (int64_t a = 0; a < p; ++a) {
      EXPECT_EQ(F.add(a, 0), a);
      EXPECT_EQ(F.mul(a, 1), a);
      EXPECT_EQ(F.add(a, F.neg(a)), 0);
      for (int64_t b = 0; b < p; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        EXPECT_EQ(F.sub(a, b), F.add(a, F.neg(b)));
        for (int64_t c = 0; c < p; ++c)
          EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST(Fp, Inverses) {
  for (int64_t p : {2, 3, 101, 32003}) {
    Fp F(p);
    for (int64_t a = 1; a < std::min<int64_t>(p, 500); ++a)
      EXPECT_EQ(F.mul(a, F.inv(a)), 1) << "p=" << p << " a=" << a;
    EXPECT_EQ(F.mul(p - 1, F.inv(p - 1)), 1);
  }
}

TEST(Fp, PowAndReduce) {
  Fp F(101);
  EXPECT_EQ(F.pow(2, 10), 1024 % 101);
  EXPECT_EQ(F.pow(3, 0), 1);
  EXPECT_EQ(F.pow(0, 5), 0);
  EXPECT_EQ(F.pow(7, 100), 1);  // Fermat
  EXPECT_EQ(F.reduce(-1), 100);
  EXPECT_EQ(F.reduce(-101), 0);
  EXPECT_EQ(F.reduce(202), 0);
  EXPECT_EQ(F.reduce(-205), 98);
}

TEST(Fp, PrimalityGate) {
  EXPECT_TRUE(Fp::is_prime(2));
  EXPECT_TRUE(Fp::is_prime(32003));
  EXPECT_FALSE(Fp::is_prime(1));
  EXPECT_FALSE(Fp::is_prime(32001));
  EXPECT_THROW(Fp(4), Error);
  EXPECT_THROW(Fp(1), Error);
  EXPECT_THROW(Fp(0), Error);
  EXPECT_NO_THROW(Fp(2147483647));           // 2^31 - 1 is prime
  EXPECT_THROW(Fp(int64_t(1) << 31), Error); // too large regardless
}

TEST(Fp, LargePrimeArithmeticStaysExact) {
  Fp F(2147483647);
  int64_t a = 2147483646, b = 2147483645;
  EXPECT_EQ(F.mul(a, b), F.mul(F.neg(1), F.neg(2)));
  EXPECT_EQ(F.mul(a, F.inv(a)), 1);
}
