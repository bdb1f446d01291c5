#include <gtest/gtest.h>

#include <random>

#include "fxmpc/ring.hpp"

using namespace fx;

TEST(Ring, WrapExamples) {
  EXPECT_TRUE(wrap(RingElem(3, 2), RingElem(2, 2)));
  EXPECT_FALSE(wrap(RingElem(0, 8), RingElem(0, 8)));
  EXPECT_TRUE(wrap(RingElem(7, 4), RingElem(9, 4)));
  EXPECT_THROW(wrap(RingElem(1, 4), RingElem(1, 5)), ContractViolation);
}

TEST(Ring, InterpretAndEncode) {
  EXPECT_EQ(interpret(RingElem(12, 4), FixFmt(4, 0)), -4.0L);
  EXPECT_EQ(interpret(RingElem(4096, 16), FixFmt(16, 12)), 1.0L);
  EXPECT_EQ(interpret(RingElem(0, 16), FixFmt(16, 5, false)), 0.0L);
  EXPECT_EQ(encode(1.0L, FixFmt(16, 14)).value(), 16384u);
  EXPECT_EQ(encode(-0.5L, FixFmt(8, 4)).value(), 248u);
  EXPECT_EQ(encode(0.6931L, FixFmt(16, 12)).value(), 2838u);
  EXPECT_THROW(FixFmt(8, 8), ContractViolation);
}

TEST(Ring, ShiftExamples) {
  RingElem t = truncate_reduce(RingElem(13, 4), 2);
  EXPECT_EQ(t, RingElem(3, 2));
  EXPECT_EQ(arith_shift_right(RingElem(12, 4), 1).value(), 14u);
  EXPECT_EQ(c_div_pow2(RingElem(9, 4), 1).value(), 13u);
  EXPECT_EQ(c_div_pow2(RingElem(7, 4), 1).value(), 3u);
  EXPECT_EQ(sign_extend(RingElem(3, 2), 4).value(), 15u);
  EXPECT_EQ(zero_extend(RingElem(3, 2), 4).value(), 3u);
  EXPECT_THROW(truncate_reduce(RingElem(1, 4), 4), ContractViolation);
}

TEST(Ring, EncodeInterpretRoundTrip) {
  for (int w = 2; w <= 12; ++w)
    for (int s = 0; s < w; ++s)
      for (u64 x = 0; x < pow2(w); ++x) {
        FixFmt f(w, s);
        ASSERT_EQ(encode(interpret(RingElem(x, w), f), f).value(), x);
      }
}

TEST(Ring, ShiftIdentitiesExhaustive) {
  for (int w = 1; w <= 10; ++w)
    for (u64 x = 0; x < pow2(w); ++x) {
      RingElem e(x, w);
      const i64 v = e.as_signed();
      for (int s = 0; s < w; ++s) {
        ASSERT_EQ(arith_shift_right(e, s).as_signed(), v >> s);
        ASSERT_EQ(logical_shift_right(e, s).value(), x >> s);
        i64 q = v / (i64{1} << s);
        ASSERT_EQ(c_div_pow2(e, s).as_signed(), q);
        ASSERT_EQ(truncate_reduce(e, s).width(), w - s);
      }
      ASSERT_EQ(sign_extend(e, w + 3).as_signed(), v);
      ASSERT_EQ(add(e, neg(e)).value(), 0u);
      ASSERT_EQ(msb(e), v < 0);
    }
}

TEST(Ring, SplitWrapProperty) {
  for (int w = 1; w <= 8; ++w)
    for (int s = 0; s <= w; ++s)
      for (u64 a = 0; a < pow2(w); ++a)
        for (u64 b = 0; b < pow2(w); ++b) {
          WrapSplit p = split_wrap(a, b, w, s);
          ASSERT_EQ(ref::wrap(a, b, w), p.d != (p.c && p.e));
        }
}

TEST(Ring, ArithmeticMatchesWideIntegers) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100000; ++i) {
    int w = 1 + rng() % 64;
    RingElem a(rng(), w), b(rng(), w);
    u128 sum = static_cast<u128>(a.value()) + b.value();
    ASSERT_EQ(add(a, b).value(), mod2(static_cast<u64>(sum), w));
    ASSERT_EQ(wrap(a, b), w == 64 ? (sum >> 64) != 0 : sum >= (static_cast<u128>(1) << w));
    ASSERT_EQ(sub(add(a, b), b), a);
    ASSERT_EQ(mul_mod(a, b).value(), mod2(a.value() * b.value(), w));
  }
}

TEST(Ring, MatmulRef) {
  Matrix x(2, 3, 8), y(3, 2, 8);
  for (int i = 0; i < 6; ++i) x.elems[i] = i + 1, y.elems[i] = 250 + i;
  Matrix z = matmul_ref(x, y, 18);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      u64 acc = 0;
      for (int k = 0; k < 3; ++k) acc += x.at(i, k) * y.at(k, j);
      EXPECT_EQ(z.at(i, j), mod2(acc, 18));
    }
  EXPECT_THROW(matmul_ref(x, x, 16), ContractViolation);
  EXPECT_EQ(x.transposed().at(2, 1), x.at(1, 2));
}
