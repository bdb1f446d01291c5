#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fxmpc/cleartext.hpp"

using namespace fx;

namespace {

u64 ulp_vs_oracle(MathFn f, u64 x, const MathParams& p, u64 y) {
  HighPrec r = oracle(f, x, p.m, p.s, input_signed(f));
  return ulp_error(y, FixFmt(p.n, p.sp, f != MathFn::Exp && f != MathFn::Rsqrt), r);
}

}  // namespace

TEST(Cleartext, ExpTables) {
  MathParams p = exp_params(12, 14);
  const auto& luts = build_exp_luts(p);
  ASSERT_EQ(luts.size(), 2u);
  EXPECT_EQ(luts[0][0], pow2(14));
  EXPECT_EQ(luts[1][0], pow2(14));
  // floor(e^{-1/4096} * 2^14) = floor(16380.0005)
  EXPECT_EQ(luts[0][1], 16380u);
  for (const Lut& t : luts)
    for (size_t j = 1; j < t.size(); ++j) ASSERT_LE(t[j], t[j - 1]);
  EXPECT_EQ(&build_exp_luts(p), &luts);
}

TEST(Cleartext, ExpExamples) {
  MathParams p = exp_params(12, 14);
  EXPECT_EQ(rexp_ref(0, p), pow2(14));
  EXPECT_LE(ulp_vs_oracle(MathFn::Exp, 2838, p, rexp_ref(2838, p)), 3u);
  EXPECT_NEAR(static_cast<double>(rexp_ref(2838, p)), 8194.26, 3.0);
  EXPECT_LE(ulp_vs_oracle(MathFn::Exp, 0xffff, p, rexp_ref(0xffff, p)), 3u);
}

TEST(Cleartext, RecipExamples) {
  for (int s : {8, 11, 14}) {
    int g = (s - 1) / 2, l = s + 2;
    auto near = [&](u64 v, long double r) {
      long double y = static_cast<long double>(recip_ref(v, l, s, g, 0));
      EXPECT_LE(std::fabs(y - std::floor(r * pow2(s))), 3.0L) << "s=" << s << " v=" << v;
    };
    near(pow2(s), 1.0L);
    near(pow2(s) + pow2(s - 1), 2.0L / 3.0L);
    near(pow2(s + 1) - 1, static_cast<long double>(pow2(s)) / (pow2(s + 1) - 1));
    near(pow2(s + 1), 0.5L);
    EXPECT_THROW(recip_ref(pow2(s) - 1, l, s, g, 0), ContractViolation);
  }
}

TEST(Cleartext, SigmoidTanhAtZero) {
  for (int sy = 8; sy <= 14; ++sy) {
    MathParams p = sigmoid_params(12, sy);
    EXPECT_EQ(sigmoid_ref(0, p), pow2(sy - 1));
    EXPECT_EQ(tanh_ref(0, p), 0u);
  }
}

TEST(Cleartext, SigmoidSymmetry) {
  MathParams p = sigmoid_params(8, 14);
  for (u64 x = 1; x < pow2(15); ++x) {
    u64 a = sigmoid_ref(x, p), b = sigmoid_ref(mod2(0 - x, 16), p);
    ASSERT_EQ(mod2(a + b, 16), pow2(14)) << x;
    u64 ta = tanh_ref(x, p), tb = tanh_ref(mod2(0 - x, 16), p);
    ASSERT_EQ(mod2(ta + tb, 16), 0u) << x;
  }
}

TEST(Cleartext, RsqrtExamples) {
  MathParams p = rsqrt_params(12, 11);
  EXPECT_LE(ulp_vs_oracle(MathFn::Rsqrt, 4096, p, rsqrt_ref(4096, p)), 4u);
  EXPECT_NEAR(static_cast<double>(rsqrt_ref(4096, p)), 2048.0, 4.0);
  EXPECT_NEAR(static_cast<double>(rsqrt_ref(4 * 4096, p)), 1024.0, 4.0);
  EXPECT_NEAR(static_cast<double>(rsqrt_ref(1024, p)), 4096.0, 4.0);
  EXPECT_THROW(rsqrt_ref(rsqrt_min_input(12) - 1, p), ContractViolation);
  EXPECT_THROW(rsqrt_ref(pow2(15), p), ContractViolation);
}

TEST(Cleartext, RsqrtMinInput) {
  for (int s = 4; s <= 13; ++s) {
    u64 x = rsqrt_min_input(s);
    EXPECT_GE(static_cast<long double>(x) / pow2(s), 0.1L);
    EXPECT_LT(static_cast<long double>(x - 1) / pow2(s), 0.1L);
  }
}

TEST(Cleartext, UlpErrorExamples) {
  FixFmt f(16, 14);
  EXPECT_EQ(ulp_error(8192, f, {0.5, 0.0}), 0u);
  EXPECT_EQ(ulp_error(8190, f, {8192.4 / 16384.0, 0.0}), 2u);
  EXPECT_EQ(ulp_error(100, f, {100.9 / 16384.0, 0.0}), 0u);
  EXPECT_EQ(ulp_error(mod2(0 - 3, 16), f, {-1.0 / 16384.0, 0.0}), 2u);
}

TEST(Cleartext, OracleValues) {
  HighPrec e = oracle(MathFn::Exp, 0, 16, 12, false);
  EXPECT_EQ(e.hi, 1.0);
  HighPrec sg = oracle(MathFn::Sigmoid, 0, 16, 12, true);
  EXPECT_EQ(sg.hi, 0.5);
  HighPrec th = oracle(MathFn::Tanh, mod2(0 - 4096, 16), 16, 12, true);
  EXPECT_NEAR(th.hi, -0.7615941559557649, 1e-15);
  HighPrec rs = oracle(MathFn::Rsqrt, 4 * 4096, 16, 12, false);
  EXPECT_EQ(rs.hi, 0.5);
}

TEST(Cleartext, ReferencesRespectProtocolAssumptions) {
  // Exhaustive at the default pairs: the width and sign preconditions the secure
  // protocols rely on never fail.
  for (MathFn f : {MathFn::Exp, MathFn::Sigmoid, MathFn::Tanh, MathFn::Rsqrt}) {
    MathParams p = default_params(f, 12, f == MathFn::Rsqrt ? 11 : 14);
    RefCheck chk;
    u64 lo = f == MathFn::Rsqrt ? rsqrt_min_input(p.s) : 0;
    u64 hi = f == MathFn::Rsqrt ? pow2(15) : pow2(16);
    for (u64 x = lo; x < hi; ++x) reference(f, x, p, &chk);
    EXPECT_EQ(chk.violations, 0u) << fn_name(f) << ": " << chk.first;
  }
}

TEST(Cleartext, LutRoundTrip) {
  for (const Lut* t : {&recip_lut(6), &rsqrt_lut(6), &build_exp_luts(exp_params(10, 12))[1]}) {
    std::stringstream ss;
    write_lut(ss, *t);
    EXPECT_EQ(read_lut(ss), *t);
  }
}

TEST(Cleartext, FnNames) {
  for (MathFn f : {MathFn::Exp, MathFn::Sigmoid, MathFn::Tanh, MathFn::Rsqrt})
    EXPECT_EQ(parse_fn(fn_name(f)), f);
  EXPECT_ANY_THROW(parse_fn("log"));
}
