#include <gtest/gtest.h>

#include "fxmpc/cost_model.hpp"
#include "pair_util.hpp"

using namespace fx;
using namespace fx::test;

namespace {

const MathFn kAll[] = {MathFn::Exp, MathFn::Sigmoid, MathFn::Tanh, MathFn::Rsqrt};

MathParams default_fn_params(MathFn f) { return default_params(f, 12, f == MathFn::Rsqrt ? 11 : 14); }

std::vector<u64> random_inputs(MathFn f, const MathParams& p, size_t n, std::mt19937_64& rng) {
  std::vector<u64> xs(n);
  for (auto& x : xs) {
    x = mod2(rng(), p.m);
    if (f == MathFn::Rsqrt) x = rsqrt_min_input(p.s) + x % (pow2(p.m - 1) - rsqrt_min_input(p.s));
  }
  return xs;
}

Outcome eval(MathFn f, const MathParams& p, const std::vector<u64>& xs, u64 seed = 1) {
  return run_shared(xs, p.m, [&](Session& s, const AShare& x) { return secure_eval(s, f, x, p); }, seed);
}

}  // namespace

TEST(SecureMath, KnownValues) {
  MathParams pe = default_fn_params(MathFn::Exp);
  EXPECT_EQ(eval(MathFn::Exp, pe, {0}).out[0], pow2(pe.sp));
  MathParams ps = default_fn_params(MathFn::Sigmoid);
  EXPECT_EQ(eval(MathFn::Sigmoid, ps, {0}).out[0], pow2(ps.sp - 1));
  EXPECT_EQ(eval(MathFn::Tanh, ps, {0}).out[0], 0u);
  MathParams pr = default_fn_params(MathFn::Rsqrt);
  u64 one = pow2(pr.s);
  EXPECT_EQ(eval(MathFn::Rsqrt, pr, {one}).out[0], rsqrt_ref(one, pr));
}

TEST(SecureMath, RecipMatchesReference) {
  for (int s : {6, 8, 12}) {
    const int g = (s - 1) / 2, l = s + 2;
    std::vector<u64> vs;
    for (u64 v = pow2(s); v <= pow2(s + 1); v += std::max<u64>(1, pow2(s) / 64)) vs.push_back(v);
    vs.push_back(pow2(s + 1));
    Outcome r = run_shared(vs, l, [&](Session& ss, const AShare& v) { return sec_recip(ss, v, l, s, g, 0); });
    for (size_t i = 0; i < vs.size(); ++i) ASSERT_EQ(r.out[i], recip_ref(vs[i], l, s, g, 0)) << s << " " << vs[i];
  }
}

TEST(SecureMath, RandomEquivalenceAcrossGrid) {
  for (MathFn f : kAll)
    for (auto [sx, sy] : f == MathFn::Rsqrt ? std::vector<std::pair<int, int>>{{4, 4}, {9, 13}, {13, 8}}
                                            : std::vector<std::pair<int, int>>{{8, 8}, {11, 13}, {14, 14}}) {
      MathParams p = default_params(f, sx, sy);
      std::mt19937_64 rng(sx * 31 + sy);
      std::vector<u64> xs = random_inputs(f, p, 300, rng);
      if (f != MathFn::Rsqrt) xs.insert(xs.end(), {0, 1, pow2(15) - 1, pow2(15), mask(16)});
      Outcome r = eval(f, p, xs, sx + sy);
      for (size_t i = 0; i < xs.size(); ++i)
        ASSERT_EQ(r.out[i], reference(f, xs[i], p)) << fn_name(f) << " sx=" << sx << " sy=" << sy << " x=" << xs[i];
    }
}

TEST(SecureMath, CostMatchesModelAndIsInputIndependent) {
  for (MathFn f : kAll) {
    MathParams p = default_fn_params(f);
    u64 want = cost::math(f, p, 128);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
      Outcome r = eval(f, p, random_inputs(f, p, 1, rng), t + 1);
      ASSERT_EQ(r.bits, want) << fn_name(f);
    }
    Outcome b = eval(f, p, random_inputs(f, p, 8, rng));
    EXPECT_EQ(b.bits, 8 * want) << fn_name(f);
  }
}

TEST(SecureMath, PerInstanceCommunicationLimits) {
  EXPECT_LE(cost::math(MathFn::Exp, default_fn_params(MathFn::Exp), 128) / 8192.0, 2.7);
  EXPECT_LE(cost::math(MathFn::Sigmoid, default_fn_params(MathFn::Sigmoid), 128) / 8192.0, 6.0);
  EXPECT_LE(cost::math(MathFn::Tanh, default_fn_params(MathFn::Tanh), 128) / 8192.0, 6.0);
  EXPECT_LE(cost::math(MathFn::Rsqrt, default_fn_params(MathFn::Rsqrt), 128) / 8192.0, 7.5);
}

TEST(SecureMath, SeedDoesNotChangeOutputs) {
  MathParams p = default_fn_params(MathFn::Sigmoid);
  std::mt19937_64 rng(3);
  std::vector<u64> xs = random_inputs(MathFn::Sigmoid, p, 64, rng);
  EXPECT_EQ(eval(MathFn::Sigmoid, p, xs, 1).out, eval(MathFn::Sigmoid, p, xs, 99).out);
}
