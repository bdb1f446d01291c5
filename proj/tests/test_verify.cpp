#include <gtest/gtest.h>

#include "fxmpc/verify.hpp"
#include "json.hpp"

using namespace fx;

TEST(Sweep, ParallelMatchesSerial) {
  for (MathFn f : {MathFn::Exp, MathFn::Sigmoid, MathFn::Tanh, MathFn::Rsqrt})
    for (auto [sx, sy] : {std::pair{8, 8}, {12, 11}, {13, 13}}) {
      SweepResult a = ulp_sweep(f, sx, sy), b = ulp_sweep_serial(f, sx, sy);
      EXPECT_EQ(a, b) << fn_name(f) << " " << sx << "," << sy;
      EXPECT_LE(a.max_ulp, ulp_bound(f));
      EXPECT_EQ(a.violations, 0u);
    }
}

TEST(Sweep, GridsAndDomains) {
  EXPECT_EQ(ulp_grid(MathFn::Exp).size(), 49u);
  EXPECT_EQ(ulp_grid(MathFn::Tanh).size(), 49u);
  EXPECT_EQ(ulp_grid(MathFn::Rsqrt).size(), 100u);
  EXPECT_EQ(ulp_bound(MathFn::Exp), 3u);
  EXPECT_EQ(ulp_bound(MathFn::Sigmoid), 3u);
  EXPECT_EQ(ulp_bound(MathFn::Tanh), 4u);
  EXPECT_EQ(ulp_bound(MathFn::Rsqrt), 4u);
  EXPECT_FALSE(in_domain(MathFn::Rsqrt, 409, 12, 16));
  EXPECT_TRUE(in_domain(MathFn::Rsqrt, 410, 12, 16));
  EXPECT_FALSE(in_domain(MathFn::Rsqrt, pow2(15), 12, 16));
  EXPECT_TRUE(in_domain(MathFn::Sigmoid, mask(16), 12, 16));
  SweepResult r = ulp_sweep(MathFn::Rsqrt, 12, 11);
  EXPECT_EQ(r.count, pow2(15) - 410);
}

TEST(Sweep, VerifyRowsAreReproducible) {
  Report a = cmd_verify({MathFn::Sigmoid}, {{9, 10}});
  Report b = cmd_verify({MathFn::Sigmoid}, {{9, 10}});
  ASSERT_EQ(a.rows.size(), 1u);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(to_json(a, false), to_json(b, false));
}

TEST(Report, JsonAndText) {
  Report r;
  Row ok;
  ok.suite = "audit";
  ok.name = "MUX";
  ok.measured = 320;
  ok.expected = 320;
  ok.pass = true;
  r.rows.push_back(ok);
  EXPECT_TRUE(r.pass());
  auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["rows"][0]["name"], "MUX");
  EXPECT_EQ(j["rows"][0]["measured_bits"], 320);
  EXPECT_NE(to_text(r).find("MUX"), std::string::npos);
  Row bad = ok;
  bad.pass = false;
  r.rows.push_back(bad);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(Report{}.pass());
}

TEST(CostModel, PaperExamples) {
  EXPECT_EQ(bounds::tr(32, 12, 128), 1852.0);
  EXPECT_EQ(bounds::lrs(32, 12, 128), 4992.0);
  EXPECT_EQ(bounds::zxt(16, 32, 128), 128.0 * 17 + 13 * 16 + 32);
  EXPECT_EQ(bounds::mux(32, 128), 320.0);
  EXPECT_EQ(bounds::b2a(32, 128), 160.0);
  EXPECT_EQ(bounds::lut(8, 16, 128), 4352.0);
  EXPECT_EQ(cost::mux(32, 128), 320u);
  EXPECT_EQ(cost::b2a(32, 128), 160u);
  EXPECT_EQ(cost::cot(32, 128), 160u);
  EXPECT_EQ(cost::ot(16, 2, 128), 288u);
  EXPECT_EQ(cost::lut(8, 16, 128), 4352u);
  EXPECT_EQ(cost::and_single(128), 264u);
  EXPECT_EQ(cost::and_pair(128), 278u);
}

TEST(CostModel, WithinSlackOfPaperTable) {
  for (auto [l, s] : {std::pair{16, 8}, {32, 12}, {64, 16}}) {
    EXPECT_LE(cost::tr(l, s, 128), 1.25 * bounds::tr(l, s, 128));
    EXPECT_LE(cost::lrs(l, s, cost::Hint::None, 128), 1.25 * bounds::lrs(l, s, 128));
    EXPECT_LE(cost::div_pow2(l, s, 128), 1.25 * bounds::div_pow2(l, s, 128));
    EXPECT_LE(cost::zxt(s, l, cost::Hint::None, 128), 1.25 * bounds::zxt(s, l, 128));
    EXPECT_LE(cost::umult(s, s, 2 * s, cost::Hint::None, cost::Hint::None, 128), 1.25 * bounds::umult(s, s, 128));
    EXPECT_LE(cost::msnzb(l, 8, 128), 1.25 * bounds::msnzb(l, 8, 128));
  }
}

TEST(WrapSplit, WrapSplitHolds) {
  Report r = wrap_split_check(6);
  EXPECT_TRUE(r.pass());
  ASSERT_FALSE(r.rows.empty());
  EXPECT_EQ(*r.rows[0].mismatches, 0u);
}

TEST(Bench, SmallInproc) {
  for (MathFn f : {MathFn::Exp, MathFn::Sigmoid, MathFn::Tanh, MathFn::Rsqrt}) {
    auto pp = default_pair(f);
    MathParams p = default_params(f, pp.first, pp.second);
    BenchResult b = bench_inproc(f, p, 50, 3);
    EXPECT_EQ(b.mismatches, 0u);
    EXPECT_EQ(b.bits, 50 * cost::math(f, p, 128));
    EXPECT_TRUE(bench_row(b, bench_kb_limit(f)).pass);
  }
}
