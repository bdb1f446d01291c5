#include <gtest/gtest.h>

#include "pair_util.hpp"

using namespace fx;
using namespace fx::test;

namespace {

using Fn = std::function<AShare(Session&, const AShare&)>;

void check_all(int w, const Fn& f, const std::function<u64(u64)>& want, const char* what) {
  std::vector<u64> xs;
  Split sp = all_splits(w, xs);
  Outcome r = run_halves(sp, w, f);
  for (size_t i = 0; i < xs.size(); ++i)
    ASSERT_EQ(r.out[i], want(xs[i])) << what << " w=" << w << " x0=" << sp.s0[i] << " x1=" << sp.s1[i];
}

// Shares of the MSB bits: P0 holds them, P1 holds zeros.
Bits msb_hint_shares(const Session& s, const std::vector<u64>& xs, int w) {
  Bits b(xs.size(), 0);
  if (s.role() == 0)
    for (size_t i = 0; i < xs.size(); ++i) b[i] = msb_of(xs[i], w);
  return b;
}

}  // namespace

TEST(Blocks, ExtendExamples) {
  EXPECT_EQ(run_halves({{3}, {3}}, 2, [](Session& s, const AShare& x) { return zxt(s, x, 4); }).out[0], 2u);
  EXPECT_EQ(run_shared({3}, 2, [](Session& s, const AShare& x) { return sxt(s, x, 4); }).out[0], 15u);
  EXPECT_EQ(run_shared({1}, 2, [](Session& s, const AShare& x) { return sxt(s, x, 4); }).out[0], 1u);
  EXPECT_EQ(run_shared({0}, 5, [](Session& s, const AShare& x) { return zxt(s, x, 9); }).out[0], 0u);
}

TEST(Blocks, ShiftExamples) {
  EXPECT_EQ(run_halves({{5}, {7}}, 4, [](Session& s, const AShare& x) { return lrs(s, x, 2); }).out[0], 3u);
  EXPECT_EQ(run_shared({12}, 4, [](Session& s, const AShare& x) { return ars(s, x, 1); }).out[0], 14u);
  EXPECT_EQ(run_shared({2}, 4, [](Session& s, const AShare& x) { return ars(s, x, 1); }).out[0], 1u);
  Outcome t = run_shared({13}, 4, [](Session& s, const AShare& x) {
    AShare y = tr(s, x, 2);
    EXPECT_EQ(y.width, 2);
    return y;
  });
  EXPECT_EQ(t.out[0], 3u);
  EXPECT_EQ(run_shared({9}, 4, [](Session& s, const AShare& x) { return div_pow2(s, x, 1); }).out[0], 13u);
  EXPECT_EQ(run_shared({7}, 4, [](Session& s, const AShare& x) { return div_pow2(s, x, 1); }).out[0], 3u);
}

TEST(Blocks, ContractViolations) {
  auto [s0, s1] = open_inproc_pair();
  EXPECT_THROW(run_pair(s0, s1, [](Session& s) { zxt(s, AShare(8, size_t(1)), 8); }), ContractViolation);
  auto [t0, t1] = open_inproc_pair();
  EXPECT_THROW(run_pair(t0, t1, [](Session& s) { cross_mult(s, {1}, 2, 3, 6); }), ContractViolation);
  auto [u0, u1] = open_inproc_pair();
  EXPECT_THROW(run_pair(u0, u1, [](Session& s) { digdec(s, AShare(8, size_t(1)), {4, 3}); }),
               ContractViolation);
  auto [v0, v1] = open_inproc_pair();
  EXPECT_THROW(run_pair(v0, v1, [](Session& s) { msb_to_wrap(s, AShare(8, size_t(1)), {}); }),
               ContractViolation);
}

TEST(Blocks, ExtendExhaustive) {
  for (int w = 1; w <= 6; ++w)
    for (int n : {w + 1, w + 4}) {
      check_all(w, [n](Session& s, const AShare& x) { return zxt(s, x, n); },
                [](u64 x) { return x; }, "zxt");
      check_all(w, [n](Session& s, const AShare& x) { return sxt(s, x, n); },
                [w, n](u64 x) { return ref::sext(x, w, n); }, "sxt");
    }
}

TEST(Blocks, ShiftsExhaustive) {
  for (int w = 2; w <= 6; ++w)
    for (int sh = 1; sh < w; ++sh) {
      check_all(w, [sh](Session& s, const AShare& x) { return lrs(s, x, sh); },
                [w, sh](u64 x) { return ref::lrs(x, w, sh); }, "lrs");
      check_all(w, [sh](Session& s, const AShare& x) { return ars(s, x, sh); },
                [w, sh](u64 x) { return ref::ars(x, w, sh); }, "ars");
      check_all(w, [sh](Session& s, const AShare& x) { return tr(s, x, sh); },
                [w, sh](u64 x) { return ref::tr(x, w, sh); }, "tr");
      check_all(w, [sh](Session& s, const AShare& x) { return div_pow2(s, x, sh); },
                [w, sh](u64 x) { return ref::c_div_pow2(x, w, sh); }, "div_pow2");
    }
}

TEST(Blocks, HintedExtendMatches) {
  // Public hint on each MSB half, shared hint on everything.
  for (int w = 2; w <= 6; ++w) {
    std::vector<u64> xs;
    Split all = all_splits(w, xs);
    for (bool m : {false, true}) {
      Split sp;
      std::vector<u64> sel;
      for (size_t i = 0; i < xs.size(); ++i)
        if (msb_of(xs[i], w) == m) sp.s0.push_back(all.s0[i]), sp.s1.push_back(all.s1[i]), sel.push_back(xs[i]);
      Outcome z = run_halves(sp, w, [&](Session& s, const AShare& x) {
        return zxt(s, x, w + 3, WrapHint::msb_public(m));
      });
      Outcome a = run_halves(sp, w, [&](Session& s, const AShare& x) {
        return ars(s, x, 1, WrapHint::msb_public(m));
      });
      for (size_t i = 0; i < sel.size(); ++i) {
        ASSERT_EQ(z.out[i], sel[i]);
        ASSERT_EQ(a.out[i], ref::ars(sel[i], w, 1));
      }
    }
    Outcome l = run_halves(all, w, [&](Session& s, const AShare& x) {
      return lrs(s, x, w / 2, WrapHint::msb_shared(msb_hint_shares(s, xs, w)));
    });
    for (size_t i = 0; i < xs.size(); ++i) ASSERT_EQ(l.out[i], ref::lrs(xs[i], w, w / 2));
  }
}

TEST(Blocks, MsbToWrap) {
  for (int w = 1; w <= 6; ++w) {
    std::vector<u64> xs;
    Split sp = all_splits(w, xs);
    auto [s0, s1] = open_inproc_pair(w);
    Bits b0, b1;
    run_pair(s0, s1, [&](Session& s) {
      AShare x(w, s.role() == 0 ? sp.s0 : sp.s1);
      (s.role() == 0 ? b0 : b1) = msb_to_wrap(s, x, WrapHint::msb_shared(msb_hint_shares(s, xs, w)));
    });
    for (size_t i = 0; i < xs.size(); ++i) ASSERT_EQ(b0[i] ^ b1[i], ref::wrap(sp.s0[i], sp.s1[i], w));
  }
  // MSB public 0 with share MSBs (1, 1) must wrap.
  auto [s0, s1] = open_inproc_pair();
  Bits b0, b1;
  run_pair(s0, s1, [&](Session& s) {
    AShare x(4, std::vector<u64>{s.role() == 0 ? 9u : 10u});
    (s.role() == 0 ? b0 : b1) = msb_to_wrap(s, x, WrapHint::msb_public(false));
  });
  EXPECT_EQ(b0[0] ^ b1[0], 1);
  EXPECT_EQ(s0.meter().total().total(), 130u);
}

TEST(Blocks, MultExamples) {
  auto [s0, s1] = open_inproc_pair();
  std::vector<u64> c, u, m, t;
  run_pair(s0, s1, [&](Session& s) {
    AShare cm = cross_mult(s, {s.role() == 0 ? 3u : 5u}, 2, 3, 5);
    auto split1 = [&](u64 v, int w) { return AShare(w, std::vector<u64>{s.role() == 0 ? v : 0u}); };
    AShare um = umult(s, split1(7, 4), split1(9, 4), 8);
    AShare sm = smult(s, split1(5, 3), split1(3, 3), 6);
    AShare st = smult_tr(s, split1(pow2(10), 12), split1(pow2(10), 12), 22, 10);
    auto a = reveal(s, cm), b = reveal(s, um), d = reveal(s, sm), e = reveal(s, st);
    if (s.role() == 0) c = a, u = b, m = d, t = e;
  });
  EXPECT_EQ(c[0], 15u);
  EXPECT_EQ(u[0], 63u);
  EXPECT_EQ(m[0], 55u);
  EXPECT_EQ(t[0], pow2(10));
}

TEST(Blocks, MultExhaustiveSmall) {
  for (int mw = 1; mw <= 3; ++mw)
    for (int nw = 1; nw <= 3; ++nw) {
      Split sx, sy;
      std::vector<u64> xv, yv;
      for (u64 x0 = 0; x0 < pow2(mw); ++x0)
        for (u64 x1 = 0; x1 < pow2(mw); ++x1)
          for (u64 y0 = 0; y0 < pow2(nw); ++y0)
            for (u64 y1 = 0; y1 < pow2(nw); ++y1) {
              sx.s0.push_back(x0), sx.s1.push_back(x1), sy.s0.push_back(y0), sy.s1.push_back(y1);
              xv.push_back(mod2(x0 + x1, mw)), yv.push_back(mod2(y0 + y1, nw));
            }
      for (int l = std::max(mw, nw); l <= mw + nw; ++l) {
        auto [s0, s1] = open_inproc_pair(l);
        std::vector<u64> uo, so;
        run_pair(s0, s1, [&](Session& s) {
          AShare x(mw, s.role() == 0 ? sx.s0 : sx.s1), y(nw, s.role() == 0 ? sy.s0 : sy.s1);
          auto a = reveal(s, umult(s, x, y, l));
          auto b = reveal(s, smult(s, x, y, l));
          if (s.role() == 0) uo = a, so = b;
        });
        for (size_t i = 0; i < xv.size(); ++i) {
          ASSERT_EQ(uo[i], ref::umul(xv[i], yv[i], l)) << mw << "," << nw << "," << l;
          ASSERT_EQ(so[i], ref::smul(xv[i], mw, yv[i], nw, l)) << mw << "," << nw << "," << l;
        }
      }
    }
}

TEST(Blocks, CrossMultExhaustive) {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      std::vector<u64> xs, ys;
      for (u64 a = 0; a < pow2(m); ++a)
        for (u64 b = 0; b < pow2(n); ++b) xs.push_back(a), ys.push_back(b);
      auto [s0, s1] = open_inproc_pair(m * 8 + n);
      std::vector<u64> out;
      run_pair(s0, s1, [&](Session& s) {
        auto r = reveal(s, cross_mult(s, s.role() == 0 ? xs : ys, m, n, m + n));
        if (s.role() == 0) out = r;
      });
      for (size_t i = 0; i < xs.size(); ++i) ASSERT_EQ(out[i], xs[i] * ys[i]);
    }
}

TEST(Blocks, MatMulAgainstIntegerOracle) {
  std::mt19937_64 rng(21);
  for (auto [d1, d2, d3] : {std::tuple{3, 4, 2}, {4, 4, 4}, {1, 5, 3}}) {
    const int m = 8, n = 8, e = std::bit_width(static_cast<unsigned>(d2 - 1));
    Matrix X(d1, d2, m), Y(d2, d3, n);
    for (auto& v : X.elems) v = mod2(rng(), m);
    for (auto& v : Y.elems) v = mod2(rng(), n);
    Split sx = split(X.elems, m, rng), sy = split(Y.elems, n, rng);
    auto [s0, s1] = open_inproc_pair(d1 + d2 + d3);
    std::vector<u64> out;
    int width = 0;
    run_pair(s0, s1, [&](Session& s) {
      AMatrix x{d1, d2, AShare(m, s.role() == 0 ? sx.s0 : sx.s1)};
      AMatrix y{d2, d3, AShare(n, s.role() == 0 ? sy.s0 : sy.s1)};
      AMatrix z = matmul(s, x, y);
      auto r = reveal(s, z.a);
      if (s.role() == 0) out = r, width = z.a.width;
    });
    EXPECT_EQ(width, m + n + e);
    EXPECT_EQ(out, matmul_ref(X, Y, m + n + e).elems);
  }
}

TEST(Blocks, BitMatMul) {
  const int d1 = 2, d2 = 3, d3 = 2, w = 12;
  std::vector<u64> xv = {1, 2, 3, 4, 5, 4095};
  for (int fill : {0, 1, 2}) {
    Bits wb(d1 * d2);
    for (size_t i = 0; i < wb.size(); ++i) wb[i] = fill == 2 ? (i % 2) : fill;
    std::mt19937_64 rng(fill);
    Bits w1;
    Bits w0 = split_bits(wb, rng, w1);
    Split sx = split(xv, w, rng);
    auto [s0, s1] = open_inproc_pair(fill);
    std::vector<u64> out;
    run_pair(s0, s1, [&](Session& s) {
      AMatrix x{d2, d3, AShare(w, s.role() == 0 ? sx.s0 : sx.s1)};
      auto r = reveal(s, bitmat_mul(s, s.role() == 0 ? w0 : w1, d1, d2, x).a);
      if (s.role() == 0) out = r;
    });
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d3; ++j) {
        u64 acc = 0;
        for (int k = 0; k < d2; ++k) acc += wb[i * d2 + k] * xv[k * d3 + j];
        EXPECT_EQ(out[i * d3 + j], mod2(acc, w)) << fill;
      }
  }
}

TEST(Blocks, DigDecExamplesAndCompositions) {
  Outcome r = run_shared({0xAB}, 8, [](Session& s, const AShare& x) {
    auto d = digdec(s, x, {4, 4});
    AShare cat(4, std::vector<u64>{d[0].v[0], d[1].v[0]});
    return cat;
  });
  EXPECT_EQ(r.out, (std::vector<u64>{0xB, 0xA}));

  for (std::vector<int> sizes : {std::vector<int>{1, 1, 1, 1, 1, 1}, {2, 3, 1}, {5, 1}, {3, 3}}) {
    std::vector<u64> xs;
    Split sp = all_splits(6, xs);
    auto [s0, s1] = open_inproc_pair(sizes.size());
    std::vector<std::vector<u64>> outs(sizes.size());
    run_pair(s0, s1, [&](Session& s) {
      auto ds = digdec(s, AShare(6, s.role() == 0 ? sp.s0 : sp.s1), sizes);
      for (size_t k = 0; k < ds.size(); ++k) {
        auto o = reveal(s, ds[k]);
        if (s.role() == 0) outs[k] = o;
      }
    });
    for (size_t i = 0; i < xs.size(); ++i) {
      int off = 0;
      for (size_t k = 0; k < sizes.size(); ++k) {
        ASSERT_EQ(outs[k][i], (xs[i] >> off) & mask(sizes[k]));
        off += sizes[k];
      }
    }
  }
  EXPECT_EQ(equal_digits(16, 8), (std::vector<int>{8, 8}));
  EXPECT_EQ(equal_digits(10, 4), (std::vector<int>{4, 4, 2}));
}

TEST(Blocks, MsnzbOneHot) {
  for (auto [w, d] : {std::pair{2, 1}, {4, 2}, {4, 4}, {8, 2}, {8, 4}, {8, 8}}) {
    std::vector<u64> xs;
    Split sp = all_splits(w, xs);
    auto [s0, s1] = open_inproc_pair(w * d);
    std::vector<u64> a, b;
    run_pair(s0, s1, [&](Session& s) {
      (s.role() == 0 ? a : b) = msnzb(s, AShare(w, s.role() == 0 ? sp.s0 : sp.s1), d);
    });
    for (size_t i = 0; i < xs.size(); ++i)
      ASSERT_EQ(a[i] ^ b[i], pow2(ref::msnzb(xs[i]))) << "w=" << w << " d=" << d << " x=" << xs[i];
  }
}

TEST(Blocks, MsnzbNeedsPowerOfTwoWidth) {
  auto [s0, s1] = open_inproc_pair();
  EXPECT_THROW(run_pair(s0, s1, [](Session& s) { msnzb(s, AShare(6, size_t(1)), 3); }), ContractViolation);
}
