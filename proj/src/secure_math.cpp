#include <map>

#include "fxmpc/secure_math.hpp"

namespace fx {

namespace {

const WrapHint kPos = WrapHint::msb_public(false);

i64 floor_div2(i64 a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
i64 ceil_div2(i64 a) { return -floor_div2(-a); }

// Resize a value known to be non-negative.
AShare resize_pos(Session& s, const AShare& x, int n) {
  if (n > x.width) return zxt(s, x, n, kPos);
  if (n < x.width) return reduce(x, n);
  return x;
}

AShare constant(const Session& s, u64 c, int width, size_t n) {
  return add_public(s, AShare(width, n), c);
}

}  // namespace

AShare sec_exp(Session& s, const AShare& x, const MathParams& p) {
  require(x.width == p.m, "exp input width mismatch");
  MeterScope scope(s, "exp");
  const auto& luts = build_exp_luts(p);
  const int w = p.sp + 2;
  std::vector<AShare> digits = digdec(s, x, equal_digits(p.m, p.d));
  std::vector<AShare> vals;
  for (size_t i = 0; i < luts.size(); ++i) vals.push_back(lut(s, luts[i].entries, w, digits[i]));
  while (vals.size() > 1) {
    std::vector<AShare> next;
    for (size_t j = 0; j + 1 < vals.size(); j += 2)
      next.push_back(smult_tr(s, vals[j], vals[j + 1], 2 * p.sp + 2, p.sp, kPos, kPos));
    if (vals.size() % 2) next.push_back(vals.back());
    vals.swap(next);
  }
  return resize_pos(s, vals[0], p.n);
}

AShare sec_recip(Session& s, const AShare& v, int l, int sh, int g, int t) {
  require(v.width == l, "reciprocal input width mismatch");
  require(g >= 0 && g <= sh && l >= sh + 2 && 2 * sh + 4 <= 64, "reciprocal parameters out of range");
  MeterScope scope(s, "recip");
  const size_t n = v.size();
  const AShare vr = reduce(v, sh + 1);
  AShare f, idx;
  if (sh > g) {
    auto dg = digdec(s, vr, {sh - g, g + 1});
    f = dg[0];
    idx = dg[1];
  } else {
    idx = vr;
  }
  const Lut& table = recip_lut(g);
  const int c0w = g + 4, c1w = sh + g + 4;
  LutSpec spec{{{g + 1, FieldKind::Arith}}, {{c0w, FieldKind::Arith}, {c1w, FieldKind::Arith}}};
  auto r = lut_eval(
      s, spec,
      [&](u64 i) {
        u64 e = table[i];
        return recip_c0(e, g) | (mod2(recip_c1(e, g) << (sh - g + 1), c1w) << c0w);
      },
      {idx.v});
  AShare c0(c0w, std::move(r[0])), c1s(c1w, std::move(r[1]));
  AShare wp = c1s;
  if (sh > g) {
    AShare c2 = umult(s, c0, f, sh + 4, kPos);
    if (g > 0) c2 = zxt(s, c2, sh + g + 4, kPos);
    wp = sub(c1s, c2);
  }
  AShare w = tr(s, wp, g + 3);
  if (t == 0) return resize_pos(s, w, l);

  const int pw = sh + 2, pp = 2 * sh + 2;
  const AShare one = constant(s, pow2(sh), pw, n);
  AShare p = sub(one, smult_tr(s, v, w, pp, sh, kPos, kPos));
  AShare q = add(one, p);
  AShare a = smult_tr(s, w, q, pp, sh, kPos, kPos);
  for (int i = 2; i <= t; ++i) {
    p = smult_tr(s, p, p, pp, sh);
    q = add(one, p);
    a = smult_tr(s, a, q, pp, sh, kPos, kPos);
  }
  return resize_pos(s, a, l);
}

AShare sec_h(Session& s, const AShare& x, const MathParams& p) {
  require(p.n >= p.sp + 2, "output width must hold sp + 2 bits");
  MeterScope scope(s, "h");
  MathParams ep = p;
  ep.n = p.sp + 2;
  AShare u = sec_exp(s, x, ep);
  AShare v = add_public(s, u, pow2(p.sp));
  AShare w = sec_recip(s, v, p.sp + 2, p.sp, p.g, p.t);
  return resize_pos(s, w, p.n);
}

// Fold to |x|, evaluate h, then unfold: y = u + m (2^{s'} - 2u).
AShare sec_sigmoid(Session& s, const AShare& x, const MathParams& p) {
  require(x.width == p.m, "sigmoid input width mismatch");
  MeterScope scope(s, "sigmoid");
  Bits mx = msb_bits(s, x);
  AShare a = sub(x, scale(mux(s, mx, x), 2));
  AShare u = sec_h(s, a, p);
  AShare flip = add_public(s, scale(u, mod2(0 - 2, p.n)), pow2(p.sp));
  return add(u, mux(s, mx, flip));
}

AShare sec_tanh(Session& s, const AShare& x, const MathParams& p) {
  require(p.s >= 1, "tanh needs input scale >= 1");
  MeterScope scope(s, "tanh");
  MathParams q = p;
  q.s = p.s - 1;
  AShare u = sec_sigmoid(s, x, q);
  return add_public(s, scale(u, 2), mod2(0 - pow2(p.sp), p.n));
}

AShare sec_rsqrt(Session& s, const AShare& x, const MathParams& p) {
  const int l = p.m, sc = p.s, sp = p.sp, g = p.g;
  require(x.width == l && p.n == l, "rsqrt keeps the input width");
  require(l % 2 == 0 && sp + 3 <= l && g + 2 <= sp && g >= 1 && g <= l - 2, "rsqrt parameters out of range");
  MeterScope scope(s, "rsqrt");
  const size_t n = x.size();
  const int hw = l / 2 + 1;
  const int F = static_cast<int>(floor_div2(l - sc - 1));
  require(F >= 0, "rsqrt output scale out of range");

  // One-hot position k of the leading bit; inputs below the domain minimum are out of contract.
  std::vector<u64> z = msnzb(s, x, p.d);
  const int kmin = ref::msnzb(rsqrt_min_input(sc));
  std::map<int, std::vector<int>> by_width;
  std::vector<int> cexp(l, -1);
  for (int i = kmin; i <= l - 2; ++i) {
    i64 c = ceil_div2(sc - i) + floor_div2(l - sc - 1);
    if (c >= 0 && c < hw) cexp[i] = static_cast<int>(c);
    int wd = i + 2;
    if (cexp[i] >= 0) wd = std::max(wd, hw - cexp[i]);
    by_width[std::min(wd, l)].push_back(i);
  }
  AShare A(l, n), C(hw, n);
  Bits B(n, 0);
  for (int i = 0; i < l; ++i)
    if ((sc - i) & 1)
      for (size_t j = 0; j < n; ++j) B[j] ^= (z[j] >> i) & 1;
  for (auto& [wd, idx] : by_width) {
    Bits in;
    for (int i : idx)
      for (size_t j = 0; j < n; ++j) in.push_back((z[j] >> i) & 1);
    AShare za = b2a(s, in, wd);
    for (size_t a = 0; a < idx.size(); ++a) {
      const int i = idx[a];
      for (size_t j = 0; j < n; ++j) {
        const u64 v = za.v[a * n + j];
        A.v[j] = mod2(A.v[j] + (v << (l - 2 - i)), l);
        if (cexp[i] >= 0) C.v[j] = mod2(C.v[j] + (v << cexp[i]), hw);
      }
    }
  }

  // Normalize so the leading bit sits at l - 2.
  AShare xp = umult(s, x, A, l, kPos, kPos);
  AShare xpp = l - 3 - sp > 0 ? tr(s, xp, l - 3 - sp) : xp;
  AShare e = tr(s, reduce(xpp, sp + 1), sp + 1 - g);
  const Lut& table = rsqrt_lut(g);
  LutSpec spec{{{g, FieldKind::Arith}, {1, FieldKind::Xor}}, {{sp + 2, FieldKind::Arith}}};
  std::vector<u64> bv(B.begin(), B.end());
  auto r = lut_eval(
      s, spec, [&](u64 i) { return mod2(table[i] << (sp - g - 2), sp + 2); }, {e.v, bv});
  AShare a(sp + 2, std::move(r[0]));

  AShare t1 = reduce(xpp, sp + 2);
  AShare t0 = tr(s, xpp, 1);
  AShare q = add(t0, mux(s, B, sub(t1, t0)));

  const int pp = 2 * sp + 2;
  AShare pv = a;
  for (int i = 1; i <= p.t; ++i) {
    AShare Y = smult_tr(s, pv, pv, pp, sp, kPos, kPos);
    WrapHint hq = i == 1 ? WrapHint::msb_shared(B) : kPos;
    q = tr(s, add_public(s, umult(s, q, Y, pp, hq, kPos), pow2(sp - 1)), sp);
    pv = sub(constant(s, 3 * pow2(sp - 1), sp + 2, n), ars(s, q, 1, kPos));
    a = smult_tr(s, a, pv, pp, sp, kPos, kPos);
  }
  AShare y = smult(s, a, C, l / 2 + sp + 3, kPos, kPos);
  if (F > 0) y = tr(s, y, F);
  return resize_pos(s, y, l);
}

AShare secure_eval(Session& s, MathFn f, const AShare& x, const MathParams& p) {
  switch (f) {
    case MathFn::Exp: return sec_exp(s, x, p);
    case MathFn::Sigmoid: return sec_sigmoid(s, x, p);
    case MathFn::Tanh: return sec_tanh(s, x, p);
    case MathFn::Rsqrt: return sec_rsqrt(s, x, p);
  }
  return {};
}

}  // namespace fx
