#include <cmath>

#include "fxmpc/cleartext.hpp"

namespace fx {

namespace {

void check(RefCheck* chk, bool ok, const char* what) {
  if (chk) chk->expect(ok, what);
}

// Signed reinterpretation into a new width: sign-extend when growing, reduce when shrinking.
u64 resize_signed(u64 x, int from, int to) {
  return to >= from ? ref::sext(x, from, to) : mod2(x, to);
}

// int(a) * int(b) into out bits, then drop the low `s` bits.
u64 smult_tr(u64 a, int wa, u64 b, int wb, int out, int s, RefCheck* chk) {
  u64 prod = ref::smul(a, wa, b, wb, out);
  check(chk, !msb_of(prod, out), "product exceeds its declared width");
  return ref::tr(prod, out, s);
}

i64 floor_div2(i64 a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
i64 ceil_div2(i64 a) { return -floor_div2(-a); }

}  // namespace

MathParams exp_params(int sx, int sy, int bits) {
  MathParams p;
  p.m = bits;
  p.s = sx;
  p.n = bits;
  p.sp = sy;
  p.d = 8;
  return p;
}

MathParams sigmoid_params(int sx, int sy, int bits) {
  MathParams p = exp_params(sx, sy, bits);
  p.g = (sy - 2 + 1) / 2;
  p.t = 0;
  return p;
}

MathParams tanh_params(int sx, int sy, int bits) { return sigmoid_params(sx, sy, bits); }

MathParams rsqrt_params(int sx, int sy, int bits) {
  MathParams p = exp_params(sx, sy, bits);
  p.g = (sy + 1) / 2;
  p.t = 1;
  return p;
}

u64 rexp_ref(u64 x, const MathParams& p, RefCheck* chk) {
  const auto& luts = build_exp_luts(p);
  const int w = p.sp + 2;
  x = mod2(x, p.m);
  std::vector<u64> vals;
  vals.reserve(luts.size());
  for (size_t i = 0; i < luts.size(); ++i) {
    u64 v = luts[i][(x >> (p.d * i)) & mask(p.d)];
    check(chk, !msb_of(v, w), "exp table entry is not non-negative");
    vals.push_back(v);
  }
  while (vals.size() > 1) {
    std::vector<u64> next;
    for (size_t j = 0; j + 1 < vals.size(); j += 2) {
      u64 z = smult_tr(vals[j], w, vals[j + 1], w, 2 * p.sp + 2, p.sp, chk);
      check(chk, !msb_of(z, w), "exp partial product is not non-negative");
      next.push_back(z);
    }
    if (vals.size() % 2) next.push_back(vals.back());
    vals.swap(next);
  }
  return resize_signed(vals[0], w, p.n);
}

u64 recip_ref(u64 v, int l, int s, int g, int t, RefCheck* chk) {
  require(g >= 0 && g <= s, "reciprocal needs 0 <= g <= s");
  require(l >= s + 2 && 2 * s + 4 <= 64, "reciprocal width out of range");
  v = mod2(v, l);
  require(v >= pow2(s) && v <= pow2(s + 1), "reciprocal input must satisfy 1 <= flt(v) <= 2");
  const Lut& lut = recip_lut(g);
  u64 idx = (v >> (s - g)) & mask(g + 1);
  u64 f = v & mask(s - g);
  u64 c0 = recip_c0(lut[idx], g), c1 = recip_c1(lut[idx], g);
  check(chk, !msb_of(c0, g + 4), "c0 is not non-negative");
  u64 c2 = ref::umul(c0, f, s + 4);
  check(chk, !msb_of(c2, s + 4), "c0*f exceeds its width");
  c2 = ref::sext(c2, s + 4, s + g + 4);
  u64 wp = mod2(pow2(s - g + 1) * c1 - c2, s + g + 4);
  u64 w = ref::tr(wp, s + g + 4, g + 3);
  check(chk, !msb_of(w, s + 1), "initial reciprocal is not non-negative");
  if (t == 0) return ref::sext(w, s + 1, l);

  const int pw = s + 2, pp = 2 * s + 2;
  u64 p = mod2(pow2(s) - smult_tr(v, l, w, s + 1, pp, s, chk), pw);
  u64 q = mod2(pow2(s) + p, pw);
  check(chk, !msb_of(q, pw), "q is not non-negative");
  u64 a = smult_tr(w, s + 1, q, pw, pp, s, chk);
  for (int i = 2; i <= t; ++i) {
    p = smult_tr(p, pw, p, pw, pp, s, chk);
    q = mod2(pow2(s) + p, pw);
    check(chk, !msb_of(q, pw) && !msb_of(a, pw), "Goldschmidt operand is not non-negative");
    a = smult_tr(a, pw, q, pw, pp, s, chk);
  }
  return ref::sext(a, pw, l);
}

u64 h_ref(u64 x, const MathParams& p, RefCheck* chk) {
  require(p.n >= p.sp + 2, "output width must hold sp + 2 bits");
  MathParams ep = p;
  ep.n = p.sp + 2;
  u64 u = rexp_ref(x, ep, chk);
  u64 v = mod2(pow2(p.sp) + u, p.sp + 2);
  u64 w = recip_ref(v, p.sp + 2, p.sp, p.g, p.t, chk);
  return resize_signed(w, p.sp + 2, p.n);
}

u64 sigmoid_ref(u64 x, const MathParams& p, RefCheck* chk) {
  x = mod2(x, p.m);
  bool neg = msb_of(x, p.m);
  u64 a = neg ? mod2(0 - x, p.m) : x;
  u64 u = h_ref(a, p, chk);
  return neg ? mod2(pow2(p.sp) - u, p.n) : u;
}

u64 tanh_ref(u64 x, const MathParams& p, RefCheck* chk) {
  require(p.s >= 1, "tanh needs input scale >= 1");
  MathParams q = p;
  q.s = p.s - 1;
  u64 u = sigmoid_ref(x, q, chk);
  return mod2(2 * u - pow2(p.sp), p.n);
}

u64 rsqrt_ref(u64 x, const MathParams& p, RefCheck* chk) {
  const int l = p.m, s = p.s, sp = p.sp, g = p.g;
  require(p.n == l, "rsqrt keeps the input width");
  require(l % 2 == 0 && sp + 3 <= l && g + 2 <= sp && g <= l - 2, "rsqrt parameters out of range");
  x = mod2(x, l);
  require(x >= rsqrt_min_input(s) && x < pow2(l - 1), "rsqrt input must satisfy 0.1 <= flt(x) and be non-negative");

  const int k = ref::msnzb(x);
  const u64 A = pow2(l - 2 - k);
  const int B = (s - k) & 1;
  const i64 cexp = ceil_div2(s - k) + floor_div2(l - s - 1);
  check(chk, cexp >= 0 && cexp < l / 2 + 1, "C exponent outside its width");
  const u64 C = pow2(static_cast<int>(cexp));
  check(chk, !msb_of(C, l / 2 + 1), "C is not non-negative");

  const u64 xp = ref::umul(x, A, l);
  const u64 e = (xp >> (l - 2 - g)) & mask(g);
  const int w2 = sp + 2, pp = 2 * sp + 2;
  const u64 a0 = mod2(rsqrt_lut(g)[2 * e + B] << (sp - g - 2), w2);

  const u64 xpp = ref::tr(xp, l, l - 3 - sp);
  u64 q = B ? mod2(xpp, w2) : (xpp >> 1);
  check(chk, msb_of(q, w2) == (B == 1), "q0 MSB differs from B");

  u64 pv = a0, a = a0;
  for (int i = 1; i <= p.t; ++i) {
    check(chk, !msb_of(pv, w2) && !msb_of(a, w2), "rsqrt operand is not non-negative");
    u64 Y = smult_tr(pv, w2, pv, w2, pp, sp, chk);
    check(chk, !msb_of(Y, w2), "Y is not non-negative");
    // q is rounded to nearest; floor here can cancel the Newton correction.
    u64 prod = ref::umul(q, Y, pp);
    check(chk, prod + pow2(sp - 1) < pow2(pp), "rounded q product overflows");
    q = ref::tr(prod + pow2(sp - 1), pp, sp);
    check(chk, !msb_of(q, w2), "q is not non-negative");
    pv = mod2(3 * pow2(sp - 1) - ref::ars(q, w2, 1), w2);
    check(chk, !msb_of(pv, w2), "p is not non-negative");
    a = smult_tr(a, w2, pv, w2, pp, sp, chk);
  }
  check(chk, !msb_of(a, w2), "a is not non-negative");
  const int W = l / 2 + sp + 3;
  const int F = static_cast<int>(floor_div2(l - s - 1));
  u64 prod = ref::smul(a, w2, C, l / 2 + 1, W);
  check(chk, !msb_of(prod, W), "final product exceeds its width");
  u64 r = ref::tr(prod, W, F);
  return mod2(r, l);
}

std::string fn_name(MathFn f) {
  switch (f) {
    case MathFn::Exp: return "exp";
    case MathFn::Sigmoid: return "sigmoid";
    case MathFn::Tanh: return "tanh";
    case MathFn::Rsqrt: return "rsqrt";
  }
  return "?";
}

MathFn parse_fn(const std::string& name) {
  if (name == "exp") return MathFn::Exp;
  if (name == "sigmoid") return MathFn::Sigmoid;
  if (name == "tanh") return MathFn::Tanh;
  if (name == "rsqrt") return MathFn::Rsqrt;
  throw ContractViolation("unknown function: " + name);
}

MathParams default_params(MathFn f, int sx, int sy, int bits) {
  switch (f) {
    case MathFn::Exp: return exp_params(sx, sy, bits);
    case MathFn::Sigmoid: return sigmoid_params(sx, sy, bits);
    case MathFn::Tanh: return tanh_params(sx, sy, bits);
    case MathFn::Rsqrt: return rsqrt_params(sx, sy, bits);
  }
  return {};
}

u64 reference(MathFn f, u64 x, const MathParams& p, RefCheck* chk) {
  switch (f) {
    case MathFn::Exp: return rexp_ref(x, p, chk);
    case MathFn::Sigmoid: return sigmoid_ref(x, p, chk);
    case MathFn::Tanh: return tanh_ref(x, p, chk);
    case MathFn::Rsqrt: return rsqrt_ref(x, p, chk);
  }
  return 0;
}

bool input_signed(MathFn f) { return f == MathFn::Sigmoid || f == MathFn::Tanh; }

}  // namespace fx
