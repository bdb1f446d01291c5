#include "fxmpc/blocks.hpp"

namespace fx {

namespace {

void split(const AShare& x, int sh, std::vector<u64>& hi, std::vector<u64>& lo) {
  hi.resize(x.size());
  lo.resize(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    hi[i] = x.v[i] >> sh;
    lo[i] = mod2(x.v[i], sh);
  }
}

}  // namespace

// x >> s = u_0 + u_1 + c - 2^{l-s} w, with c the wrap of the low parts and
// w = d ^ (c & e) from the high parts, or w from the MSB hint.
AShare lrs(Session& s, const AShare& x, int sh, const WrapHint& h) {
  const int l = x.width;
  require(sh > 0 && sh < l, "shift must satisfy 0 < s < l");
  MeterScope scope(s, "LRS");
  std::vector<u64> u, v;
  split(x, sh, u, v);
  Bits c = wrap_bits(s, v, sh);
  Bits w;
  if (h.known()) {
    w = msb_to_wrap(s, x, h);
  } else {
    WrapEqOut de = wrapeq_bits(s, u, l - sh);
    w = xor_bits(de.w, and_bits(s, c, de.e));
  }
  AShare ca = b2a(s, c, l);
  AShare wa = b2a(s, w, sh);
  AShare out(l, x.size());
  for (size_t i = 0; i < x.size(); ++i) out.v[i] = mod2(u[i] - (wa.v[i] << (l - sh)) + ca.v[i], l);
  return out;
}

AShare ars(Session& s, const AShare& x, int sh, const WrapHint& h) {
  const int l = x.width;
  require(sh > 0 && sh < l, "shift must satisfy 0 < s < l");
  MeterScope scope(s, "ARS");
  AShare y = lrs(s, add_public(s, x, pow2(l - 1)), sh, flip(s, h));
  return add_public(s, y, mod2(0 - pow2(l - sh - 1), l));
}

AShare tr(Session& s, const AShare& x, int sh) {
  const int l = x.width;
  require(sh > 0 && sh < l, "shift must satisfy 0 < s < l");
  MeterScope scope(s, "TR");
  std::vector<u64> u, v;
  split(x, sh, u, v);
  Bits c = wrap_bits(s, v, sh);
  AShare ca = b2a(s, c, l - sh);
  AShare out(l - sh, x.size());
  for (size_t i = 0; i < x.size(); ++i) out.v[i] = mod2(u[i] + ca.v[i], l - sh);
  return out;
}

// C-style quotient: (x >>_A s) + (m_x & [x mod 2^s != 0]).
AShare div_pow2(Session& s, const AShare& x, int sh) {
  const int l = x.width;
  require(sh > 0 && sh < l, "shift must satisfy 0 < s < l");
  MeterScope scope(s, "DivPow2");
  Bits mx = msb_bits(s, x);
  std::vector<u64> lo(x.size());
  for (size_t i = 0; i < x.size(); ++i) lo[i] = mod2(x.v[i], sh);
  Bits nz = not_bits(s, zero_test(s, lo, sh));
  AShare adj = b2a(s, and_bits(s, mx, nz), l);
  return add(ars(s, x, sh, WrapHint::msb_shared(mx)), adj);
}

}  // namespace fx
