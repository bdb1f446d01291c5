#include "fxmpc/blocks.hpp"

namespace fx {

WrapHint flip(const Session& s, const WrapHint& h) {
  switch (h.kind) {
    case WrapHint::Kind::None: return h;
    case WrapHint::Kind::Public: return WrapHint::msb_public(!h.bit);
    case WrapHint::Kind::Shared: return WrapHint::msb_shared(not_bits(s, h.shares));
  }
  return h;
}

AShare add_public(const Session& s, const AShare& x, u64 c) {
  AShare r = x;
  if (s.role() == 0)
    for (auto& v : r.v) v = mod2(v + c, r.width);
  return r;
}

AShare add(const AShare& a, const AShare& b) {
  require(a.width == b.width && a.size() == b.size(), "share shape mismatch");
  AShare r = a;
  for (size_t i = 0; i < r.size(); ++i) r.v[i] = mod2(a.v[i] + b.v[i], a.width);
  return r;
}

AShare sub(const AShare& a, const AShare& b) {
  require(a.width == b.width && a.size() == b.size(), "share shape mismatch");
  AShare r = a;
  for (size_t i = 0; i < r.size(); ++i) r.v[i] = mod2(a.v[i] - b.v[i], a.width);
  return r;
}

AShare scale(const AShare& a, u64 c) {
  AShare r = a;
  for (auto& v : r.v) v = mod2(v * c, r.width);
  return r;
}

AShare reduce(const AShare& a, int width) {
  require(width >= 1 && width <= a.width, "reduction must not widen");
  return AShare(width, a.v);
}

// w = ((1 ^ m_x) & (m_0 ^ m_1)) ^ (m_0 & m_1), with P0 as OT sender indexed by P1's bits.
Bits msb_to_wrap(Session& s, const AShare& x, const WrapHint& h) {
  require(h.known(), "MSB-to-wrap needs a public or shared MSB");
  MeterScope scope(s, "MSBtoWrap");
  const size_t n = x.size();
  const bool shared = h.kind == WrapHint::Kind::Shared;
  if (shared) require(h.shares.size() == n, "MSB hint size mismatch");
  const int k = shared ? 4 : 2;
  auto f = [](int mx, int m0, int m1) { return ((1 ^ mx) & (m0 ^ m1)) ^ (m0 & m1); };
  Bits out(n);
  if (s.role() == 0) {
    std::vector<u64> msgs(n * k);
    for (size_t i = 0; i < n; ++i) {
      out[i] = s.rng()() & 1;
      int m0 = msb_of(x.v[i], x.width);
      for (int j = 0; j < k; ++j) {
        int m1 = j & 1;
        int mx = shared ? (h.shares[i] ^ (j >> 1)) : h.bit;
        msgs[i * k + j] = out[i] ^ f(mx, m0, m1);
      }
    }
    ot_1_of_k(s, 0, k, 1, msgs, {});
  } else {
    std::vector<u64> choice(n);
    for (size_t i = 0; i < n; ++i)
      choice[i] = (shared ? static_cast<u64>(h.shares[i]) << 1 : 0) | msb_of(x.v[i], x.width);
    auto got = ot_1_of_k(s, 0, k, 1, {}, choice);
    for (size_t i = 0; i < n; ++i) out[i] = static_cast<uint8_t>(got[i]);
  }
  return out;
}

AShare zxt(Session& s, const AShare& x, int n, const WrapHint& h) {
  const int m = x.width;
  require(n > m && n <= kMaxWidth, "extension needs m < n <= 64");
  MeterScope scope(s, "ZXt");
  Bits w = h.known() ? msb_to_wrap(s, x, h) : wrap_bits(s, x.v, m);
  AShare wa = b2a(s, w, n - m);
  AShare out(n, x.size());
  for (size_t i = 0; i < x.size(); ++i) out.v[i] = mod2(x.v[i] - (wa.v[i] << m), n);
  return out;
}

AShare sxt(Session& s, const AShare& x, int n, const WrapHint& h) {
  const int m = x.width;
  require(n > m && n <= kMaxWidth, "extension needs m < n <= 64");
  MeterScope scope(s, "SXt");
  AShare y = zxt(s, add_public(s, x, pow2(m - 1)), n, flip(s, h));
  return add_public(s, y, mod2(0 - pow2(m - 1), n));
}

}  // namespace fx
