#include "fxmpc/blocks.hpp"

namespace fx {

namespace {

// One COT group per bit i of the short operand, width l - i, correlation = long operand.
void add_cross_groups(Transfer& t, bool send, bool recv, const std::vector<u64>& short_op,
                      const std::vector<u64>& long_op, int bits, int l) {
  const int cnt = std::min(bits, l);
  for (int i = 0; i < cnt; ++i) {
    if (send) {
      CotSend g{l - i, 1, std::vector<u64>(long_op.size())};
      for (size_t j = 0; j < long_op.size(); ++j) g.corr[j] = mod2(long_op[j], l - i);
      t.cot_send.push_back(std::move(g));
    }
    if (recv) {
      CotRecv g{l - i, 1, Bits(short_op.size())};
      for (size_t j = 0; j < short_op.size(); ++j) g.choice[j] = (short_op[j] >> i) & 1;
      t.cot_recv.push_back(std::move(g));
    }
  }
}

std::vector<u64> collect_cross(const TransferOut& r, size_t n, int bits, int l) {
  std::vector<u64> z(n, 0);
  const int cnt = std::min(bits, l);
  for (int i = 0; i < cnt; ++i) {
    if (!r.cot_send.empty())
      for (size_t j = 0; j < n; ++j) z[j] += r.cot_send[i][j] << i;
    if (!r.cot_recv.empty())
      for (size_t j = 0; j < n; ++j) z[j] += r.cot_recv[i][j] << i;
  }
  for (auto& v : z) v = mod2(v, l);
  return z;
}

// Shares of x_0 * y_1 + x_1 * y_0; each party decomposes its own copy of the shorter operand.
std::vector<u64> cross_pair(Session& s, const AShare& x, const AShare& y, int l) {
  MeterScope scope(s, "CrossMult");
  const bool x_short = x.width <= y.width;
  const AShare& sh = x_short ? x : y;
  const AShare& lg = x_short ? y : x;
  Transfer t;
  add_cross_groups(t, true, true, sh.v, lg.v, sh.width, l);
  TransferOut r = transfer(s, t);
  return collect_cross(r, x.size(), sh.width, l);
}

}  // namespace

AShare cross_mult(Session& s, const std::vector<u64>& mine, int m, int n, int l) {
  require(l >= 1 && l <= m + n && l <= kMaxWidth, "cross product width must be at most m + n");
  MeterScope scope(s, "CrossMult");
  const int short_party = m <= n ? 0 : 1;
  const int bits = std::min(m, n);
  const bool is_short = s.role() == short_party;
  std::vector<u64> own(mine.size());
  for (size_t j = 0; j < mine.size(); ++j) own[j] = mod2(mine[j], s.role() == 0 ? m : n);
  Transfer t;
  add_cross_groups(t, !is_short, is_short, own, own, bits, l);
  TransferOut r = transfer(s, t);
  return AShare(l, collect_cross(r, mine.size(), bits, l));
}

// xy = x_0 y_0 + x_1 y_1 + x_0 y_1 + x_1 y_0 - 2^m w_x y - 2^n w_y x  (mod 2^l).
MultOut umult_full(Session& s, const AShare& x, const AShare& y, int l, const WrapHint& hx,
                   const WrapHint& hy) {
  const int m = x.width, n = y.width;
  require(x.size() == y.size(), "operand size mismatch");
  require(l >= 1 && l <= m + n && l <= kMaxWidth, "product width must be at most m + n");
  MeterScope scope(s, "UMult");
  const size_t cnt = x.size();
  std::vector<u64> cross = cross_pair(s, x, y, l);
  MultOut out;
  if (l > m) out.wx = hx.known() ? msb_to_wrap(s, x, hx) : wrap_bits(s, x.v, m);
  if (l > n) out.wy = hy.known() ? msb_to_wrap(s, y, hy) : wrap_bits(s, y.v, n);
  out.z = AShare(l, cnt);
  for (size_t i = 0; i < cnt; ++i) out.z.v[i] = mod2(x.v[i] * y.v[i] + cross[i], l);
  if (l > m) {
    AShare t = mux(s, out.wx, reduce(y, std::min(n, l - m)));
    for (size_t i = 0; i < cnt; ++i) out.z.v[i] = mod2(out.z.v[i] - (t.v[i] << m), l);
  }
  if (l > n) {
    AShare t = mux(s, out.wy, reduce(x, std::min(m, l - n)));
    for (size_t i = 0; i < cnt; ++i) out.z.v[i] = mod2(out.z.v[i] - (t.v[i] << n), l);
  }
  return out;
}

AShare umult(Session& s, const AShare& x, const AShare& y, int l, const WrapHint& hx, const WrapHint& hy) {
  return umult_full(s, x, y, l, hx, hy).z;
}

// int(x) int(y) = (x' - 2^{m-1})(y' - 2^{n-1}) with x' = x + 2^{m-1}; the wrap bits of x', y'
// already computed inside umult supply the 2^{l-1} correction when l = m + n.
AShare smult(Session& s, const AShare& x, const AShare& y, int l, const WrapHint& hx, const WrapHint& hy) {
  const int m = x.width, n = y.width;
  require(l >= 1 && l <= m + n && l <= kMaxWidth, "product width must be at most m + n");
  MeterScope scope(s, "SMult");
  AShare xp = add_public(s, x, pow2(m - 1)), yp = add_public(s, y, pow2(n - 1));
  MultOut r = umult_full(s, xp, yp, l, flip(s, hx), flip(s, hy));
  AShare z = r.z;
  const u64 c = s.role() == 0 ? pow2(m + n - 2) : 0;
  for (size_t i = 0; i < z.size(); ++i) {
    u64 v = z.v[i] - (xp.v[i] << (n - 1)) - (yp.v[i] << (m - 1)) + c;
    if (l == m + n) v += (static_cast<u64>(r.wx[i]) + r.wy[i]) << (l - 1);
    z.v[i] = mod2(v, l);
  }
  return z;
}

AShare smult_tr(Session& s, const AShare& x, const AShare& y, int l, int sh, const WrapHint& hx,
                const WrapHint& hy) {
  MeterScope scope(s, "SMultTR");
  return tr(s, smult(s, x, y, l, hx, hy), sh);
}

}  // namespace fx
