#include "fxmpc/gadgets.hpp"

namespace fx {

AShare b2a(Session& s, const Bits& x, int width) {
  MeterScope scope(s, "B2A");
  std::vector<u64> corr(x.begin(), x.end());
  std::vector<u64> t = cot(s, 0, width, corr, x);
  AShare out(width, x.size());
  for (size_t i = 0; i < x.size(); ++i) out.v[i] = mod2(x[i] - 2 * t[i], width);
  return out;
}

AShare mux_vec(Session& s, const Bits& x, const AShare& y, int vec) {
  require(vec >= 1 && y.size() == x.size() * vec, "MUX operand size mismatch");
  MeterScope scope(s, "MUX");
  const int w = y.width;
  Transfer t;
  CotSend snd{w, vec, std::vector<u64>(y.size())};
  for (size_t i = 0; i < x.size(); ++i)
    for (int v = 0; v < vec; ++v) {
      u64 yv = y.v[i * vec + v];
      snd.corr[i * vec + v] = mod2(yv - 2 * x[i] * yv, w);
    }
  t.cot_send.push_back(std::move(snd));
  t.cot_recv.push_back({w, vec, x});
  TransferOut r = transfer(s, t);
  AShare out(w, y.size());
  for (size_t i = 0; i < x.size(); ++i)
    for (int v = 0; v < vec; ++v) {
      size_t j = i * vec + v;
      out.v[j] = mod2(x[i] * y.v[j] + r.cot_send[0][j] + r.cot_recv[0][j], w);
    }
  return out;
}

AShare mux(Session& s, const Bits& x, const AShare& y) { return mux_vec(s, x, y, 1); }

}  // namespace fx
