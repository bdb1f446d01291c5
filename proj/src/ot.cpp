#include "fxmpc/gadgets.hpp"

namespace fx {

namespace {

struct PadStream {
  u64 key;
  PadStream(u64 joint, u64 batch, int dir, size_t group)
      : key(mix64(joint ^ mix64(batch * 0x100000001b3ULL + static_cast<u64>(dir) * 0x5851f42d4c957f2dULL +
                                static_cast<u64>(group) * 0x14057b7ef767814fULL))) {}
  u64 operator()(u64 i) const { return mix64(key + i * 0x9e3779b97f4a7c15ULL); }
};

void put_filler(BitBuf& b, std::mt19937_64& rng, size_t bits) {
  while (bits >= 64) {
    b.put(rng(), 64);
    bits -= 64;
  }
  if (bits) b.put(rng(), static_cast<int>(bits));
}

}  // namespace

int ot_receiver_bits(int k, int lambda) { return k == 2 ? lambda : 2 * lambda; }

u64 ot_cost(int k, int bits, int lambda) {
  return static_cast<u64>(ot_receiver_bits(k, lambda)) + static_cast<u64>(k) * bits;
}

u64 cot_cost(int width, int vec, int lambda) {
  return static_cast<u64>(lambda) + static_cast<u64>(vec) * width;
}

TransferOut transfer(Session& s, const Transfer& t) {
  MeterScope scope(s, "OT");
  const int lam = s.lambda();
  const u64 batch = s.next_batch();
  const int me = s.role(), peer = 1 - me;

  size_t filler_out = 0, filler_in = 0;
  for (auto& g : t.ot_recv) {
    require(g.k >= 2, "OT needs k >= 2");
    filler_out += g.choice.size() * ot_receiver_bits(g.k, lam);
  }
  for (auto& g : t.cot_recv) filler_out += g.choice.size() * static_cast<size_t>(lam);
  for (auto& g : t.ot_send) {
    require(g.k >= 2 && g.msgs.size() % g.k == 0, "OT message count must be a multiple of k");
    filler_in += g.msgs.size() / g.k * ot_receiver_bits(g.k, lam);
  }
  for (auto& g : t.cot_send) {
    require(g.vec >= 1 && g.corr.size() % g.vec == 0, "COT correlation count must be a multiple of vec");
    filler_in += g.corr.size() / g.vec * static_cast<size_t>(lam);
  }

  // Round 1: receivers send their extension columns.
  {
    BitBuf out(filler_out);
    put_filler(out, s.rng(), filler_out);
    BitBuf in;
    if (filler_out && filler_in)
      in = s.exchange(std::move(out));
    else if (filler_out)
      s.send(std::move(out));
    else if (filler_in)
      in = s.recv();
    if (in.bits() != filler_in) throw TransportError("OT receiver message has unexpected length");
  }

  // Round 2: senders send masked payloads.
  TransferOut res;
  size_t payload_out = 0, payload_in = 0;
  for (auto& g : t.ot_send) payload_out += g.msgs.size() * g.bits;
  for (auto& g : t.cot_send) payload_out += g.corr.size() * g.width;
  for (auto& g : t.ot_recv) payload_in += g.choice.size() * g.k * g.bits;
  for (auto& g : t.cot_recv) payload_in += g.choice.size() * g.vec * g.width;

  BitBuf out(payload_out);
  size_t gi = 0;
  for (auto& g : t.ot_send) {
    PadStream pad(s.joint_seed(), batch, me, gi++);
    for (size_t i = 0; i < g.msgs.size(); ++i) out.put(g.msgs[i] ^ pad(i), g.bits);
  }
  for (auto& g : t.cot_send) {
    PadStream pad(s.joint_seed(), batch, me, gi++);
    std::vector<u64> r(g.corr.size());
    for (size_t i = 0; i < g.corr.size(); ++i) {
      r[i] = mod2(pad(2 * i), g.width);
      out.put(g.corr[i] + pad(2 * i + 1), g.width);
    }
    res.cot_send.push_back(std::move(r));
  }

  BitBuf in;
  if (payload_out && payload_in)
    in = s.exchange(std::move(out));
  else if (payload_out)
    s.send(std::move(out));
  else if (payload_in)
    in = s.recv();
  if (in.bits() != payload_in) throw TransportError("OT sender message has unexpected length");

  size_t off = 0;
  gi = 0;
  for (auto& g : t.ot_recv) {
    PadStream pad(s.joint_seed(), batch, peer, gi++);
    std::vector<u64> got(g.choice.size());
    for (size_t i = 0; i < g.choice.size(); ++i) {
      require(g.choice[i] < static_cast<u64>(g.k), "OT choice index out of range");
      u64 j = i * g.k + g.choice[i];
      got[i] = mod2(in.get(off + j * g.bits, g.bits) ^ pad(j), g.bits);
    }
    off += g.choice.size() * g.k * g.bits;
    res.ot.push_back(std::move(got));
  }
  for (auto& g : t.cot_recv) {
    PadStream pad(s.joint_seed(), batch, peer, gi++);
    std::vector<u64> got(g.choice.size() * g.vec);
    for (size_t i = 0; i < g.choice.size(); ++i) {
      for (int v = 0; v < g.vec; ++v) {
        u64 j = i * g.vec + v;
        u64 m = in.get(off + j * g.width, g.width);
        u64 x = g.choice[i] ? m - pad(2 * j + 1) : 0;
        got[j] = mod2(x - pad(2 * j), g.width);
      }
    }
    off += got.size() * g.width;
    res.cot_recv.push_back(std::move(got));
  }
  return res;
}

std::vector<u64> ot_1_of_k(Session& s, int sender, int k, int bits, const std::vector<u64>& msgs,
                           const std::vector<u64>& choice) {
  Transfer t;
  if (s.role() == sender)
    t.ot_send.push_back({k, bits, msgs});
  else
    t.ot_recv.push_back({k, bits, choice});
  TransferOut r = transfer(s, t);
  return s.role() == sender ? std::vector<u64>{} : r.ot[0];
}

std::vector<u64> cot(Session& s, int sender, int width, const std::vector<u64>& corr,
                     const Bits& choice) {
  MeterScope scope(s, "COT");
  Transfer t;
  if (s.role() == sender)
    t.cot_send.push_back({width, 1, corr});
  else
    t.cot_recv.push_back({width, 1, choice});
  TransferOut r = transfer(s, t);
  return s.role() == sender ? r.cot_send[0] : r.cot_recv[0];
}

std::vector<u64> reveal(Session& s, const AShare& x) {
  MeterScope scope(s, "reveal");
  BitBuf b(x.size() * x.width);
  for (u64 v : x.v) b.put(v, x.width);
  BitBuf in = s.exchange(std::move(b));
  std::vector<u64> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = mod2(x.v[i] + in.get(i * x.width, x.width), x.width);
  return out;
}

Bits reveal(Session& s, const Bits& x) {
  MeterScope scope(s, "reveal");
  BitBuf b(x.size());
  for (auto v : x) b.put_bit(v);
  BitBuf in = s.exchange(std::move(b));
  Bits out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] ^ in.bit(i);
  return out;
}

}  // namespace fx
