#include "fxmpc/gadgets.hpp"

namespace fx {

Bits xor_bits(const Bits& a, const Bits& b) {
  require(a.size() == b.size(), "bit vector size mismatch");
  Bits r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
  return r;
}

Bits xor_public(const Session& s, const Bits& a, bool c) {
  Bits r = a;
  if (s.role() == 0 && c)
    for (auto& v : r) v ^= 1;
  return r;
}

Bits not_bits(const Session& s, const Bits& a) { return xor_public(s, a, true); }

AndMixedOut and_mixed(Session& s, const Bits& x, const Bits& y, const Bits& a, const Bits& b1,
                      const Bits& b2) {
  require(x.size() == y.size(), "AND operand size mismatch");
  require(a.size() == b1.size() && a.size() == b2.size(), "paired AND operand size mismatch");
  MeterScope scope(s, "AND");
  const size_t n1 = x.size(), n2 = a.size();
  auto& rng = s.rng();
  auto bit = [&] { return static_cast<uint8_t>(rng() & 1); };

  // Triples: singles (ta, tb, tc); pairs (pa; pb1, pb2 -> pc1, pc2).
  Bits ta(n1), tb(n1), tc(n1), pa(n2), pb1(n2), pb2(n2), pc1(n2), pc2(n2);
  for (size_t i = 0; i < n1; ++i) ta[i] = bit(), tb[i] = bit();
  for (size_t i = 0; i < n2; ++i) pa[i] = bit(), pb1[i] = bit(), pb2[i] = bit();

  Transfer t;
  if (s.role() == 0) {
    OtSend g1{4, 1, std::vector<u64>(n1 * 4)};
    for (size_t i = 0; i < n1; ++i) {
      tc[i] = bit();
      for (int j = 0; j < 4; ++j) g1.msgs[i * 4 + j] = tc[i] ^ ((ta[i] ^ (j >> 1)) & (tb[i] ^ (j & 1)));
    }
    OtSend g2{8, 2, std::vector<u64>(n2 * 8)};
    for (size_t i = 0; i < n2; ++i) {
      pc1[i] = bit(), pc2[i] = bit();
      for (int j = 0; j < 8; ++j) {
        int A = pa[i] ^ (j >> 2), B1 = pb1[i] ^ ((j >> 1) & 1), B2 = pb2[i] ^ (j & 1);
        g2.msgs[i * 8 + j] = (pc1[i] ^ (A & B1)) | ((pc2[i] ^ (A & B2)) << 1);
      }
    }
    if (n1) t.ot_send.push_back(std::move(g1));
    if (n2) t.ot_send.push_back(std::move(g2));
  } else {
    OtRecv g1{4, 1, std::vector<u64>(n1)};
    for (size_t i = 0; i < n1; ++i) g1.choice[i] = (ta[i] << 1) | tb[i];
    OtRecv g2{8, 2, std::vector<u64>(n2)};
    for (size_t i = 0; i < n2; ++i) g2.choice[i] = (pa[i] << 2) | (pb1[i] << 1) | pb2[i];
    if (n1) t.ot_recv.push_back(std::move(g1));
    if (n2) t.ot_recv.push_back(std::move(g2));
  }
  if (n1 + n2 == 0) return {};
  TransferOut tr = transfer(s, t);
  if (s.role() == 1) {
    size_t g = 0;
    if (n1) {
      for (size_t i = 0; i < n1; ++i) tc[i] = static_cast<uint8_t>(tr.ot[g][i]);
      ++g;
    }
    if (n2)
      for (size_t i = 0; i < n2; ++i) pc1[i] = tr.ot[g][i] & 1, pc2[i] = (tr.ot[g][i] >> 1) & 1;
  }

  // Beaver opening, all elements in one exchange.
  BitBuf open(2 * n1 + 3 * n2);
  for (size_t i = 0; i < n1; ++i) open.put_bit(x[i] ^ ta[i]), open.put_bit(y[i] ^ tb[i]);
  for (size_t i = 0; i < n2; ++i)
    open.put_bit(a[i] ^ pa[i]), open.put_bit(b1[i] ^ pb1[i]), open.put_bit(b2[i] ^ pb2[i]);
  BitBuf in = s.exchange(std::move(open));
  const bool p0 = s.role() == 0;
  AndMixedOut out{Bits(n1), Bits(n2), Bits(n2)};
  for (size_t i = 0; i < n1; ++i) {
    int d = x[i] ^ ta[i] ^ in.bit(2 * i), e = y[i] ^ tb[i] ^ in.bit(2 * i + 1);
    out.single[i] = tc[i] ^ (d & tb[i]) ^ (e & ta[i]) ^ (p0 ? d & e : 0);
  }
  for (size_t i = 0; i < n2; ++i) {
    size_t o = 2 * n1 + 3 * i;
    int d = a[i] ^ pa[i] ^ in.bit(o), e1 = b1[i] ^ pb1[i] ^ in.bit(o + 1), e2 = b2[i] ^ pb2[i] ^ in.bit(o + 2);
    out.pair1[i] = pc1[i] ^ (d & pb1[i]) ^ (e1 & pa[i]) ^ (p0 ? d & e1 : 0);
    out.pair2[i] = pc2[i] ^ (d & pb2[i]) ^ (e2 & pa[i]) ^ (p0 ? d & e2 : 0);
  }
  return out;
}

Bits and_bits(Session& s, const Bits& x, const Bits& y) { return and_mixed(s, x, y, {}, {}, {}).single; }

std::pair<Bits, Bits> and_pairs(Session& s, const Bits& a, const Bits& b1, const Bits& b2) {
  auto r = and_mixed(s, {}, {}, a, b1, b2);
  return {std::move(r.pair1), std::move(r.pair2)};
}

}  // namespace fx
