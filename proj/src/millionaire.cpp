#include "fxmpc/gadgets.hpp"

namespace fx {

namespace {

struct Node {
  int lo = -1;
  int hi = -1;
  bool lt = false;
  bool eq = false;
  Bits vlt, veq;
};

}  // namespace

MillOut mill(Session& s, const std::vector<u64>& mine, int bits, bool need_lt, bool need_eq) {
  require(bits >= 1 && bits <= kMaxWidth, "comparison width must be in [1, 64]");
  require(need_lt || need_eq, "comparison must produce at least one output");
  MeterScope scope(s, "Mill");
  const size_t n = mine.size();
  const int nb = (bits + kMillLeaf - 1) / kMillLeaf;

  std::vector<Node> nodes(nb);
  std::vector<std::vector<int>> levels{{}};
  for (int j = 0; j < nb; ++j) levels[0].push_back(j);
  while (levels.back().size() > 1) {
    const auto& cur = levels.back();
    std::vector<int> next;
    for (size_t i = 0; i + 1 < cur.size(); i += 2) {
      Node nd;
      nd.lo = cur[i];
      nd.hi = cur[i + 1];
      nodes.push_back(nd);
      next.push_back(static_cast<int>(nodes.size()) - 1);
    }
    if (cur.size() % 2) next.push_back(cur.back());
    levels.push_back(std::move(next));
  }
  const int root = levels.back()[0];
  nodes[root].lt = need_lt;
  nodes[root].eq = need_eq;
  for (int i = static_cast<int>(nodes.size()) - 1; i >= nb; --i) {
    Node& p = nodes[i];
    Node& hi = nodes[p.hi];
    Node& lo = nodes[p.lo];
    hi.eq = true;
    hi.lt |= p.lt;
    lo.lt |= p.lt;
    lo.eq |= p.eq;
  }

  // Leaves: one 1-of-2^q OT per block, P0 sends the (lt, eq) bits for every y block value.
  Transfer t;
  for (int j = 0; j < nb; ++j) {
    const int q = std::min(kMillLeaf, bits - kMillLeaf * j);
    const int k = 1 << q;
    Node& nd = nodes[j];
    const int mbits = nd.lt + nd.eq;
    if (s.role() == 0) {
      OtSend g{k, mbits, std::vector<u64>(n * k)};
      nd.vlt.resize(n);
      nd.veq.resize(n);
      for (size_t i = 0; i < n; ++i) {
        u64 xj = (mine[i] >> (kMillLeaf * j)) & mask(q);
        u64 r = s.rng()();
        nd.vlt[i] = nd.lt ? r & 1 : 0;
        nd.veq[i] = nd.eq ? (r >> 1) & 1 : 0;
        for (int v = 0; v < k; ++v) {
          u64 lt = nd.vlt[i] ^ (xj < static_cast<u64>(v)), eq = nd.veq[i] ^ (xj == static_cast<u64>(v));
          g.msgs[i * k + v] = nd.lt ? (lt | (nd.eq ? eq << 1 : 0)) : eq;
        }
      }
      t.ot_send.push_back(std::move(g));
    } else {
      OtRecv g{k, mbits, std::vector<u64>(n)};
      for (size_t i = 0; i < n; ++i) g.choice[i] = (mine[i] >> (kMillLeaf * j)) & mask(q);
      t.ot_recv.push_back(std::move(g));
    }
  }
  TransferOut tr = transfer(s, t);
  if (s.role() == 1) {
    for (int j = 0; j < nb; ++j) {
      Node& nd = nodes[j];
      nd.vlt.assign(n, 0);
      nd.veq.assign(n, 0);
      for (size_t i = 0; i < n; ++i) {
        u64 m = tr.ot[j][i];
        if (nd.lt) nd.vlt[i] = m & 1;
        if (nd.eq) nd.veq[i] = nd.lt ? (m >> 1) & 1 : m & 1;
      }
    }
  }

  // Internal levels: lt = lt_hi ^ (eq_hi & lt_lo), eq = eq_hi & eq_lo.
  int first = nb;
  for (size_t lv = 1; lv < levels.size(); ++lv) {
    std::vector<int> made;
    for (int id : levels[lv])
      if (id >= first) made.push_back(id);
    Bits sx, sy, pa, pb1, pb2;
    for (int id : made) {
      const Node& nd = nodes[id];
      const Node& hi = nodes[nd.hi];
      const Node& lo = nodes[nd.lo];
      if (nd.lt && nd.eq) {
        pa.insert(pa.end(), hi.veq.begin(), hi.veq.end());
        pb1.insert(pb1.end(), lo.vlt.begin(), lo.vlt.end());
        pb2.insert(pb2.end(), lo.veq.begin(), lo.veq.end());
      } else {
        sx.insert(sx.end(), hi.veq.begin(), hi.veq.end());
        const Bits& other = nd.lt ? lo.vlt : lo.veq;
        sy.insert(sy.end(), other.begin(), other.end());
      }
    }
    AndMixedOut r = and_mixed(s, sx, sy, pa, pb1, pb2);
    size_t si = 0, pi = 0;
    for (int id : made) {
      Node& nd = nodes[id];
      const Node& hi = nodes[nd.hi];
      nd.vlt.assign(n, 0);
      nd.veq.assign(n, 0);
      if (nd.lt && nd.eq) {
        for (size_t i = 0; i < n; ++i) {
          nd.vlt[i] = hi.vlt[i] ^ r.pair1[pi + i];
          nd.veq[i] = r.pair2[pi + i];
        }
        pi += n;
      } else if (nd.lt) {
        for (size_t i = 0; i < n; ++i) nd.vlt[i] = hi.vlt[i] ^ r.single[si + i];
        si += n;
      } else {
        for (size_t i = 0; i < n; ++i) nd.veq[i] = r.single[si + i];
        si += n;
      }
    }
    first = made.empty() ? first : made.back() + 1;
  }
  MillOut out;
  if (need_lt) out.lt = std::move(nodes[root].vlt);
  if (need_eq) out.eq = std::move(nodes[root].veq);
  return out;
}

namespace {

std::vector<u64> complement(const Session& s, const std::vector<u64>& x, int bits) {
  if (s.role() == 1) {
    std::vector<u64> r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = mod2(x[i], bits);
    return r;
  }
  std::vector<u64> r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = mod2(~x[i], bits);
  return r;
}

}  // namespace

Bits wrap_bits(Session& s, const std::vector<u64>& mine, int bits) {
  MeterScope scope(s, "Wrap");
  return mill(s, complement(s, mine, bits), bits, true, false).lt;
}

WrapEqOut wrapeq_bits(Session& s, const std::vector<u64>& mine, int bits) {
  MeterScope scope(s, "WrapEq");
  MillOut m = mill(s, complement(s, mine, bits), bits, true, true);
  return {std::move(m.lt), std::move(m.eq)};
}

Bits zero_test(Session& s, const std::vector<u64>& mine, int bits) {
  MeterScope scope(s, "Eq");
  std::vector<u64> in(mine.size());
  for (size_t i = 0; i < mine.size(); ++i) in[i] = mod2(s.role() == 0 ? 0 - mine[i] : mine[i], bits);
  return mill(s, in, bits, false, true).eq;
}

Bits msb_bits(Session& s, const AShare& x) {
  MeterScope scope(s, "MSB");
  const int w = x.width;
  Bits out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = msb_of(x.v[i], w);
  if (w == 1) return out;
  std::vector<u64> low(x.size());
  for (size_t i = 0; i < x.size(); ++i) low[i] = mod2(x.v[i], w - 1);
  return xor_bits(out, wrap_bits(s, low, w - 1));
}

}  // namespace fx
