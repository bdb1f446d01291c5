#include "fxmpc/gadgets.hpp"

namespace fx {

int LutSpec::in_bits() const {
  int b = 0;
  for (auto& f : in) b += f.bits;
  return b;
}

int LutSpec::out_bits() const {
  int b = 0;
  for (auto& f : out) b += f.bits;
  return b;
}

std::vector<std::vector<u64>> lut_eval(Session& s, const LutSpec& spec,
                                       const std::function<u64(u64)>& table,
                                       const std::vector<std::vector<u64>>& in) {
  const int m = spec.in_bits(), nb = spec.out_bits();
  require(spec.in.size() == in.size() && !in.empty(), "LUT input fields do not match the spec");
  require(m >= 1 && nb >= 1 && nb <= 64, "LUT widths out of range");
  if (m > kMaxLutInputBits) throw std::length_error("LUT with more than 2^20 entries");
  MeterScope scope(s, "LUT");
  const size_t n = in[0].size();
  for (auto& v : in) require(v.size() == n, "LUT input size mismatch");
  const u64 k = pow2(m);

  // Split a concatenated index into its fields, most significant field first.
  auto split = [&](u64 idx, std::vector<u64>& f) {
    int off = m;
    for (size_t a = 0; a < spec.in.size(); ++a) {
      off -= spec.in[a].bits;
      f[a] = (idx >> off) & mask(spec.in[a].bits);
    }
  };
  auto join = [&](const std::vector<u64>& f) {
    u64 idx = 0;
    for (size_t a = 0; a < spec.in.size(); ++a) idx = (idx << spec.in[a].bits) | f[a];
    return idx;
  };

  std::vector<std::vector<u64>> out(spec.out.size(), std::vector<u64>(n));
  Transfer t;
  if (s.role() == 0) {
    OtSend g{static_cast<int>(k), nb, std::vector<u64>(n * k)};
    std::vector<u64> own(spec.in.size()), peer(spec.in.size()), full(spec.in.size()), r(spec.out.size());
    for (size_t i = 0; i < n; ++i) {
      for (size_t a = 0; a < spec.in.size(); ++a) own[a] = mod2(in[a][i], spec.in[a].bits);
      for (size_t o = 0; o < spec.out.size(); ++o) r[o] = out[o][i] = mod2(s.rng()(), spec.out[o].bits);
      for (u64 j = 0; j < k; ++j) {
        split(j, peer);
        for (size_t a = 0; a < spec.in.size(); ++a)
          full[a] = spec.in[a].kind == FieldKind::Arith ? mod2(peer[a] + own[a], spec.in[a].bits)
                                                        : peer[a] ^ own[a];
        u64 e = table(join(full)), msg = 0;
        int off = 0;
        for (size_t o = 0; o < spec.out.size(); ++o) {
          const int b = spec.out[o].bits;
          u64 v = (e >> off) & mask(b);
          v = spec.out[o].kind == FieldKind::Arith ? mod2(v - r[o], b) : v ^ r[o];
          msg |= v << off;
          off += b;
        }
        g.msgs[i * k + j] = msg;
      }
    }
    t.ot_send.push_back(std::move(g));
    transfer(s, t);
  } else {
    OtRecv g{static_cast<int>(k), nb, std::vector<u64>(n)};
    std::vector<u64> f(spec.in.size());
    for (size_t i = 0; i < n; ++i) {
      for (size_t a = 0; a < spec.in.size(); ++a) f[a] = mod2(in[a][i], spec.in[a].bits);
      g.choice[i] = join(f);
    }
    t.ot_recv.push_back(std::move(g));
    TransferOut r = transfer(s, t);
    for (size_t i = 0; i < n; ++i) {
      int off = 0;
      for (size_t o = 0; o < spec.out.size(); ++o) {
        out[o][i] = (r.ot[0][i] >> off) & mask(spec.out[o].bits);
        off += spec.out[o].bits;
      }
    }
  }
  return out;
}

AShare lut(Session& s, const std::vector<u64>& table, int out_bits, const AShare& x) {
  require(table.size() == pow2(x.width), "table size must be 2^m for an m-bit input");
  LutSpec spec{{{x.width, FieldKind::Arith}}, {{out_bits, FieldKind::Arith}}};
  auto r = lut_eval(s, spec, [&](u64 i) { return table[i]; }, {x.v});
  return AShare(out_bits, std::move(r[0]));
}

std::vector<u64> onehot(Session& s, const AShare& z, int l) {
  require(l >= 1 && l <= 64 && pow2(z.width) >= static_cast<u64>(l), "one-hot width out of range");
  MeterScope scope(s, "OneHot");
  LutSpec spec{{{z.width, FieldKind::Arith}}, {{l, FieldKind::Xor}}};
  auto r = lut_eval(s, spec, [&](u64 i) { return i < static_cast<u64>(l) ? pow2(static_cast<int>(i)) : 0; }, {z.v});
  return r[0];
}

Bits zeros(Session& s, const AShare& y) {
  MeterScope scope(s, "Zeros");
  LutSpec spec{{{y.width, FieldKind::Arith}}, {{1, FieldKind::Xor}}};
  auto r = lut_eval(s, spec, [](u64 i) -> u64 { return i == 0; }, {y.v});
  return Bits(r[0].begin(), r[0].end());
}

namespace {

u64 proj(u64 y, int offset) { return static_cast<u64>(ref::msnzb(y) + offset); }

}  // namespace

AShare msnzb_proj(Session& s, const AShare& y, int offset, int iota) {
  MeterScope scope(s, "MSNZBProj");
  const int d = y.width;
  LutSpec spec{{{d, FieldKind::Arith}}, {{iota, FieldKind::Arith}}};
  auto r = lut_eval(s, spec, [&](u64 i) { return mod2(proj(i, offset), iota); }, {y.v});
  return AShare(iota, std::move(r[0]));
}

DigitScan digit_scan(Session& s, const AShare& y, int offset, int iota) {
  const int d = y.width;
  LutSpec spec{{{d, FieldKind::Arith}}, {{iota, FieldKind::Arith}, {1, FieldKind::Xor}}};
  auto r = lut_eval(
      s, spec, [&](u64 i) { return mod2(proj(i, offset), iota) | (static_cast<u64>(i == 0) << iota); },
      {y.v});
  DigitScan out{AShare(iota, std::move(r[0])), Bits(r[1].begin(), r[1].end())};
  return out;
}

}  // namespace fx
