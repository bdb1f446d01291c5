#include <map>

#include "fxmpc/blocks.hpp"

namespace fx {

std::vector<int> equal_digits(int l, int d) {
  require(d >= 1 && l >= 1, "digit size must be positive");
  std::vector<int> out;
  for (int off = 0; off < l; off += d) out.push_back(std::min(d, l - off));
  return out;
}

// z_i = y_{0,i} + y_{1,i} + u_i, where the carry u_{i+1} = w_i ^ (u_i & e_i) and u_1 = w_0.
std::vector<AShare> digdec(Session& s, const AShare& x, const std::vector<int>& sizes) {
  int total = 0;
  for (int d : sizes) {
    require(d >= 1, "digit sizes must be positive");
    total += d;
  }
  require(total == x.width, "digit sizes must sum to the input width");
  MeterScope scope(s, "DigDec");
  const size_t c = sizes.size(), n = x.size();
  std::vector<std::vector<u64>> y(c, std::vector<u64>(n));
  for (size_t i = 0, off = 0; i < c; off += sizes[i], ++i)
    for (size_t j = 0; j < n; ++j) y[i][j] = mod2(x.v[j] >> off, sizes[i]);
  std::vector<AShare> z;
  for (size_t i = 0; i < c; ++i) z.emplace_back(sizes[i], y[i]);
  if (c == 1) return z;

  // Carry-out information per digit boundary, batched across digits of equal width.
  std::vector<Bits> w(c), e(c);
  w[0] = wrap_bits(s, y[0], sizes[0]);
  std::map<int, std::vector<size_t>> by_width;
  for (size_t i = 1; i + 1 < c; ++i) by_width[sizes[i]].push_back(i);
  for (auto& [d, idx] : by_width) {
    std::vector<u64> in;
    for (size_t i : idx) in.insert(in.end(), y[i].begin(), y[i].end());
    WrapEqOut r = wrapeq_bits(s, in, d);
    for (size_t a = 0; a < idx.size(); ++a) {
      w[idx[a]].assign(r.w.begin() + a * n, r.w.begin() + (a + 1) * n);
      e[idx[a]].assign(r.e.begin() + a * n, r.e.begin() + (a + 1) * n);
    }
  }
  std::vector<Bits> u(c);
  u[1] = w[0];
  for (size_t i = 1; i + 1 < c; ++i) u[i + 1] = xor_bits(w[i], and_bits(s, u[i], e[i]));

  std::map<int, std::vector<size_t>> carry_width;
  for (size_t i = 1; i < c; ++i) carry_width[sizes[i]].push_back(i);
  for (auto& [d, idx] : carry_width) {
    Bits in;
    for (size_t i : idx) in.insert(in.end(), u[i].begin(), u[i].end());
    AShare ua = b2a(s, in, d);
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t j = 0; j < n; ++j) z[idx[a]].v[j] = mod2(z[idx[a]].v[j] + ua.v[a * n + j], d);
  }
  return z;
}

// Highest nonzero digit selected by a suffix AND chain over the per-digit zero flags,
// its projected index muxed out and summed, then expanded by a one-hot lookup.
std::vector<u64> msnzb(Session& s, const AShare& x, int d) {
  const int l = x.width;
  int iota = 0;
  while ((1 << iota) < l) ++iota;
  require(l >= 2 && (1 << iota) == l, "MSNZB needs a power-of-two width");
  MeterScope scope(s, "MSNZB");
  const std::vector<int> sizes = equal_digits(l, d);
  const size_t c = sizes.size(), n = x.size();
  std::vector<AShare> z = digdec(s, x, sizes);
  std::vector<AShare> u(c);
  std::vector<Bits> v(c);
  for (size_t i = 0, off = 0; i < c; off += sizes[i], ++i) {
    DigitScan r = digit_scan(s, z[i], static_cast<int>(off), iota);
    u[i] = std::move(r.u);
    v[i] = std::move(r.v);
  }
  AShare zt(iota, n);
  if (c == 1) {
    zt = u[0];
  } else {
    // p[i] = AND of v[j] for j > i; sel_i = p[i] ^ p[i-1].
    std::vector<Bits> p(c + 1);
    p[c] = xor_public(s, Bits(n, 0), true);
    p[c - 1] = v[c - 1];
    for (size_t i = c - 1; i-- > 0;) p[i] = and_bits(s, p[i + 1], v[i]);
    Bits sel;
    AShare cand(iota, n * c);
    for (size_t i = 0; i < c; ++i) {
      Bits si = xor_bits(p[i + 1], p[i]);
      sel.insert(sel.end(), si.begin(), si.end());
      std::copy(u[i].v.begin(), u[i].v.end(), cand.v.begin() + i * n);
    }
    AShare picked = mux(s, sel, cand);
    for (size_t i = 0; i < c; ++i)
      for (size_t j = 0; j < n; ++j) zt.v[j] = mod2(zt.v[j] + picked.v[i * n + j], iota);
  }
  return onehot(s, zt, l);
}

}  // namespace fx
