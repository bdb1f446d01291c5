#include <algorithm>
#include <cmath>

#include "fxmpc/cost_model.hpp"

namespace fx {

namespace cost {

namespace {

constexpr int kLeaf = 4;

u64 hinted(Hint h, int bits, int lambda) {
  return h == Hint::None ? wrap(bits, lambda) : msb_to_wrap(h, lambda);
}

int log2_exact(int l) {
  int i = 0;
  while ((1 << i) < l) ++i;
  return i;
}

// Needs of one node in the comparison tree over blocks [lo, hi).
struct Need {
  bool lt;
  bool eq;
};

// Pairing is bottom-up, so the shape is rebuilt the same way and costs are summed top-down.
u64 mill_tree(const std::vector<int>& leaf_bits, int lambda, bool lt, bool eq) {
  struct N {
    int lo, hi;
    Need need;
  };
  const int nb = static_cast<int>(leaf_bits.size());
  std::vector<N> nodes;
  for (int j = 0; j < nb; ++j) nodes.push_back({-1, -1, {false, false}});
  std::vector<int> cur(nb);
  for (int j = 0; j < nb; ++j) cur[j] = j;
  while (cur.size() > 1) {
    std::vector<int> next;
    for (size_t i = 0; i + 1 < cur.size(); i += 2) {
      nodes.push_back({cur[i], cur[i + 1], {false, false}});
      next.push_back(static_cast<int>(nodes.size()) - 1);
    }
    if (cur.size() % 2) next.push_back(cur.back());
    cur = next;
  }
  nodes[cur[0]].need = {lt, eq};
  u64 c = 0;
  for (int i = static_cast<int>(nodes.size()) - 1; i >= nb; --i) {
    const Need p = nodes[i].need;
    nodes[nodes[i].hi].need.eq = true;
    nodes[nodes[i].hi].need.lt |= p.lt;
    nodes[nodes[i].lo].need.lt |= p.lt;
    nodes[nodes[i].lo].need.eq |= p.eq;
    c += p.lt && p.eq ? and_pair(lambda) : and_single(lambda);
  }
  for (int j = 0; j < nb; ++j) c += ot(1 << leaf_bits[j], nodes[j].need.lt + nodes[j].need.eq, lambda);
  return c;
}

}  // namespace

u64 ot(int k, int bits, int lambda) {
  return static_cast<u64>(k == 2 ? lambda : 2 * lambda) + static_cast<u64>(k) * bits;
}
u64 cot(int width, int lambda, int vec) { return static_cast<u64>(lambda) + static_cast<u64>(vec) * width; }
u64 and_single(int lambda) { return ot(4, 1, lambda) + 4; }
u64 and_pair(int lambda) { return ot(8, 2, lambda) + 6; }
u64 b2a(int width, int lambda) { return cot(width, lambda); }
u64 mux(int width, int lambda) { return 2 * cot(width, lambda); }
u64 lut(int in_bits, int out_bits, int lambda) { return ot(1 << in_bits, out_bits, lambda); }

u64 mill(int bits, bool lt, bool eq, int lambda) {
  std::vector<int> leaves;
  for (int off = 0; off < bits; off += kLeaf) leaves.push_back(std::min(kLeaf, bits - off));
  return mill_tree(leaves, lambda, lt, eq);
}
u64 wrap(int bits, int lambda) { return mill(bits, true, false, lambda); }
u64 wrapeq(int bits, int lambda) { return mill(bits, true, true, lambda); }
u64 zero_test(int bits, int lambda) { return mill(bits, false, true, lambda); }
u64 msb(int width, int lambda) { return width == 1 ? 0 : wrap(width - 1, lambda); }
u64 msb_to_wrap(Hint h, int lambda) { return h == Hint::Shared ? ot(4, 1, lambda) : ot(2, 1, lambda); }

u64 zxt(int m, int n, Hint h, int lambda) { return hinted(h, m, lambda) + b2a(n - m, lambda); }
u64 sxt(int m, int n, Hint h, int lambda) { return zxt(m, n, h, lambda); }

u64 lrs(int l, int s, Hint h, int lambda) {
  u64 w = h == Hint::None ? wrapeq(l - s, lambda) + and_single(lambda) : msb_to_wrap(h, lambda);
  return wrap(s, lambda) + w + b2a(l, lambda) + b2a(s, lambda);
}
u64 ars(int l, int s, Hint h, int lambda) { return lrs(l, s, h, lambda); }
u64 tr(int l, int s, int lambda) { return wrap(s, lambda) + b2a(l - s, lambda); }

u64 div_pow2(int l, int s, int lambda) {
  return msb(l, lambda) + zero_test(s, lambda) + and_single(lambda) + b2a(l, lambda) +
         ars(l, s, Hint::Shared, lambda);
}

u64 cross_mult(int m, int n, int l, int lambda) {
  u64 c = 0;
  for (int i = 0; i < std::min({m, n, l}); ++i) c += cot(l - i, lambda);
  return c;
}

u64 umult(int m, int n, int l, Hint hx, Hint hy, int lambda) {
  u64 c = 2 * cross_mult(m, n, l, lambda);
  if (l > m) c += hinted(hx, m, lambda) + mux(std::min(n, l - m), lambda);
  if (l > n) c += hinted(hy, n, lambda) + mux(std::min(m, l - n), lambda);
  return c;
}
u64 smult(int m, int n, int l, Hint hx, Hint hy, int lambda) { return umult(m, n, l, hx, hy, lambda); }
u64 smult_tr(int m, int n, int l, int s, Hint hx, Hint hy, int lambda) {
  return smult(m, n, l, hx, hy, lambda) + tr(l, s, lambda);
}

u64 bitmat_mul(int d1, int d2, int d3, int width, int lambda) {
  return static_cast<u64>(d1) * d2 * 2 * cot(width, lambda, d3);
}

u64 matmul(int d1, int d2, int d3, int m, int n, int lambda) {
  const int e = log2_exact(d2);
  if (m > n) return matmul(d3, d2, d1, n, m, lambda);
  u64 c = e > 0 ? static_cast<u64>(d2) * d3 * zxt(n, n + e, Hint::None, lambda) : 0;
  const int np = n + e, l = m + np;
  const u64 nx = static_cast<u64>(d1) * d2;
  for (int b = 0; b < m; ++b) c += 2 * nx * cot(l - b, lambda, d3);
  c += nx * wrap(m, lambda) + static_cast<u64>(d2) * d3 * wrap(np, lambda);
  c += bitmat_mul(d1, d2, d3, np, lambda) + bitmat_mul(d3, d2, d1, m, lambda);
  return c;
}

u64 digdec(const std::vector<int>& sizes, int lambda) {
  const size_t c = sizes.size();
  if (c <= 1) return 0;
  u64 t = wrap(sizes[0], lambda);
  for (size_t i = 1; i + 1 < c; ++i) t += wrapeq(sizes[i], lambda) + and_single(lambda);
  for (size_t i = 1; i < c; ++i) t += b2a(sizes[i], lambda);
  return t;
}

u64 msnzb(int l, int d, int lambda) {
  const int iota = log2_exact(l);
  std::vector<int> sizes;
  for (int off = 0; off < l; off += d) sizes.push_back(std::min(d, l - off));
  const int c = static_cast<int>(sizes.size());
  u64 t = digdec(sizes, lambda);
  for (int di : sizes) t += lut(di, iota + 1, lambda);
  if (c > 1) t += (c - 1) * and_single(lambda) + c * mux(iota, lambda);
  return t + lut(iota, l, lambda);
}

u64 exp(const MathParams& p, int lambda) {
  const int w = p.sp + 2, k = p.m / p.d;
  u64 t = digdec(std::vector<int>(k, p.d), lambda) + static_cast<u64>(k) * lut(p.d, w, lambda);
  t += (k - 1) * smult_tr(w, w, 2 * p.sp + 2, p.sp, Hint::Public, Hint::Public, lambda);
  if (p.n > w) t += zxt(w, p.n, Hint::Public, lambda);
  return t;
}

u64 recip(int l, int s, int g, int t, int lambda) {
  u64 c = 0;
  if (s > g) c += digdec({s - g, g + 1}, lambda);
  c += lut(g + 1, s + 2 * g + 8, lambda);
  if (s > g) {
    c += umult(g + 4, s - g, s + 4, Hint::Public, Hint::None, lambda);
    if (g > 0) c += zxt(s + 4, s + g + 4, Hint::Public, lambda);
  }
  c += tr(s + g + 4, g + 3, lambda);
  if (t == 0) return c + (l > s + 1 ? zxt(s + 1, l, Hint::Public, lambda) : 0);
  const int pw = s + 2, pp = 2 * s + 2;
  c += smult_tr(l, s + 1, pp, s, Hint::Public, Hint::Public, lambda);
  c += smult_tr(s + 1, pw, pp, s, Hint::Public, Hint::Public, lambda);
  for (int i = 2; i <= t; ++i)
    c += smult_tr(pw, pw, pp, s, Hint::None, Hint::None, lambda) +
         smult_tr(pw, pw, pp, s, Hint::Public, Hint::Public, lambda);
  return c + (l > pw ? zxt(pw, l, Hint::Public, lambda) : 0);
}

u64 h(const MathParams& p, int lambda) {
  MathParams ep = p;
  ep.n = p.sp + 2;
  u64 c = exp(ep, lambda) + recip(p.sp + 2, p.sp, p.g, p.t, lambda);
  return c + (p.n > p.sp + 2 ? zxt(p.sp + 2, p.n, Hint::Public, lambda) : 0);
}

u64 sigmoid(const MathParams& p, int lambda) {
  return msb(p.m, lambda) + mux(p.m, lambda) + h(p, lambda) + mux(p.n, lambda);
}

u64 tanh(const MathParams& p, int lambda) {
  MathParams q = p;
  q.s = p.s - 1;
  return sigmoid(q, lambda);
}

u64 rsqrt(const MathParams& p, int lambda) {
  const int l = p.m, s = p.s, sp = p.sp, g = p.g, hw = l / 2 + 1;
  u64 c = msnzb(l, p.d, lambda);
  const int kmin = ref::msnzb(rsqrt_min_input(s));
  std::vector<int> widths;
  for (int i = kmin; i <= l - 2; ++i) {
    i64 ce = static_cast<i64>(std::ceil((s - i) / 2.0)) + static_cast<i64>(std::floor((l - s - 1) / 2.0));
    int wd = i + 2;
    if (ce >= 0 && ce < hw) wd = std::max(wd, hw - static_cast<int>(ce));
    widths.push_back(std::min(wd, l));
  }
  for (int wd : widths) c += b2a(wd, lambda);
  c += umult(l, l, l, Hint::Public, Hint::Public, lambda);
  const int xw = l - 3 - sp > 0 ? sp + 3 : l;
  if (l - 3 - sp > 0) c += tr(l, l - 3 - sp, lambda);
  c += tr(sp + 1, sp + 1 - g, lambda);
  c += lut(g + 1, sp + 2, lambda);
  c += tr(xw, 1, lambda) + mux(sp + 2, lambda);
  const int pw = sp + 2, pp = 2 * sp + 2;
  for (int i = 1; i <= p.t; ++i) {
    c += smult_tr(pw, pw, pp, sp, Hint::Public, Hint::Public, lambda);
    c += umult(pw, pw, pp, i == 1 ? Hint::Shared : Hint::Public, Hint::Public, lambda) + tr(pp, sp, lambda);
    c += ars(pw, 1, Hint::Public, lambda);
    c += smult_tr(pw, pw, pp, sp, Hint::Public, Hint::Public, lambda);
  }
  const int W = l / 2 + sp + 3;
  const int F = (l - s - 1) >= 0 ? (l - s - 1) / 2 : -((s + 2 - l) / 2);
  c += smult(pw, hw, W, Hint::Public, Hint::Public, lambda);
  if (F > 0) c += tr(W, F, lambda);
  if (W - F < l) c += zxt(W - F, l, Hint::Public, lambda);
  return c;
}

u64 math(MathFn f, const MathParams& p, int lambda) {
  switch (f) {
    case MathFn::Exp: return exp(p, lambda);
    case MathFn::Sigmoid: return sigmoid(p, lambda);
    case MathFn::Tanh: return tanh(p, lambda);
    case MathFn::Rsqrt: return rsqrt(p, lambda);
  }
  return 0;
}

}  // namespace cost

namespace bounds {

namespace {

double mu(int m, int n) { return std::min(m, n); }
double nu(int m, int n) { return std::max(m, n); }

}  // namespace

double ot(int k, int bits, int lambda) { return (k == 2 ? lambda : 2.0 * lambda) + static_cast<double>(k) * bits; }
double cot(int width, int lambda) { return lambda + width; }
double b2a(int width, int lambda) { return lambda + width; }
double mux(int width, int lambda) { return 2.0 * (lambda + width); }
double lut(int in_bits, int out_bits, int lambda) { return 2.0 * lambda + std::ldexp(1.0, in_bits) * out_bits; }
double msb_to_wrap(bool shared, int lambda) { return shared ? 2.0 * lambda + 4 : lambda + 2.0; }

double zxt(int m, int n, int lambda) { return lambda * (m + 1.0) + 13.0 * m + n; }
double zxt_hint(int m, int n, int lambda) { return 2.0 * lambda - m + n + 2; }
double lrs(int l, int s, int lambda) { return lambda * (l + 3.0) + 15.0 * l + s + 20; }
double lrs_hint(int l, int s, int lambda) { return lambda * (s + 3.0) + l + 15.0 * s + 2; }
double tr(int l, int s, int lambda) { return lambda * (s + 1.0) + l + 13.0 * s; }
double div_pow2(int l, int s, int lambda) {
  return lambda * (l + 7.0 * s / 4 + 4) + 16.0 * l + 23.0 * s - 5;
}
double umult(int m, int n, int lambda) {
  const double a = mu(m, n), b = nu(m, n);
  return lambda * (3 * a + b + 4) + 2 * a * b + a * a + 17 * a + 16 * b;
}
double umult_hint(int m, int n, int lambda) {
  const double a = mu(m, n), b = nu(m, n);
  return lambda * (2 * a + 6) + 2 * a * b + a * a + 3 * a + 2 * b + 4;
}
double digdec(int l, int d, int lambda) { return (l / static_cast<double>(d) - 1) * (lambda * (d + 2.0) + 15.0 * d + 20); }
double msnzb(int l, int d, int lambda) {
  double iota = std::log2(static_cast<double>(l));
  double p = std::ldexp(1.0, d) * (iota + 1);
  return (l / static_cast<double>(d) - 1) * (lambda * (d + 8.0) + p + 15.0 * d + 2 * iota + 60) + 6.0 * lambda + p +
         static_cast<double>(l) * l + 2 * iota;
}

}  // namespace bounds

}  // namespace fx
