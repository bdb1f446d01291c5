#include "fxmpc/blocks.hpp"

namespace fx {

AMatrix AMatrix::transposed() const {
  AMatrix t{cols, rows, AShare(a.width, a.size())};
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.a.v[static_cast<size_t>(j) * rows + i] = a.v[static_cast<size_t>(i) * cols + j];
  return t;
}

// Z[i][k] = sum_j W[i][j] X[j][k]; one vector MUX per (i, j) over row j of X.
AMatrix bitmat_mul(Session& s, const Bits& w, int d1, int d2, const AMatrix& x) {
  require(w.size() == static_cast<size_t>(d1) * d2 && x.rows == d2, "bit-matrix dimensions mismatch");
  MeterScope scope(s, "BitMatMul");
  const int d3 = x.cols;
  AShare rows(x.a.width, static_cast<size_t>(d1) * d2 * d3);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d3; ++k)
        rows.v[(static_cast<size_t>(i) * d2 + j) * d3 + k] = x.a.v[static_cast<size_t>(j) * d3 + k];
  AShare prod = mux_vec(s, w, rows, d3);
  AMatrix z{d1, d3, AShare(x.a.width, static_cast<size_t>(d1) * d3)};
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d3; ++k) {
        u64& acc = z.a.v[static_cast<size_t>(i) * d3 + k];
        acc = mod2(acc + prod.v[(static_cast<size_t>(i) * d2 + j) * d3 + k], z.a.width);
      }
  return z;
}

namespace {

int ceil_log2(int v) {
  int e = 0;
  while ((1 << e) < v) ++e;
  return e;
}

// Requires x.width <= y.width; y is already extended.
AMatrix matmul_core(Session& s, const AMatrix& x, const AMatrix& y) {
  const int m = x.a.width, n = y.a.width, l = m + n;
  const int d1 = x.rows, d2 = x.cols, d3 = y.cols;
  require(l <= kMaxWidth, "matrix product width exceeds 64");

  // Cross terms: for each bit t of X[i][j], one COT on the d3-vector row j of Y.
  Transfer t;
  const size_t nx = static_cast<size_t>(d1) * d2;
  for (int b = 0; b < m; ++b) {
    CotSend snd{l - b, d3, std::vector<u64>(nx * d3)};
    CotRecv rcv{l - b, d3, Bits(nx)};
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d2; ++j) {
        size_t e = static_cast<size_t>(i) * d2 + j;
        rcv.choice[e] = (x.a.v[e] >> b) & 1;
        for (int k = 0; k < d3; ++k) snd.corr[e * d3 + k] = mod2(y.a.v[static_cast<size_t>(j) * d3 + k], l - b);
      }
    t.cot_send.push_back(std::move(snd));
    t.cot_recv.push_back(std::move(rcv));
  }
  TransferOut cr;
  {
    MeterScope scope(s, "CrossMult");
    cr = transfer(s, t);
  }

  AMatrix z{d1, d3, AShare(l, static_cast<size_t>(d1) * d3)};
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) {
      size_t e = static_cast<size_t>(i) * d2 + j;
      for (int k = 0; k < d3; ++k) {
        u64 acc = x.a.v[e] * y.a.v[static_cast<size_t>(j) * d3 + k];
        for (int b = 0; b < m; ++b) acc += (cr.cot_send[b][e * d3 + k] + cr.cot_recv[b][e * d3 + k]) << b;
        u64& out = z.a.v[static_cast<size_t>(i) * d3 + k];
        out = mod2(out + acc, l);
      }
    }

  // XY = X0Y0 + X1Y1 + cross - 2^m Wx Y - 2^n X Wy  (mod 2^l).
  Bits wx = wrap_bits(s, x.a.v, m);
  Bits wy = wrap_bits(s, y.a.v, n);
  AMatrix c1 = bitmat_mul(s, wx, d1, d2, AMatrix{d2, d3, reduce(y.a, l - m)});
  Bits wyt(wy.size());
  for (int j = 0; j < d2; ++j)
    for (int k = 0; k < d3; ++k) wyt[static_cast<size_t>(k) * d2 + j] = wy[static_cast<size_t>(j) * d3 + k];
  AMatrix c2 = bitmat_mul(s, wyt, d3, d2, AMatrix{d2, d1, reduce(x.transposed().a, l - n)}).transposed();
  for (size_t i = 0; i < z.a.size(); ++i)
    z.a.v[i] = mod2(z.a.v[i] - (c1.a.v[i] << m) - (c2.a.v[i] << n), l);
  return z;
}

}  // namespace

// Extends the wider operand by e = ceil(log2 d2) bits; output width m + n + e.
AMatrix matmul(Session& s, const AMatrix& x, const AMatrix& y) {
  require(x.cols == y.rows, "matrix dimensions mismatch");
  require(x.a.size() == static_cast<size_t>(x.rows) * x.cols && y.a.size() == static_cast<size_t>(y.rows) * y.cols,
          "matrix share count mismatch");
  MeterScope scope(s, "MatMul");
  const int e = ceil_log2(x.cols);
  if (x.a.width <= y.a.width) {
    AMatrix ye = y;
    if (e > 0) ye.a = zxt(s, y.a, y.a.width + e);
    return matmul_core(s, x, ye);
  }
  AMatrix xt = x.transposed();
  if (e > 0) xt.a = zxt(s, xt.a, x.a.width + e);
  return matmul_core(s, y.transposed(), xt).transposed();
}

}  // namespace fx
