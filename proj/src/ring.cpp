#include "fxmpc/ring.hpp"

#include <cmath>

namespace fx {

namespace {

void same_width(const RingElem& a, const RingElem& b) {
  require(a.width() == b.width(), "operand widths differ");
}

void shift_ok(const RingElem& x, int s) {
  require(s >= 0 && s < x.width(), "shift amount must satisfy 0 <= s < width");
}

}  // namespace

Matrix Matrix::transposed() const {
  Matrix t(cols, rows, width);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix matmul_ref(const Matrix& x, const Matrix& y, int out_width) {
  require(x.cols == y.rows, "matrix dimension mismatch");
  Matrix z(x.rows, y.cols, out_width);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < y.cols; ++j) {
      u64 acc = 0;
      for (int k = 0; k < x.cols; ++k) acc += x.at(i, k) * y.at(k, j);
      z.at(i, j) = mod2(acc, out_width);
    }
  return z;
}

bool wrap(const RingElem& x, const RingElem& y) {
  same_width(x, y);
  return ref::wrap(x.value(), y.value(), x.width());
}

long double interpret(const RingElem& x, const FixFmt& fmt) {
  require(x.width() == fmt.width, "element width differs from format width");
  long double v = fmt.is_signed ? static_cast<long double>(x.as_signed())
                                : static_cast<long double>(x.value());
  return std::ldexp(v, -fmt.scale);
}

RingElem encode(long double r, const FixFmt& fmt) {
  long double v = std::floor(std::ldexp(r, fmt.scale));
  long double ring = std::ldexp(1.0L, fmt.width);
  v -= ring * std::floor(v / ring);
  if (v >= ring) v -= ring;
  return RingElem(static_cast<u64>(v), fmt.width);
}

RingElem add(const RingElem& a, const RingElem& b) {
  same_width(a, b);
  return RingElem(a.value() + b.value(), a.width());
}

RingElem sub(const RingElem& a, const RingElem& b) {
  same_width(a, b);
  return RingElem(a.value() - b.value(), a.width());
}

RingElem neg(const RingElem& a) { return RingElem(0 - a.value(), a.width()); }

RingElem mul_mod(const RingElem& a, const RingElem& b) {
  same_width(a, b);
  return RingElem(a.value() * b.value(), a.width());
}

RingElem logical_shift_right(const RingElem& x, int s) {
  shift_ok(x, s);
  return RingElem(ref::lrs(x.value(), x.width(), s), x.width());
}

RingElem arith_shift_right(const RingElem& x, int s) {
  shift_ok(x, s);
  return RingElem(ref::ars(x.value(), x.width(), s), x.width());
}

RingElem truncate_reduce(const RingElem& x, int s) {
  shift_ok(x, s);
  if (s == 0) return x;
  return RingElem(x.value() >> s, x.width() - s);
}

RingElem zero_extend(const RingElem& x, int n) {
  require(n >= x.width(), "extension target must not be narrower");
  return RingElem(x.value(), n);
}

RingElem sign_extend(const RingElem& x, int n) {
  require(n >= x.width(), "extension target must not be narrower");
  return RingElem(ref::sext(x.value(), x.width(), n), n);
}

RingElem reduce_to(const RingElem& x, int n) {
  require(n <= x.width(), "reduction target must not be wider");
  return RingElem(x.value(), n);
}

bool msb(const RingElem& x) { return x.msb(); }

RingElem c_div_pow2(const RingElem& x, int s) {
  shift_ok(x, s);
  return RingElem(ref::c_div_pow2(x.value(), x.width(), s), x.width());
}

WrapSplit split_wrap(u64 x0, u64 x1, int w, int s) {
  u64 v0 = mod2(x0, s), v1 = mod2(x1, s);
  u64 u0 = mod2(x0, w) >> s, u1 = mod2(x1, w) >> s;
  int hw = w - s;
  WrapSplit r{};
  r.c = ref::wrap(v0, v1, s);
  r.d = ref::wrap(u0, u1, hw);
  r.e = mod2(u0 + u1, hw) == mask(hw);
  return r;
}

}  // namespace fx
