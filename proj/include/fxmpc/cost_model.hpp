#pragma once

#include <vector>

#include "fxmpc/cleartext.hpp"

namespace fx {

// Per-instance communication in bits (both directions), derived from how each protocol
// is composed rather than by running it.
namespace cost {

enum class Hint { None, Public, Shared };

u64 ot(int k, int bits, int lambda);
u64 cot(int width, int lambda, int vec = 1);
u64 and_single(int lambda);
u64 and_pair(int lambda);
u64 b2a(int width, int lambda);
u64 mux(int width, int lambda);
u64 lut(int in_bits, int out_bits, int lambda);

u64 mill(int bits, bool lt, bool eq, int lambda);
u64 wrap(int bits, int lambda);
u64 wrapeq(int bits, int lambda);
u64 zero_test(int bits, int lambda);
u64 msb(int width, int lambda);
u64 msb_to_wrap(Hint h, int lambda);

u64 zxt(int m, int n, Hint h, int lambda);
u64 sxt(int m, int n, Hint h, int lambda);
u64 lrs(int l, int s, Hint h, int lambda);
u64 ars(int l, int s, Hint h, int lambda);
u64 tr(int l, int s, int lambda);
u64 div_pow2(int l, int s, int lambda);

u64 cross_mult(int m, int n, int l, int lambda);
u64 umult(int m, int n, int l, Hint hx, Hint hy, int lambda);
u64 smult(int m, int n, int l, Hint hx, Hint hy, int lambda);
u64 smult_tr(int m, int n, int l, int s, Hint hx, Hint hy, int lambda);

// Whole-matrix costs.
u64 bitmat_mul(int d1, int d2, int d3, int width, int lambda);
u64 matmul(int d1, int d2, int d3, int m, int n, int lambda);

u64 digdec(const std::vector<int>& sizes, int lambda);
u64 msnzb(int l, int d, int lambda);

u64 exp(const MathParams& p, int lambda);
u64 recip(int l, int s, int g, int t, int lambda);
u64 h(const MathParams& p, int lambda);
u64 sigmoid(const MathParams& p, int lambda);
u64 tanh(const MathParams& p, int lambda);
u64 rsqrt(const MathParams& p, int lambda);
u64 math(MathFn f, const MathParams& p, int lambda);

}  // namespace cost

// Reference communication expressions, used as upper bounds.
namespace bounds {

double ot(int k, int bits, int lambda);
double cot(int width, int lambda);
double b2a(int width, int lambda);
double mux(int width, int lambda);
double lut(int in_bits, int out_bits, int lambda);
double msb_to_wrap(bool shared, int lambda);

double zxt(int m, int n, int lambda);
double zxt_hint(int m, int n, int lambda);
double lrs(int l, int s, int lambda);
double lrs_hint(int l, int s, int lambda);
double tr(int l, int s, int lambda);
double div_pow2(int l, int s, int lambda);
// m <= n is not required; mu = min, nu = max.
double umult(int m, int n, int lambda);
double umult_hint(int m, int n, int lambda);
double digdec(int l, int d, int lambda);
double msnzb(int l, int d, int lambda);

}  // namespace bounds

}  // namespace fx
