#pragma once

#include <vector>

#include "fxmpc/gadgets.hpp"

namespace fx {

// What is known about the MSB of a shared value.
struct WrapHint {
  enum class Kind { None, Public, Shared };
  Kind kind = Kind::None;
  bool bit = false;
  Bits shares;

  static WrapHint none() { return {}; }
  static WrapHint msb_public(bool b) { return {Kind::Public, b, {}}; }
  static WrapHint msb_shared(Bits b) { return {Kind::Shared, false, std::move(b)}; }
  bool known() const { return kind != Kind::None; }
};

// Hint for x + 2^{w-1}, whose MSB is the complement of MSB(x).
WrapHint flip(const Session& s, const WrapHint& h);

AShare add_public(const Session& s, const AShare& x, u64 c);
AShare add(const AShare& a, const AShare& b);
AShare sub(const AShare& a, const AShare& b);
AShare scale(const AShare& a, u64 c);
AShare reduce(const AShare& a, int width);

Bits msb_to_wrap(Session& s, const AShare& x, const WrapHint& h);

AShare zxt(Session& s, const AShare& x, int n, const WrapHint& h = {});
// h describes the MSB of x itself.
AShare sxt(Session& s, const AShare& x, int n, const WrapHint& h = {});
AShare lrs(Session& s, const AShare& x, int sh, const WrapHint& h = {});
AShare ars(Session& s, const AShare& x, int sh, const WrapHint& h = {});
AShare tr(Session& s, const AShare& x, int sh);
AShare div_pow2(Session& s, const AShare& x, int sh);

// x held by P0 (m bits) times y held by P1 (n bits), shares over 2^l.
AShare cross_mult(Session& s, const std::vector<u64>& mine, int m, int n, int l);

struct MultOut {
  AShare z;
  Bits wx;
  Bits wy;
};
MultOut umult_full(Session& s, const AShare& x, const AShare& y, int l, const WrapHint& hx = {},
                   const WrapHint& hy = {});
AShare umult(Session& s, const AShare& x, const AShare& y, int l, const WrapHint& hx = {},
             const WrapHint& hy = {});
AShare smult(Session& s, const AShare& x, const AShare& y, int l, const WrapHint& hx = {},
             const WrapHint& hy = {});
AShare smult_tr(Session& s, const AShare& x, const AShare& y, int l, int sh, const WrapHint& hx = {},
                const WrapHint& hy = {});

// Row-major matrix of shares.
struct AMatrix {
  int rows = 0;
  int cols = 0;
  AShare a;
  AMatrix transposed() const;
};
AMatrix matmul(Session& s, const AMatrix& x, const AMatrix& y);
AMatrix bitmat_mul(Session& s, const Bits& w, int d1, int d2, const AMatrix& x);

// Digit sizes listed from the least significant digit.
std::vector<AShare> digdec(Session& s, const AShare& x, const std::vector<int>& sizes);
std::vector<int> equal_digits(int l, int d);
// One-hot MSNZB as boolean shares, bit i of element j at word j.
std::vector<u64> msnzb(Session& s, const AShare& x, int d);

}  // namespace fx
