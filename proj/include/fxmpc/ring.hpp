#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fx {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const char* what) {
  if (!cond) throw ContractViolation(what);
}

constexpr int kMaxWidth = 64;

constexpr u64 mask(int w) { return w >= 64 ? ~0ULL : ((1ULL << w) - 1); }
constexpr u64 mod2(u64 v, int w) { return v & mask(w); }
constexpr u64 pow2(int k) { return k >= 64 ? 0 : (1ULL << k); }
constexpr bool msb_of(u64 v, int w) { return (v >> (w - 1)) & 1; }

constexpr i64 to_signed(u64 v, int w) {
  v = mod2(v, w);
  if (w < 64 && msb_of(v, w)) return static_cast<i64>(v) - static_cast<i64>(pow2(w));
  return static_cast<i64>(v);
}

constexpr u64 from_signed(i64 v, int w) { return mod2(static_cast<u64>(v), w); }

// Raw word-level reference semantics; every protocol is checked against these.
namespace ref {

inline bool wrap(u64 x, u64 y, int w) {
  u128 s = static_cast<u128>(mod2(x, w)) + mod2(y, w);
  return w >= 64 ? (s >> 64) != 0 : s >= pow2(w);
}
inline u64 lrs(u64 x, int w, int s) { return mod2(x, w) >> s; }
inline u64 ars(u64 x, int w, int s) {
  return from_signed(to_signed(x, w) >> s, w);
}
inline u64 tr(u64 x, int w, int s) { return mod2(x, w) >> s; }
inline u64 sext(u64 x, int m, int n) { return from_signed(to_signed(x, m), n); }
inline u64 c_div_pow2(u64 x, int w, int s) {
  bool adjust = msb_of(x, w) && mod2(x, s) != 0;
  return mod2(ars(x, w, s) + (adjust ? 1 : 0), w);
}
inline u64 umul(u64 x, u64 y, int w) { return mod2(x * y, w); }
inline u64 smul(u64 x, int m, u64 y, int n, int w) {
  return mod2(static_cast<u64>(to_signed(x, m)) * static_cast<u64>(to_signed(y, n)), w);
}
inline int msnzb(u64 x) { return x == 0 ? 0 : 63 - __builtin_clzll(x); }

}  // namespace ref

class RingElem {
 public:
  RingElem() = default;
  RingElem(u64 value, int width) : value_(value), width_(width) {
    require(width >= 1 && width <= kMaxWidth, "ring width must be in [1, 64]");
    value_ = mod2(value_, width_);
  }

  u64 value() const { return value_; }
  int width() const { return width_; }
  bool msb() const { return msb_of(value_, width_); }
  i64 as_signed() const { return to_signed(value_, width_); }

  bool operator==(const RingElem&) const = default;

 private:
  u64 value_ = 0;
  int width_ = 1;
};

struct FixFmt {
  int width;
  int scale;
  bool is_signed;

  FixFmt(int w, int s, bool sg = true) : width(w), scale(s), is_signed(sg) {
    require(w >= 1 && w <= kMaxWidth, "fixed-point width must be in [1, 64]");
    require(s >= 0 && s < w, "fixed-point scale must satisfy 0 <= s < width");
  }
};

struct Matrix {
  int rows = 0;
  int cols = 0;
  int width = 1;
  std::vector<u64> elems;

  Matrix() = default;
  Matrix(int r, int c, int w) : rows(r), cols(c), width(w), elems(static_cast<size_t>(r) * c, 0) {
    require(r > 0 && c > 0, "matrix dimensions must be positive");
    require(w >= 1 && w <= kMaxWidth, "ring width must be in [1, 64]");
  }
  u64& at(int i, int j) { return elems[static_cast<size_t>(i) * cols + j]; }
  u64 at(int i, int j) const { return elems[static_cast<size_t>(i) * cols + j]; }
  Matrix transposed() const;
};

Matrix matmul_ref(const Matrix& x, const Matrix& y, int out_width);

bool wrap(const RingElem& x, const RingElem& y);
long double interpret(const RingElem& x, const FixFmt& fmt);
RingElem encode(long double r, const FixFmt& fmt);

RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);
RingElem mul_mod(const RingElem& a, const RingElem& b);
RingElem logical_shift_right(const RingElem& x, int s);
RingElem arith_shift_right(const RingElem& x, int s);
RingElem truncate_reduce(const RingElem& x, int s);
RingElem zero_extend(const RingElem& x, int n);
RingElem sign_extend(const RingElem& x, int n);
RingElem reduce_to(const RingElem& x, int n);
bool msb(const RingElem& x);
RingElem c_div_pow2(const RingElem& x, int s);

// Decomposition of the wrap bit of two shares into the wrap of the
// low s bits (c), the wrap of the high parts (d) and their all-ones flag (e).
struct WrapSplit {
  bool c;
  bool d;
  bool e;
};
WrapSplit split_wrap(u64 x0, u64 x1, int w, int s);

}  // namespace fx
