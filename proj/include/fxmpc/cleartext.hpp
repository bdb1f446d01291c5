#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fxmpc/ring.hpp"

namespace fx {

// Input format (m, s), output format (n, sp) and the approximation knobs.
struct MathParams {
  int m = 16;
  int s = 12;
  int n = 16;
  int sp = 14;
  int d = 8;  // digit size for exp tables and MSNZB
  int g = 0;  // LUT index bits for reciprocal / rsqrt
  int t = 0;  // Goldschmidt iterations
};

MathParams exp_params(int sx, int sy, int bits = 16);
MathParams sigmoid_params(int sx, int sy, int bits = 16);
MathParams tanh_params(int sx, int sy, int bits = 16);
MathParams rsqrt_params(int sx, int sy, int bits = 16);

struct Lut {
  int in_bits = 0;
  int out_bits = 0;
  std::vector<u64> entries;

  u64 operator[](u64 i) const { return entries[i]; }
  size_t size() const { return entries.size(); }
  bool operator==(const Lut&) const = default;
};

// Tables are memoized; the returned references stay valid for the process lifetime.
const std::vector<Lut>& exp_luts(int m, int s, int sp, int d);
const std::vector<Lut>& build_exp_luts(const MathParams& p);

// Reciprocal initial-approximation table indexed by (bit s of v || e).
// Entry layout: c0 in the low g+4 bits, c1 in the next 2g+3 bits.
const Lut& recip_lut(int g);
inline u64 recip_c0(u64 entry, int g) { return entry & mask(g + 4); }
inline u64 recip_c1(u64 entry, int g) { return entry >> (g + 4); }

// rsqrt initial approximation indexed by (e || B), entries at width g+4, scale g+2.
const Lut& rsqrt_lut(int g);

// Smallest input code with flt(x) >= 0.1 at scale s.
u64 rsqrt_min_input(int s);

// Records violations of the width/sign assumptions that the secure protocols rely on.
struct RefCheck {
  size_t violations = 0;
  std::string first;
  void expect(bool ok, const char* what) {
    if (!ok && violations++ == 0) first = what;
  }
};

u64 rexp_ref(u64 x, const MathParams& p, RefCheck* chk = nullptr);
u64 recip_ref(u64 v, int l, int s, int g, int t, RefCheck* chk = nullptr);
u64 h_ref(u64 x, const MathParams& p, RefCheck* chk = nullptr);
u64 sigmoid_ref(u64 x, const MathParams& p, RefCheck* chk = nullptr);
u64 tanh_ref(u64 x, const MathParams& p, RefCheck* chk = nullptr);
u64 rsqrt_ref(u64 x, const MathParams& p, RefCheck* chk = nullptr);

// Real value carried as an unevaluated sum hi + lo (about 106 significant bits).
struct HighPrec {
  double hi = 0.0;
  double lo = 0.0;
};

enum class MathFn { Exp, Sigmoid, Tanh, Rsqrt };

std::string fn_name(MathFn f);
MathFn parse_fn(const std::string& name);
MathParams default_params(MathFn f, int sx, int sy, int bits = 16);
u64 reference(MathFn f, u64 x, const MathParams& p, RefCheck* chk = nullptr);

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f(x / 2^scale) with the input read as signed or unsigned `bits`-bit code.
// Exp means e^{-z}. Throws OracleError if the result cannot be carried exactly enough.
HighPrec oracle(MathFn f, u64 x, int bits, int scale, bool is_signed);
bool input_signed(MathFn f);

// floor(|int(y) - r * 2^scale|), exact for the hi/lo representation.
u64 ulp_error(u64 y, const FixFmt& fmt, HighPrec r);

void write_lut(std::ostream& os, const Lut& lut);
Lut read_lut(std::istream& is);

}  // namespace fx
