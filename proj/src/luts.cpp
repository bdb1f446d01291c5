#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include <mpfr.h>

#include "fxmpc/cleartext.hpp"

namespace fx {

namespace {

constexpr mpfr_prec_t kLutPrec = 256;

// floor(e^{-j * 2^shift} * 2^sp), shift may be negative.
u64 exp_entry(u64 j, int shift, int sp) {
  mpfr_t z;
  mpfr_init2(z, kLutPrec);
  mpfr_set_ui(z, static_cast<unsigned long>(j), MPFR_RNDN);
  mpfr_mul_2si(z, z, shift, MPFR_RNDN);
  mpfr_neg(z, z, MPFR_RNDN);
  mpfr_exp(z, z, MPFR_RNDD);
  mpfr_mul_2si(z, z, sp, MPFR_RNDD);
  mpfr_floor(z, z);
  u64 v = mpfr_get_uj(z, MPFR_RNDD);
  mpfr_clear(z);
  return v;
}

// floor(2^{g+2} / sqrt((b+1)(1 + e/2^g)))
u64 rsqrt_entry(u64 e, int b, int g) {
  mpfr_t z;
  mpfr_init2(z, kLutPrec);
  mpfr_set_ui(z, static_cast<unsigned long>((pow2(g) + e) * (b + 1)), MPFR_RNDN);
  mpfr_mul_2si(z, z, -g, MPFR_RNDN);
  mpfr_rec_sqrt(z, z, MPFR_RNDD);
  mpfr_mul_2si(z, z, g + 2, MPFR_RNDD);
  mpfr_floor(z, z);
  u64 v = mpfr_get_uj(z, MPFR_RNDD);
  mpfr_clear(z);
  return v;
}

std::mutex g_mu;

}  // namespace

const std::vector<Lut>& exp_luts(int m, int s, int sp, int d) {
  require(d >= 1 && m % d == 0, "exp digit size must divide the input width");
  require(sp + 2 <= 62, "exp output scale too large");
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<std::vector<Lut>>> cache;
  std::lock_guard<std::mutex> lk(g_mu);
  auto& slot = cache[{m, s, sp, d}];
  if (!slot) {
    auto luts = std::make_unique<std::vector<Lut>>();
    int k = m / d;
    for (int i = 0; i < k; ++i) {
      Lut t{d, sp + 2, std::vector<u64>(pow2(d))};
      for (u64 j = 0; j < pow2(d); ++j) t.entries[j] = exp_entry(j, d * i - s, sp);
      luts->push_back(std::move(t));
    }
    slot = std::move(luts);
  }
  return *slot;
}

const std::vector<Lut>& build_exp_luts(const MathParams& p) {
  return exp_luts(p.m, p.s, p.sp, p.d);
}

const Lut& recip_lut(int g) {
  require(g >= 0 && g <= 14, "reciprocal LUT index width out of range");
  static std::map<int, std::unique_ptr<Lut>> cache;
  std::lock_guard<std::mutex> lk(g_mu);
  auto& slot = cache[g];
  if (!slot) {
    auto t = std::make_unique<Lut>();
    t->in_bits = g + 1;
    t->out_bits = 3 * g + 7;
    t->entries.resize(pow2(g + 1));
    for (u64 idx = 0; idx < pow2(g + 1); ++idx) {
      u64 c0, c1;
      if ((idx >> g) & 1) {
        // Tangent of 1/v at the segment midpoint v_m = V / 2^{g+1}.
        u64 e = idx & mask(g);
        u64 V = pow2(g + 1) + 2 * e + 1;
        c1 = static_cast<u64>((static_cast<u128>(pow2(3 * g + 3)) * (V + 1)) / (static_cast<u128>(V) * V));
        c0 = static_cast<u64>(static_cast<u128>(pow2(3 * g + 5)) / (static_cast<u128>(V) * V));
      } else {
        // Bit s clear only for v = 2.0, where the table yields exactly 0.5.
        c0 = 0;
        c1 = pow2(2 * g + 1);
      }
      t->entries[idx] = c0 | (c1 << (g + 4));
    }
    slot = std::move(t);
  }
  return *slot;
}

const Lut& rsqrt_lut(int g) {
  require(g >= 0 && g <= 14, "rsqrt LUT index width out of range");
  static std::map<int, std::unique_ptr<Lut>> cache;
  std::lock_guard<std::mutex> lk(g_mu);
  auto& slot = cache[g];
  if (!slot) {
    auto t = std::make_unique<Lut>();
    t->in_bits = g + 1;
    t->out_bits = g + 4;
    t->entries.resize(pow2(g + 1));
    for (u64 e = 0; e < pow2(g); ++e)
      for (int b = 0; b < 2; ++b) t->entries[2 * e + b] = rsqrt_entry(e, b, g);
    slot = std::move(t);
  }
  return *slot;
}

u64 rsqrt_min_input(int s) { return (pow2(s) + 9) / 10; }

}  // namespace fx
