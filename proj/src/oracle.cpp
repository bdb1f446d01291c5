#include <cstdint>

#include <mpfr.h>

#include "fxmpc/cleartext.hpp"

namespace fx {

namespace {

constexpr mpfr_prec_t kOraclePrec = 160;

struct Mpfr {
  mpfr_t v;
  Mpfr() { mpfr_init2(v, kOraclePrec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

HighPrec oracle(MathFn f, u64 x, int bits, int scale, bool is_signed) {
  Mpfr z, r, t;
  i64 code = is_signed ? to_signed(x, bits) : static_cast<i64>(mod2(x, bits));
  mpfr_set_sj(z.v, code, MPFR_RNDN);
  mpfr_mul_2si(z.v, z.v, -scale, MPFR_RNDN);

  switch (f) {
    case MathFn::Exp:
      mpfr_neg(r.v, z.v, MPFR_RNDN);
      mpfr_exp(r.v, r.v, MPFR_RNDN);
      break;
    case MathFn::Sigmoid:
      // 1 / (1 + e^{-z})
      mpfr_neg(t.v, z.v, MPFR_RNDN);
      mpfr_exp(t.v, t.v, MPFR_RNDN);
      mpfr_add_ui(t.v, t.v, 1, MPFR_RNDN);
      mpfr_ui_div(r.v, 1, t.v, MPFR_RNDN);
      break;
    case MathFn::Tanh:
      mpfr_tanh(r.v, z.v, MPFR_RNDN);
      break;
    case MathFn::Rsqrt:
      if (mpfr_sgn(z.v) <= 0) throw OracleError("rsqrt oracle needs a positive input");
      mpfr_rec_sqrt(r.v, z.v, MPFR_RNDN);
      break;
  }

  HighPrec out;
  out.hi = mpfr_get_d(r.v, MPFR_RNDN);
  mpfr_sub_d(t.v, r.v, out.hi, MPFR_RNDN);
  out.lo = mpfr_get_d(t.v, MPFR_RNDN);

  // The hi/lo pair must agree with the 160-bit value to at least 90 bits.
  mpfr_sub_d(t.v, t.v, out.lo, MPFR_RNDN);
  if (!mpfr_zero_p(t.v) && !mpfr_zero_p(r.v)) {
    long err_exp = mpfr_get_exp(t.v);
    long val_exp = mpfr_get_exp(r.v);
    if (val_exp - err_exp < 90) throw OracleError("oracle precision shortfall");
  }
  return out;
}

}  // namespace fx
