#include <cmath>

#include "fxmpc/cleartext.hpp"

namespace fx {

// Evaluated in binary128 (113-bit significand); the hi/lo pair is exact there
// up to a relative 2^-113, far below the grid spacing of any 64-bit output.
u64 ulp_error(u64 y, const FixFmt& fmt, HighPrec r) {
  const i64 a = fmt.is_signed ? to_signed(y, fmt.width) : static_cast<i64>(mod2(y, fmt.width));
  const __float128 R = static_cast<__float128>(std::ldexp(r.hi, fmt.scale)) +
                       static_cast<__float128>(std::ldexp(r.lo, fmt.scale));
  __float128 d = static_cast<__float128>(a) - R;
  if (d < 0) d = -d;
  return static_cast<u64>(static_cast<unsigned __int128>(d));
}

}  // namespace fx
